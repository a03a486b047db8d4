#ifndef RAMSEY_HARNESS_HPP
#define RAMSEY_HARNESS_HPP

#include "ramsey/colorings.hpp"
#include "ramsey/oracles.hpp"
#include "ramsey/zoo.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ramsey {

struct descriptor_error : std::runtime_error {
    size_t position;
    descriptor_error(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos)
    {
    }
};

struct Descriptor {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::string text;

    std::optional<std::string> get(const std::string& key) const;
    long long get_int(const std::string& key, long long fallback) const;
};

Descriptor parse_descriptor_text(const std::string& text);

using Construction = std::variant<GraphOracle, ColoringOracle, VertexSetOracle>;

// grammar: name[:key=value[,key=value]*]
// graphs: rado, brado, half, bhalf, complete, edgeless, twocliques, path,
//         hd:d=, tree:kind=dary|tinf|incstar|leveldeg|tstar, ctr:binary, multi:parts=...
// colorings: radoc, residue:r=, fwdint:f=,stages=, bwdint:stages=, bhalfc,
//            blocks:k=, respart:m=, bipmod:r=, selfint:k=, tstar:d=, dlift:n=,m=
// sets: all, evens, odds, mod:m=,r=, cyl:s=, interval:lo=,hi=
Construction parse_descriptor(const std::string& text);
GraphOracle parse_graph(const std::string& text);
ColoringOracle parse_coloring(const std::string& text);
VertexSetOracle parse_set(const std::string& text);

struct ResultValue {
    std::string key;
    std::optional<Rat> exact;
    double decimal = 0.0;
    std::optional<bool> pass;
    std::string note;
};

struct ResultRecord {
    std::string id;
    std::map<std::string, std::string> params;  // parameter echo
    std::vector<ResultValue> values;
    bool pass = true;
    double runtime_seconds = 0.0;  // console only, never written to output files

    void add(const std::string& key, const Rat& v, std::optional<bool> pass = std::nullopt,
             const std::string& note = "");
    void add_count(const std::string& key, const BigInt& v, std::optional<bool> pass = std::nullopt,
                   const std::string& note = "");
    void add_flag(const std::string& key, bool ok, const std::string& note = "");
};

struct ExperimentSpec {
    std::string id;
    std::map<std::string, std::string> parameters;
};

struct ExperimentInfo {
    std::string id;
    std::string summary;
};

std::vector<ExperimentInfo> list_experiments();
ResultRecord run_experiment(const ExperimentSpec& spec);

enum class EmitFormat { Rows, Structured };

std::string emit_record(const ResultRecord& record, EmitFormat format);
ResultRecord parse_structured(const std::string& text);  // round-trips emit(Structured)
void write_file(const std::string& path, const std::string& content);

} // namespace ramsey

#endif
