#include "ramsey/harness.hpp"

#include "ramsey/binary.hpp"
#include "ramsey/density.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace ramsey {

// --- descriptor grammar: name[:key=value[,key=value]*] ----------------------------

std::optional<std::string> Descriptor::get(const std::string& key) const
{
    for (const auto& [k, v] : params)
        if (k == key)
            return v;
    return std::nullopt;
}

long long Descriptor::get_int(const std::string& key, long long fallback) const
{
    auto v = get(key);
    if (!v)
        return fallback;
    try {
        return std::stoll(*v);
    }
    catch (const std::exception&) {
        throw descriptor_error("parameter '" + key + "' of '" + name + "' is not an integer",
                               text.find(key));
    }
}

Descriptor parse_descriptor_text(const std::string& text)
{
    Descriptor d;
    d.text = text;
    size_t pos = 0;
    while (pos < text.size() && text[pos] != ':')
        ++pos;
    d.name = text.substr(0, pos);
    if (d.name.empty())
        throw descriptor_error("empty descriptor name", 0);
    if (pos == text.size())
        return d;
    ++pos;  // skip ':'
    while (pos < text.size()) {
        size_t eq = text.find('=', pos);
        if (eq == std::string::npos)
            throw descriptor_error("expected key=value", pos);
        std::string key = text.substr(pos, eq - pos);
        if (key.empty())
            throw descriptor_error("empty parameter key", pos);
        size_t comma = text.find(',', eq + 1);
        std::string value = comma == std::string::npos ? text.substr(eq + 1)
                                                       : text.substr(eq + 1, comma - eq - 1);
        if (value.empty())
            throw descriptor_error("empty parameter value for '" + key + "'", eq + 1);
        d.params.emplace_back(key, value);
        pos = comma == std::string::npos ? text.size() : comma + 1;
    }
    return d;
}

namespace {

int require_int(const Descriptor& d, const std::string& key)
{
    auto v = d.get(key);
    if (!v)
        throw descriptor_error("descriptor '" + d.name + "' needs parameter '" + key + "'",
                               d.text.size());
    return static_cast<int>(d.get_int(key, 0));
}

GraphOracle build_tree_from(const Descriptor& d)
{
    auto kind = d.get("kind");
    if (!kind)
        throw descriptor_error("tree descriptor needs kind=", d.text.size());
    if (*kind == "dary")
        return tree_graph(TreeSpec::dary_tree(require_int(d, "d")));
    if (*kind == "tinf")
        return tree_graph(TreeSpec::t_infinity());
    if (*kind == "incstar")
        return tree_graph(TreeSpec::increasing_star());
    if (*kind == "leveldeg")
        return tree_graph(TreeSpec::level_degrees(d.get_int("start", 2), d.get_int("step", 1)));
    if (*kind == "tstar")
        return tree_graph(TreeSpec::tstar_witness(require_int(d, "d")));
    throw descriptor_error("unknown tree kind '" + *kind + "'", d.text.find(*kind));
}

MultipartiteSpec parse_parts(const Descriptor& d)
{
    auto parts = d.get("parts");
    if (!parts)
        throw descriptor_error("multi descriptor needs parts=", d.text.size());
    MultipartiteSpec spec;
    std::stringstream ss(*parts);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        if (tok == "inf*")
            spec.infinitely_many = true;
        else if (tok == "inf")
            ++spec.infinite_parts;
        else {
            try {
                spec.finite_sizes.push_back(BigInt(tok));
            }
            catch (const std::exception&) {
                throw descriptor_error("bad part size '" + tok + "'", d.text.find(tok));
            }
        }
    }
    spec.validate();
    return spec;
}

} // namespace

GraphOracle parse_graph(const std::string& text)
{
    Descriptor d = parse_descriptor_text(text);
    if (d.name == "rado")
        return rado_graph();
    if (d.name == "brado")
        return bipartite_rado_graph();
    if (d.name == "half")
        return half_graph();
    if (d.name == "bhalf")
        return bipartite_half_graph();
    if (d.name == "complete")
        return complete_graph();
    if (d.name == "edgeless")
        return edgeless_graph();
    if (d.name == "twocliques")
        return two_cliques_graph();
    if (d.name == "path")
        return path_graph();
    if (d.name == "hd") {
        int dd = require_int(d, "d");
        if (dd < 1)
            throw descriptor_error("hd needs d >= 1", d.text.find("d="));
        return h_d_graph(dd);
    }
    if (d.name == "tree")
        return build_tree_from(d);
    if (d.name == "ctr") {
        auto kind = d.get("kind").value_or("binary");
        if (kind != "binary")
            throw descriptor_error("ctr supports kind=binary", d.text.size());
        return compatibility_graph(TreeSpec::dary_tree(2));
    }
    if (d.name == "multi")
        return multipartite_graph(parse_parts(d));
    throw descriptor_error("unknown graph '" + d.name + "'", 0);
}

ColoringOracle parse_coloring(const std::string& text)
{
    Descriptor d = parse_descriptor_text(text);
    if (d.name == "radoc" || d.name == "rado")
        return rado_coloring();
    if (d.name == "residue")
        return residue_coloring(require_int(d, "r"));
    if (d.name == "fwdint") {
        auto fname = d.get("f").value_or("linear");
        int stages = static_cast<int>(d.get_int("stages", 12));
        if (fname == "linear")
            return forward_interval_coloring([](const BigInt& n) { return n; }, "linear", stages);
        if (fname == "quadratic")
            return forward_interval_coloring([](const BigInt& n) { return n * n; }, "quadratic",
                                             stages);
        throw descriptor_error("unknown growth function '" + fname + "'", d.text.find(fname));
    }
    if (d.name == "bwdint")
        return backward_interval_coloring(
            IntervalScheme::powers_of_two(static_cast<int>(d.get_int("stages", 24))));
    if (d.name == "bhalfc")
        return bipartite_halfgraph_default();
    if (d.name == "blocks")
        return blocks_halfgraph_coloring(require_int(d, "k"));
    if (d.name == "respart")
        return residue_partition_coloring(require_int(d, "m"));
    if (d.name == "bipmod")
        return bipartite_mod_coloring(require_int(d, "r"));
    if (d.name == "selfint")
        return selfintersect_coloring(require_int(d, "k"));
    if (d.name == "tstar")
        return tstar_coloring(require_int(d, "d"));
    if (d.name == "dlift") {
        int n = require_int(d, "n");
        auto m = d.get("m");
        if (!m)
            throw descriptor_error("dlift needs m= (row-major arc colors)", d.text.size());
        return digraph_lift_coloring(DigraphSpec::from_string(n, *m));
    }
    throw descriptor_error("unknown coloring '" + d.name + "'", 0);
}

VertexSetOracle parse_set(const std::string& text)
{
    Descriptor d = parse_descriptor_text(text);
    if (d.name == "all")
        return VertexSetOracle::all();
    if (d.name == "evens")
        return VertexSetOracle::from_form("evens", SetForm::residue_class(2, 0));
    if (d.name == "odds")
        return VertexSetOracle::from_form("odds", SetForm::residue_class(2, 1));
    if (d.name == "mod") {
        BigInt m = d.get_int("m", 0), r = d.get_int("r", 0);
        return VertexSetOracle::from_form(text, SetForm::residue_class(m, r));
    }
    if (d.name == "cyl")
        return cylinder(d.get_int("s", 1));
    if (d.name == "interval")
        return VertexSetOracle::from_form(
            text, SetForm::finite_interval(d.get_int("lo", 1), d.get_int("hi", 1)));
    throw descriptor_error("unknown set '" + d.name + "'", 0);
}

Construction parse_descriptor(const std::string& text)
{
    Descriptor d = parse_descriptor_text(text);
    static const char* graphs[] = {"brado", "half",  "bhalf", "complete", "edgeless",
                                   "twocliques", "path",  "hd",    "tree",     "ctr",
                                   "multi"};
    static const char* colorings[] = {"radoc",  "residue", "fwdint",  "bwdint", "bhalfc", "blocks",
                                      "respart", "bipmod", "selfint", "tstar",  "dlift"};
    static const char* sets[] = {"all", "evens", "odds", "mod", "cyl", "interval"};
    for (const char* n : graphs)
        if (d.name == n)
            return parse_graph(text);
    for (const char* n : colorings)
        if (d.name == n)
            return parse_coloring(text);
    for (const char* n : sets)
        if (d.name == n)
            return parse_set(text);
    if (d.name == "rado")
        return parse_graph(text);  // the graph; the coloring is "radoc"
    throw descriptor_error("unknown descriptor '" + d.name + "'", 0);
}

// --- result records -----------------------------------------------------------------

void ResultRecord::add(const std::string& key, const Rat& v, std::optional<bool> p,
                       const std::string& note)
{
    ResultValue rv;
    rv.key = key;
    rv.exact = v;
    rv.decimal = v.convert_to<double>();
    rv.pass = p;
    rv.note = note;
    values.push_back(std::move(rv));
    if (p && !*p)
        pass = false;
}

void ResultRecord::add_count(const std::string& key, const BigInt& v, std::optional<bool> p,
                             const std::string& note)
{
    add(key, Rat(v), p, note);
}

void ResultRecord::add_flag(const std::string& key, bool ok, const std::string& note)
{
    ResultValue rv;
    rv.key = key;
    rv.decimal = ok ? 1.0 : 0.0;
    rv.pass = ok;
    rv.note = note;
    values.push_back(std::move(rv));
    if (!ok)
        pass = false;
}

std::string emit_record(const ResultRecord& record, EmitFormat format)
{
    if (format == EmitFormat::Rows) {
        std::ostringstream out;
        out << "experiment\tkey\texact\tdecimal\tpass\tnote\n";
        for (const auto& v : record.values) {
            out << record.id << '\t' << v.key << '\t' << (v.exact ? rat_to_string(*v.exact) : "-")
                << '\t' << (v.exact ? rat_to_decimal(*v.exact) : std::to_string(v.decimal)) << '\t'
                << (v.pass ? (*v.pass ? "pass" : "FAIL") : "-") << '\t' << v.note << '\n';
        }
        out << record.id << "\toverall\t-\t-\t" << (record.pass ? "pass" : "FAIL") << "\t\n";
        return out.str();
    }
    nlohmann::json j;
    j["experiment"] = record.id;
    j["pass"] = record.pass;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : record.params)
        params[k] = v;
    j["parameters"] = params;
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : record.values) {
        nlohmann::json e;
        e["key"] = v.key;
        if (v.exact) {
            e["exact"] = rat_to_string(*v.exact);
            e["decimal"] = rat_to_decimal(*v.exact);
        }
        else {
            e["decimal"] = std::to_string(v.decimal);
        }
        if (v.pass)
            e["pass"] = *v.pass;
        if (!v.note.empty())
            e["note"] = v.note;
        vals.push_back(e);
    }
    j["values"] = vals;
    return j.dump(2) + "\n";
}

ResultRecord parse_structured(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    ResultRecord r;
    r.id = j.at("experiment").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    for (auto it = j.at("parameters").begin(); it != j.at("parameters").end(); ++it)
        r.params[it.key()] = it.value().get<std::string>();
    for (const auto& e : j.at("values")) {
        ResultValue v;
        v.key = e.at("key").get<std::string>();
        if (e.contains("exact")) {
            std::string s = e.at("exact").get<std::string>();
            auto slash = s.find('/');
            if (slash == std::string::npos)
                v.exact = Rat(BigInt(s));
            else
                v.exact = Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
            v.decimal = v.exact->convert_to<double>();
        }
        else {
            v.decimal = std::stod(e.at("decimal").get<std::string>());
        }
        if (e.contains("pass"))
            v.pass = e.at("pass").get<bool>();
        if (e.contains("note"))
            v.note = e.at("note").get<std::string>();
        r.values.push_back(std::move(v));
    }
    return r;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output path '" + path + "'");
    out << content;
}

} // namespace ramsey
