#ifndef RAMSEY_EMBEDDINGS_HPP
#define RAMSEY_EMBEDDINGS_HPP

#include "ramsey/colorings.hpp"
#include "ramsey/oracles.hpp"
#include "ramsey/zoo.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ramsey {

/// Host side of an embedding: a graph, or one color class of a coloring.
struct HostView {
    std::string name;
    std::function<bool(const Vertex&, const Vertex&)> adjacent;
    std::function<bool(const Vertex&)> in_universe;
    std::optional<std::pair<ColoringOracle, Color>> color_constraint;
    // analytic least-common-neighbor supply above a bound, when the
    // construction offers one; window searches fall back to it at the cap
    std::function<std::optional<Vertex>(const std::vector<Vertex>&,
                                        const std::function<bool(const Vertex&)>&, const Vertex&)>
        supply;
    // exact bounded search replacing linear window scans
    std::function<std::optional<Vertex>(const std::vector<Vertex>&,
                                        const std::function<bool(const Vertex&)>&, const Vertex&)>
        bounded_least;

    static HostView from_graph(const GraphOracle& g);
    static HostView from_color_class(const ColoringOracle& c, Color color);
    bool has(const Vertex& v) const { return !in_universe || in_universe(v); }
};

// expanding search window: initial 2^10, doubling, hard cap 2^22
struct WindowPolicy {
    BigInt initial = BigInt(1) << 10;
    BigInt cap = BigInt(1) << 22;
};

struct TraceRow {
    long long step;
    Vertex guest;
    Vertex host;
    std::string rule;
};

struct PartialEmbedding {
    std::map<Vertex, Vertex> map;      // guest -> host, injective
    std::map<Vertex, Vertex> inverse;  // host -> guest
    GraphOracle guest;
    HostView host;
    long long steps_done = 0;
    std::vector<TraceRow> trace;

    bool embedded(const Vertex& g) const { return map.count(g) != 0; }
    bool covered(const Vertex& h) const { return inverse.count(h) != 0; }
    void assign(const Vertex& g, const Vertex& h, long long step, const std::string& rule);
    // largest m with every host-universe vertex <= m covered
    Vertex covered_host_prefix() const;
    Vertex least_uncovered_host() const;
    Vertex least_unembedded_guest() const;
};

struct EmbeddingReport {
    bool valid = false;
    bool mono = true;  // only meaningful under a color constraint
    std::vector<std::string> violations;
    Vertex coverage;               // covered host prefix
    Vertex surjectivity_frontier;  // least uncovered host vertex
};

// injectivity, adjacency preservation on all domain edges, color constraint,
// coverage frontier; deterministic
EmbeddingReport verify_embedding(const PartialEmbedding& pe);

// --- engines -----------------------------------------------------------------
// All engines resolve arbitrary choices to the least-index candidate and are
// resumable: run(k) then run(k') equals run(k+k').

class ZeroRuledEngine {
public:
    // degenerate_d: when set, enforces the (d+1)-wise query bound of the
    // degenerate variant and validates guest back-degrees
    ZeroRuledEngine(GraphOracle guest, HostView host, long long planned_steps,
                    std::optional<int> degenerate_d = std::nullopt,
                    WindowPolicy window = {});

    void run(long long cycles);
    const PartialEmbedding& state() const { return pe_; }

private:
    void one_cycle();
    PartialEmbedding pe_;
    long long planned_steps_;
    std::optional<int> degenerate_d_;
    WindowPolicy window_;
};

class CascadeEngine {
public:
    CascadeEngine(GraphOracle guest, HostView host, std::vector<VertexSetOracle> layers,
                  WindowPolicy window = {});

    void run(long long steps);
    const PartialEmbedding& state() const { return pe_; }
    // every embedded guest has all earlier-part neighbors embedded
    bool closure_invariant_holds() const;

private:
    void one_step();
    PartialEmbedding pe_;
    std::vector<VertexSetOracle> layers_;
    WindowPolicy window_;
};

class DeepTreeEngine {
public:
    DeepTreeEngine(GraphOracle guest_tree, GraphOracle host, long long planned_cycles,
                   WindowPolicy window = {});

    void run(long long cycles);
    const PartialEmbedding& state() const { return pe_; }
    bool guest_subgraph_connected() const;

private:
    void cover_block();
    void guest_block();
    std::vector<Vertex> find_path_avoiding(const Vertex& from, const Vertex& to) const;

    PartialEmbedding pe_;
    GraphOracle host_graph_;
    WindowPolicy window_;
    int tree_type_ = 1;
    Vertex t_last_, v_last_;
};

class ShortTreeEngine {
public:
    ShortTreeEngine(GraphOracle guest_tree, GraphOracle host, const Vertex& anchor,
                    WindowPolicy window = {});

    // round r extends one child for each of the first min(r, |dom|) embedded
    // guests, oldest first; the root is served every round
    void run(long long rounds);
    const PartialEmbedding& state() const { return pe_; }

private:
    PartialEmbedding pe_;
    GraphOracle host_graph_;
    WindowPolicy window_;
    std::vector<Vertex> embed_order_;
    long long rounds_done_ = 0;
};

class CompatMultipartiteEngine {
public:
    CompatMultipartiteEngine(TreeSpec tree, MultipartiteSpec host_spec, long long planned_cycles);

    void run(long long cycles);
    const PartialEmbedding& state() const { return pe_; }

private:
    void one_cycle();
    Vertex antichain_pick(int part_index);

    PartialEmbedding pe_;
    TreeSpec tree_;
    MultipartiteSpec host_spec_;
    GraphOracle host_graph_;
    GraphOracle guest_graph_;
    int singleton_count_ = 0;
    std::map<int, Vertex> part_anchor_guest_;  // infinite part index -> first guest placed there
    int fresh_part_frontier_ = 0;              // largest infinite part index touched
};

class InducedPathsEngine {
public:
    InducedPathsEngine(GraphOracle guest, GraphOracle host, bool host_has_clique,
                       WindowPolicy window = {});

    void run(long long steps);
    const PartialEmbedding& state() const { return pe_; }

private:
    void one_step();
    Vertex next_clique_vertex();
    std::vector<Vertex> guest_fresh_segment(const BigInt& len) const;

    PartialEmbedding pe_;
    GraphOracle host_graph_;
    WindowPolicy window_;
    std::vector<Vertex> clique_;  // greedily built, increasing
};

// --- greedy constructions ------------------------------------------------------

struct CliquePartition {
    std::vector<std::pair<Color, std::vector<Vertex>>> cliques;  // disjoint, monochromatic, size >= 2
    std::vector<Vertex> leftover;                                // vertices in no clique of size >= 2
};

// from each least uncovered seed, grow the greedy least-vertex clique in the
// color whose greedy clique comes out larger (ties toward the first color)
CliquePartition greedy_clique_partition(const ColoringOracle& coloring, const Vertex& horizon);

struct DaryTreeEmbedding {
    int r = 2, dary = 2;
    Color color = 1;
    std::vector<BigInt> members;               // sorted vertex values
    std::map<Vertex, Vertex> parent;           // tree edges (root excluded)
    BigInt offclass_count(const BigInt& n) const;  // t_n: members <= n not in the color class
    BigInt member_count(const BigInt& n) const;
};

// Greedy maximal monochromatic D-ary-tree embedding into residue_coloring(r),
// color class 1. Off-class vertices join only together with D fresh class
// children below them, so D * t_n <= (n-1)/r holds at every prefix.
DaryTreeEmbedding greedy_dary_tree_embedding(int r, int dary, const BigInt& horizon);

} // namespace ramsey

#endif
