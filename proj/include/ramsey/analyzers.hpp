#ifndef RAMSEY_ANALYZERS_HPP
#define RAMSEY_ANALYZERS_HPP

#include "ramsey/oracles.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace ramsey {

/// Materialized adjacency of a graph prefix [1..n] (or of one color class).
struct FinitePrefixGraph {
    int n = 0;
    std::vector<std::vector<char>> adj;

    bool edge(int u, int v) const { return adj[u][v] != 0; }
    int degree(int v) const;

    static FinitePrefixGraph from_graph(const GraphOracle& g, int n);
    static FinitePrefixGraph from_color_class(const ColoringOracle& c, Color color, int n);
    static FinitePrefixGraph complete(int n);
    static FinitePrefixGraph edgeless(int n);
    static FinitePrefixGraph star(int leaves);  // center 1, leaves 2..leaves+1
    static FinitePrefixGraph cycle(int n);
};

// exact degeneracy via iterated minimum-degree removal
int degeneracy(const FinitePrefixGraph& g);

// exact chromatic number, branch and bound; rejects n > 20
int chromatic_number(const FinitePrefixGraph& g);

// true iff some X with |X| <= s dominates [n] \ X; rejects n > 24
bool dominating_set_exists(const FinitePrefixGraph& g, int s);

// for every X ⊆ [w] with |X| <= s, some v <= horizon outside X has no
// neighbor in X
bool zero_ruled_window_check(const GraphOracle& g, int w, int s, const Vertex& horizon);

// every nonempty S ⊆ [w]∩X with |S| <= k has >= m common neighbors <= horizon;
// the self variant requires the witnesses to lie in the candidate set X
bool kwise_intersecting_check(const GraphOracle& g, int k, const BigInt& m, int w,
                              const Vertex& horizon,
                              const VertexSetOracle* candidate_set = nullptr);
bool kwise_self_intersecting_check(const GraphOracle& g, int k, const BigInt& m, int w,
                                   const Vertex& horizon,
                                   const VertexSetOracle* candidate_set = nullptr);

// least v <= horizon adjacent to everything in f and nothing in f_not
std::optional<Vertex> extension_property_check(const GraphOracle& g, const std::vector<Vertex>& f,
                                               const std::vector<Vertex>& f_not,
                                               const Vertex& horizon);

// (S_1, ..., S_k) with S_k = S∩V_k and S_i = (S ∪ ⋃_{j>i} N(S_j)) ∩ V_i;
// finite because the graph is one-way k-locally finite. Refuses graphs
// without the trait or the earlier-neighbor bound witness.
std::vector<std::vector<Vertex>> left_neighborhood_cascade(const GraphOracle& g,
                                                           const std::vector<Vertex>& s);

struct RulingSizeRule {
    std::string name;
    // nullopt = unbounded ruling set; its factor is 1
    std::function<std::optional<unsigned>(const BigInt& n)> size;

    static RulingSizeRule ceil_log2();   // size(1) unbounded, else ceil(log2 n)
    static RulingSizeRule constant(unsigned s);
    static RulingSizeRule unbounded();
};

struct RulingProduct {
    std::optional<Rat> exact;  // present when N <= 64
    double approx = 1.0;
};

// partial product of (1 - 2^-|F_n|) for n = 1..N
RulingProduct ruling_product(const RulingSizeRule& rule, const BigInt& n_max);

struct PeelResult {
    VertexSetOracle removed;    // R: union of the removed stages
    VertexSetOracle remainder;  // S
    std::vector<VertexSetOracle> stage_sets;  // R_0, R_1, ...
    int stages_used = 0;        // number of nonempty removal stages
    bool stage_overflow = false;
};

// One-color peeling: R_a = vertices of S_a whose peel-color neighborhood has
// finite intersection with S_a (answered analytically by the coloring).
// Stages stop when the removal set is empty below the horizon.
PeelResult peel_deep_tree_sets(const ColoringOracle& coloring, int max_stages, const Vertex& horizon,
                               Color peel_color = kBlue);

struct ShortPeelResult {
    VertexSetOracle red_side;    // finite peel-color (blue) neighborhoods
    VertexSetOracle blue_side;   // finite red neighborhoods
    VertexSetOracle remainder;
    int stages_used = 0;
    bool stage_overflow = false;
    Vertex anchor;
    Color anchor_color = kRed;
    Rat anchor_neighborhood_density;  // within the selected side ∪ remainder, at the horizon
};

// Two-color peeling: per stage remove vertices with analytically finite blue
// (into the red side) or red (into the blue side) neighborhoods; a vertex
// qualifying for both goes red. The anchor is the least vertex of the chosen
// side's first stage (or of the remainder when nothing peeled), the color is
// chosen by measured prefix density, ties toward red.
ShortPeelResult peel_short_tree_sets(const ColoringOracle& coloring, int max_stages,
                                     const Vertex& horizon);

// every pair of R-members <= pair_horizon joined by a monochromatic path of
// length <= 2 in the given color, through a vertex <= search_horizon
bool short_path_proxy(const ColoringOracle& coloring, const VertexSetOracle& r, Color c,
                      const Vertex& pair_horizon, const Vertex& search_horizon);

} // namespace ramsey

#endif
