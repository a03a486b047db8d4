#ifndef RAMSEY_ORACLES_HPP
#define RAMSEY_ORACLES_HPP

#include "ramsey/numbers.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

/// Closed form for a vertex set: a disjoint union of arithmetic-progression
/// tails {v >= start : v == residue (mod modulus)} and finite intervals.
/// Only the progression tails contribute to the asymptotic density.
struct SetForm {
    struct Residue {
        BigInt modulus;  // >= 1
        BigInt residue;  // in [0, modulus)
        BigInt start;    // >= 1
    };
    struct Interval {
        BigInt lo, hi;  // finite, inclusive, 1 <= lo <= hi
    };
    std::vector<Residue> residues;
    std::vector<Interval> intervals;

    bool contains(const Vertex& v) const;
    Rat density() const;
    // bound C with | |A∩[t]| - t*density | <= C for all t
    BigInt envelope_constant() const;

    static SetForm residue_class(const BigInt& modulus, const BigInt& residue, const BigInt& start = 1);
    static SetForm finite_interval(const BigInt& lo, const BigInt& hi);
    static SetForm empty() { return SetForm{}; }
    static SetForm all() { return residue_class(1, 0); }
    SetForm unioned_with(const SetForm& other) const;
};

// Identifies a remainder set produced by the peeling recursions so that a
// coloring's analytic finiteness oracle can recognize it. stage counts how
// many removal rounds have been applied to the full vertex set.
struct PeelStageInfo {
    enum class Kind { Deep, Short };
    Kind kind = Kind::Deep;
    Color peel_color = kBlue;  // deep peel removes vertices with finite nbhd of this color
    int stage = 0;
};

/// A subset of N as a membership predicate with bounded enumeration.
struct VertexSetOracle {
    std::string name;
    std::function<bool(const Vertex&)> contains;
    std::optional<SetForm> exact_form;
    std::optional<PeelStageInfo> peel_info;

    std::vector<Vertex> enumerate_upto(const Vertex& t) const;
    BigInt count_upto(const Vertex& t) const;

    static VertexSetOracle from_form(std::string name, SetForm form);
    static VertexSetOracle from_predicate(std::string name, std::function<bool(const Vertex&)> pred);
    static VertexSetOracle all();
};

struct GraphTraits {
    bool locally_finite = false;
    std::optional<int> one_way_locally_finite_k;
    bool zero_ruled = false;
    bool bipartite = false;
    std::optional<int> degeneracy_bound;      // back-degree bound under construction order
    std::optional<int> kwise_intersecting;    // declared k
    bool tree = false;
    std::optional<int> tree_type;             // 1 = infinite path from every vertex, 2 = increasing star
    bool perfect_rooted_tree = false;
    bool root_infinite_degree = false;
    bool strongly_contracting = false;
};

/// Supply strategies a tree-shaped guest offers to the embedding engines.
struct TreeSupply {
    // k-th child of v in the canonical numbering, 1-based; nullopt if fewer children
    std::function<std::optional<Vertex>(const Vertex&, const BigInt&)> child;
    // next vertex on the canonical infinite path from v (type-1 trees)
    std::function<std::optional<Vertex>(const Vertex&)> next_on_path;
    // index of the shortest unused arm with >= len edges (type-2 trees); arm vertices
    std::function<std::vector<Vertex>(const BigInt& len, const std::function<bool(const Vertex&)>& used)> fresh_arm;
};

/// A countably infinite graph as an adjacency predicate plus declared
/// structural traits and analytic witness strategies. adjacent must be
/// symmetric and irreflexive; neighbors_upto(v,t) = { u <= t : u ~ v }.
struct GraphOracle {
    std::string name;
    std::function<bool(const Vertex&, const Vertex&)> adjacent;
    std::function<bool(const Vertex&)> in_vertex_set;  // defaults to all of N
    GraphTraits traits;

    // witness strategies (optional)
    std::function<Vertex(const std::vector<Vertex>&)> independent_extension;
    std::function<int(const Vertex&)> part_of;                    // 1-based part index
    std::function<Vertex(const Vertex&)> earlier_neighbor_bound;  // all nbrs in earlier parts are <= bound(v)
    std::optional<TreeSupply> tree_supply;
    // analytic supply: least unused common neighbor of W strictly above a bound
    std::function<std::optional<Vertex>(const std::vector<Vertex>&,
                                        const std::function<bool(const Vertex&)>&, const Vertex&)>
        common_neighbor_supply;
    // exact bounded variant: least unused common neighbor of W up to the cap;
    // when present it replaces linear window scans
    std::function<std::optional<Vertex>(const std::vector<Vertex>&,
                                        const std::function<bool(const Vertex&)>&, const Vertex&)>
        bounded_common_neighbor;

    std::vector<Vertex> neighbors_upto(const Vertex& v, const Vertex& t) const;
    bool has_vertex(const Vertex& v) const { return !in_vertex_set || in_vertex_set(v); }
};

enum class Fin { Finite, Infinite };

/// A total symmetric edge-coloring of (a subset of) the pairs of N with
/// colors 0..colors-1, plus optional analytic finiteness oracles.
struct ColoringOracle {
    std::string name;
    int colors = 2;
    std::function<Color(const Vertex&, const Vertex&)> color;
    std::function<bool(const Vertex&, const Vertex&)> pair_valid;  // defaults to u != v

    // |N_c(v)| finite or infinite, when the construction can say
    std::function<std::optional<Fin>(const Vertex&, Color)> finiteness;
    // |N_c(v) ∩ S| for remainder sets the construction recognizes
    std::function<std::optional<Fin>(const Vertex&, Color, const VertexSetOracle&)> finiteness_within;
    // analytic supply: least unused common color-c neighbor of W above a bound
    std::function<std::optional<Vertex>(const std::vector<Vertex>&, Color,
                                        const std::function<bool(const Vertex&)>&, const Vertex&)>
        common_neighbor_supply;
    // exact bounded searches per color; colors without an entry are scanned
    std::map<Color, std::function<std::optional<Vertex>(const std::vector<Vertex>&,
                                                        const std::function<bool(const Vertex&)>&,
                                                        const Vertex&)>>
        bounded_common_neighbor;

    bool valid_pair(const Vertex& u, const Vertex& v) const
    {
        if (u == v)
            return false;
        return !pair_valid || pair_valid(u, v);
    }

    Color at(const Vertex& u, const Vertex& v) const;

    // sorted color-c neighbors of v up to t
    std::vector<Vertex> neighbors_upto(const Vertex& v, Color c, const Vertex& t) const;
    BigInt degree_upto(const Vertex& v, Color c, const Vertex& t) const;
    VertexSetOracle neighborhood_set(const Vertex& v, Color c) const;

    // the spanning subgraph with all edges of color c
    GraphOracle color_class_graph(Color c) const;
};

} // namespace ramsey

#endif
