#ifndef RAMSEY_COLORINGS_HPP
#define RAMSEY_COLORINGS_HPP

#include "ramsey/oracles.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ramsey {

/// Increasing interval bounds a_0 = 1 < a_1 < ...; A_i = [a_i, a_{i+1}).
/// The prefix is generated from the rule at construction and grows on demand
/// behind a lock, so lookups stay pure from the caller's point of view.
class IntervalScheme {
public:
    using Rule = std::function<BigInt(int k, const BigInt& prev)>;

    IntervalScheme(std::string name, Rule rule, int prebuilt_stages);

    // index j with v in [a_j, a_{j+1})
    int index_of(const Vertex& v) const;
    BigInt bound(int i) const;  // a_i
    std::string name() const { return name_; }

    // minimal instance of a_k > k*(a_{k-1} + f(a_{k-1})): a_k = k*(...) + 1
    static IntervalScheme eq3_minimal(std::function<BigInt(const BigInt&)> f, std::string fname,
                                      int stages);
    static IntervalScheme tstar(int d, int stages);          // a_i = i * d * a_{i-1}
    static IntervalScheme powers_of_two(int stages);         // 1, 2, 4, 8, ...

    std::shared_ptr<struct IntervalSchemeState> state_;

private:
    std::string name_;
};

struct DigraphSpec {
    int n = 0;
    // arc_color[i][j] for ordered pair (i,j), 0-based, diagonal = loop colors
    std::vector<std::vector<Color>> arc_color;

    void validate() const;
    static DigraphSpec from_string(int n, const std::string& row_major_rb);
};

// --- coloring constructions -------------------------------------------------

// color of {s,t}, s < t, is the s-th binary digit of t (1-indexed from the
// least significant digit); colors {0,1}
ColoringOracle rado_coloring();

// least unused vertex above `above` joined to every member of w in color c,
// built directly from the digit pattern
std::optional<Vertex> rado_common_neighbor_supply(const std::vector<Vertex>& w, Color c,
                                                  const std::function<bool(const Vertex&)>& used,
                                                  const Vertex& above);

// exact least unused common color-1 neighbor of w up to the cap, enumerated
// from the digit structure instead of a linear scan; nullopt means "none"
std::optional<Vertex> rado_bounded_least_common(const std::vector<Vertex>& w,
                                                const std::function<bool(const Vertex&)>& used,
                                                const Vertex& cap);

// color of {m,n}, m < n, is m mod r; colors 0..r-1
ColoringOracle residue_coloring(int r);

// lower endpoint in an odd-indexed interval -> red, even-indexed -> blue
ColoringOracle forward_interval_coloring(std::function<BigInt(const BigInt&)> f, std::string fname,
                                         int stages);
// upper endpoint's interval index parity decides: odd -> red, even -> blue
ColoringOracle backward_interval_coloring(IntervalScheme scheme);

// remainder sets of the backward scheme, for the finiteness oracle tests
VertexSetOracle interval_union_set(const IntervalScheme& scheme, int parity, std::string name);

// red iff g(b) < f(a) for the A-endpoint a and B-endpoint b, where f maps A
// onto the odds and g maps B onto the evens order-isomorphically. The B side
// ends up with cofinite red degree toward A. Queries off the bipartition throw.
ColoringOracle bipartite_halfgraph_coloring(VertexSetOracle side_a, VertexSetOracle side_b,
                                            std::function<BigInt(const Vertex&)> f_to_odds,
                                            std::function<BigInt(const Vertex&)> g_to_evens);
ColoringOracle bipartite_halfgraph_default();  // A = odds, B = evens, identity maps

// 3 colors: green inside each residue class mod k; between classes i < j the
// half-graph pair coloring oriented so A_i has cofinite red degree to A_j
ColoringOracle blocks_halfgraph_coloring(int k);

// red iff endpoints congruent mod m (m = 1 gives the all-red coloring)
ColoringOracle residue_partition_coloring(int m);

// on K_{N,N} (odds vs evens): sub-parts A_1..A_r, B_1..B_r by position mod r;
// the A_i - B_j edges get color (i - j) mod r. Same-side queries throw.
ColoringOracle bipartite_mod_coloring(int r);

// the 1/(2k)-density construction: interleaved classes A_i, B_i mod 2k with
// the four case rules (A-B by order, within A/B by class equality)
ColoringOracle selfintersect_coloring(int k);
bool selfintersect_in_a(int k, const Vertex& v);
int selfintersect_class_index(int k, const Vertex& v);  // 1-based within its side

// the four-way interval-block construction from the T-star lower bound;
// arrow matrix between V_0..V_3 reconstructed from the proof's constraints
ColoringOracle tstar_coloring(int d, int stages = 24);
IntervalScheme tstar_scheme_of(const ColoringOracle& c);

// split N into classes mod n and lift a 2-colored complete digraph with loops
ColoringOracle digraph_lift_coloring(const DigraphSpec& spec);

// --- induced vertex color ----------------------------------------------------

enum class InducedRule { MaxPrefixDensity, AnalyticCofinite };

// Deterministic surrogate for the ultrafilter-induced vertex coloring.
// MaxPrefixDensity: color whose neighborhood of v is densest at the horizon
// (ties -> smallest index). AnalyticCofinite: the unique color of infinite
// class when all others are finite; refuses otherwise.
Color induced_vertex_color(const ColoringOracle& coloring, const Vertex& v, const Vertex& horizon,
                           InducedRule rule);

// exact |N_i(n) ∩ [n-1]| for the residue coloring
BigInt residue_color_degree_below(int r, const Vertex& n, Color i);

} // namespace ramsey

#endif
