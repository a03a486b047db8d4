#ifndef RAMSEY_ZOO_HPP
#define RAMSEY_ZOO_HPP

#include "ramsey/oracles.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ramsey {

// m ~ n (m < n) iff the m-th binary digit of n is 1; 0-ruled with an
// analytic power-of-two witness
GraphOracle rado_graph();

// Rado adjacency restricted to opposite-parity pairs, vertex set N \ {1}
GraphOracle bipartite_rado_graph();

// u ~ v iff u < v and v is even
GraphOracle half_graph();

// u ~ v iff u odd, v even, u < v; one-way 2-locally finite (odds first)
GraphOracle bipartite_half_graph();

// complete graph on N (host in several engine tests)
GraphOracle complete_graph();
GraphOracle edgeless_graph();
// u ~ v iff same parity (two disjoint cliques; not infinitely connected)
GraphOracle two_cliques_graph();
// u ~ v iff |u - v| = 1 (the one-way infinite path)
GraphOracle path_graph();

// Staged construction: n_0 = d and each stage appends one vertex per
// d-subset of the current prefix, adjacent to exactly that subset
// (lexicographic enumeration). d-wise intersecting, d-degenerate, 0-ruled.
GraphOracle h_d_graph(int d);
BigInt h_d_stage_bound(const GraphOracle& hd, int i);                  // n_i
std::vector<Vertex> h_d_subset_of(const GraphOracle& hd, const Vertex& v);  // earlier nbrs of v

struct TreeSpec {
    enum class Kind { Dary, LevelDegrees, IncreasingStar, TInfinity, TStarWitness };
    Kind kind = Kind::Dary;
    int dary = 2;
    BigInt level_start = 2, level_step = 1;  // d_i = start + (i-1)*step
    int tstar_d = 2;

    static TreeSpec dary_tree(int d) { return {Kind::Dary, d}; }
    static TreeSpec level_degrees(BigInt start, BigInt step);
    static TreeSpec increasing_star() { return {Kind::IncreasingStar}; }
    static TreeSpec t_infinity() { return {Kind::TInfinity}; }
    static TreeSpec tstar_witness(int d);
};

// canonical numbering: BFS for bounded-level trees, arm-by-arm for the
// increasing star, stage order for T_infinity (realized as H_1)
GraphOracle tree_graph(const TreeSpec& spec);

struct MultipartiteSpec {
    std::vector<BigInt> finite_sizes;
    int infinite_parts = 0;          // ignored when infinitely_many
    bool infinitely_many = false;

    void validate() const;
};

// adjacency iff different parts; finite parts occupy an initial segment,
// infinitely many infinite parts are laid out along triangular diagonals
GraphOracle multipartite_graph(const MultipartiteSpec& spec);
int multipartite_part_of(const GraphOracle& g, const Vertex& v);
// first vertex of the j-th infinite part (j >= 1)
Vertex multipartite_infinite_part_first(const MultipartiteSpec& spec, int j);

// downward closure of a perfect rooted tree: u ~ v iff one lies on the
// root-path of the other (BFS-numbered d-ary tree, d >= 2)
GraphOracle compatibility_graph(const TreeSpec& spec);
// level set R_n, a finite maximal antichain (and hence a ruling set)
VertexSetOracle compatibility_level_set(const TreeSpec& spec, int n);
// canonical infinite maximal antichain through u (u not the root): u, the
// off-path children of u's ancestors, and the spine antichain in u's
// sibling's subtree; enumerated in increasing order up to the bound
std::vector<Vertex> compatibility_antichain_upto(const TreeSpec& spec, const Vertex& u,
                                                 const Vertex& bound);

} // namespace ramsey

#endif
