#include "ramsey/zoo.hpp"

#include "ramsey/colorings.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ramsey {

namespace {

bool rado_adjacent(const Vertex& u, const Vertex& v)
{
    if (u == v)
        return false;
    const Vertex& s = u < v ? u : v;
    const Vertex& t = u < v ? v : u;
    return bit_of(t, s) == 1;
}

Vertex rado_independent_extension(std::vector<Vertex> x)
{
    // The least power of two avoiding x: 2^p has a single set bit, so it is
    // non-adjacent to every smaller vertex except p+1, and a larger vertex
    // sees it only through its own bit 2^p.
    std::sort(x.begin(), x.end());
    auto member = [&x](const BigInt& v) { return std::binary_search(x.begin(), x.end(), v); };
    for (BigInt p = 1;; ++p) {
        if (p > 1000000)
            throw refusal_error("rado witness: avoidance set too large");
        if (member(p + 1))
            continue;
        BigInt w = BigInt(1) << static_cast<unsigned>(p.convert_to<std::uint64_t>());
        if (member(w))
            continue;
        bool clean = true;
        for (const auto& xx : x)
            if (xx > w && bit_of(xx, w) == 1) {
                clean = false;
                break;
            }
        if (clean)
            return w;
    }
}

} // namespace

GraphOracle rado_graph()
{
    GraphOracle g;
    g.name = "rado";
    g.adjacent = rado_adjacent;
    g.traits.zero_ruled = true;
    g.independent_extension = rado_independent_extension;
    g.common_neighbor_supply = [](const std::vector<Vertex>& w,
                                  const std::function<bool(const Vertex&)>& used,
                                  const Vertex& above) {
        return rado_common_neighbor_supply(w, 1, used, above);
    };
    g.bounded_common_neighbor = rado_bounded_least_common;
    return g;
}

GraphOracle bipartite_rado_graph()
{
    GraphOracle g;
    g.name = "brado";
    g.adjacent = [](const Vertex& u, const Vertex& v) {
        return mod_pos(u, 2) != mod_pos(v, 2) && rado_adjacent(u, v);
    };
    g.in_vertex_set = [](const Vertex& v) { return v >= 2; };
    g.traits.zero_ruled = true;
    g.traits.bipartite = true;
    g.independent_extension = rado_independent_extension;
    g.part_of = [](const Vertex& v) { return mod_pos(v, 2) == 1 ? 1 : 2; };
    return g;
}

GraphOracle half_graph()
{
    GraphOracle g;
    g.name = "half";
    g.adjacent = [](const Vertex& u, const Vertex& v) {
        if (u == v)
            return false;
        const Vertex& hi = u < v ? v : u;
        return mod_pos(hi, 2) == 0;
    };
    g.traits.zero_ruled = true;
    g.independent_extension = [](const std::vector<Vertex>& x) {
        BigInt mx = 0;
        for (const auto& v : x)
            mx = std::max(mx, v);
        BigInt w = mx + 1;
        if (mod_pos(w, 2) == 0)
            ++w;
        return w;  // an odd vertex above everything has no neighbor below it
    };
    return g;
}

GraphOracle bipartite_half_graph()
{
    GraphOracle g;
    g.name = "bhalf";
    g.adjacent = [](const Vertex& u, const Vertex& v) {
        const Vertex& lo = u < v ? u : v;
        const Vertex& hi = u < v ? v : u;
        return lo != hi && mod_pos(lo, 2) == 1 && mod_pos(hi, 2) == 0;
    };
    g.traits.zero_ruled = true;
    g.traits.bipartite = true;
    g.traits.one_way_locally_finite_k = 2;
    g.part_of = [](const Vertex& v) { return mod_pos(v, 2) == 1 ? 1 : 2; };
    g.earlier_neighbor_bound = [](const Vertex& v) { return v; };
    g.independent_extension = [](const std::vector<Vertex>& x) {
        BigInt mx = 0;
        for (const auto& v : x)
            mx = std::max(mx, v);
        BigInt w = mx + 1;
        if (mod_pos(w, 2) == 0)
            ++w;
        return w;
    };
    return g;
}

GraphOracle complete_graph()
{
    GraphOracle g;
    g.name = "complete";
    g.adjacent = [](const Vertex& u, const Vertex& v) { return u != v; };
    return g;
}

GraphOracle edgeless_graph()
{
    GraphOracle g;
    g.name = "edgeless";
    g.adjacent = [](const Vertex&, const Vertex&) { return false; };
    g.traits.locally_finite = true;
    g.traits.zero_ruled = true;
    g.independent_extension = [](const std::vector<Vertex>& x) {
        BigInt mx = 0;
        for (const auto& v : x)
            mx = std::max(mx, v);
        return mx + 1;
    };
    return g;
}

GraphOracle two_cliques_graph()
{
    GraphOracle g;
    g.name = "twocliques";
    g.adjacent = [](const Vertex& u, const Vertex& v) {
        return u != v && mod_pos(u, 2) == mod_pos(v, 2);
    };
    return g;
}

GraphOracle path_graph()
{
    GraphOracle g;
    g.name = "path";
    g.adjacent = [](const Vertex& u, const Vertex& v) {
        return (u < v ? v - u : u - v) == 1;
    };
    g.traits.locally_finite = true;
    g.traits.tree = true;
    g.traits.tree_type = 1;
    g.traits.zero_ruled = true;
    g.independent_extension = [](const std::vector<Vertex>& x) {
        BigInt mx = 0;
        for (const auto& v : x)
            mx = std::max(mx, v);
        return mx + 2;
    };
    TreeSupply supply;
    supply.child = [](const Vertex& v, const BigInt& k) -> std::optional<Vertex> {
        if (k != 1)
            return std::nullopt;
        return v + 1;
    };
    supply.next_on_path = [](const Vertex& v) -> std::optional<Vertex> { return v + 1; };
    g.tree_supply = supply;
    return g;
}

// --- H_d ----------------------------------------------------------------------

namespace {

struct HdState {
    int d;
    std::vector<BigInt> stage_bounds;  // n_0, n_1, ...
    mutable std::mutex lock;

    void grow_past(const Vertex& v)
    {
        std::scoped_lock g(lock);
        while (stage_bounds.back() < v)
            stage_bounds.push_back(stage_bounds.back() +
                                   binomial(stage_bounds.back(), static_cast<unsigned>(d)));
    }
    BigInt bound(int i)
    {
        std::scoped_lock g(lock);
        while (static_cast<int>(stage_bounds.size()) <= i)
            stage_bounds.push_back(stage_bounds.back() +
                                   binomial(stage_bounds.back(), static_cast<unsigned>(d)));
        return stage_bounds[static_cast<size_t>(i)];
    }
    // (n_i, j) with n_i < v <= n_{i+1} and j = v - n_i
    std::pair<BigInt, BigInt> stage_of(const Vertex& v)
    {
        grow_past(v);
        std::scoped_lock g(lock);
        auto it = std::lower_bound(stage_bounds.begin(), stage_bounds.end(), v);
        size_t idx = static_cast<size_t>(it - stage_bounds.begin());
        BigInt base = stage_bounds[idx - 1];
        return {base, v - base};
    }
};

// lexicographically j-th (1-based) d-subset of [n]
std::vector<BigInt> unrank_subset(const BigInt& n, int d, BigInt j)
{
    std::vector<BigInt> out;
    BigInt lo = 1;
    for (int slot = d; slot >= 1; --slot) {
        for (BigInt c = lo;; ++c) {
            BigInt block = binomial(n - c, static_cast<unsigned>(slot - 1));
            if (j <= block) {
                out.push_back(c);
                lo = c + 1;
                break;
            }
            j -= block;
        }
    }
    return out;
}

BigInt rank_subset(const BigInt& n, const std::vector<BigInt>& subset)
{
    BigInt rank = 1;
    BigInt prev = 0;
    int d = static_cast<int>(subset.size());
    for (int i = 0; i < d; ++i) {
        for (BigInt c = prev + 1; c < subset[static_cast<size_t>(i)]; ++c)
            rank += binomial(n - c, static_cast<unsigned>(d - i - 1));
        prev = subset[static_cast<size_t>(i)];
    }
    return rank;
}

} // namespace

GraphOracle h_d_graph(int d)
{
    if (d < 1)
        throw std::invalid_argument("h_d_graph: d must be >= 1");
    auto st = std::make_shared<HdState>();
    st->d = d;
    st->stage_bounds.push_back(d);

    GraphOracle g;
    g.name = "hd[d=" + std::to_string(d) + "]";
    g.adjacent = [st, d](const Vertex& u, const Vertex& v) {
        if (u == v)
            return false;
        const Vertex& lo = u < v ? u : v;
        const Vertex& hi = u < v ? v : u;
        if (hi <= st->bound(0))
            return false;  // the base prefix is edgeless
        auto [base, j] = st->stage_of(hi);
        if (lo > base)
            return false;
        auto subset = unrank_subset(base, d, j);
        return std::find(subset.begin(), subset.end(), lo) != subset.end();
    };
    g.traits.zero_ruled = true;
    g.traits.degeneracy_bound = d;
    g.traits.kwise_intersecting = d;
    if (d == 1) {
        g.traits.tree = true;
        g.traits.tree_type = 1;
        g.traits.root_infinite_degree = true;
        TreeSupply supply;
        supply.child = [st](const Vertex& v, const BigInt& k) -> std::optional<Vertex> {
            // children of v are the stage vertices mapping to {v}; one per stage
            // with bound >= v
            int i = 0;
            while (st->bound(i) < v)
                ++i;
            return st->bound(i + static_cast<int>(k.convert_to<long long>()) - 1) + v;
        };
        supply.next_on_path = [st](const Vertex& v) -> std::optional<Vertex> {
            int i = 0;
            while (st->bound(i) < v)
                ++i;
            return st->bound(i) + v;
        };
        g.tree_supply = supply;
    }
    g.independent_extension = [st, d](const std::vector<Vertex>& x_in) {
        std::vector<BigInt> x(x_in.begin(), x_in.end());
        std::sort(x.begin(), x.end());
        auto member = [&x](const BigInt& v) { return std::binary_search(x.begin(), x.end(), v); };

        // least stage with room for a d-subset avoiding x
        int i = 0;
        BigInt n;
        while (true) {
            n = st->bound(i);
            BigInt inside = 0;
            for (const auto& xx : x)
                if (xx <= n)
                    ++inside;
            if (n - inside >= d)
                break;
            ++i;
        }

        // values a larger avoided vertex is attached to cannot serve as the
        // witness, nor can members of x itself
        std::vector<BigInt> forbidden = x;
        for (const auto& xx : x)
            if (xx > n) {
                auto [base, j] = st->stage_of(xx);
                for (const auto& s : unrank_subset(base, d, j))
                    forbidden.push_back(s);
                // also forbid colliding with the attachment value itself
            }
        std::sort(forbidden.begin(), forbidden.end());
        auto is_forbidden = [&forbidden](const BigInt& v) {
            return std::binary_search(forbidden.begin(), forbidden.end(), v);
        };

        auto next_avail = [&](BigInt from) -> std::optional<BigInt> {
            for (BigInt c = from; c <= n; ++c)
                if (!member(c))
                    return c;
            return std::nullopt;
        };

        // least avoiding d-subset, advanced lexicographically until the
        // attachment vertex clears the forbidden values
        std::vector<BigInt> y;
        {
            BigInt c = 1;
            while (static_cast<int>(y.size()) < d) {
                auto a = next_avail(c);
                if (!a)
                    throw refusal_error("h_d witness: no room in stage " + n.str());
                y.push_back(*a);
                c = *a + 1;
            }
        }
        while (true) {
            BigInt w = n + rank_subset(n, y);
            if (!is_forbidden(w))
                return w;
            // advance y to the next lexicographic avoiding subset
            int pos = d - 1;
            for (; pos >= 0; --pos) {
                std::vector<BigInt> trial(y.begin(), y.begin() + pos);
                BigInt c = y[static_cast<size_t>(pos)] + 1;
                bool ok = true;
                for (int slot = pos; slot < d; ++slot) {
                    auto a = next_avail(c);
                    if (!a) {
                        ok = false;
                        break;
                    }
                    trial.push_back(*a);
                    c = *a + 1;
                }
                if (ok) {
                    y = std::move(trial);
                    break;
                }
            }
            if (pos < 0)
                throw refusal_error("h_d witness: stage " + n.str() + " exhausted");
        }
    };
    return g;
}

BigInt h_d_stage_bound(const GraphOracle& hd, int i)
{
    auto pos = hd.name.find("d=");
    if (hd.name.rfind("hd", 0) != 0 || pos == std::string::npos)
        throw std::invalid_argument("h_d_stage_bound: not an H_d oracle");
    int d = std::stoi(hd.name.substr(pos + 2));
    HdState st;
    st.d = d;
    st.stage_bounds.push_back(d);
    return st.bound(i);
}

std::vector<Vertex> h_d_subset_of(const GraphOracle& hd, const Vertex& v)
{
    auto pos = hd.name.find("d=");
    if (hd.name.rfind("hd", 0) != 0 || pos == std::string::npos)
        throw std::invalid_argument("h_d_subset_of: not an H_d oracle");
    int d = std::stoi(hd.name.substr(pos + 2));
    HdState st;
    st.d = d;
    st.stage_bounds.push_back(d);
    if (v <= st.bound(0))
        return {};
    auto [base, j] = st.stage_of(v);
    return unrank_subset(base, d, j);
}

// --- trees ----------------------------------------------------------------------

TreeSpec TreeSpec::level_degrees(BigInt start, BigInt step)
{
    TreeSpec s;
    s.kind = Kind::LevelDegrees;
    s.level_start = std::move(start);
    s.level_step = std::move(step);
    if (s.level_start < 2 || s.level_step < 1)
        throw std::invalid_argument("level_degrees: need d_1 >= 2 and a strictly increasing sequence");
    return s;
}

TreeSpec TreeSpec::tstar_witness(int d)
{
    if (d < 2)
        throw std::invalid_argument("tstar_witness: non-center degrees need d >= 2");
    TreeSpec s;
    s.kind = Kind::TStarWitness;
    s.tstar_d = d;
    return s;
}

namespace {

// BFS numbering of the infinite D-ary tree: children of v are D(v-1)+2 .. Dv+1
Vertex dary_parent(const Vertex& v, int d)
{
    return (v - 2) / d + 1;
}

struct LevelState {
    BigInt start, step;
    std::vector<BigInt> level_offsets = {BigInt(1), BigInt(2)};  // level L starts at offsets[L-1]
    mutable std::mutex lock;

    BigInt degree_at(int level) const { return start + (level - 1) * step; }

    // width of level L: 1, d_1, d_1*(d_2-1), d_1*(d_2-1)*(d_3-1), ...
    BigInt width_of(int level) const
    {
        if (level == 1)
            return 1;
        BigInt w = degree_at(1);
        for (int l = 3; l <= level; ++l)
            w *= degree_at(l - 1) - 1;
        return w;
    }

    void grow_levels_unlocked(int levels)
    {
        while (static_cast<int>(level_offsets.size()) < levels) {
            int top = static_cast<int>(level_offsets.size());
            level_offsets.push_back(level_offsets.back() + width_of(top));
        }
    }

    // level (1-based) and index within level (0-based)
    std::pair<int, BigInt> locate(const Vertex& v)
    {
        std::scoped_lock g(lock);
        while (level_offsets.back() <= v)
            level_offsets.push_back(level_offsets.back() +
                                    width_of(static_cast<int>(level_offsets.size())));
        auto it = std::upper_bound(level_offsets.begin(), level_offsets.end(), v);
        int level = static_cast<int>(it - level_offsets.begin());
        return {level, v - level_offsets[static_cast<size_t>(level - 1)]};
    }

    BigInt offset(int level)
    {
        std::scoped_lock g(lock);
        grow_levels_unlocked(level);
        return level_offsets[static_cast<size_t>(level - 1)];
    }
};

// arm i of the increasing star holds vertices T_{i-1}+2 .. T_i+1, T_i = i(i+1)/2
BigInt star_arm_of(const Vertex& v)
{
    // least i with i(i+1)/2 + 1 >= v
    BigInt i = (boost::multiprecision::sqrt(BigInt(8) * (v - 1) + 1) - 1) / 2;
    while (i * (i + 1) / 2 + 1 < v)
        ++i;
    while (i > 1 && (i - 1) * i / 2 + 1 >= v)
        --i;
    return i;
}

} // namespace

GraphOracle tree_graph(const TreeSpec& spec)
{
    GraphOracle g;
    g.traits.tree = true;
    switch (spec.kind) {
    case TreeSpec::Kind::Dary: {
        int d = spec.dary;
        if (d < 1)
            throw std::invalid_argument("tree_graph: d-ary needs d >= 1");
        g.name = "tree.dary[" + std::to_string(d) + "]";
        g.adjacent = [d](const Vertex& u, const Vertex& v) {
            if (u == v)
                return false;
            const Vertex& lo = u < v ? u : v;
            const Vertex& hi = u < v ? v : u;
            return hi >= 2 && dary_parent(hi, d) == lo;
        };
        g.traits.locally_finite = true;
        g.traits.tree_type = 1;
        g.traits.perfect_rooted_tree = d >= 2;
        TreeSupply supply;
        supply.child = [d](const Vertex& v, const BigInt& k) -> std::optional<Vertex> {
            if (k < 1 || k > d)
                return std::nullopt;
            return d * (v - 1) + 1 + k;
        };
        supply.next_on_path = [d](const Vertex& v) -> std::optional<Vertex> {
            return d * (v - 1) + 2;
        };
        g.tree_supply = supply;
        break;
    }
    case TreeSpec::Kind::LevelDegrees: {
        auto st = std::make_shared<LevelState>();
        st->start = spec.level_start;
        st->step = spec.level_step;
        if (st->start < 2 || st->step < 1)
            throw std::invalid_argument("tree_graph: inconsistent level-degree sequence");
        g.name = "tree.leveldeg[" + st->start.str() + "+" + st->step.str() + "k]";
        g.adjacent = [st](const Vertex& u, const Vertex& v) {
            if (u == v)
                return false;
            const Vertex& lo = u < v ? u : v;
            const Vertex& hi = u < v ? v : u;
            auto [level, idx] = st->locate(hi);
            if (level == 1)
                return false;
            BigInt per = level == 2 ? BigInt(1) : st->degree_at(level - 1) - 1;
            // parent index within level-1
            BigInt pidx = level == 2 ? BigInt(0) : idx / per;
            if (level == 2)
                pidx = 0;
            return lo == st->offset(level - 1) + pidx;
        };
        g.traits.locally_finite = true;
        g.traits.tree_type = 1;
        TreeSupply supply;
        auto child = [st](const Vertex& v, const BigInt& k) -> std::optional<Vertex> {
            auto [level, idx] = st->locate(v);
            BigInt nchildren = level == 1 ? st->degree_at(1) : st->degree_at(level) - 1;
            if (k < 1 || k > nchildren)
                return std::nullopt;
            return st->offset(level + 1) + idx * nchildren + (k - 1);
        };
        supply.child = child;
        supply.next_on_path = [child](const Vertex& v) { return child(v, 1); };
        g.tree_supply = supply;
        break;
    }
    case TreeSpec::Kind::IncreasingStar: {
        g.name = "tree.incstar";
        g.adjacent = [](const Vertex& u, const Vertex& v) {
            if (u == v)
                return false;
            const Vertex& lo = u < v ? u : v;
            const Vertex& hi = u < v ? v : u;
            if (lo == 1) {
                BigInt arm = star_arm_of(hi);
                return hi == (arm - 1) * arm / 2 + 2;  // first vertex of its arm
            }
            return star_arm_of(lo) == star_arm_of(hi) && hi == lo + 1;
        };
        g.traits.tree_type = 2;
        g.traits.root_infinite_degree = true;
        g.traits.strongly_contracting = false;
        TreeSupply supply;
        supply.child = [](const Vertex& v, const BigInt& k) -> std::optional<Vertex> {
            if (v == 1)
                return (k - 1) * k / 2 + 2;  // start of arm k
            BigInt arm = star_arm_of(v);
            if (k != 1)
                return std::nullopt;
            if (v + 1 > arm * (arm + 1) / 2 + 1)
                return std::nullopt;  // end of the arm
            return v + 1;
        };
        supply.fresh_arm = [](const BigInt& len, const std::function<bool(const Vertex&)>& used) {
            for (BigInt arm = len;; ++arm) {
                BigInt first = (arm - 1) * arm / 2 + 2;
                bool clean = true;
                for (BigInt q = 0; q < arm && clean; ++q)
                    if (used(first + q))
                        clean = false;
                if (clean) {
                    std::vector<Vertex> out;
                    for (BigInt q = 0; q < arm; ++q)
                        out.push_back(first + q);
                    return out;
                }
            }
        };
        g.tree_supply = supply;
        break;
    }
    case TreeSpec::Kind::TInfinity: {
        g = h_d_graph(1);
        g.name = "tree.tinf";
        g.traits.tree = true;
        break;
    }
    case TreeSpec::Kind::TStarWitness: {
        int d = spec.tstar_d;
        g.name = "tree.tstar[d=" + std::to_string(d) + "]";
        // center 1; block i holds leaf 3i-1, inner vertex 3i, its leaf child 3i+1
        g.adjacent = [](const Vertex& u, const Vertex& v) {
            if (u == v)
                return false;
            const Vertex& lo = u < v ? u : v;
            const Vertex& hi = u < v ? v : u;
            if (lo == 1)
                return mod_pos(hi, 3) == 2 || mod_pos(hi, 3) == 0;
            return mod_pos(lo, 3) == 0 && hi == lo + 1;
        };
        g.traits.root_infinite_degree = true;
        g.traits.strongly_contracting = true;
        break;
    }
    }
    return g;
}

// --- multipartite ------------------------------------------------------------------

void MultipartiteSpec::validate() const
{
    for (const auto& s : finite_sizes)
        if (s < 1)
            throw std::invalid_argument("multipartite spec: finite part sizes must be >= 1");
    if (!infinitely_many && infinite_parts < 1)
        throw std::invalid_argument("multipartite spec: need at least one infinite part");
}

namespace {

struct MultiLayout {
    std::vector<BigInt> finite_ends;  // cumulative ends of the finite parts
    int infinite_parts = 0;           // 0 = infinitely many
    BigInt finite_total;

    // 1-based part index
    int part_of(const Vertex& v) const
    {
        if (v <= finite_total) {
            int p = 1;
            for (const auto& e : finite_ends) {
                if (v <= e)
                    return p;
                ++p;
            }
        }
        BigInt m = v - finite_total;
        int base = static_cast<int>(finite_ends.size());
        if (infinite_parts == 1)
            return base + 1;
        if (infinite_parts > 1) {
            return base + 1 +
                   static_cast<int>(static_cast<long long>(mod_pos(m - 1, infinite_parts)));
        }
        // infinitely many parts: triangular diagonals, diagonal t holds one
        // vertex of each of the parts 1..t
        BigInt t = (boost::multiprecision::sqrt(BigInt(8) * m + 1) - 1) / 2;
        while (t * (t + 1) / 2 < m)
            ++t;
        while (t > 1 && (t - 1) * t / 2 >= m)
            --t;
        BigInt j = m - (t - 1) * t / 2;
        return base + static_cast<int>(j.convert_to<long long>());
    }

    // first vertex of the (base + j)-th part, j >= 1 infinite index
    Vertex infinite_part_first(int j) const
    {
        if (infinite_parts == 1)
            return finite_total + 1;
        if (infinite_parts > 1)
            return finite_total + j;
        BigInt jj = j;
        return finite_total + (jj - 1) * jj / 2 + jj;
    }
};

} // namespace

GraphOracle multipartite_graph(const MultipartiteSpec& spec)
{
    spec.validate();
    auto lay = std::make_shared<MultiLayout>();
    BigInt acc = 0;
    for (const auto& s : spec.finite_sizes) {
        acc += s;
        lay->finite_ends.push_back(acc);
    }
    lay->finite_total = acc;
    lay->infinite_parts = spec.infinitely_many ? 0 : spec.infinite_parts;

    GraphOracle g;
    std::string nm = "multi[";
    for (const auto& s : spec.finite_sizes)
        nm += s.str() + ",";
    nm += spec.infinitely_many ? "inf*]" : ("inf^" + std::to_string(spec.infinite_parts) + "]");
    g.name = nm;
    g.adjacent = [lay](const Vertex& u, const Vertex& v) {
        return u != v && lay->part_of(u) != lay->part_of(v);
    };
    if (!spec.infinitely_many && spec.finite_sizes.size() + spec.infinite_parts == 2)
        g.traits.bipartite = true;
    g.part_of = [lay](const Vertex& v) { return lay->part_of(v); };
    return g;
}

int multipartite_part_of(const GraphOracle& g, const Vertex& v)
{
    if (!g.part_of)
        throw std::invalid_argument("multipartite_part_of: oracle has no part function");
    return g.part_of(v);
}

Vertex multipartite_infinite_part_first(const MultipartiteSpec& spec, int j)
{
    if (j < 1)
        throw std::invalid_argument("multipartite_infinite_part_first: j must be >= 1");
    BigInt finite_total = 0;
    for (const auto& s : spec.finite_sizes)
        finite_total += s;
    if (!spec.infinitely_many) {
        if (spec.infinite_parts == 1)
            return finite_total + 1;
        return finite_total + j;
    }
    BigInt jj = j;
    return finite_total + (jj - 1) * jj / 2 + jj;
}

// --- compatibility graph ------------------------------------------------------------

namespace {

int binary_depth(const Vertex& v)
{
    return static_cast<int>(bit_length(v)) - 1;
}

bool is_ancestor_dary(const Vertex& anc, const Vertex& desc, int d)
{
    if (anc >= desc)
        return false;
    Vertex v = desc;
    while (v > anc)
        v = dary_parent(v, d);
    return v == anc;
}

} // namespace

GraphOracle compatibility_graph(const TreeSpec& spec)
{
    if (spec.kind != TreeSpec::Kind::Dary || spec.dary < 2)
        throw std::invalid_argument("compatibility_graph: tree must be perfect (d-ary with d >= 2)");
    int d = spec.dary;
    GraphOracle g;
    g.name = "ctr.dary[" + std::to_string(d) + "]";
    g.adjacent = [d](const Vertex& u, const Vertex& v) {
        if (u == v)
            return false;
        const Vertex& lo = u < v ? u : v;
        const Vertex& hi = u < v ? v : u;
        if (lo == 1)
            return true;
        return is_ancestor_dary(lo, hi, d);
    };
    g.traits.perfect_rooted_tree = true;
    return g;
}

VertexSetOracle compatibility_level_set(const TreeSpec& spec, int n)
{
    if (spec.kind != TreeSpec::Kind::Dary || spec.dary < 2)
        throw std::invalid_argument("compatibility_level_set: tree must be d-ary with d >= 2");
    int d = spec.dary;
    VertexSetOracle o;
    o.name = "R" + std::to_string(n);
    o.contains = [d, n](const Vertex& v) {
        int depth = 0;
        Vertex w = v;
        while (w > 1) {
            w = dary_parent(w, d);
            ++depth;
        }
        return depth == n;
    };
    return o;
}

std::vector<Vertex> compatibility_antichain_upto(const TreeSpec& spec, const Vertex& u,
                                                 const Vertex& bound)
{
    if (spec.kind != TreeSpec::Kind::Dary || spec.dary != 2)
        throw std::invalid_argument("compatibility_antichain_upto: binary trees only");
    if (u < 2)
        throw std::invalid_argument("compatibility_antichain_upto: u must not be the root");
    std::vector<Vertex> out;
    if (u <= bound)
        out.push_back(u);
    // one off-path child per strict ancestor above the parent: the sibling of
    // each path vertex between the root and u
    Vertex x = u / 2;
    while (x >= 2) {
        Vertex sib = mod_pos(x, 2) == 0 ? Vertex(x + 1) : Vertex(x - 1);
        if (sib <= bound)
            out.push_back(sib);
        x /= 2;
    }
    // a maximal antichain of the sibling's subtree with square-root density:
    // the full level j of the subtree hanging right of the j-th left-spine
    // vertex (so consuming k членов only reaches values about sib * k^2)
    Vertex sib = mod_pos(u, 2) == 0 ? Vertex(u + 1) : Vertex(u - 1);
    for (Vertex spine = sib;; spine *= 2) {
        Vertex hang = 2 * spine + 1;             // right child of the spine vertex
        Vertex level_width = spine / sib;        // 2^j for the j-th spine vertex
        Vertex first = hang * level_width;       // level j of subtree(hang)
        if (first > bound)
            break;
        for (Vertex v = first; v < (hang + 1) * level_width && v <= bound; ++v)
            out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ramsey
