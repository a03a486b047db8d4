#include "ramsey/colorings.hpp"

#include <algorithm>
#include <mutex>

namespace ramsey {

// --- IntervalScheme ----------------------------------------------------------

struct IntervalSchemeState {
    std::vector<BigInt> bounds;  // a_0, a_1, ...
    std::vector<std::uint64_t> bounds_u64;  // fast-path copies while they fit
    IntervalScheme::Rule rule;
    mutable std::mutex lock;

    void grow_to_unlocked(size_t stages)
    {
        while (bounds.size() < stages + 1)
            append_next();
    }

    void grow_past_unlocked(const Vertex& v)
    {
        while (bounds.back() <= v)
            append_next();
    }

    void append_next()
    {
        int k = static_cast<int>(bounds.size());
        BigInt next = rule(k, bounds.back());
        if (next <= bounds.back())
            throw std::invalid_argument("interval scheme rule is not increasing at stage " +
                                        std::to_string(k));
        bounds.push_back(next);
        if (bounds_u64.size() + 1 == bounds.size()) {
            if (auto u = as_u64(next))
                bounds_u64.push_back(*u);
        }
    }
};

IntervalScheme::IntervalScheme(std::string name, Rule rule, int prebuilt_stages) : name_(std::move(name))
{
    state_ = std::make_shared<IntervalSchemeState>();
    state_->bounds.push_back(1);
    state_->bounds_u64.push_back(1);
    state_->rule = std::move(rule);
    state_->grow_to_unlocked(static_cast<size_t>(std::max(prebuilt_stages, 1)));
}

int IntervalScheme::index_of(const Vertex& v) const
{
    if (v < 1)
        throw std::invalid_argument("interval scheme: vertex must be >= 1");
    std::scoped_lock g(state_->lock);
    state_->grow_past_unlocked(v);
    if (auto vu = as_u64(v); vu && state_->bounds_u64.size() == state_->bounds.size()) {
        const auto& b = state_->bounds_u64;
        auto it = std::upper_bound(b.begin(), b.end(), *vu);
        return static_cast<int>(it - b.begin()) - 1;
    }
    const auto& b = state_->bounds;
    auto it = std::upper_bound(b.begin(), b.end(), v);
    return static_cast<int>(it - b.begin()) - 1;
}

BigInt IntervalScheme::bound(int i) const
{
    if (i < 0)
        throw std::invalid_argument("interval scheme: negative stage");
    std::scoped_lock g(state_->lock);
    state_->grow_to_unlocked(static_cast<size_t>(i));
    return state_->bounds[static_cast<size_t>(i)];
}

IntervalScheme IntervalScheme::eq3_minimal(std::function<BigInt(const BigInt&)> f, std::string fname,
                                           int stages)
{
    auto rule = [f](int k, const BigInt& prev) { return BigInt(k) * (prev + f(prev)) + 1; };
    return IntervalScheme("eq3[f=" + fname + "]", rule, stages);
}

IntervalScheme IntervalScheme::tstar(int d, int stages)
{
    if (d < 1)
        throw std::invalid_argument("tstar scheme: d must be >= 1");
    auto rule = [d](int k, const BigInt& prev) { return BigInt(k) * d * prev; };
    return IntervalScheme("tstar[d=" + std::to_string(d) + "]", rule, stages);
}

IntervalScheme IntervalScheme::powers_of_two(int stages)
{
    auto rule = [](int, const BigInt& prev) { return prev * 2; };
    return IntervalScheme("pow2", rule, stages);
}

// --- rado -------------------------------------------------------------------

static Color rado_color_of(const Vertex& u, const Vertex& v)
{
    const Vertex& s = u < v ? u : v;
    const Vertex& t = u < v ? v : u;
    return bit_of(t, s);
}

std::optional<Vertex> rado_common_neighbor_supply(const std::vector<Vertex>& w, Color c,
                                                  const std::function<bool(const Vertex&)>& used,
                                                  const Vertex& above)
{
    // a vertex above every member of w is joined to w exactly through its
    // digits at the members' positions: fix those and sweep the free ones
    BigInt base = 0;
    BigInt top = 0;
    for (const auto& x : w) {
        if (x < 1)
            return std::nullopt;
        if (x > (BigInt(1) << 23))
            return std::nullopt;  // digit positions this high are out of reach
        top = std::max(top, x);
        if (c == 1)
            boost::multiprecision::bit_set(base, static_cast<unsigned>(x.convert_to<std::uint64_t>() - 1));
    }
    std::vector<unsigned> fixed;
    for (const auto& x : w)
        fixed.push_back(static_cast<unsigned>(x.convert_to<std::uint64_t>() - 1));
    std::sort(fixed.begin(), fixed.end());
    // free digit positions, in increasing order as needed
    auto free_position = [&fixed](unsigned j) {
        unsigned pos = 0, skipped = 0, idx = 0;
        while (true) {
            if (idx < fixed.size() && fixed[idx] == pos) {
                ++idx;
            }
            else {
                if (skipped == j)
                    return pos;
                ++skipped;
            }
            ++pos;
        }
    };
    // pad digits at currently unused positions in a quiet range, so the
    // supplied vertex keeps a populated reachable neighborhood; pads at the
    // smallest positions would be eaten by the ordinary covering sweep
    BigInt padded = base;
    {
        unsigned placed = 0;
        for (BigInt p = 4096; placed < 32; ++p) {
            if (std::find(fixed.begin(), fixed.end(),
                          static_cast<unsigned>(p.convert_to<std::uint64_t>() - 1)) != fixed.end())
                continue;
            if (used(p))
                continue;
            boost::multiprecision::bit_set(padded,
                                           static_cast<unsigned>(p.convert_to<std::uint64_t>() - 1));
            ++placed;
        }
    }
    for (BigInt k = 0;; ++k) {
        if (k > 2000000)
            return std::nullopt;
        BigInt v = padded;
        BigInt kk = k;
        unsigned j = 0;
        while (kk > 0) {
            if (boost::multiprecision::bit_test(kk, 0))
                boost::multiprecision::bit_set(v, free_position(j));
            kk >>= 1;
            ++j;
        }
        if (v <= above || v <= top || used(v))
            continue;  // candidates below `top` carry the wrong upward digits
        bool collides = false;
        for (const auto& x : w)
            if (v == x)
                collides = true;
        if (!collides)
            return v;
    }
}

namespace {

std::vector<BigInt> digit_positions(const BigInt& x)
{
    std::vector<BigInt> out;
    unsigned top = bit_length(x);
    for (unsigned p = 0; p < top; ++p)
        if (boost::multiprecision::bit_test(x, p))
            out.push_back(BigInt(p) + 1);
    return out;
}

} // namespace

std::optional<Vertex> rado_bounded_least_common(const std::vector<Vertex>& w,
                                                const std::function<bool(const Vertex&)>& used,
                                                const Vertex& cap)
{
    if (w.empty()) {
        for (Vertex v = 1; v <= cap; ++v)
            if (!used(v))
                return v;
        return std::nullopt;
    }
    std::vector<Vertex> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    size_t k = sorted.size();
    std::vector<std::vector<BigInt>> bitpos(k);
    for (size_t j = 0; j < k; ++j)
        bitpos[j] = digit_positions(sorted[j]);

    std::optional<Vertex> best;
    auto offer = [&](const Vertex& v) {
        if (v > cap || used(v))
            return;
        for (const auto& x : sorted)
            if (v == x)
                return;
        if (!best || v < *best)
            best = v;
    };

    // candidates sitting between consecutive members: their own position must
    // be a digit of every later member, and they must carry every earlier
    // member's digit themselves
    for (size_t gap = 0; gap < k; ++gap) {
        // v in (sorted[gap-1], sorted[gap]): intersect the later digit sets
        std::vector<BigInt> candidates = bitpos[gap];
        for (size_t j = gap + 1; j < k; ++j) {
            std::vector<BigInt> keep;
            for (const auto& c : candidates)
                if (std::binary_search(bitpos[j].begin(), bitpos[j].end(), c))
                    keep.push_back(c);
            candidates = std::move(keep);
        }
        Vertex lo = gap == 0 ? Vertex(0) : sorted[gap - 1];
        for (const auto& v : candidates) {
            if (v <= lo || v >= sorted[gap])
                continue;
            bool carries = true;
            for (size_t j = 0; j < gap && carries; ++j)
                if (bit_of(v, sorted[j]) != 1)
                    carries = false;
            if (carries)
                offer(v);
        }
    }

    // candidates above every member: the base digit pattern plus free digits
    if (sorted.back() <= (BigInt(1) << 23)) {
        BigInt base = 0;
        std::vector<std::uint64_t> fixed;
        for (const auto& x : sorted) {
            boost::multiprecision::bit_set(base, static_cast<unsigned>(x.convert_to<std::uint64_t>() - 1));
            fixed.push_back(x.convert_to<std::uint64_t>() - 1);
        }
        std::sort(fixed.begin(), fixed.end());
        auto free_position = [&fixed](unsigned j) {
            unsigned pos = 0, skipped = 0, idx = 0;
            while (true) {
                if (idx < fixed.size() && fixed[idx] == pos)
                    ++idx;
                else {
                    if (skipped == j)
                        return pos;
                    ++skipped;
                }
                ++pos;
            }
        };
        if (base <= cap) {
            for (BigInt kk = 0; kk <= 4096; ++kk) {
                BigInt v = base;
                BigInt rest = kk;
                unsigned j = 0;
                while (rest > 0) {
                    if (boost::multiprecision::bit_test(rest, 0))
                        boost::multiprecision::bit_set(v, free_position(j));
                    rest >>= 1;
                    ++j;
                }
                if (v > cap)
                    break;
                if (v > sorted.back() && !used(v)) {
                    offer(v);
                    break;
                }
            }
        }
    }
    return best;
}

ColoringOracle rado_coloring()
{
    ColoringOracle c;
    c.name = "rado";
    c.colors = 2;
    c.color = [](const Vertex& u, const Vertex& v) { return rado_color_of(u, v); };
    c.finiteness = [](const Vertex&, Color) -> std::optional<Fin> {
        // every bit pattern recurs: both classes are infinite at every vertex
        return Fin::Infinite;
    };
    c.common_neighbor_supply = rado_common_neighbor_supply;
    c.bounded_common_neighbor[1] = rado_bounded_least_common;
    return c;
}

// --- residue coloring ---------------------------------------------------------

ColoringOracle residue_coloring(int r)
{
    if (r < 2)
        throw std::invalid_argument("residue_coloring: r must be >= 2");
    ColoringOracle c;
    c.name = "residue[r=" + std::to_string(r) + "]";
    c.colors = r;
    c.color = [r](const Vertex& u, const Vertex& v) {
        const Vertex& m = u < v ? u : v;
        return static_cast<Color>(static_cast<long long>(mod_pos(m, r)));
    };
    c.finiteness = [r](const Vertex& v, Color i) -> std::optional<Fin> {
        if (i < 0 || i >= r)
            return std::nullopt;
        return mod_pos(v, r) == i ? Fin::Infinite : Fin::Finite;
    };
    return c;
}

BigInt residue_color_degree_below(int r, const Vertex& n, Color i)
{
    // |{m in [1, n-1] : m == i (mod r)}|
    if (n <= 1)
        return 0;
    BigInt m = n - 1;
    BigInt base = floor_div(m, r);
    if (i == 0)
        return base;
    return (m % r >= i) ? base + 1 : base;
}

// --- interval colorings --------------------------------------------------------

namespace {

bool set_is_all(const VertexSetOracle& s)
{
    return s.exact_form && s.exact_form->intervals.empty() && s.exact_form->residues.size() == 1 &&
           s.exact_form->residues[0].modulus == 1 && s.exact_form->residues[0].start <= 1;
}

} // namespace

ColoringOracle forward_interval_coloring(std::function<BigInt(const BigInt&)> f, std::string fname,
                                         int stages)
{
    if (stages < 2)
        throw std::invalid_argument("forward_interval_coloring: stages must be >= 2");
    BigInt f1 = f(1), f2 = f(2);
    if (f2 < f1)
        throw std::invalid_argument("forward_interval_coloring: f must be increasing");
    IntervalScheme scheme = IntervalScheme::eq3_minimal(std::move(f), fname, stages);

    ColoringOracle c;
    c.name = "fwdint[" + scheme.name() + "]";
    c.colors = 2;
    c.color = [scheme](const Vertex& u, const Vertex& v) {
        const Vertex& lo = u < v ? u : v;
        return scheme.index_of(lo) % 2 == 1 ? kRed : kBlue;
    };
    c.finiteness = [scheme](const Vertex& v, Color i) -> std::optional<Fin> {
        int parity = scheme.index_of(v) % 2;
        // upward edges from v all carry its interval color
        if (parity == 1)
            return i == kRed ? Fin::Infinite : Fin::Finite;
        return i == kBlue ? Fin::Infinite : Fin::Finite;
    };
    c.finiteness_within = [scheme](const Vertex& v, Color queried,
                                   const VertexSetOracle& s) -> std::optional<Fin> {
        if (!s.peel_info && !set_is_all(s))
            return std::nullopt;
        int parity = scheme.index_of(v) % 2;
        Color upward = parity == 1 ? kRed : kBlue;  // all edges above v carry this color
        int stage = s.peel_info ? s.peel_info->stage : 0;
        if (stage == 0)
            return queried == upward ? Fin::Infinite : Fin::Finite;
        if (s.peel_info->kind == PeelStageInfo::Kind::Deep) {
            // the deep peel removes the intervals whose upward color differs
            // from the peel color; the survivors form one parity union
            return queried == s.peel_info->peel_color ? Fin::Infinite : Fin::Finite;
        }
        // the two-color peel removes everything at stage 0
        return Fin::Finite;
    };
    return c;
}

ColoringOracle backward_interval_coloring(IntervalScheme scheme)
{
    ColoringOracle c;
    c.name = "bwdint[" + scheme.name() + "]";
    c.colors = 2;
    c.color = [scheme](const Vertex& u, const Vertex& v) {
        const Vertex& hi = u < v ? v : u;
        return scheme.index_of(hi) % 2 == 1 ? kRed : kBlue;
    };
    // every vertex of A^0 has finite blue degree to A^1 and vice versa: the
    // cross-parity edges of the wrong color all point below the vertex
    c.finiteness_within = [](const Vertex&, Color queried,
                             const VertexSetOracle& s) -> std::optional<Fin> {
        int target_parity;
        if (s.name == "A0")
            target_parity = 0;
        else if (s.name == "A1")
            target_parity = 1;
        else
            return std::nullopt;
        // edges upward into A^p carry p's color; the other color meets A^p
        // only below the queried vertex
        Color upward = target_parity == 1 ? kRed : kBlue;
        return queried == upward ? Fin::Infinite : Fin::Finite;
    };
    return c;
}

VertexSetOracle interval_union_set(const IntervalScheme& scheme, int parity, std::string name)
{
    VertexSetOracle o;
    o.name = std::move(name);
    o.contains = [scheme, parity](const Vertex& v) { return scheme.index_of(v) % 2 == parity; };
    return o;
}

// --- half-graph colorings --------------------------------------------------------

ColoringOracle bipartite_halfgraph_coloring(VertexSetOracle side_a, VertexSetOracle side_b,
                                            std::function<BigInt(const Vertex&)> f_to_odds,
                                            std::function<BigInt(const Vertex&)> g_to_evens)
{
    ColoringOracle c;
    c.name = "bhalfc";
    c.colors = 2;
    auto a = std::make_shared<VertexSetOracle>(std::move(side_a));
    auto b = std::make_shared<VertexSetOracle>(std::move(side_b));
    c.pair_valid = [a, b](const Vertex& u, const Vertex& v) {
        return (a->contains(u) && b->contains(v)) || (a->contains(v) && b->contains(u));
    };
    c.color = [a, b, f_to_odds, g_to_evens](const Vertex& u, const Vertex& v) {
        const Vertex& in_a = a->contains(u) ? u : v;
        const Vertex& in_b = a->contains(u) ? v : u;
        return g_to_evens(in_b) < f_to_odds(in_a) ? kRed : kBlue;
    };
    // B-side vertices have cofinite red degree to A; A-side cofinite blue to B
    c.finiteness = [a](const Vertex& v, Color i) -> std::optional<Fin> {
        bool on_a = a->contains(v);
        if (on_a)
            return i == kBlue ? Fin::Infinite : Fin::Finite;
        return i == kRed ? Fin::Infinite : Fin::Finite;
    };
    return c;
}

ColoringOracle bipartite_halfgraph_default()
{
    auto odds = VertexSetOracle::from_form("odds", SetForm::residue_class(2, 1));
    auto evens = VertexSetOracle::from_form("evens", SetForm::residue_class(2, 0));
    auto ident = [](const Vertex& v) { return v; };
    return bipartite_halfgraph_coloring(odds, evens, ident, ident);
}

// rank of v inside its residue class {rep, rep+mod, ...}, 1-based
static BigInt class_rank(const Vertex& v, const BigInt& mod, const BigInt& rep)
{
    return (v - rep) / mod + 1;
}

ColoringOracle blocks_halfgraph_coloring(int k)
{
    if (k < 2)
        throw std::invalid_argument("blocks_halfgraph_coloring: k must be >= 2");
    ColoringOracle c;
    c.name = "blocks[k=" + std::to_string(k) + "]";
    c.colors = 3;
    c.color = [k](const Vertex& u, const Vertex& v) {
        BigInt cu = mod_pos(u, k), cv = mod_pos(v, k);
        if (cu == cv)
            return kGreen;
        // lower-indexed class carries cofinite red degree toward the higher
        const Vertex& lo_v = cu < cv ? u : v;
        const Vertex& hi_v = cu < cv ? v : u;
        BigInt lo_c = cu < cv ? cu : cv;
        BigInt hi_c = cu < cv ? cv : cu;
        BigInt lo_rep = lo_c == 0 ? BigInt(k) : lo_c;
        BigInt hi_rep = hi_c == 0 ? BigInt(k) : hi_c;
        BigInt r_lo = class_rank(lo_v, k, lo_rep);
        BigInt r_hi = class_rank(hi_v, k, hi_rep);
        // interleave: cofinite-red side on the evens, the other on the odds
        return 2 * r_lo < 2 * r_hi - 1 ? kRed : kBlue;
    };
    c.finiteness = [k](const Vertex& v, Color i) -> std::optional<Fin> {
        if (i == kGreen)
            return Fin::Infinite;  // its own class
        BigInt cv = mod_pos(v, k);
        // v gives cofinite red to every higher class and receives cofinite
        // blue from every lower one; the opposite directions are finite
        if (i == kRed)
            return cv < k - 1 ? Fin::Infinite : Fin::Finite;
        return cv > 0 ? Fin::Infinite : Fin::Finite;
    };
    return c;
}

ColoringOracle residue_partition_coloring(int m)
{
    if (m < 1)
        throw std::invalid_argument("residue_partition_coloring: m must be >= 1");
    ColoringOracle c;
    c.name = "respart[m=" + std::to_string(m) + "]";
    c.colors = 2;
    c.color = [m](const Vertex& u, const Vertex& v) {
        return mod_pos(u, m) == mod_pos(v, m) ? kRed : kBlue;
    };
    c.finiteness = [m](const Vertex&, Color i) -> std::optional<Fin> {
        if (i == kRed)
            return Fin::Infinite;
        return m == 1 ? Fin::Finite : Fin::Infinite;
    };
    c.finiteness_within = [m](const Vertex&, Color queried,
                              const VertexSetOracle& s) -> std::optional<Fin> {
        if (!s.peel_info && !set_is_all(s))
            return std::nullopt;
        int stage = s.peel_info ? s.peel_info->stage : 0;
        if (stage > 0 && m == 1)
            return Fin::Finite;  // nothing survives stage 0 of either peel
        // otherwise the remainder is all of N: red classes are infinite, blue
        // neighborhoods are empty only in the one-class case
        if (queried == kRed)
            return Fin::Infinite;
        return m == 1 ? Fin::Finite : Fin::Infinite;
    };
    return c;
}

// --- bipartite mod coloring -------------------------------------------------------

ColoringOracle bipartite_mod_coloring(int r)
{
    if (r < 1)
        throw std::invalid_argument("bipartite_mod_coloring: r must be >= 1");
    ColoringOracle c;
    c.name = "bipmod[r=" + std::to_string(r) + "]";
    c.colors = r;
    c.pair_valid = [](const Vertex& u, const Vertex& v) { return mod_pos(u, 2) != mod_pos(v, 2); };
    c.color = [r](const Vertex& u, const Vertex& v) {
        const Vertex& odd = mod_pos(u, 2) == 1 ? u : v;
        const Vertex& even = mod_pos(u, 2) == 1 ? v : u;
        BigInt i = mod_pos((odd + 1) / 2 - 1, r) + 1;  // sub-part of the odd side
        BigInt j = mod_pos(even / 2 - 1, r) + 1;       // sub-part of the even side
        return static_cast<Color>(static_cast<long long>(mod_pos(i - j, r)));
    };
    return c;
}

// --- self-intersecting bound coloring ----------------------------------------------

bool selfintersect_in_a(int /*k*/, const Vertex& v)
{
    return mod_pos(v, 2) == 1;  // classes interleave: A_i odd residues, B_i even
}

int selfintersect_class_index(int k, const Vertex& v)
{
    BigInt c = mod_pos(v, 2 * k);
    if (c == 0)
        return k;  // B_k
    // residue 2i-1 -> A_i, residue 2i -> B_i
    return static_cast<int>((static_cast<long long>(c) + 1) / 2);
}

ColoringOracle selfintersect_coloring(int k)
{
    if (k < 1)
        throw std::invalid_argument("selfintersect_coloring: k must be >= 1");
    ColoringOracle c;
    c.name = "selfint[k=" + std::to_string(k) + "]";
    c.colors = 2;
    c.color = [k](const Vertex& u, const Vertex& v) {
        if (auto uu = as_u64(u)) {
            if (auto vv = as_u64(v)) {
                bool ua = *uu % 2 == 1, va = *vv % 2 == 1;
                if (ua != va) {
                    std::uint64_t a = ua ? *uu : *vv, b = ua ? *vv : *uu;
                    return a < b ? kRed : kBlue;
                }
                std::uint64_t m = 2u * static_cast<unsigned>(k);
                std::uint64_t cu = *uu % m, cv = *vv % m;
                if (ua)
                    return cu == cv ? kRed : kBlue;
                return cu == cv ? kBlue : kRed;
            }
        }
        bool ua = selfintersect_in_a(k, u), va = selfintersect_in_a(k, v);
        if (ua != va) {
            const Vertex& a = ua ? u : v;
            const Vertex& b = ua ? v : u;
            return a < b ? kRed : kBlue;
        }
        int iu = selfintersect_class_index(k, u), iv = selfintersect_class_index(k, v);
        if (ua)
            return iu == iv ? kRed : kBlue;
        return iu == iv ? kBlue : kRed;
    };
    return c;
}

// --- T-star coloring ------------------------------------------------------------

namespace {

// Arrow matrix between the four interval unions, reconstructed from the
// embedding-obstruction argument: entry true means the first class has
// cofinite red degree to the second. Cross pairs (i in {0,1}, j in {2,3}):
// red arrow V_i -> V_j colors A_s - A_t red iff s < t; a blue arrow the
// opposite way around.
bool tstar_red_arrow(int from_low, int to_high)
{
    // (0,2): red, (1,2): blue, (0,3): blue, (1,3): red
    if (from_low == 0)
        return to_high == 2;
    return to_high == 3;
}

} // namespace

ColoringOracle tstar_coloring(int d, int stages)
{
    if (d < 1)
        throw std::invalid_argument("tstar_coloring: d must be >= 1");
    IntervalScheme scheme = IntervalScheme::tstar(d, stages);
    ColoringOracle c;
    c.name = "tstar[d=" + std::to_string(d) + "]";
    c.colors = 2;
    c.color = [scheme](const Vertex& u, const Vertex& v) {
        int su = scheme.index_of(u), sv = scheme.index_of(v);
        int ru = su % 4, rv = sv % 4;
        if (ru == rv)
            return ru <= 1 ? kRed : kBlue;
        int lo = std::min(ru, rv), hi = std::max(ru, rv);
        if (lo == 0 && hi == 1)
            return kBlue;
        if (lo == 2 && hi == 3)
            return kRed;
        // cross pair: s = interval index on the {0,1} side, t on the {2,3} side
        int s_idx = ru <= 1 ? su : sv;
        int t_idx = ru <= 1 ? sv : su;
        int low_class = ru <= 1 ? ru : rv;
        int high_class = ru <= 1 ? rv : ru;
        bool red_arrow = tstar_red_arrow(low_class, high_class);
        if (red_arrow)
            return s_idx < t_idx ? kRed : kBlue;
        return s_idx < t_idx ? kBlue : kRed;
    };
    return c;
}

IntervalScheme tstar_scheme_of(const ColoringOracle& c)
{
    // reconstruct from the recorded name; schemes are cheap to rebuild
    auto pos = c.name.find("d=");
    if (c.name.rfind("tstar", 0) != 0 || pos == std::string::npos)
        throw std::invalid_argument("tstar_scheme_of: not a tstar coloring");
    int d = std::stoi(c.name.substr(pos + 2));
    return IntervalScheme::tstar(d, 24);
}

// --- digraph lift -----------------------------------------------------------------

void DigraphSpec::validate() const
{
    if (n < 1)
        throw std::invalid_argument("digraph spec: need at least one vertex");
    if (arc_color.size() != static_cast<size_t>(n))
        throw std::invalid_argument("digraph spec: arc matrix has wrong row count");
    for (const auto& row : arc_color) {
        if (row.size() != static_cast<size_t>(n))
            throw std::invalid_argument("digraph spec: arc matrix has wrong column count");
        for (Color col : row)
            if (col != kRed && col != kBlue)
                throw std::invalid_argument("digraph spec: arcs must be 2-colored");
    }
}

DigraphSpec DigraphSpec::from_string(int n, const std::string& row_major_rb)
{
    DigraphSpec spec;
    spec.n = n;
    if (row_major_rb.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("digraph spec: expected " + std::to_string(n * n) + " arc colors");
    for (int i = 0; i < n; ++i) {
        std::vector<Color> row;
        for (int j = 0; j < n; ++j) {
            char ch = row_major_rb[static_cast<size_t>(i) * n + j];
            if (ch == 'r')
                row.push_back(kRed);
            else if (ch == 'b')
                row.push_back(kBlue);
            else
                throw std::invalid_argument("digraph spec: arc colors must be 'r' or 'b'");
        }
        spec.arc_color.push_back(std::move(row));
    }
    spec.validate();
    return spec;
}

ColoringOracle digraph_lift_coloring(const DigraphSpec& spec)
{
    spec.validate();
    int n = spec.n;
    auto arcs = std::make_shared<std::vector<std::vector<Color>>>(spec.arc_color);
    ColoringOracle c;
    c.name = "dlift[n=" + std::to_string(n) + "]";
    c.colors = 2;
    c.color = [n, arcs](const Vertex& u, const Vertex& v) {
        int cu = static_cast<int>(static_cast<long long>(mod_pos(u, n)));
        int cv = static_cast<int>(static_cast<long long>(mod_pos(v, n)));
        if (cu == cv)
            return (*arcs)[cu][cu];
        Color fwd = (*arcs)[cu][cv], bwd = (*arcs)[cv][cu];
        if (fwd == bwd)
            return fwd;
        // half-graph pair: the red-arc tail gets cofinite red degree to its head
        int red_tail = fwd == kRed ? cu : cv;
        int other = fwd == kRed ? cv : cu;
        const Vertex& tail_v = (mod_pos(u, n) == red_tail) ? u : v;
        const Vertex& other_v = (mod_pos(u, n) == red_tail) ? v : u;
        BigInt tail_rep = red_tail == 0 ? BigInt(n) : BigInt(red_tail);
        BigInt other_rep = other == 0 ? BigInt(n) : BigInt(other);
        BigInt rt = class_rank(tail_v, n, tail_rep);
        BigInt ro = class_rank(other_v, n, other_rep);
        return 2 * rt < 2 * ro - 1 ? kRed : kBlue;
    };
    return c;
}

// --- induced vertex color ------------------------------------------------------------

Color induced_vertex_color(const ColoringOracle& coloring, const Vertex& v, const Vertex& horizon,
                           InducedRule rule)
{
    if (horizon < 1)
        throw std::invalid_argument("induced_vertex_color: horizon must be >= 1");
    if (rule == InducedRule::AnalyticCofinite) {
        if (!coloring.finiteness)
            throw refusal_error("induced_vertex_color: '" + coloring.name +
                                "' has no finiteness oracle");
        std::optional<Color> infinite_color;
        for (Color i = 0; i < coloring.colors; ++i) {
            auto f = coloring.finiteness(v, i);
            if (!f)
                throw refusal_error("induced_vertex_color: finiteness oracle undecided");
            if (*f == Fin::Infinite) {
                if (infinite_color)
                    throw refusal_error("induced_vertex_color: several colors are infinite at " +
                                        v.str());
                infinite_color = i;
            }
        }
        if (!infinite_color)
            throw refusal_error("induced_vertex_color: no color is infinite at " + v.str());
        return *infinite_color;
    }
    Color best = 0;
    BigInt best_count = -1;
    for (Color i = 0; i < coloring.colors; ++i) {
        BigInt cnt = coloring.degree_upto(v, i, horizon);
        if (cnt > best_count) {
            best_count = cnt;
            best = i;
        }
    }
    return best;
}

} // namespace ramsey
