#include "ramsey/analyzers.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

namespace ramsey {

// --- finite prefix graphs -------------------------------------------------------

int FinitePrefixGraph::degree(int v) const
{
    int d = 0;
    for (int u = 1; u <= n; ++u)
        if (u != v && edge(u, v))
            ++d;
    return d;
}

static FinitePrefixGraph make_blank(int n)
{
    FinitePrefixGraph g;
    g.n = n;
    g.adj.assign(static_cast<size_t>(n) + 1, std::vector<char>(static_cast<size_t>(n) + 1, 0));
    return g;
}

FinitePrefixGraph FinitePrefixGraph::from_graph(const GraphOracle& o, int n)
{
    auto g = make_blank(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (o.has_vertex(u) && o.has_vertex(v) && o.adjacent(u, v))
                g.adj[u][v] = g.adj[v][u] = 1;
    return g;
}

FinitePrefixGraph FinitePrefixGraph::from_color_class(const ColoringOracle& c, Color color, int n)
{
    auto g = make_blank(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (c.valid_pair(u, v) && c.color(u, v) == color)
                g.adj[u][v] = g.adj[v][u] = 1;
    return g;
}

FinitePrefixGraph FinitePrefixGraph::complete(int n)
{
    auto g = make_blank(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            g.adj[u][v] = g.adj[v][u] = 1;
    return g;
}

FinitePrefixGraph FinitePrefixGraph::edgeless(int n)
{
    return make_blank(n);
}

FinitePrefixGraph FinitePrefixGraph::star(int leaves)
{
    auto g = make_blank(leaves + 1);
    for (int v = 2; v <= leaves + 1; ++v)
        g.adj[1][v] = g.adj[v][1] = 1;
    return g;
}

FinitePrefixGraph FinitePrefixGraph::cycle(int n)
{
    auto g = make_blank(n);
    for (int v = 1; v <= n; ++v) {
        int w = v == n ? 1 : v + 1;
        g.adj[v][w] = g.adj[w][v] = 1;
    }
    return g;
}

int degeneracy(const FinitePrefixGraph& g)
{
    if (g.n < 1)
        throw std::invalid_argument("degeneracy: empty graph");
    std::vector<int> deg(static_cast<size_t>(g.n) + 1, 0);
    std::vector<char> alive(static_cast<size_t>(g.n) + 1, 1);
    for (int v = 1; v <= g.n; ++v)
        deg[v] = g.degree(v);
    int best = 0;
    for (int round = 0; round < g.n; ++round) {
        int pick = -1;
        for (int v = 1; v <= g.n; ++v)
            if (alive[v] && (pick == -1 || deg[v] < deg[pick]))
                pick = v;
        best = std::max(best, deg[pick]);
        alive[pick] = 0;
        for (int u = 1; u <= g.n; ++u)
            if (alive[u] && g.edge(u, pick))
                --deg[u];
    }
    return best;
}

namespace {

bool color_rec(const FinitePrefixGraph& g, std::vector<int>& col, int v, int limit)
{
    if (v > g.n)
        return true;
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (int u = 1; u < v && ok; ++u)
            if (g.edge(u, v) && col[u] == c)
                ok = false;
        if (!ok)
            continue;
        col[v] = c;
        if (color_rec(g, col, v + 1, limit))
            return true;
        col[v] = 0;
    }
    return false;
}

} // namespace

int chromatic_number(const FinitePrefixGraph& g)
{
    if (g.n > 20)
        throw refusal_error("chromatic_number: exact solver is capped at n <= 20");
    if (g.n == 0)
        return 0;
    for (int k = 1; k <= g.n; ++k) {
        std::vector<int> col(static_cast<size_t>(g.n) + 1, 0);
        if (color_rec(g, col, 1, k))
            return k;
    }
    return g.n;
}

namespace {

bool dominates(const FinitePrefixGraph& g, unsigned mask)
{
    for (int v = 1; v <= g.n; ++v) {
        if (mask & (1u << (v - 1)))
            continue;
        bool hit = false;
        for (int u = 1; u <= g.n && !hit; ++u)
            if ((mask & (1u << (u - 1))) && g.edge(u, v))
                hit = true;
        if (!hit)
            return false;
    }
    return true;
}

bool dom_rec(const FinitePrefixGraph& g, unsigned mask, int next, int left)
{
    if (dominates(g, mask))
        return true;
    if (left == 0)
        return false;
    for (int v = next; v <= g.n; ++v)
        if (dom_rec(g, mask | (1u << (v - 1)), v + 1, left - 1))
            return true;
    return false;
}

} // namespace

bool dominating_set_exists(const FinitePrefixGraph& g, int s)
{
    if (g.n > 24)
        throw refusal_error("dominating_set_exists: exact solver is capped at n <= 24");
    if (s < 0 || s > g.n)
        throw std::invalid_argument("dominating_set_exists: bad size bound");
    return dom_rec(g, 0u, 1, s);
}

namespace {

// enumerate the subsets of [w] with size <= s, calling f on each nonempty one;
// f returns false to abort
template <typename F>
bool for_each_subset(int w, int s, F&& f)
{
    if (w > 22)
        throw refusal_error("subset enumeration capped at window 22");
    std::vector<Vertex> current;
    std::function<bool(int)> rec = [&](int next) {
        if (!current.empty() && !f(current))
            return false;
        if (static_cast<int>(current.size()) == s)
            return true;
        for (int v = next; v <= w; ++v) {
            current.push_back(v);
            if (!rec(v + 1))
                return false;
            current.pop_back();
        }
        return true;
    };
    return rec(1);
}

} // namespace

bool zero_ruled_window_check(const GraphOracle& g, int w, int s, const Vertex& horizon)
{
    if (w > horizon)
        throw std::invalid_argument("zero_ruled_window_check: window exceeds horizon");
    return for_each_subset(w, s, [&](const std::vector<Vertex>& x) {
        for (Vertex v = 1; v <= horizon; ++v) {
            if (!g.has_vertex(v))
                continue;
            if (std::find(x.begin(), x.end(), v) != x.end())
                continue;
            bool clean = true;
            for (const auto& u : x)
                if (g.has_vertex(u) && g.adjacent(u, v)) {
                    clean = false;
                    break;
                }
            if (clean)
                return true;
        }
        return false;
    });
}

namespace {

bool kwise_check_impl(const GraphOracle& g, int k, const BigInt& m, int w, const Vertex& horizon,
                      const VertexSetOracle* candidate_set, bool witnesses_inside)
{
    if (k < 1 || m < 1)
        throw std::invalid_argument("kwise check: need k >= 1 and m >= 1");
    return for_each_subset(w, k, [&](const std::vector<Vertex>& s) {
        for (const auto& v : s)
            if (!g.has_vertex(v) || (candidate_set && !candidate_set->contains(v)))
                return true;  // subsets outside the candidate set are vacuous
        BigInt found = 0;
        for (Vertex x = 1; x <= horizon; ++x) {
            if (!g.has_vertex(x))
                continue;
            if (std::find(s.begin(), s.end(), x) != s.end())
                continue;
            if (witnesses_inside && candidate_set && !candidate_set->contains(x))
                continue;
            bool common = true;
            for (const auto& v : s)
                if (!g.adjacent(v, x)) {
                    common = false;
                    break;
                }
            if (common && ++found >= m)
                break;
        }
        return found >= m;
    });
}

} // namespace

bool kwise_intersecting_check(const GraphOracle& g, int k, const BigInt& m, int w,
                              const Vertex& horizon, const VertexSetOracle* candidate_set)
{
    return kwise_check_impl(g, k, m, w, horizon, candidate_set, false);
}

bool kwise_self_intersecting_check(const GraphOracle& g, int k, const BigInt& m, int w,
                                   const Vertex& horizon, const VertexSetOracle* candidate_set)
{
    return kwise_check_impl(g, k, m, w, horizon, candidate_set, true);
}

std::optional<Vertex> extension_property_check(const GraphOracle& g, const std::vector<Vertex>& f,
                                               const std::vector<Vertex>& f_not,
                                               const Vertex& horizon)
{
    for (const auto& a : f)
        for (const auto& b : f_not)
            if (a == b)
                throw std::invalid_argument("extension_property_check: F and F' must be disjoint");
    for (Vertex v = 1; v <= horizon; ++v) {
        if (!g.has_vertex(v))
            continue;
        if (std::find(f.begin(), f.end(), v) != f.end() ||
            std::find(f_not.begin(), f_not.end(), v) != f_not.end())
            continue;
        bool good = true;
        for (const auto& a : f)
            if (!g.adjacent(a, v)) {
                good = false;
                break;
            }
        for (const auto& b : f_not)
            if (good && g.adjacent(b, v))
                good = false;
        if (good)
            return v;
    }
    return std::nullopt;
}

std::vector<std::vector<Vertex>> left_neighborhood_cascade(const GraphOracle& g,
                                                           const std::vector<Vertex>& s)
{
    if (!g.traits.one_way_locally_finite_k || !g.part_of)
        throw refusal_error("left_neighborhood_cascade: graph lacks the one-way local finiteness trait");
    if (!g.earlier_neighbor_bound)
        throw refusal_error("left_neighborhood_cascade: graph lacks an earlier-neighbor bound witness");
    int k = *g.traits.one_way_locally_finite_k;
    std::vector<std::vector<Vertex>> tiers(static_cast<size_t>(k) + 1);
    // S_k = S ∩ V_k; S_i = (S ∪ N(S_{j>i})) ∩ V_i, finite by the trait
    for (int i = k; i >= 1; --i) {
        std::vector<Vertex> tier;
        for (const auto& v : s)
            if (g.has_vertex(v) && g.part_of(v) == i)
                tier.push_back(v);
        for (int j = i + 1; j <= k; ++j) {
            for (const auto& v : tiers[static_cast<size_t>(j)]) {
                Vertex bound = g.earlier_neighbor_bound(v);
                for (const auto& u : g.neighbors_upto(v, bound))
                    if (g.part_of(u) == i)
                        tier.push_back(u);
            }
        }
        std::sort(tier.begin(), tier.end());
        tier.erase(std::unique(tier.begin(), tier.end()), tier.end());
        tiers[static_cast<size_t>(i)] = std::move(tier);
    }
    std::vector<std::vector<Vertex>> out;
    for (int i = 1; i <= k; ++i)
        out.push_back(std::move(tiers[static_cast<size_t>(i)]));
    return out;
}

// --- ruling products ----------------------------------------------------------------

RulingSizeRule RulingSizeRule::ceil_log2()
{
    return {"ceil-log2", [](const BigInt& n) -> std::optional<unsigned> {
                if (n <= 1)
                    return std::nullopt;  // degenerate head of the sequence
                return bit_length(n - 1);
            }};
}

RulingSizeRule RulingSizeRule::constant(unsigned s)
{
    return {"const" + std::to_string(s), [s](const BigInt&) { return s; }};
}

RulingSizeRule RulingSizeRule::unbounded()
{
    return {"unbounded", [](const BigInt&) { return std::nullopt; }};
}

RulingProduct ruling_product(const RulingSizeRule& rule, const BigInt& n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("ruling_product: N must be >= 1");
    RulingProduct out;
    bool want_exact = n_max <= 64;
    Rat exact = 1;
    double log_sum = 0.0;
    for (BigInt n = 1; n <= n_max; ++n) {
        auto s = rule.size(n);
        if (!s)
            continue;  // unbounded ruling set contributes a factor of 1
        if (*s > 62 && want_exact) {
            want_exact = false;  // denominators explode; keep the float route
        }
        if (want_exact) {
            BigInt den = BigInt(1) << *s;
            exact *= Rat(den - 1, den);
        }
        log_sum += std::log1p(-std::ldexp(1.0, -static_cast<int>(*s)));
    }
    if (want_exact)
        out.exact = exact;
    out.approx = std::exp(log_sum);
    return out;
}

// --- peeling --------------------------------------------------------------------------

namespace {

struct PeelChain : std::enable_shared_from_this<PeelChain> {
    ColoringOracle coloring;
    PeelStageInfo::Kind kind;
    Color deep_color = kBlue;
    std::vector<VertexSetOracle> stage_cache;  // S_0 .. S_max, built once up front

    void build_stages(int max_stage)
    {
        // S_0 = N; S_{j+1} removes the analytically finite vertices of stage j
        auto self = shared_from_this();
        for (int stage = 0; stage <= max_stage; ++stage) {
            VertexSetOracle s = VertexSetOracle::all();
            s.peel_info = PeelStageInfo{kind, deep_color, stage};
            s.name = "peel-stage-" + std::to_string(stage);
            if (stage > 0) {
                s.exact_form.reset();
                int st = stage;
                s.contains = [self, st](const Vertex& v) { return self->survives(v, st); };
            }
            stage_cache.push_back(std::move(s));
        }
    }

    std::optional<Fin> fin(const Vertex& v, Color c, int stage) const
    {
        if (!coloring.finiteness_within)
            return std::nullopt;
        return coloring.finiteness_within(v, c, stage_cache[static_cast<size_t>(stage)]);
    }

    bool removed_at(const Vertex& v, int stage) const
    {
        if (!survives(v, stage))
            return false;
        if (kind == PeelStageInfo::Kind::Deep) {
            auto f = fin(v, deep_color, stage);
            if (!f)
                throw refusal_error("peel: '" + coloring.name +
                                    "' cannot decide finiteness at stage " + std::to_string(stage));
            return *f == Fin::Finite;
        }
        auto fb = fin(v, kBlue, stage);
        auto fr = fin(v, kRed, stage);
        if (!fb || !fr)
            throw refusal_error("peel: '" + coloring.name + "' cannot decide finiteness at stage " +
                                std::to_string(stage));
        return *fb == Fin::Finite || *fr == Fin::Finite;
    }

    // removed at this stage into the red side (finite blue nbhd); ties go red
    bool removed_red(const Vertex& v, int stage) const
    {
        if (!survives(v, stage))
            return false;
        auto fb = fin(v, kBlue, stage);
        return fb && *fb == Fin::Finite;
    }

    bool survives(const Vertex& v, int stage) const
    {
        for (int j = 0; j < stage; ++j)
            if (removed_at(v, j))
                return false;
        return true;
    }
};

} // namespace

PeelResult peel_deep_tree_sets(const ColoringOracle& coloring, int max_stages, const Vertex& horizon,
                               Color peel_color)
{
    if (!coloring.finiteness_within)
        throw refusal_error("peel_deep_tree_sets: '" + coloring.name +
                            "' supplies no finiteness_within oracle");
    if (max_stages < 1)
        throw std::invalid_argument("peel_deep_tree_sets: need max_stages >= 1");

    auto chain = std::make_shared<PeelChain>();
    chain->coloring = coloring;
    chain->kind = PeelStageInfo::Kind::Deep;
    chain->deep_color = peel_color;
    chain->build_stages(max_stages);

    PeelResult out;
    int stage = 0;
    for (; stage < max_stages; ++stage) {
        // is R_stage nonempty below the horizon?
        bool nonempty = false;
        for (Vertex v = 1; v <= horizon; ++v)
            if (chain->removed_at(v, stage)) {
                nonempty = true;
                break;
            }
        if (!nonempty)
            break;
        VertexSetOracle r;
        r.name = "R" + std::to_string(stage);
        int st = stage;
        r.contains = [chain, st](const Vertex& v) { return chain->removed_at(v, st); };
        out.stage_sets.push_back(std::move(r));
    }
    out.stages_used = stage;
    if (stage == max_stages) {
        // the loop above broke by exhaustion, not stabilization
        bool more = false;
        for (Vertex v = 1; v <= horizon && !more; ++v)
            if (chain->removed_at(v, stage))
                more = true;
        out.stage_overflow = more;
    }

    int used = out.stages_used;
    out.removed.name = "R";
    out.removed.contains = [chain, used](const Vertex& v) {
        for (int j = 0; j < used; ++j)
            if (chain->removed_at(v, j))
                return true;
        return false;
    };
    out.remainder.name = "S";
    out.remainder.contains = [chain, used](const Vertex& v) { return chain->survives(v, used); };
    return out;
}

ShortPeelResult peel_short_tree_sets(const ColoringOracle& coloring, int max_stages,
                                     const Vertex& horizon)
{
    if (!coloring.finiteness_within)
        throw refusal_error("peel_short_tree_sets: '" + coloring.name +
                            "' supplies no finiteness_within oracle");
    if (coloring.colors != 2)
        throw refusal_error("peel_short_tree_sets: two-color peeling only");

    if (max_stages < 1)
        throw std::invalid_argument("peel_short_tree_sets: need max_stages >= 1");
    auto chain = std::make_shared<PeelChain>();
    chain->coloring = coloring;
    chain->kind = PeelStageInfo::Kind::Short;
    chain->build_stages(max_stages);

    ShortPeelResult out;
    int stage = 0;
    for (; stage < max_stages; ++stage) {
        bool nonempty = false;
        for (Vertex v = 1; v <= horizon; ++v)
            if (chain->removed_at(v, stage)) {
                nonempty = true;
                break;
            }
        if (!nonempty)
            break;
    }
    out.stages_used = stage;
    if (stage == max_stages) {
        bool more = false;
        for (Vertex v = 1; v <= horizon && !more; ++v)
            if (chain->removed_at(v, stage))
                more = true;
        out.stage_overflow = more;
    }

    int used = out.stages_used;
    out.red_side.name = "R";
    out.red_side.contains = [chain, used](const Vertex& v) {
        for (int j = 0; j < used; ++j)
            if (chain->removed_at(v, j) && chain->removed_red(v, j))
                return true;
        return false;
    };
    out.blue_side.name = "B";
    out.blue_side.contains = [chain, used](const Vertex& v) {
        for (int j = 0; j < used; ++j)
            if (chain->removed_at(v, j) && !chain->removed_red(v, j))
                return true;
        return false;
    };
    out.remainder.name = "S";
    out.remainder.contains = [chain, used](const Vertex& v) { return chain->survives(v, used); };

    // anchor selection: prefer the denser of R ∪ S and B ∪ S at the horizon,
    // ties toward red; anchor is the least first-stage vertex of that side
    BigInt count_r = 0, count_b = 0, count_s = 0;
    Vertex first_r = 0, first_b = 0, first_s = 0;
    for (Vertex v = 1; v <= horizon; ++v) {
        if (out.remainder.contains(v)) {
            ++count_s;
            if (first_s == 0)
                first_s = v;
        }
        else if (out.red_side.contains(v)) {
            ++count_r;
            if (first_r == 0 && chain->removed_at(v, 0) && chain->removed_red(v, 0))
                first_r = v;
        }
        else if (out.blue_side.contains(v)) {
            ++count_b;
            if (first_b == 0 && chain->removed_at(v, 0) && !chain->removed_red(v, 0))
                first_b = v;
        }
    }

    if (first_r == 0 && first_b == 0) {
        out.anchor = first_s == 0 ? Vertex(1) : first_s;
        // color by measured density of the anchor's neighborhoods inside S
        BigInt nr = 0, nb = 0;
        for (Vertex v = 1; v <= horizon; ++v) {
            if (v == out.anchor || !out.remainder.contains(v))
                continue;
            if (!coloring.valid_pair(out.anchor, v))
                continue;
            (coloring.color(out.anchor, v) == kRed ? nr : nb) += 1;
        }
        out.anchor_color = nb > nr ? kBlue : kRed;
        out.anchor_neighborhood_density = Rat(out.anchor_color == kRed ? nr : nb, horizon);
        return out;
    }

    bool pick_red = first_b == 0 || (first_r != 0 && count_r + count_s >= count_b + count_s);
    out.anchor = pick_red ? first_r : first_b;
    out.anchor_color = pick_red ? kRed : kBlue;
    const VertexSetOracle& side = pick_red ? out.red_side : out.blue_side;
    BigInt nbrs = 0;
    for (Vertex v = 1; v <= horizon; ++v) {
        if (v == out.anchor)
            continue;
        if (!side.contains(v) && !out.remainder.contains(v))
            continue;
        if (coloring.valid_pair(out.anchor, v) && coloring.color(out.anchor, v) == out.anchor_color)
            ++nbrs;
    }
    out.anchor_neighborhood_density = Rat(nbrs, horizon);
    return out;
}

bool short_path_proxy(const ColoringOracle& coloring, const VertexSetOracle& r, Color c,
                      const Vertex& pair_horizon, const Vertex& search_horizon)
{
    std::vector<Vertex> members = r.enumerate_upto(pair_horizon);
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i + 1; j < members.size(); ++j) {
            const Vertex& u = members[i];
            const Vertex& v = members[j];
            if (coloring.valid_pair(u, v) && coloring.color(u, v) == c)
                continue;
            bool linked = false;
            for (Vertex w = 1; w <= search_horizon && !linked; ++w) {
                if (w == u || w == v)
                    continue;
                if (coloring.valid_pair(u, w) && coloring.color(u, w) == c &&
                    coloring.valid_pair(v, w) && coloring.color(v, w) == c)
                    linked = true;
            }
            if (!linked)
                return false;
        }
    }
    return true;
}

} // namespace ramsey
