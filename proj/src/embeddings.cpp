#include "ramsey/embeddings.hpp"

#include "ramsey/analyzers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace ramsey {

// --- host views ------------------------------------------------------------------

HostView HostView::from_graph(const GraphOracle& g)
{
    HostView h;
    h.name = g.name;
    h.adjacent = g.adjacent;
    h.in_universe = g.in_vertex_set;
    h.supply = g.common_neighbor_supply;
    h.bounded_least = g.bounded_common_neighbor;
    return h;
}

HostView HostView::from_color_class(const ColoringOracle& c, Color color)
{
    HostView h;
    h.name = c.name + "[color=" + std::to_string(color) + "]";
    ColoringOracle cc = c;
    h.adjacent = [cc, color](const Vertex& u, const Vertex& v) {
        return cc.valid_pair(u, v) && cc.color(u, v) == color;
    };
    h.color_constraint = std::make_pair(c, color);
    if (c.common_neighbor_supply) {
        auto s = c.common_neighbor_supply;
        h.supply = [s, color](const std::vector<Vertex>& w,
                              const std::function<bool(const Vertex&)>& used, const Vertex& above) {
            return s(w, color, used, above);
        };
    }
    if (auto it = c.bounded_common_neighbor.find(color); it != c.bounded_common_neighbor.end())
        h.bounded_least = it->second;
    return h;
}

// --- partial embeddings --------------------------------------------------------------

void PartialEmbedding::assign(const Vertex& g, const Vertex& h, long long step, const std::string& rule)
{
    if (map.count(g))
        throw std::logic_error("embedding engine attempted to re-embed guest " + g.str());
    if (inverse.count(h))
        throw std::logic_error("embedding engine attempted to reuse host " + h.str());
    map[g] = h;
    inverse[h] = g;
    trace.push_back({step, g, h, rule});
}

Vertex PartialEmbedding::covered_host_prefix() const
{
    Vertex v = 1;
    while (true) {
        if (host.has(v) && !covered(v))
            return v - 1;
        ++v;
    }
}

Vertex PartialEmbedding::least_uncovered_host() const
{
    Vertex v = 1;
    while (!host.has(v) || covered(v))
        ++v;
    return v;
}

Vertex PartialEmbedding::least_unembedded_guest() const
{
    Vertex v = 1;
    while (!guest.has_vertex(v) || embedded(v))
        ++v;
    return v;
}

EmbeddingReport verify_embedding(const PartialEmbedding& pe)
{
    EmbeddingReport rep;
    rep.valid = true;
    for (const auto& [g, h] : pe.map) {
        if (!pe.guest.has_vertex(g))
            rep.violations.push_back("guest vertex " + g.str() + " outside the guest's vertex set");
        if (!pe.host.has(h))
            rep.violations.push_back("host vertex " + h.str() + " outside the host's universe");
        auto it = pe.inverse.find(h);
        if (it == pe.inverse.end() || it->second != g)
            rep.violations.push_back("inverse map inconsistent at host " + h.str());
    }
    for (auto i = pe.map.begin(); i != pe.map.end(); ++i) {
        for (auto j = std::next(i); j != pe.map.end(); ++j) {
            if (i->second == j->second)
                rep.violations.push_back("not injective at host " + i->second.str());
            if (pe.guest.adjacent(i->first, j->first)) {
                if (!pe.host.adjacent(i->second, j->second)) {
                    rep.violations.push_back("edge {" + i->first.str() + "," + j->first.str() +
                                             "} maps to a non-edge");
                    if (pe.host.color_constraint)
                        rep.mono = false;
                }
                else if (pe.host.color_constraint) {
                    const auto& [col, c] = *pe.host.color_constraint;
                    if (!col.valid_pair(i->second, j->second) ||
                        col.color(i->second, j->second) != c) {
                        rep.mono = false;
                        rep.violations.push_back("edge {" + i->first.str() + "," + j->first.str() +
                                                 "} maps off-color");
                    }
                }
            }
        }
    }
    rep.valid = rep.violations.empty();
    rep.coverage = pe.covered_host_prefix();
    rep.surjectivity_frontier = pe.least_uncovered_host();
    return rep;
}

// --- window searches -------------------------------------------------------------------

namespace {

std::string vertex_list(const std::vector<Vertex>& w)
{
    std::string out = "{";
    for (size_t i = 0; i < w.size(); ++i) {
        std::string s = w[i].str();
        if (s.size() > 40)
            s = "<" + std::to_string(bit_length(w[i])) + "-digit value>";
        out += (i ? "," : "") + s;
    }
    return out + "}";
}

// least host vertex adjacent to everything in w, outside `used`; the scan is
// windowed, with the host's analytic supply taking over past the cap
std::optional<Vertex> scan_common_neighbor(const HostView& host, const std::vector<Vertex>& w,
                                           const std::map<Vertex, Vertex>& used,
                                           const WindowPolicy& pol)
{
    auto used_pred = [&used](const Vertex& v) { return used.count(v) != 0; };
    if (host.bounded_least)
        return host.bounded_least(w, used_pred, pol.cap);
    for (Vertex v = 1; v <= pol.cap; ++v) {
        if (!host.has(v) || used.count(v))
            continue;
        bool ok = true;
        for (const auto& x : w)
            if (v == x || !host.adjacent(v, x)) {
                ok = false;
                break;
            }
        if (ok)
            return v;
    }
    return std::nullopt;
}

Vertex least_common_neighbor(const HostView& host, const std::vector<Vertex>& w,
                             const std::map<Vertex, Vertex>& used, const WindowPolicy& pol)
{
    if (auto v = scan_common_neighbor(host, w, used, pol))
        return *v;
    if (host.supply) {
        auto used_pred = [&used](const Vertex& v) { return used.count(v) != 0; };
        auto v = host.supply(w, used_pred, pol.cap);
        if (v)
            return *v;
    }
    throw window_exhausted_error("no common neighbor of " + vertex_list(w) + " within window " +
                                 pol.cap.str());
}

// shortest host path from -> to whose internal vertices avoid `used`; both
// endpoints are returned in the path
std::vector<Vertex> bfs_path_avoiding(const HostView& host, const Vertex& from, const Vertex& to,
                                      const std::map<Vertex, Vertex>& used, const WindowPolicy& pol)
{
    if (host.adjacent(from, to))
        return {from, to};
    std::vector<Vertex> pair = {from, to};
    if (auto mid = scan_common_neighbor(host, pair, used, pol))
        return {from, *mid, to};
    if (host.supply) {
        // a midpoint above the window still gives a shorter path than any
        // breadth-first detour below it
        auto used_pred = [&used](const Vertex& v) { return used.count(v) != 0; };
        if (auto mid = host.supply(pair, used_pred, pol.cap))
            return {from, *mid, to};
    }
    for (BigInt window = pol.initial;; window *= 2) {
        if (window > pol.cap)
            window = pol.cap;
        std::map<Vertex, Vertex> parent;
        std::deque<Vertex> queue;
        parent[from] = from;
        queue.push_back(from);
        const size_t node_cap = 200000;
        while (!queue.empty() && parent.size() < node_cap) {
            Vertex x = queue.front();
            queue.pop_front();
            if (host.adjacent(x, to)) {
                std::vector<Vertex> path = {to, x};
                while (path.back() != from)
                    path.push_back(parent[path.back()]);
                std::reverse(path.begin(), path.end());
                return path;  // from ... to
            }
            for (Vertex u = 1; u <= window; ++u) {
                if (u == to || parent.count(u) || used.count(u) || !host.has(u))
                    continue;
                if (host.adjacent(x, u)) {
                    parent[u] = x;
                    queue.push_back(u);
                }
            }
        }
        if (window == pol.cap)
            break;
    }
    throw window_exhausted_error("no path from " + from.str() + " to " + to.str() +
                                 " avoiding the embedded range within window " + pol.cap.str());
}

} // namespace

// --- zero-ruled engine --------------------------------------------------------------------

ZeroRuledEngine::ZeroRuledEngine(GraphOracle guest, HostView host, long long planned_steps,
                                 std::optional<int> degenerate_d, WindowPolicy window)
    : planned_steps_(planned_steps), degenerate_d_(degenerate_d), window_(window)
{
    if (!guest.traits.zero_ruled || !guest.independent_extension)
        throw refusal_error("embed_zero_ruled: guest '" + guest.name +
                            "' declares no zero-ruled witness");
    pe_.guest = std::move(guest);
    pe_.host = std::move(host);
}

void ZeroRuledEngine::one_cycle()
{
    long long step = pe_.steps_done + 1;
    Vertex u_star = pe_.least_uncovered_host();

    // witness query: the embedded set plus every small guest vertex the
    // remaining fills can touch, so later fills never neighbor the witness
    Vertex frontier = pe_.least_unembedded_guest();
    BigInt m = frontier + std::max<long long>(planned_steps_ - pe_.steps_done + 1, 1);
    std::vector<Vertex> x;
    for (const auto& [g, h] : pe_.map)
        x.push_back(g);
    for (Vertex v = 1; v <= m; ++v)
        if (pe_.guest.has_vertex(v))
            x.push_back(v);
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());

    Vertex v_p = pe_.guest.independent_extension(x);
    if (std::binary_search(x.begin(), x.end(), v_p))
        throw refusal_error("embed_zero_ruled: witness returned a vertex inside its avoidance set");
    for (const auto& [g, h] : pe_.map)
        if (pe_.guest.adjacent(g, v_p))
            throw refusal_error("embed_zero_ruled: witness " + v_p.str() +
                                " is adjacent to embedded guest " + g.str());
    pe_.assign(v_p, u_star, step, "witness-cover");

    // fill the least unembedded guest against its embedded neighborhood
    Vertex v_i = pe_.least_unembedded_guest();
    std::vector<Vertex> w;
    for (const auto& [g, h] : pe_.map)
        if (pe_.guest.adjacent(g, v_i))
            w.push_back(h);
    if (degenerate_d_) {
        BigInt back = 0;
        for (Vertex u = 1; u < v_i; ++u)
            if (pe_.guest.has_vertex(u) && pe_.guest.adjacent(u, v_i))
                ++back;
        if (back > *degenerate_d_)
            throw refusal_error("embed_degenerate_zero_ruled: guest back-degree " + back.str() +
                                " at " + v_i.str() + " exceeds the declared bound");
        if (w.size() > static_cast<size_t>(*degenerate_d_) + 1)
            throw refusal_error("embed_degenerate_zero_ruled: query size exceeds d+1");
    }
    Vertex u = least_common_neighbor(pe_.host, w, pe_.inverse, window_);
    pe_.assign(v_i, u, step, "fill");
    ++pe_.steps_done;
}

void ZeroRuledEngine::run(long long cycles)
{
    for (long long i = 0; i < cycles; ++i)
        one_cycle();
}

// --- cascade engine ----------------------------------------------------------------------

CascadeEngine::CascadeEngine(GraphOracle guest, HostView host, std::vector<VertexSetOracle> layers,
                             WindowPolicy window)
    : layers_(std::move(layers)), window_(window)
{
    if (!guest.traits.one_way_locally_finite_k || !guest.part_of)
        throw refusal_error("embed_cascade: guest '" + guest.name +
                            "' is not one-way locally finite with parts");
    if (static_cast<int>(layers_.size()) != *guest.traits.one_way_locally_finite_k)
        throw refusal_error("embed_cascade: layer count must match the guest's part count");
    pe_.guest = std::move(guest);
    pe_.host = std::move(host);
}

void CascadeEngine::one_step()
{
    long long step = pe_.steps_done + 1;
    int k = static_cast<int>(layers_.size());

    // S_n: the least unembedded guest vertex of every part
    std::vector<Vertex> s;
    for (int i = 1; i <= k; ++i) {
        Vertex v = 1;
        const BigInt scan_cap = BigInt(1) << 24;
        while (v <= scan_cap) {
            if (pe_.guest.has_vertex(v) && pe_.guest.part_of(v) == i && !pe_.embedded(v)) {
                s.push_back(v);
                break;
            }
            ++v;
        }
    }
    auto tiers = left_neighborhood_cascade(pe_.guest, s);

    // tier 1 takes the least available layer-1 hosts, in order
    std::vector<Vertex> fresh1;
    for (const auto& t : tiers[0])
        if (!pe_.embedded(t))
            fresh1.push_back(t);
    Vertex h = 1;
    for (const auto& t : fresh1) {
        while (!pe_.host.has(h) || !layers_[0].contains(h) || pe_.covered(h))
            ++h;
        pe_.assign(t, h, step, "cascade-tier1");
    }

    // higher tiers go to common neighbors of every lower-tier image
    std::vector<Vertex> lower_images;
    for (const auto& t : tiers[0])
        lower_images.push_back(pe_.map.at(t));
    for (int i = 2; i <= k; ++i) {
        for (const auto& t : tiers[static_cast<size_t>(i - 1)]) {
            if (pe_.embedded(t))
                continue;
            Vertex u = 1;
            bool found = false;
            for (BigInt window = window_.initial; !found; window *= 2) {
                if (window > window_.cap)
                    window = window_.cap;
                for (; u <= window; ++u) {
                    if (!pe_.host.has(u) || !layers_[static_cast<size_t>(i - 1)].contains(u) ||
                        pe_.covered(u))
                        continue;
                    bool ok = true;
                    for (const auto& img : lower_images)
                        if (u == img || !pe_.host.adjacent(u, img)) {
                            ok = false;
                            break;
                        }
                    if (ok) {
                        found = true;
                        break;
                    }
                }
                if (found)
                    break;
                if (window == window_.cap)
                    throw window_exhausted_error(
                        "embed_cascade: layer " + std::to_string(i) +
                        " exhausted looking for a common neighbor of " + vertex_list(lower_images));
            }
            pe_.assign(t, u, step, "cascade-tier" + std::to_string(i));
        }
        for (const auto& t : tiers[static_cast<size_t>(i - 1)])
            lower_images.push_back(pe_.map.at(t));
    }
    ++pe_.steps_done;
}

void CascadeEngine::run(long long steps)
{
    for (long long i = 0; i < steps; ++i)
        one_step();
}

bool CascadeEngine::closure_invariant_holds() const
{
    // every embedded guest has its whole earlier-part neighborhood embedded
    for (const auto& [g, h] : pe_.map) {
        int part = pe_.guest.part_of(g);
        Vertex bound = pe_.guest.earlier_neighbor_bound(g);
        for (const auto& u : pe_.guest.neighbors_upto(g, bound))
            if (pe_.guest.part_of(u) < part && !pe_.embedded(u))
                return false;
    }
    return true;
}

// --- Algorithm 1 (deep trees) -----------------------------------------------------------------

DeepTreeEngine::DeepTreeEngine(GraphOracle guest_tree, GraphOracle host, long long planned_cycles,
                               WindowPolicy window)
    : host_graph_(std::move(host)), window_(window)
{
    (void)planned_cycles;
    if (!guest_tree.traits.tree || !guest_tree.traits.tree_type)
        throw refusal_error("embed_deep_tree: guest '" + guest_tree.name +
                            "' carries no tree type tag");
    tree_type_ = *guest_tree.traits.tree_type;
    if (!guest_tree.tree_supply)
        throw refusal_error("embed_deep_tree: guest '" + guest_tree.name + "' offers no supply");
    if (tree_type_ == 2 && !guest_tree.tree_supply->fresh_arm)
        throw refusal_error("embed_deep_tree: type-2 guest offers no arm supply");
    pe_.guest = std::move(guest_tree);
    pe_.host = HostView::from_graph(host_graph_);

    t_last_ = pe_.least_unembedded_guest();
    v_last_ = pe_.least_uncovered_host();
    pe_.assign(t_last_, v_last_, 0, "root");
}

std::vector<Vertex> DeepTreeEngine::find_path_avoiding(const Vertex& from, const Vertex& to) const
{
    return bfs_path_avoiding(pe_.host, from, to, pe_.inverse, window_);
}


void DeepTreeEngine::cover_block()
{
    long long step = pe_.steps_done + 1;
    Vertex v_next = pe_.least_uncovered_host();
    auto path = find_path_avoiding(v_next, v_last_);  // v_next ... v_last
    std::reverse(path.begin(), path.end());           // v_last ... v_next

    if (tree_type_ == 1) {
        // fresh guest path continuing from t_last, one vertex per path edge
        std::vector<Vertex> segment;
        Vertex x = t_last_;
        const auto& supply = *pe_.guest.tree_supply;
        for (size_t i = 1; i < path.size(); ++i) {
            std::optional<Vertex> next;
            for (BigInt k = 1;; ++k) {
                auto ch = supply.child(x, k);
                if (!ch)
                    break;
                if (!pe_.embedded(*ch) &&
                    std::find(segment.begin(), segment.end(), *ch) == segment.end()) {
                    next = *ch;
                    break;
                }
            }
            if (!next)
                throw refusal_error("embed_deep_tree: guest path supply exhausted at " + x.str());
            segment.push_back(*next);
            x = *next;
        }
        for (size_t i = 0; i < segment.size(); ++i)
            pe_.assign(segment[i], path[i + 1], step, "cover-path");
        t_last_ = segment.back();
        v_last_ = path.back();
    }
    else {
        // type 2: shortest unused arm at least as long as the host path; the
        // embedded arm prefix induces the required guest path from the
        // center, and the leftover arm tail is picked up by later back-edge
        // steps
        const auto& supply = *pe_.guest.tree_supply;
        auto used = [this](const Vertex& v) { return pe_.embedded(v); };
        auto arm = supply.fresh_arm(BigInt(path.size()) - 1, used);
        for (size_t i = 0; i + 1 < path.size(); ++i)
            pe_.assign(arm[i], path[i + 1], step, "cover-arm");
        // t_last and v_last stay pinned at the center
    }
}

void DeepTreeEngine::guest_block()
{
    long long step = pe_.steps_done + 1;
    Vertex t_next = pe_.least_unembedded_guest();
    std::optional<Vertex> t_back;
    for (const auto& [g, h] : pe_.map)
        if (pe_.guest.adjacent(g, t_next) && (!t_back || g < *t_back))
            t_back = g;
    if (!t_back)
        throw refusal_error("embed_deep_tree: guest " + t_next.str() +
                            " has no embedded neighbor; enumeration is not connected");
    Vertex anchor_image = pe_.map.at(*t_back);
    Vertex u = least_common_neighbor(pe_.host, {anchor_image}, pe_.inverse, window_);
    pe_.assign(t_next, u, step, "back-edge");
    if (tree_type_ == 1 && *t_back == t_last_)
        t_last_ = t_next;
}

void DeepTreeEngine::run(long long cycles)
{
    for (long long i = 0; i < cycles; ++i) {
        cover_block();
        guest_block();
        ++pe_.steps_done;
    }
}

bool DeepTreeEngine::guest_subgraph_connected() const
{
    if (pe_.map.empty())
        return true;
    std::vector<Vertex> dom;
    for (const auto& [g, h] : pe_.map)
        dom.push_back(g);
    std::map<Vertex, size_t> index;
    for (size_t i = 0; i < dom.size(); ++i)
        index[dom[i]] = i;
    std::vector<char> seen(dom.size(), 0);
    std::deque<size_t> queue = {0};
    seen[0] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
        size_t i = queue.front();
        queue.pop_front();
        for (size_t j = 0; j < dom.size(); ++j)
            if (!seen[j] && pe_.guest.adjacent(dom[i], dom[j])) {
                seen[j] = 1;
                ++reached;
                queue.push_back(j);
            }
    }
    return reached == dom.size();
}

// --- Algorithm 2 (short trees) -------------------------------------------------------------------

ShortTreeEngine::ShortTreeEngine(GraphOracle guest_tree, GraphOracle host, const Vertex& anchor,
                                 WindowPolicy window)
    : host_graph_(std::move(host)), window_(window)
{
    if (!guest_tree.traits.root_infinite_degree)
        throw refusal_error("embed_short_tree: guest root must have infinite declared degree");
    if (!guest_tree.tree_supply || !guest_tree.tree_supply->child)
        throw refusal_error("embed_short_tree: guest offers no child supply");
    pe_.guest = std::move(guest_tree);
    pe_.host = HostView::from_graph(host_graph_);
    Vertex root = pe_.least_unembedded_guest();
    pe_.assign(root, anchor, 0, "root");
    embed_order_.push_back(root);
}

void ShortTreeEngine::run(long long rounds)
{
    const auto& supply = *pe_.guest.tree_supply;
    for (long long r = 0; r < rounds; ++r) {
        ++rounds_done_;
        // serve the oldest min(rounds_done, |dom|) embedded guests one child each
        size_t served = std::min<size_t>(static_cast<size_t>(rounds_done_), embed_order_.size());
        for (size_t idx = 0; idx < served; ++idx) {
            Vertex t = embed_order_[idx];
            std::optional<Vertex> child;
            for (BigInt k = 1;; ++k) {
                auto ch = supply.child(t, k);
                if (!ch)
                    break;  // finitely many children, all embedded
                if (!pe_.embedded(*ch)) {
                    child = *ch;
                    break;
                }
            }
            if (!child)
                continue;
            Vertex image = pe_.map.at(t);
            Vertex u = least_common_neighbor(pe_.host, {image}, pe_.inverse, window_);
            pe_.assign(*child, u, rounds_done_, "child");
            embed_order_.push_back(*child);
        }
        ++pe_.steps_done;
    }
}

// --- Theorem 9.6 engine ---------------------------------------------------------------------------

CompatMultipartiteEngine::CompatMultipartiteEngine(TreeSpec tree, MultipartiteSpec host_spec,
                                                   long long planned_cycles)
    : tree_(tree), host_spec_(host_spec)
{
    (void)planned_cycles;
    if (tree_.kind != TreeSpec::Kind::Dary || tree_.dary != 2)
        throw refusal_error("embed_compat_multipartite: guest must be the binary compatibility graph");
    host_spec_.validate();
    if (!host_spec_.infinitely_many)
        throw refusal_error("embed_compat_multipartite: host needs infinitely many infinite parts");
    for (const auto& s : host_spec_.finite_sizes)
        if (s != 1)
            throw refusal_error("embed_compat_multipartite: finite host parts must be singletons");
    singleton_count_ = static_cast<int>(host_spec_.finite_sizes.size());
    // the binary root branches immediately, so the initial path is just the root
    if (singleton_count_ != 1)
        throw refusal_error("embed_compat_multipartite: the binary guest needs exactly one singleton part");

    guest_graph_ = compatibility_graph(tree_);
    host_graph_ = multipartite_graph(host_spec_);
    pe_.guest = guest_graph_;
    pe_.host = HostView::from_graph(host_graph_);
    pe_.assign(1, 1, 0, "initial-path");
}

Vertex CompatMultipartiteEngine::antichain_pick(int part_index)
{
    Vertex anchor = part_anchor_guest_.at(part_index);
    for (BigInt bound = 64;; bound *= 4) {
        auto members = compatibility_antichain_upto(tree_, anchor, bound);
        for (const auto& m : members)
            if (!pe_.embedded(m))
                return m;
        if (bound > (BigInt(1) << 40))
            throw refusal_error("embed_compat_multipartite: antichain supply exhausted");
    }
}

void CompatMultipartiteEngine::one_cycle()
{
    long long step = pe_.steps_done + 1;

    // Step 1: cover the least uncovered host vertex if its part was touched
    Vertex v_star = pe_.least_uncovered_host();
    int part = multipartite_part_of(host_graph_, v_star) - singleton_count_;
    if (part >= 1 && part_anchor_guest_.count(part)) {
        Vertex u_prime = antichain_pick(part);
        pe_.assign(u_prime, v_star, step, "antichain-cover");
    }

    // Step 2: embed the guest interval up to one past the largest embedded
    // index, each vertex into the first slot of a fresh part
    Vertex g_max = 0;
    for (const auto& [g, h] : pe_.map)
        g_max = std::max(g_max, g);
    std::vector<Vertex> interval;
    for (Vertex u = 2; u <= g_max + 1; ++u)
        if (!pe_.embedded(u))
            interval.push_back(u);
    for (const auto& u : interval) {
        ++fresh_part_frontier_;
        Vertex first = multipartite_infinite_part_first(host_spec_, fresh_part_frontier_);
        pe_.assign(u, first, step, "fresh-part");
        part_anchor_guest_[fresh_part_frontier_] = u;
    }
    ++pe_.steps_done;
}

void CompatMultipartiteEngine::run(long long cycles)
{
    for (long long i = 0; i < cycles; ++i)
        one_cycle();
}

// --- induced-path engine ------------------------------------------------------------------------------

InducedPathsEngine::InducedPathsEngine(GraphOracle guest, GraphOracle host, bool host_has_clique,
                                       WindowPolicy window)
    : host_graph_(std::move(host)), window_(window)
{
    if (!host_has_clique)
        throw refusal_error("embed_induced_paths: host offers no infinite clique supply");
    if (!guest.traits.tree_type || *guest.traits.tree_type != 1)
        throw refusal_error("embed_induced_paths: guest must supply arbitrarily long induced paths");
    pe_.guest = std::move(guest);
    pe_.host = HostView::from_graph(host_graph_);
}

Vertex InducedPathsEngine::next_clique_vertex()
{
    // the greedy clique is a fixed feature of the host: each member is the
    // least vertex above the previous one adjacent to everything so far
    while (true) {
        for (const auto& c : clique_)
            if (!pe_.covered(c))
                return c;
        Vertex v = clique_.empty() ? Vertex(1) : clique_.back() + 1;
        for (;; ++v) {
            if (v > window_.cap)
                throw window_exhausted_error("embed_induced_paths: clique supply exhausted");
            if (!pe_.host.has(v))
                continue;
            bool ok = true;
            for (const auto& x : clique_)
                if (!pe_.host.adjacent(v, x)) {
                    ok = false;
                    break;
                }
            if (ok)
                break;
        }
        clique_.push_back(v);
    }
}

std::vector<Vertex> InducedPathsEngine::guest_fresh_segment(const BigInt& len) const
{
    // a run of len+1 fresh path vertices with unembedded buffer on both sides
    for (Vertex s = 2;; ++s) {
        bool ok = true;
        for (Vertex v = s - 1; v <= s + len + 1 && ok; ++v)
            if (pe_.embedded(v))
                ok = false;
        if (ok) {
            std::vector<Vertex> seg;
            for (Vertex v = s; v <= s + len; ++v)
                seg.push_back(v);
            return seg;
        }
    }
}

void InducedPathsEngine::one_step()
{
    long long step = pe_.steps_done + 1;
    if (pe_.steps_done % 2 == 0) {
        Vertex t = pe_.least_unembedded_guest();
        Vertex c = next_clique_vertex();
        pe_.assign(t, c, step, "clique-seat");
    }
    else {
        Vertex v = pe_.least_uncovered_host();
        Vertex a = next_clique_vertex();
        // path a .. v
        auto left = bfs_path_avoiding(pe_.host, a, v, pe_.inverse, window_);
        std::map<Vertex, Vertex> used = pe_.inverse;
        for (const auto& p : left)
            used[p] = 0;
        // second clique seat distinct from a and off the left path
        Vertex b = 0;
        while (b == 0) {
            for (const auto& c : clique_)
                if (!pe_.covered(c) && c != a && !used.count(c)) {
                    b = c;
                    break;
                }
            if (b != 0)
                break;
            Vertex v = clique_.empty() ? Vertex(1) : clique_.back() + 1;
            for (;; ++v) {
                if (v > window_.cap)
                    throw window_exhausted_error("embed_induced_paths: clique supply exhausted");
                if (!pe_.host.has(v))
                    continue;
                bool ok = true;
                for (const auto& x : clique_)
                    if (!pe_.host.adjacent(v, x)) {
                        ok = false;
                        break;
                    }
                if (ok)
                    break;
            }
            clique_.push_back(v);
        }
        auto right = bfs_path_avoiding(pe_.host, v, b, used, window_);
        std::vector<Vertex> path = left;
        path.insert(path.end(), right.begin() + 1, right.end());
        auto segment = guest_fresh_segment(BigInt(path.size()) - 1);
        for (size_t i = 0; i < path.size(); ++i)
            pe_.assign(segment[i], path[i], step, "splice-path");
    }
    ++pe_.steps_done;
}

void InducedPathsEngine::run(long long steps)
{
    for (long long i = 0; i < steps; ++i)
        one_step();
}

// --- greedy clique partition -----------------------------------------------------------------------------

CliquePartition greedy_clique_partition(const ColoringOracle& coloring, const Vertex& horizon)
{
    if (horizon < 1)
        throw std::invalid_argument("greedy_clique_partition: horizon must be >= 1");
    auto h = horizon.convert_to<long long>();
    std::vector<char> covered(static_cast<size_t>(h) + 1, 0);
    CliquePartition out;

    for (long long seed = 1; seed <= h; ++seed) {
        if (covered[static_cast<size_t>(seed)])
            continue;
        std::vector<Vertex> best;
        Color best_color = 0;
        for (Color c = 0; c < coloring.colors; ++c) {
            // greedy least-vertex extension within the horizon
            std::vector<long long> clique = {seed};
            std::vector<long long> candidates;
            for (long long v = seed + 1; v <= h; ++v)
                if (!covered[static_cast<size_t>(v)] && coloring.valid_pair(seed, v) &&
                    coloring.color(seed, v) == c)
                    candidates.push_back(v);
            while (!candidates.empty()) {
                long long pick = candidates.front();
                clique.push_back(pick);
                std::vector<long long> next;
                for (long long v : candidates)
                    if (v != pick && coloring.valid_pair(pick, v) && coloring.color(pick, v) == c)
                        next.push_back(v);
                candidates = std::move(next);
            }
            if (clique.size() > best.size()) {
                best.assign(clique.begin(), clique.end());
                best_color = c;
            }
        }
        if (best.size() >= 2) {
            for (const auto& v : best)
                covered[static_cast<size_t>(v.convert_to<long long>())] = 1;
            out.cliques.emplace_back(best_color, best);
        }
        else {
            covered[static_cast<size_t>(seed)] = 1;
            out.leftover.push_back(seed);
        }
    }
    return out;
}

// --- greedy D-ary tree into the residue coloring ---------------------------------------------------------------

BigInt DaryTreeEmbedding::offclass_count(const BigInt& n) const
{
    BigInt t = 0;
    for (const auto& m : members) {
        if (m > n)
            break;
        if (mod_pos(m, r) != 1)
            ++t;
    }
    return t;
}

BigInt DaryTreeEmbedding::member_count(const BigInt& n) const
{
    BigInt c = 0;
    for (const auto& m : members) {
        if (m > n)
            break;
        ++c;
    }
    return c;
}

DaryTreeEmbedding greedy_dary_tree_embedding(int r, int dary, const BigInt& horizon)
{
    if (r < 2 || dary < 1)
        throw std::invalid_argument("greedy_dary_tree_embedding: need r >= 2 and D >= 1");
    long long h = horizon.convert_to<long long>();
    DaryTreeEmbedding out;
    out.r = r;
    out.dary = dary;
    out.color = 1;

    std::vector<long long> class_in_tree = {1};  // class-1 vertices in the tree, ascending
    std::map<long long, int> child_count;
    size_t slot_ptr = 0;  // first class vertex that may still take children
    std::deque<long long> pool;
    std::vector<long long> members = {1};

    auto take_parent = [&](long long below) -> long long {
        while (slot_ptr < class_in_tree.size() && child_count[class_in_tree[slot_ptr]] >= dary)
            ++slot_ptr;
        for (size_t i = slot_ptr; i < class_in_tree.size(); ++i) {
            long long p = class_in_tree[i];
            if (p >= below)
                break;
            if (child_count[p] < dary)
                return p;
        }
        return 0;
    };

    for (long long n = 2; n <= h; ++n) {
        if (n % r == 1) {
            pool.push_back(n);
            continue;
        }
        if (static_cast<int>(pool.size()) < dary)
            continue;
        long long parent = take_parent(n);
        if (parent == 0)
            continue;
        members.push_back(n);
        out.parent[n] = parent;
        ++child_count[parent];
        for (int j = 0; j < dary; ++j) {
            long long c = pool.front();
            pool.pop_front();
            members.push_back(c);
            out.parent[c] = n;
            class_in_tree.push_back(c);
        }
        child_count[n] = dary;  // adopters never take more children
    }

    // attach stragglers as leaves of earlier class vertices with free slots
    while (!pool.empty()) {
        long long c = pool.front();
        pool.pop_front();
        long long parent = take_parent(c);
        if (parent == 0)
            break;
        members.push_back(c);
        out.parent[c] = parent;
        ++child_count[parent];
        class_in_tree.push_back(c);
    }

    std::sort(members.begin(), members.end());
    for (long long m : members)
        out.members.push_back(m);
    return out;
}

} // namespace ramsey
