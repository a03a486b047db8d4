#include "ramsey/analyzers.hpp"
#include "ramsey/binary.hpp"
#include "ramsey/colorings.hpp"
#include "ramsey/density.hpp"
#include "ramsey/embeddings.hpp"
#include "ramsey/harness.hpp"
#include "ramsey/zoo.hpp"

#include <chrono>
#include <cstdint>
#include <sstream>

namespace ramsey {

namespace {

// rado color of {s,t} for small values, without oracle indirection
inline int rado_color_fast(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t s = a < b ? a : b;
    std::uint64_t t = a < b ? b : a;
    if (s > 64)
        return 0;
    return static_cast<int>((t >> (s - 1)) & 1u);
}

ResultRecord experiment_e1()
{
    ResultRecord r;
    r.id = "E1";
    r.params["horizon"] = "1048576";
    const std::uint64_t horizon = 1u << 20;
    const std::vector<std::vector<std::uint64_t>> families = {{1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}};
    for (int color = 0; color <= 1; ++color) {
        for (const auto& f : families) {
            std::uint64_t count = 0;
            for (std::uint64_t v = 1; v <= horizon; ++v) {
                bool in_f = false;
                for (auto w : f)
                    if (v == w)
                        in_f = true;
                if (in_f)
                    continue;
                bool all = true;
                for (auto w : f)
                    if (rado_color_fast(v, w) != color) {
                        all = false;
                        break;
                    }
                if (all)
                    ++count;
            }
            Rat density(count, horizon);
            Rat target(1, BigInt(1) << f.size());
            bool ok = 10 * (density > target ? density - target : target - density) <= target;
            std::string key = "c" + std::to_string(color) + ".F1-" + std::to_string(f.size());
            r.add(key, density, ok, "target " + rat_to_string(target));
        }
    }
    return r;
}

ResultRecord experiment_e2()
{
    ResultRecord r;
    r.id = "E2";
    r.params["n_max"] = "10000";
    const long long n_max = 10000;
    for (int rr : {2, 3}) {
        bool literal_ok = true;
        std::string counterexample;
        bool closed_ok = true;
        std::vector<long long> below(static_cast<size_t>(rr), 0);  // class counts in [1, n-1]
        for (long long n = 1; n <= n_max; ++n) {
            if (n > 1)
                ++below[static_cast<size_t>((n - 1) % rr)];
            for (int i = 0; i < rr; ++i) {
                if (n % rr == i)
                    continue;
                long long actual = below[static_cast<size_t>(i)];
                long long literal = (n - 1) / rr;
                if (actual != literal && literal_ok) {
                    literal_ok = false;
                    counterexample = "n=" + std::to_string(n) + ",i=" + std::to_string(i) +
                                     ",count=" + std::to_string(actual) +
                                     ",floor=" + std::to_string(literal);
                }
                BigInt closed = residue_color_degree_below(rr, n, i);
                if (closed != actual)
                    closed_ok = false;
            }
        }
        r.add_flag("r" + std::to_string(rr) + ".literal-floor-identity", literal_ok,
                   literal_ok ? "" : counterexample);
        r.add_flag("r" + std::to_string(rr) + ".exact-count-identity", closed_ok,
                   "full sweep n <= 10000");
    }
    return r;
}

ResultRecord experiment_e3()
{
    ResultRecord r;
    r.id = "E3";
    r.params["horizon"] = "100000";
    const BigInt horizon = 100000;
    const std::vector<std::pair<int, int>> configs = {{2, 2}, {2, 3}, {3, 2}};
    for (auto [rr, dd] : configs) {
        auto emb = greedy_dary_tree_embedding(rr, dd, horizon);
        std::string tag = "r" + std::to_string(rr) + ".D" + std::to_string(dd);

        // structural soundness: a color-1 monochromatic tree with child bound D
        bool sound = true;
        std::map<Vertex, int> children;
        auto coloring = residue_coloring(rr);
        for (const auto& [child, par] : emb.parent) {
            if (coloring.at(child, par) != 1)
                sound = false;
            if (++children[par] > dd)
                sound = false;
        }
        r.add_flag(tag + ".tree-valid", sound);

        Rat density(emb.member_count(horizon), horizon);
        Rat ceiling = Rat(dd + 1, BigInt(rr) * dd) + Rat(1, 50);
        r.add(tag + ".density", density, density <= ceiling,
              "ceiling+0.02 = " + rat_to_string(ceiling));

        bool counting = true;
        for (const auto& n : geometric_schedule(horizon)) {
            BigInt t_n = emb.offclass_count(n);
            if (BigInt(dd) * t_n * rr > n - 1) {
                counting = false;
                break;
            }
        }
        r.add_flag(tag + ".counting-bound", counting, "D*t_n <= (n-1)/r at every sample");
    }
    return r;
}

ResultRecord experiment_e4()
{
    ResultRecord r;
    r.id = "E4";
    for (int d : {1, 2, 3}) {
        auto hd = h_d_graph(d);
        BigInt n1 = h_d_stage_bound(hd, 1);
        BigInt n3 = h_d_stage_bound(hd, 3);
        std::string tag = "d" + std::to_string(d);
        r.params[tag + ".n3"] = n3.str();

        auto prefix = FinitePrefixGraph::from_graph(hd, static_cast<int>(n3.convert_to<long long>()));
        int degen = degeneracy(prefix);
        r.add_count(tag + ".degeneracy", degen, degen == d);

        int w = static_cast<int>(n1.convert_to<long long>());
        r.add_flag(tag + ".zero-ruled-window", zero_ruled_window_check(hd, w, w, n3));
        r.add_flag(tag + ".kwise", kwise_intersecting_check(hd, d, 2, w, n3));
    }
    return r;
}

ResultRecord experiment_e5()
{
    ResultRecord r;
    r.id = "E5";
    r.params["cycles"] = "100";
    ZeroRuledEngine engine(bipartite_rado_graph(), HostView::from_color_class(rado_coloring(), 1),
                           100);
    engine.run(100);
    auto rep = verify_embedding(engine.state());
    r.add_flag("valid", rep.valid, rep.valid ? "" : rep.violations.front());
    r.add_flag("monochromatic", rep.mono);
    r.add_count("covered_host_prefix", rep.coverage, rep.coverage >= 100);
    return r;
}

ResultRecord experiment_e6()
{
    ResultRecord r;
    r.id = "E6";
    r.params["deep_cycles"] = "50";
    r.params["short_rounds"] = "30";
    {
        DeepTreeEngine engine(tree_graph(TreeSpec::increasing_star()), rado_graph(), 50);
        bool connected = true;
        for (int i = 0; i < 50; ++i) {
            engine.run(1);
            if (!engine.guest_subgraph_connected())
                connected = false;
        }
        auto rep = verify_embedding(engine.state());
        r.add_flag("deep.valid", rep.valid, rep.valid ? "" : rep.violations.front());
        r.add_count("deep.coverage", rep.coverage, rep.coverage >= 50);
        r.add_flag("deep.connected-every-cycle", connected);
    }
    {
        ShortTreeEngine engine(tree_graph(TreeSpec::t_infinity()), rado_graph(), 1);
        engine.run(30);
        auto rep = verify_embedding(engine.state());
        r.add_flag("short.valid", rep.valid, rep.valid ? "" : rep.violations.front());
        // the first 30 enumerated Rado neighbors of vertex 1 are the odds 3..61
        bool covered = true;
        auto g = rado_graph();
        int found = 0;
        for (Vertex v = 2; found < 30; ++v) {
            if (g.adjacent(1, v)) {
                ++found;
                if (!engine.state().covered(v)) {
                    covered = false;
                    break;
                }
            }
        }
        r.add_flag("short.anchor-neighborhood-covered", covered, "first 30 neighbors of 1");
    }
    return r;
}

ResultRecord experiment_e7()
{
    ResultRecord r;
    r.id = "E7";
    r.params["N"] = "10000";
    auto rule = RulingSizeRule::ceil_log2();
    auto p4 = ruling_product(rule, 4);
    r.add("product.N4", p4.exact.value(), p4.exact == Rat(9, 32), "expected 9/32");

    bool decreasing = true;
    auto prev = ruling_product(rule, 2);
    for (int n = 3; n <= 64; ++n) {
        auto cur = ruling_product(rule, n);
        if (!(cur.exact.value() < prev.exact.value())) {
            decreasing = false;
            break;
        }
        prev = cur;
    }
    r.add_flag("strictly-decreasing", decreasing, "exact rationals, N = 2..64");

    auto big = ruling_product(rule, 10000);
    ResultValue rv;
    rv.key = "product.N10000";
    rv.decimal = big.approx;
    rv.pass = big.approx <= 0.05;
    rv.note = "float route";
    r.values.push_back(rv);
    if (!*rv.pass)
        r.pass = false;
    return r;
}

ResultRecord experiment_e8()
{
    ResultRecord r;
    r.id = "E8";
    r.params["horizon"] = "10000";
    const long long horizon = 10000;
    for (int k : {2, 3}) {
        auto col = selfintersect_coloring(k);
        std::string tag = "k" + std::to_string(k);
        bool no_red_inside_b = true, red_ab_below = true, red_a_confined = true;
        BigInt bu = 1;
        for (long long u = 1; u <= horizon; ++u, ++bu) {
            bool ua = u % 2 == 1;
            long long cu = u % (2 * k);
            BigInt bv = bu + 1;
            for (long long v = u + 1; v <= horizon; ++v, ++bv) {
                bool va = v % 2 == 1;
                long long cv = v % (2 * k);
                Color c = col.color(bu, bv);
                if (!ua && !va && cu == cv && c == kRed)
                    no_red_inside_b = false;
                if (ua != va && c == kRed) {
                    // the A endpoint must sit below the B endpoint
                    long long a = ua ? u : v, b = ua ? v : u;
                    if (a > b)
                        red_ab_below = false;
                }
                if (ua && va && c == kRed && cu != cv)
                    red_a_confined = false;
            }
        }
        r.add_flag(tag + ".no-red-inside-Bi", no_red_inside_b);
        r.add_flag(tag + ".red-AB-below", red_ab_below);
        r.add_flag(tag + ".red-A-confined", red_a_confined);
        for (int i = 1; i <= k; ++i) {
            SetForm cls = SetForm::residue_class(2 * k, mod_pos(2 * i - 1, 2 * k));
            Rat dens = cls.density();
            r.add(tag + ".A" + std::to_string(i) + ".density", dens, dens == Rat(1, 2 * k));
        }
    }
    return r;
}

ResultRecord experiment_e9()
{
    ResultRecord r;
    r.id = "E9";
    auto coloring = forward_interval_coloring([](const BigInt& n) { return n; }, "linear", 12);
    IntervalScheme scheme = IntervalScheme::eq3_minimal([](const BigInt& n) { return n; }, "linear", 12);
    BigInt a5 = scheme.bound(5), a8 = scheme.bound(8);
    r.params["horizon"] = a8.str();

    auto peel = peel_deep_tree_sets(coloring, 32, a8);
    r.add_count("stages_used", peel.stages_used, peel.stages_used == 1);
    r.add_flag("no-overflow", !peel.stage_overflow);

    bool r_matches = true, s_matches = true, cofinite = true;
    long long limit = a8.convert_to<long long>();
    for (long long v = 1; v <= limit; ++v) {
        bool red_interval = scheme.index_of(v) % 2 == 1;
        bool in_r = peel.removed.contains(v);
        bool in_s = peel.remainder.contains(v);
        if (in_r != red_interval)
            r_matches = false;
        if (in_s != !red_interval)
            s_matches = false;
        if (!in_r && !in_s)
            cofinite = false;
        if (!r_matches || !s_matches || !cofinite)
            break;
    }
    r.add_flag("R-equals-red-union", r_matches);
    r.add_flag("S-equals-blue-union", s_matches);
    r.add_flag("R-union-S-covers", cofinite);
    r.add_flag("red-path-proxy", short_path_proxy(coloring, peel.removed, kRed, a5, a8),
               "pairs <= a_5 = " + a5.str());
    return r;
}

ResultRecord experiment_e10()
{
    ResultRecord r;
    r.id = "E10";
    r.params["cycles"] = "25";
    {
        MultipartiteSpec spec;
        spec.finite_sizes = {1};
        spec.infinitely_many = true;
        CompatMultipartiteEngine engine(TreeSpec::dary_tree(2), spec, 25);
        engine.run(25);
        auto rep = verify_embedding(engine.state());
        r.add_flag("compat.valid", rep.valid, rep.valid ? "" : rep.violations.front());
        r.add_count("compat.coverage", rep.coverage, rep.coverage >= 25);
    }
    {
        const int d = 2;
        auto col = tstar_coloring(d);
        IntervalScheme scheme = IntervalScheme::tstar(d, 24);
        const long long prefix = 1000;

        // the five exact edge rules, recomputed from the interval indices
        bool rules_ok = true;
        auto expected = [&](long long u, long long v) -> Color {
            int su = scheme.index_of(u), sv = scheme.index_of(v);
            int ru = su % 4, rv = sv % 4;
            if (ru == rv)
                return ru <= 1 ? kRed : kBlue;
            int lo = std::min(ru, rv), hi = std::max(ru, rv);
            if (lo == 0 && hi == 1)
                return kBlue;
            if (lo == 2 && hi == 3)
                return kRed;
            int s_idx = ru <= 1 ? su : sv;
            int t_idx = ru <= 1 ? sv : su;
            int low = ru <= 1 ? ru : rv;
            int high = ru <= 1 ? rv : ru;
            bool red_arrow = (low == 0) ? (high == 2) : (high == 3);
            if (red_arrow)
                return s_idx < t_idx ? kRed : kBlue;
            return s_idx < t_idx ? kBlue : kRed;
        };
        for (long long u = 1; u <= prefix && rules_ok; ++u)
            for (long long v = u + 1; v <= prefix; ++v)
                if (col.at(u, v) != expected(u, v)) {
                    rules_ok = false;
                    break;
                }
        r.add_flag("tstar.edge-rules", rules_ok, "all pairs <= 1000");

        // counting bound for a scripted adversarial blue-embedded set, q = 1:
        // center at 1, distance-1 parents drawn from V_1 up to value a_{4q+1},
        // each parent takes its d-1 children in A_{4q+2}
        const int q = 1;
        BigInt a5 = scheme.bound(4 * q + 1), a6 = scheme.bound(4 * q + 2), a7 = scheme.bound(4 * q + 3);
        std::vector<BigInt> parents;
        for (BigInt v = 1; v <= a5; ++v) {
            int idx = scheme.index_of(v);
            if (idx % 4 == 1)
                parents.push_back(v);
        }
        bool edges_blue = true;
        BigInt filled = 0;
        BigInt child = a6;
        for (const auto& p : parents) {
            if (col.at(1, p) != kBlue)
                edges_blue = false;  // center to parent
            for (int j = 0; j < d - 1 && child < a7; ++j, ++child) {
                if (col.at(p, child) != kBlue)
                    edges_blue = false;
                ++filled;
            }
        }
        r.add_flag("tstar.scripted-set-blue", edges_blue);
        r.add_count("tstar.V2-fill", filled, filled <= BigInt(d) * a5,
                    "bound d*a_" + std::to_string(4 * q + 1) + " = " + (BigInt(d) * a5).str());
        // the bound also holds for the maximal admissible fill
        BigInt max_fill = BigInt(d - 1) * BigInt(parents.size());
        r.add_flag("tstar.max-fill-bound", max_fill <= BigInt(d) * a5,
                   "(d-1)*|V_1 ∩ [1,a_" + std::to_string(4 * q + 1) + "]| <= d*a_" +
                       std::to_string(4 * q + 1));
    }
    return r;
}

} // namespace

std::vector<ExperimentInfo> list_experiments()
{
    return {
        {"E1", "Rado coloring intersection densities at horizon 2^20"},
        {"E2", "residue coloring degree identity, exact sweep to 10^4"},
        {"E3", "greedy D-ary tree embedding density ceiling and counting bound"},
        {"E4", "H_d degeneracy, zero-ruled window and k-wise checks at stage n_3"},
        {"E5", "surjective zero-ruled embedding: bipartite Rado into Rado color 1"},
        {"E6", "tree algorithms: increasing star and T_inf into the Rado graph"},
        {"E7", "ruling-set product: 9/32 at N=4, monotone, <= 0.05 at N=10^4"},
        {"E8", "self-intersecting bound coloring: structural facts and densities"},
        {"E9", "deep peeling of the forward interval coloring at horizon a_8"},
        {"E10", "compatibility-graph embedding and the T-star coloring checks"},
    };
}

ResultRecord run_experiment(const ExperimentSpec& spec)
{
    auto start = std::chrono::steady_clock::now();
    ResultRecord r;
    if (spec.id == "E1")
        r = experiment_e1();
    else if (spec.id == "E2")
        r = experiment_e2();
    else if (spec.id == "E3")
        r = experiment_e3();
    else if (spec.id == "E4")
        r = experiment_e4();
    else if (spec.id == "E5")
        r = experiment_e5();
    else if (spec.id == "E6")
        r = experiment_e6();
    else if (spec.id == "E7")
        r = experiment_e7();
    else if (spec.id == "E8")
        r = experiment_e8();
    else if (spec.id == "E9")
        r = experiment_e9();
    else if (spec.id == "E10")
        r = experiment_e10();
    else
        throw std::invalid_argument("unregistered experiment id '" + spec.id + "'");
    r.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace ramsey
