#include "ramsey/analyzers.hpp"
#include "ramsey/binary.hpp"
#include "ramsey/colorings.hpp"
#include "ramsey/density.hpp"
#include "ramsey/embeddings.hpp"
#include "ramsey/harness.hpp"
#include "ramsey/zoo.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace ramsey;

namespace {

EmitFormat parse_format(const std::string& f)
{
    if (f == "rows")
        return EmitFormat::Rows;
    if (f == "structured")
        return EmitFormat::Structured;
    throw CLI::ValidationError("--format must be rows or structured");
}

void deliver(const std::string& content, const std::string& out_path)
{
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

int run_density(const std::string& descriptor, long long horizon, const std::string& out,
                const std::string& format)
{
    auto set = parse_set(descriptor);
    auto schedule = geometric_schedule(horizon);
    auto profile = density_profile(set, schedule);

    ResultRecord rec;
    rec.id = "density";
    rec.params["set"] = descriptor;
    rec.params["horizon"] = std::to_string(horizon);
    for (size_t i = 0; i < profile.horizons.size(); ++i)
        rec.add("t=" + profile.horizons[i].str(), profile.samples[i]);
    rec.add("ud_estimate", profile.ud_estimate);
    rec.add("ld_estimate", profile.ld_estimate);
    if (profile.exact)
        rec.add("exact", profile.exact_value);
    deliver(emit_record(rec, parse_format(format)), out);
    return 0;
}

int run_verify(const std::string& descriptor, long long horizon, const std::string& out,
               const std::string& format)
{
    auto c = parse_descriptor(descriptor);
    ResultRecord rec;
    rec.id = "verify";
    rec.params["descriptor"] = descriptor;
    rec.params["horizon"] = std::to_string(horizon);
    long long grid = std::min<long long>(horizon, 200);
    if (std::holds_alternative<ColoringOracle>(c)) {
        const auto& col = std::get<ColoringOracle>(c);
        bool symmetric = true, total = true, in_range = true;
        for (long long u = 1; u <= grid; ++u)
            for (long long v = u + 1; v <= grid; ++v) {
                if (!col.valid_pair(u, v))
                    continue;
                Color a = col.color(u, v), b = col.color(v, u);
                if (a != b)
                    symmetric = false;
                if (a < 0 || a >= col.colors)
                    in_range = false;
            }
        (void)total;
        rec.add_flag("symmetric", symmetric);
        rec.add_flag("colors-in-range", in_range);
    }
    else if (std::holds_alternative<GraphOracle>(c)) {
        const auto& g = std::get<GraphOracle>(c);
        bool symmetric = true, irreflexive = true, neighbors_agree = true;
        for (long long u = 1; u <= grid; ++u) {
            if (!g.has_vertex(u))
                continue;
            if (g.adjacent(u, u))
                irreflexive = false;
            for (long long v = u + 1; v <= grid; ++v)
                if (g.has_vertex(v) && g.adjacent(u, v) != g.adjacent(v, u))
                    symmetric = false;
        }
        for (long long v = 1; v <= std::min<long long>(grid, 50); ++v) {
            if (!g.has_vertex(v))
                continue;
            auto nbrs = g.neighbors_upto(v, grid);
            for (const auto& u : nbrs)
                if (!g.adjacent(u, v))
                    neighbors_agree = false;
        }
        rec.add_flag("symmetric", symmetric);
        rec.add_flag("irreflexive", irreflexive);
        rec.add_flag("neighbors-agree", neighbors_agree);
    }
    else {
        const auto& s = std::get<VertexSetOracle>(c);
        rec.add_count("count-at-horizon", s.count_upto(horizon));
        if (s.exact_form)
            rec.add("exact-density", s.exact_form->density());
    }
    deliver(emit_record(rec, parse_format(format)), out);
    return rec.pass ? 0 : 1;
}

int run_analyze(const std::string& descriptor, const std::string& op, long long n,
                const std::string& out, const std::string& format)
{
    auto g = parse_graph(descriptor);
    ResultRecord rec;
    rec.id = "analyze";
    rec.params["graph"] = descriptor;
    rec.params["op"] = op;
    rec.params["n"] = std::to_string(n);
    auto prefix = FinitePrefixGraph::from_graph(g, static_cast<int>(n));
    if (op == "degeneracy")
        rec.add_count("degeneracy", degeneracy(prefix));
    else if (op == "chromatic")
        rec.add_count("chromatic", chromatic_number(prefix));
    else if (op == "domset") {
        bool found = false;
        int s = 0;
        for (; s <= prefix.n; ++s)
            if (dominating_set_exists(prefix, s)) {
                found = true;
                break;
            }
        rec.add_count("min-dominating-size", found ? s : -1);
    }
    else if (op == "zeroruled")
        rec.add_flag("zero-ruled-window", zero_ruled_window_check(g, static_cast<int>(std::min<long long>(n, 8)),
                                                                  static_cast<int>(std::min<long long>(n, 8)), n));
    else
        throw CLI::ValidationError("unknown analyze op '" + op + "'");
    deliver(emit_record(rec, parse_format(format)), out);
    return 0;
}

int run_embed(const std::string& engine, const std::string& guest, const std::string& host,
              long long steps, const std::string& coloring, int color, const std::string& out,
              const std::string& format)
{
    PartialEmbedding state;
    if (engine == "zero-ruled" || engine == "degenerate") {
        HostView hv = coloring.empty() ? HostView::from_graph(parse_graph(host))
                                       : HostView::from_color_class(parse_coloring(coloring), color);
        std::optional<int> d;
        if (engine == "degenerate") {
            auto go = parse_graph(guest);
            if (!go.traits.degeneracy_bound)
                throw refusal_error("degenerate engine: guest declares no degeneracy bound");
            d = *go.traits.degeneracy_bound;
        }
        ZeroRuledEngine e(parse_graph(guest), hv, steps, d);
        e.run(steps);
        state = e.state();
    }
    else if (engine == "cascade") {
        auto gg = parse_graph(guest);
        HostView hv = coloring.empty() ? HostView::from_graph(parse_graph(host))
                                       : HostView::from_color_class(parse_coloring(coloring), color);
        std::vector<VertexSetOracle> layers = {parse_set("odds"), parse_set("evens")};
        CascadeEngine e(gg, hv, layers);
        e.run(steps);
        state = e.state();
    }
    else if (engine == "deep-tree") {
        DeepTreeEngine e(parse_graph(guest), parse_graph(host), steps);
        e.run(steps);
        state = e.state();
    }
    else if (engine == "short-tree") {
        ShortTreeEngine e(parse_graph(guest), parse_graph(host), 1);
        e.run(steps);
        state = e.state();
    }
    else if (engine == "compat-multi") {
        MultipartiteSpec spec;
        spec.finite_sizes = {1};
        spec.infinitely_many = true;
        CompatMultipartiteEngine e(TreeSpec::dary_tree(2), spec, steps);
        e.run(steps);
        state = e.state();
    }
    else if (engine == "induced-paths") {
        InducedPathsEngine e(parse_graph(guest), parse_graph(host), true);
        e.run(steps);
        state = e.state();
    }
    else {
        throw CLI::ValidationError("unknown engine '" + engine + "'");
    }

    auto rep = verify_embedding(state);
    ResultRecord rec;
    rec.id = "embed";
    rec.params["engine"] = engine;
    rec.params["guest"] = guest;
    rec.params["host"] = coloring.empty() ? host : coloring + "#" + std::to_string(color);
    rec.params["steps"] = std::to_string(steps);
    rec.add_flag("valid", rep.valid, rep.valid ? "" : rep.violations.front());
    rec.add_flag("monochromatic", rep.mono);
    rec.add_count("coverage", rep.coverage);
    rec.add_count("frontier", rep.surjectivity_frontier);
    for (const auto& t : state.trace) {
        ResultValue rv;
        rv.key = "step." + std::to_string(t.step) + "." + t.rule;
        rv.note = t.guest.str() + "->" + t.host.str();
        rec.values.push_back(rv);
    }
    deliver(emit_record(rec, parse_format(format)), out);
    return rep.valid ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ramseylab: infinite-graph Ramsey density laboratory"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "rows";
    long long horizon = 100000;
    long long steps = 25;
    app.add_option("--out", out_path, "output file (stdout when omitted)");
    app.add_option("--format", format, "rows | structured");
    app.add_option("--horizon", horizon, "horizon for density and analysis verbs");
    app.add_option("--steps", steps, "engine steps for the embed verb");

    auto* density_cmd = app.add_subcommand("density", "prefix-density profile of a vertex set");
    std::string density_set;
    density_cmd->add_option("set", density_set, "set descriptor")->required();

    auto* verify_cmd = app.add_subcommand("verify", "consistency checks for a descriptor");
    std::string verify_desc;
    verify_cmd->add_option("descriptor", verify_desc)->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "finite-prefix analysis of a graph");
    std::string analyze_graph, analyze_op = "degeneracy";
    analyze_cmd->add_option("graph", analyze_graph)->required();
    analyze_cmd->add_option("--op", analyze_op, "degeneracy | chromatic | domset | zeroruled");

    auto* embed_cmd = app.add_subcommand("embed", "run an embedding engine");
    std::string embed_engine, embed_guest, embed_host, embed_coloring;
    int embed_color = 0;
    embed_cmd->add_option("--engine", embed_engine)->required();
    embed_cmd->add_option("--guest", embed_guest);
    embed_cmd->add_option("--host", embed_host);
    embed_cmd->add_option("--coloring", embed_coloring, "host as a color class of this coloring");
    embed_cmd->add_option("--color", embed_color);

    auto* reproduce_cmd = app.add_subcommand("reproduce", "run a registered experiment");
    std::string experiment_id;
    reproduce_cmd->add_option("id", experiment_id, "E1..E10")->required();

    auto* list_cmd = app.add_subcommand("list", "list descriptors and experiments");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough(true);

    try {
        app.parse(argc, argv);

        if (list_cmd->parsed()) {
            std::cout << "experiments:\n";
            for (const auto& e : list_experiments())
                std::cout << "  " << e.id << "  " << e.summary << "\n";
            std::cout << "graphs: rado brado half bhalf complete edgeless twocliques path "
                         "hd:d= tree:kind= ctr:kind=binary multi:parts=\n";
            std::cout << "colorings: radoc residue:r= fwdint:f=,stages= bwdint:stages= bhalfc "
                         "blocks:k= respart:m= bipmod:r= selfint:k= tstar:d= dlift:n=,m=\n";
            std::cout << "sets: all evens odds mod:m=,r= cyl:s= interval:lo=,hi=\n";
            return 0;
        }
        if (density_cmd->parsed())
            return run_density(density_set, horizon, out_path, format);
        if (verify_cmd->parsed())
            return run_verify(verify_desc, horizon, out_path, format);
        if (analyze_cmd->parsed())
            return run_analyze(analyze_graph, analyze_op, std::min<long long>(horizon, 200), out_path,
                               format);
        if (embed_cmd->parsed())
            return run_embed(embed_engine, embed_guest, embed_host, steps, embed_coloring,
                             embed_color, out_path, format);
        if (reproduce_cmd->parsed()) {
            ExperimentSpec spec;
            spec.id = experiment_id;
            auto rec = run_experiment(spec);
            deliver(emit_record(rec, parse_format(format)), out_path);
            std::cerr << rec.id << (rec.pass ? " passed" : " FAILED") << " in "
                      << rec.runtime_seconds << " s\n";
            return rec.pass ? 0 : 1;
        }
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    catch (const descriptor_error& e) {
        std::cerr << "descriptor error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
