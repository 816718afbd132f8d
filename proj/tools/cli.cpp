#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "teg/teg.hpp"

#ifndef TEG_VERSION
#define TEG_VERSION "0.0.0"
#endif

namespace teg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

double parse_seconds(std::string_view text)
{
    if (text.empty()) throw UsageError("empty time value");
    double scale = 1.0;
    switch (text.back()) {
    case 's': scale = 1.0; break;
    case 'm': scale = 60.0; break;
    case 'h': scale = 3600.0; break;
    case 'd': scale = 86400.0; break;
    default: scale = 0.0;
    }
    std::string_view number = scale > 0.0 ? text.substr(0, text.size() - 1) : text;
    if (scale == 0.0) scale = 1.0;
    double v = 0.0;
    if (number.empty() || !detail::parse_number(number, v) || !std::isfinite(v)) {
        throw UsageError("invalid time value '" + std::string(text) + "'");
    }
    return v * scale;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = text.find(sep, begin);
        parts.push_back(text.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
        if (end == std::string_view::npos) break;
        begin = end + 1;
    }
    return parts;
}

// ---------------------------------------------------------------------------
// Output files and manifests

struct Manifest {
    std::string subcommand;
    std::vector<std::string> inputs;
    ordered_json options = ordered_json::object();
    ordered_json seeds = ordered_json::array();
    std::string delta_t;
    std::string dt_grid;
};

ordered_json manifest_json(const Manifest& m, const std::string& output, const std::string& format)
{
    ordered_json j;
    j["tool"] = "teg";
    j["tool_version"] = TEG_VERSION;
    j["subcommand"] = m.subcommand;
    j["inputs"] = m.inputs;
    if (!m.delta_t.empty()) j["delta_t"] = m.delta_t;
    if (!m.dt_grid.empty()) j["dt_grid"] = m.dt_grid;
    j["seeds"] = m.seeds;
    const std::filesystem::path p(output);
    j["output"] = output;
    j["output_directory"] = p.has_parent_path() ? p.parent_path().string() : std::string(".");
    j["format"] = format;
    j["options"] = m.options;
    return j;
}

/// Write `content` to `path` (or to `out` when the path is empty or "-").
/// Files get a `<path>.manifest.json` sidecar.
void emit(const std::string& path, const std::string& content, const Manifest& manifest, const std::string& format,
          std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    {
        std::ofstream file(path, std::ios::binary);
        if (!file) throw InputError("cannot write '" + path + "'");
        file << content;
        if (!file) throw InputError("failed writing '" + path + "'");
    }
    std::ofstream side(path + ".manifest.json", std::ios::binary);
    if (!side) throw InputError("cannot write '" + path + ".manifest.json'");
    side << manifest_json(manifest, path, format).dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Inputs

struct EventInput {
    std::string path;
    std::string delimiter = "whitespace";
    std::size_t source_column = 0;
    std::size_t target_column = 1;
    std::size_t time_column = 2;
    bool skip_self_loops = false;
    bool strict_ties = false;
};

void add_event_input(CLI::App* sub, EventInput& in)
{
    sub->add_option("-i,--input", in.path, "Event list (source target time per line), '-' for stdin")->required();
    sub->add_option("--delimiter", in.delimiter, "Field delimiter")
        ->check(CLI::IsMember({"whitespace", "comma"}))
        ->capture_default_str();
    sub->add_option("--source-column", in.source_column, "Zero-based source column")->capture_default_str();
    sub->add_option("--target-column", in.target_column, "Zero-based target column")->capture_default_str();
    sub->add_option("--time-column", in.time_column, "Zero-based time column")->capture_default_str();
    sub->add_flag("--skip-self-loops", in.skip_self_loops, "Drop self-loop lines instead of failing");
    sub->add_flag("--strict-ties", in.strict_ties, "Reject equal timestamps instead of keeping input order");
}

std::unique_ptr<std::istream> open_input(const std::string& path)
{
    if (path == "-") return std::make_unique<std::istream>(std::cin.rdbuf());
    auto file = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file) throw InputError("cannot open '" + path + "'");
    return file;
}

TemporalNetwork load_events(const EventInput& in, std::ostream& err)
{
    ParseOptions opts;
    opts.delimiter = in.delimiter == "comma" ? Delimiter::comma : Delimiter::whitespace;
    opts.source_column = in.source_column;
    opts.target_column = in.target_column;
    opts.time_column = in.time_column;
    opts.skip_self_loops = in.skip_self_loops;
    opts.tie_policy = in.strict_ties ? TiePolicy::reject : TiePolicy::stable_order;
    auto stream = open_input(in.path);
    auto parsed = parse_events(*stream, opts);
    if (parsed.stats.ties > 0) {
        err << "warning: " << parsed.stats.ties << " events share a timestamp with their predecessor;"
            << " input order kept\n";
    }
    if (parsed.stats.skipped_self_loops > 0) {
        err << "warning: skipped " << parsed.stats.skipped_self_loops << " self-loop lines\n";
    }
    if (parsed.network.empty()) throw InputError("'" + in.path + "' contains no events");
    return std::move(parsed.network);
}

struct LoadedTeg {
    EdgeLabelledTeg graph;
    std::optional<DeltaT> delta_t;
};

LoadedTeg load_teg(const std::string& path)
{
    auto stream = open_input(path);
    std::ostringstream buf;
    buf << stream->rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InputError("'" + path + "': " + e.what());
        }
        return {edge_labelled_from_json(doc), delta_t_from_json(doc)};
    }
    std::istringstream in(text);
    auto t = read_teg_text(in);
    return {std::move(t.graph), t.delta_t};
}

IetSampler parse_iet(const std::string& text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw UsageError("IET law must look like power:0.2, exp:1 or det:1");
    double v = 0.0;
    if (!detail::parse_number(parts[1], v)) throw UsageError("invalid IET parameter '" + std::string(parts[1]) + "'");
    if (parts[0] == "power") return IetSampler::power_law(v);
    if (parts[0] == "exp") return IetSampler::exponential(v);
    if (parts[0] == "det") return IetSampler::deterministic(v);
    throw UsageError("unknown IET law '" + std::string(parts[0]) + "'");
}

Motif parse_motif_option(const std::string& text)
{
    const auto m = parse_motif(text);
    if (!m) throw UsageError("unknown motif '" + text + "'");
    return *m;
}

std::string csv(double v) { return format_csv(v); }

ordered_json motif_counts_json(const MotifCounts& counts)
{
    ordered_json j = ordered_json::object();
    for (Motif m : all_motifs) j[std::string(to_string(m))] = counts[index_of(m)];
    return j;
}

void record_options(const CLI::App* sub, Manifest& manifest)
{
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_name() == "--help") continue;
        std::string name = opt->get_name();
        while (!name.empty() && name.front() == '-') name.erase(name.begin());
        if (opt->count() == 0) {
            if (!opt->get_default_str().empty()) manifest.options[name] = opt->get_default_str();
            continue;
        }
        const auto& results = opt->results();
        if (opt->get_type_size() == 0) {
            manifest.options[name] = true;
        } else if (results.size() == 1) {
            manifest.options[name] = results.front();
        } else {
            manifest.options[name] = results;
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Value parsers

DeltaT parse_delta_t(std::string_view text)
{
    if (text == "inf" || text == "infinity") return DeltaT::infinite();
    const double v = parse_seconds(text);
    if (!(v > 0.0)) throw UsageError("delta t must be positive, got '" + std::string(text) + "'");
    return DeltaT::finite(v);
}

std::vector<DeltaT> parse_dt_grid(std::string_view text)
{
    std::vector<DeltaT> grid;
    const bool lin = text.starts_with("lin:");
    const bool log = text.starts_with("log:");
    if (lin || log) {
        const auto parts = split(text.substr(4), ':');
        if (parts.size() != 3) throw UsageError("range grid must look like lin:a:b:n or log:a:b:n");
        const double a = parse_delta_t(parts[0]).value();
        const double b = parse_delta_t(parts[1]).value();
        std::size_t n = 0;
        if (!detail::parse_number(parts[2], n) || n < 1) throw UsageError("invalid grid size '" + std::string(parts[2]) + "'");
        if (!std::isfinite(a) || !std::isfinite(b)) throw UsageError("range grid endpoints must be finite");
        if (n == 1 && a != b) throw UsageError("a one-point range needs a == b");
        for (std::size_t k = 0; k < n; ++k) {
            const double f = n == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(n - 1);
            double v = lin ? a + (b - a) * f : a * std::pow(b / a, f);
            if (k == n - 1) v = b;
            grid.push_back(DeltaT::finite(v));
        }
    } else {
        for (std::string_view part : split(text, ',')) grid.push_back(parse_delta_t(part));
    }
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k - 1].value() < grid[k].value())) throw UsageError("delta t grid must be strictly increasing");
    }
    return grid;
}

// ---------------------------------------------------------------------------

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Temporal event graphs: build, reconstruct and analyse"};
    app.name("teg");
    app.require_subcommand(1);
    app.set_version_flag("--version", TEG_VERSION);

    unsigned threads = default_thread_count();
    std::string output;
    std::string dt_text = "inf";
    EventInput events_in;
    std::string teg_path;

    auto add_output = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("-o,--output", output, what + " (default: stdout)");
    };
    auto add_dt = [&](CLI::App* sub) {
        sub->add_option("--dt", dt_text, "Adjacency window: seconds with optional s/m/h/d suffix, or inf")
            ->capture_default_str();
    };
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", threads, "Worker threads (default: TEG_THREADS or hardware)")
            ->check(CLI::PositiveNumber);
    };

    // build
    std::string build_format = "json";
    bool build_anchors = false;
    CLI::App* build = app.add_subcommand("build", "Build the edge-labelled TEG of an event list");
    add_event_input(build, events_in);
    add_dt(build);
    build->add_option("--format", build_format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    build->add_flag("--anchors", build_anchors, "Store every event time as an anchor");
    add_output(build, "TEG file");

    // validate
    CLI::App* validate = app.add_subcommand("validate", "Check that an edge-labelled TEG describes a temporal network (C1-C4)");
    validate->add_option("-i,--input", teg_path, "TEG file (JSON or text)")->required();
    add_output(validate, "Report");

    // reconstruct
    bool check = false;
    std::string layout = "common";
    double gap = 1.0;
    CLI::App* reconstruct_cmd = app.add_subcommand("reconstruct", "Recover the event list of an edge-labelled TEG");
    reconstruct_cmd->add_option("-i,--input", teg_path, "TEG file (JSON or text)")->required();
    reconstruct_cmd->add_flag("--check", check, "Rebuild the TEG from the result and compare it with the input");
    reconstruct_cmd->add_option("--layout", layout, "common (each component from t=0) or end-to-end")
        ->check(CLI::IsMember({"common", "end-to-end"}))
        ->capture_default_str();
    reconstruct_cmd->add_option("--gap", gap, "Spacing between components with --layout end-to-end")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_output(reconstruct_cmd, "Event list");

    // components
    std::size_t top = 0;
    CLI::App* components_cmd = app.add_subcommand("components", "Weakly connected components as JSON");
    add_event_input(components_cmd, events_in);
    add_dt(components_cmd);
    components_cmd->add_option("--top", top, "Report only the largest K components (0: all)")->capture_default_str();
    add_output(components_cmd, "JSON summary");

    // sweep
    std::string grid_text;
    std::size_t gen_nodes = 200;
    std::size_t gen_events = 5000;
    std::string gen_iet = "power:0.2";
    std::uint64_t seed = 0;
    std::size_t runs = 1;
    CLI::App* sweep = app.add_subcommand("sweep", "Largest-component fraction over a delta t grid");
    auto* sweep_input = sweep->add_option("-i,--input", events_in.path, "Event list; omit to sweep random networks");
    sweep->add_option("--delimiter", events_in.delimiter, "Field delimiter")->check(CLI::IsMember({"whitespace", "comma"}));
    sweep->add_option("--dt-grid", grid_text, "List a,b,c or lin:a:b:n or log:a:b:n")->required();
    auto* sweep_runs = sweep->add_option("--runs", runs, "Random networks in the ensemble")->check(CLI::PositiveNumber);
    sweep->add_option("--nodes", gen_nodes, "Random network node count")->capture_default_str();
    sweep->add_option("--events", gen_events, "Random network event count")->capture_default_str();
    sweep->add_option("--iet", gen_iet, "Random network IET law")->capture_default_str();
    sweep->add_option("--seed", seed, "Ensemble seed")->capture_default_str();
    sweep_runs->excludes(sweep_input);
    add_threads(sweep);
    add_output(sweep, "CSV");

    // motifs
    bool per_component = false;
    bool counts_only = false;
    std::size_t shuffle_runs = 0;
    CLI::App* motifs = app.add_subcommand("motifs", "Two-event motif distribution as CSV");
    add_event_input(motifs, events_in);
    add_dt(motifs);
    motifs->add_flag("--per-component", per_component, "Add one row per component with at least one edge");
    motifs->add_flag("--counts", counts_only, "Report counts instead of frequencies");
    motifs->add_option("--shuffle-runs", shuffle_runs, "Add time-shuffled ensemble mean and standard error rows")
        ->capture_default_str();
    motifs->add_option("--seed", seed, "Shuffle ensemble seed")->capture_default_str();
    add_threads(motifs);
    add_output(motifs, "CSV");

    // iets
    std::string motif_text;
    std::optional<std::size_t> component;
    std::string svg_path;
    CLI::App* iets = app.add_subcommand("iets", "Inter-event time CCDF as CSV");
    add_event_input(iets, events_in);
    add_dt(iets);
    iets->add_option("--motif", motif_text, "Condition on one motif, or 'all' for one curve per motif");
    iets->add_option("--component", component, "Restrict to the component of this rank");
    iets->add_option("--svg", svg_path, "Also draw the CCDF(s) to this SVG file");
    add_output(iets, "CSV");

    // entropy
    CLI::App* entropy = app.add_subcommand("entropy", "Motif entropy and IET cumulative residual entropy");
    add_event_input(entropy, events_in);
    add_dt(entropy);
    entropy->add_flag("--per-component", per_component, "Add one row per component with at least one edge");
    add_output(entropy, "CSV");

    // barcode
    std::string barcode_format = "svg";
    top = 0;
    CLI::App* barcode_cmd = app.add_subcommand("barcode", "Temporal barcode of the largest components");
    add_event_input(barcode_cmd, events_in);
    add_dt(barcode_cmd);
    barcode_cmd->add_option("--top", top, "Number of components (0: all)")->capture_default_str();
    barcode_cmd->add_option("--format", barcode_format, "svg or csv")->check(CLI::IsMember({"svg", "csv"}))->capture_default_str();
    add_output(barcode_cmd, "Barcode");

    // aggregate
    CLI::App* aggregate = app.add_subcommand("aggregate", "Static aggregate graph summary as JSON");
    add_event_input(aggregate, events_in);
    add_dt(aggregate);
    aggregate->add_option("--component", component, "Aggregate only the component of this rank");
    add_output(aggregate, "JSON summary");

    // generate
    CLI::App* generate = app.add_subcommand("generate", "Random temporal network");
    generate->add_option("--nodes", gen_nodes, "Node count N")->capture_default_str();
    generate->add_option("--events", gen_events, "Event count M")->capture_default_str();
    generate->add_option("--iet", gen_iet, "IET law: power:a, exp:rate or det:c")->capture_default_str();
    generate->add_option("--seed", seed, "Seed")->capture_default_str();
    add_output(generate, "Event list");

    // shuffle
    CLI::App* shuffle = app.add_subcommand("shuffle", "Time-shuffled copy of an event list");
    add_event_input(shuffle, events_in);
    shuffle->add_option("--seed", seed, "Seed")->capture_default_str();
    add_output(shuffle, "Event list");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    CLI::App* sub = app.get_subcommands().front();
    Manifest manifest;
    manifest.subcommand = sub->get_name();
    record_options(sub, manifest);

    try {
        const std::string name = sub->get_name();
        const bool needs_events = name != "validate" && name != "reconstruct" && name != "generate" &&
                                  !(name == "sweep" && events_in.path.empty());
        if (name == "validate" || name == "reconstruct") manifest.inputs.push_back(teg_path);
        if (needs_events) manifest.inputs.push_back(events_in.path);

        std::optional<DeltaT> dt;
        if (sub->get_option_no_throw("--dt")) {
            dt = parse_delta_t(dt_text);
            manifest.delta_t = to_string(*dt);
        }

        if (name == "build") {
            const auto net = load_events(events_in, err);
            const auto g = strip_events(build_teg(net, *dt), build_anchors);
            std::ostringstream s;
            if (build_format == "json") {
                s << to_json(g, *dt).dump(2) << '\n';
            } else {
                write_teg_text(s, g, *dt);
            }
            emit(output, s.str(), manifest, build_format, out);
            return exit_ok;
        }

        if (name == "validate") {
            const auto loaded = load_teg(teg_path);
            auto report = check_consistency(loaded.graph);
            if (report.consistent()) {
                try {
                    reconstruct_events(loaded.graph);
                } catch (const InconsistentGraphError& e) {
                    report = e.report();
                }
            }
            std::ostringstream s;
            if (report.consistent()) {
                s << "consistent: " << loaded.graph.vertex_count() << " events, " << loaded.graph.edges().size()
                  << " edges\n";
            } else {
                s << report;
            }
            emit(output, s.str(), manifest, "text", out);
            return report.consistent() ? exit_ok : exit_inconsistent;
        }

        if (name == "reconstruct") {
            const auto loaded = load_teg(teg_path);
            if (loaded.delta_t) manifest.delta_t = to_string(*loaded.delta_t);
            ReconstructOptions opts;
            opts.layout = layout == "end-to-end" ? ComponentLayout::end_to_end : ComponentLayout::common_origin;
            opts.gap = gap;
            TemporalNetwork net = reconstruct(loaded.graph, opts);
            if (check) {
                const auto rebuilt = strip_events(build_teg(net, loaded.delta_t.value_or(DeltaT::infinite())));
                const auto a = loaded.graph.edges();
                const auto b = rebuilt.edges();
                const double tol = opts.consistency.relative_time_tolerance;
                bool same = a.size() == b.size();
                for (std::size_t k = 0; same && k < a.size(); ++k) {
                    same = a[k].i == b[k].i && a[k].j == b[k].j && a[k].motif == b[k].motif &&
                           std::abs(a[k].tau - b[k].tau) <= tol * std::max(1.0, std::abs(a[k].tau));
                }
                if (!same) {
                    err << "check failed: the reconstructed events do not rebuild the input TEG\n";
                    return exit_inconsistent;
                }
                err << "check passed: " << net.size() << " events rebuild all " << a.size() << " edges\n";
            }
            std::ostringstream s;
            write_events(s, net);
            emit(output, s.str(), manifest, "events", out);
            return exit_ok;
        }

        if (name == "generate" || name == "shuffle") {
            manifest.seeds.push_back(seed);
            TemporalNetwork net = name == "generate"
                                      ? generate_random({gen_nodes, gen_events, parse_iet(gen_iet), seed})
                                      : time_shuffle(load_events(events_in, err), seed);
            std::ostringstream s;
            write_events(s, net);
            emit(output, s.str(), manifest, "events", out);
            return exit_ok;
        }

        if (name == "sweep") {
            const auto grid = parse_dt_grid(grid_text);
            manifest.dt_grid = grid_text;
            std::ostringstream s;
            if (!events_in.path.empty()) {
                const auto net = load_events(events_in, err);
                s << "delta_t,largest_fraction,largest_events,component_count\n";
                for (const SweepPoint& p : sweep_largest_component(net, grid)) {
                    s << to_string(p.delta_t) << ',' << csv(p.largest_fraction) << ',' << p.largest_events << ','
                      << p.component_count << '\n';
                }
            } else {
                manifest.seeds.push_back(seed);
                const GeneratorConfig cfg{gen_nodes, gen_events, parse_iet(gen_iet), seed};
                const auto curves = ensemble_map(runs, threads, [&](std::size_t r) {
                    GeneratorConfig member = cfg;
                    member.seed = derive_seed(cfg.seed, r);
                    return sweep_largest_component(generate_random(member), grid);
                });
                s << "delta_t,runs,largest_fraction_mean,largest_fraction_stderr,component_count_mean\n";
                const double n = static_cast<double>(runs);
                for (std::size_t k = 0; k < grid.size(); ++k) {
                    double mean = 0.0;
                    double count = 0.0;
                    for (const auto& c : curves) {
                        mean += c[k].largest_fraction / n;
                        count += static_cast<double>(c[k].component_count) / n;
                    }
                    double ss = 0.0;
                    for (const auto& c : curves) ss += (c[k].largest_fraction - mean) * (c[k].largest_fraction - mean);
                    const double se = runs > 1 ? std::sqrt(ss / (n - 1.0)) / std::sqrt(n) : 0.0;
                    s << to_string(grid[k]) << ',' << runs << ',' << csv(mean) << ',' << csv(se) << ',' << csv(count)
                      << '\n';
                }
            }
            emit(output, s.str(), manifest, "csv", out);
            return exit_ok;
        }

        // The remaining subcommands analyse the TEG of an event list.
        const auto net = std::make_shared<const TemporalNetwork>(load_events(events_in, err));
        const Teg teg = build_teg(net, *dt);
        const ComponentSet comps = weakly_connected_components(teg);

        if (name == "components") {
            ordered_json j;
            j["delta_t"] = to_string(*dt);
            j["event_count"] = net->size();
            j["edge_count"] = teg.edges().size();
            j["component_count"] = comps.size();
            j["largest_fraction"] = static_cast<double>(comps.largest_size()) / static_cast<double>(net->size());
            const auto per = motif_counts_per_component(teg, comps);
            ordered_json list = ordered_json::array();
            const std::size_t shown = top == 0 ? comps.size() : std::min(top, comps.size());
            for (std::size_t r = 0; r < shown; ++r) {
                const Component& c = comps[r];
                ordered_json row;
                row["rank"] = r;
                row["events"] = c.size();
                row["nodes"] = c.nodes.size();
                row["first_time"] = c.first_time;
                row["last_time"] = c.last_time;
                row["duration"] = c.duration();
                row["motifs"] = motif_counts_json(per[r]);
                list.push_back(std::move(row));
            }
            j["components"] = std::move(list);
            ordered_json sizes = ordered_json::array();
            SizeHistogram hist;
            accumulate_sizes(comps, hist);
            for (const auto& [size, count] : hist) sizes.push_back({{"size", size}, {"count", count}});
            j["size_histogram"] = std::move(sizes);
            emit(output, j.dump(2) + "\n", manifest, "json", out);
            return exit_ok;
        }

        if (name == "motifs") {
            std::ostringstream s;
            s << "scope,component,edges";
            for (Motif m : all_motifs) s << ',' << to_string(m);
            s << ",entropy_bits\n";
            auto row = [&](const std::string& scope, const std::string& rank, const MotifCounts& c) {
                s << scope << ',' << rank << ',' << total(c);
                if (total(c) == 0) {
                    for (std::size_t k = 0; k < motif_count; ++k) s << ",0";
                    s << ",\n";
                    return;
                }
                const auto d = motif_distribution_from_counts(c);
                for (std::size_t k = 0; k < motif_count; ++k) {
                    s << ',' << (counts_only ? std::to_string(c[k]) : csv(d.mass[k]));
                }
                s << ',' << csv(shannon_entropy(d)) << '\n';
            };
            row("network", "", motif_counts(teg));
            if (per_component) {
                const auto per = motif_counts_per_component(teg, comps);
                for (std::size_t r = 0; r < per.size(); ++r) {
                    if (total(per[r]) > 0) row("component", std::to_string(r), per[r]);
                }
            }
            if (shuffle_runs > 0) {
                manifest.seeds.push_back(seed);
                const auto ens = shuffled_motif_ensemble(*net, *dt, shuffle_runs, seed, threads);
                const auto pooled = motif_distribution_from_counts(ens.pooled);
                s << "shuffled_mean,," << shuffle_runs;
                for (double v : ens.mean) s << ',' << csv(v);
                s << ',' << csv(shannon_entropy(pooled)) << '\n';
                s << "shuffled_stderr,," << shuffle_runs;
                for (double v : ens.standard_error) s << ',' << csv(v);
                s << ",\n";
            }
            emit(output, s.str(), manifest, "csv", out);
            return exit_ok;
        }

        if (name == "iets") {
            if (component && *component >= comps.size()) {
                throw UsageError("component rank " + std::to_string(*component) + " out of range (" +
                                 std::to_string(comps.size()) + " components)");
            }
            std::vector<std::pair<std::string, std::optional<Motif>>> scopes;
            if (motif_text.empty()) {
                scopes.emplace_back("any", std::nullopt);
            } else if (motif_text == "all") {
                for (Motif m : all_motifs) scopes.emplace_back(std::string(to_string(m)), m);
            } else {
                const Motif m = parse_motif_option(motif_text);
                scopes.emplace_back(std::string(to_string(m)), m);
            }
            std::ostringstream s;
            s << "motif,iet,ccdf\n";
            std::vector<std::pair<std::string, EmpiricalCcdf>> curves;
            for (const auto& [label, m] : scopes) {
                auto samples = iet_samples(teg, m, &comps, component);
                if (samples.empty()) {
                    if (scopes.size() == 1) throw EmptyScopeError("no edges match the requested scope");
                    continue;
                }
                EmpiricalCcdf ccdf(std::move(samples));
                const auto x = ccdf.support();
                const auto surv = ccdf.survival();
                for (std::size_t k = 0; k < x.size(); ++k) s << label << ',' << csv(x[k]) << ',' << csv(surv[k]) << '\n';
                curves.emplace_back(label, std::move(ccdf));
            }
            emit(output, s.str(), manifest, "csv", out);
            if (!svg_path.empty()) emit(svg_path, render_ccdf_svg(curves), manifest, "svg", out);
            return exit_ok;
        }

        if (name == "entropy") {
            std::ostringstream s;
            s << "scope,component,edges,motif_entropy_bits,iet_cre_bits\n";
            auto row = [&](const std::string& scope, const std::string& rank, std::optional<std::size_t> r) {
                const auto samples = iet_samples(teg, std::nullopt, &comps, r);
                MotifCounts c{};
                for (const TegEdge& e : teg.edges()) {
                    if (!r || comps.component_of(e.from) == *r) ++c[index_of(e.motif)];
                }
                s << scope << ',' << rank << ',' << samples.size() << ','
                  << csv(shannon_entropy(motif_distribution_from_counts(c))) << ','
                  << csv(cumulative_residual_entropy(samples)) << '\n';
            };
            if (teg.edges().empty()) throw EmptyScopeError("the TEG has no edges");
            row("network", "", std::nullopt);
            if (per_component) {
                for (std::size_t r = 0; r < comps.size(); ++r) {
                    if (comps[r].size() > 1) row("component", std::to_string(r), r);
                }
            }
            emit(output, s.str(), manifest, "csv", out);
            return exit_ok;
        }

        if (name == "barcode") {
            const auto rows = barcode(teg, comps, top == 0 ? comps.size() : top);
            if (barcode_format == "svg") {
                emit(output, render_barcode_svg(rows), manifest, "svg", out);
            } else {
                std::ostringstream s;
                s << "component,time\n";
                for (const auto& r : rows) {
                    for (double t : r.times) s << r.component << ',' << csv(t) << '\n';
                }
                emit(output, s.str(), manifest, "csv", out);
            }
            return exit_ok;
        }

        if (name == "aggregate") {
            AggregateGraph agg;
            ordered_json j;
            if (component) {
                if (*component >= comps.size()) {
                    throw UsageError("component rank " + std::to_string(*component) + " out of range (" +
                                     std::to_string(comps.size()) + " components)");
                }
                agg = aggregate_component(teg, comps, *component);
                j["scope"] = "component";
                j["component"] = *component;
            } else {
                agg = aggregate_network(*net);
                j["scope"] = "network";
            }
            const auto summary = agg.summary();
            j["nodes"] = summary.node_count;
            j["edges"] = summary.edge_count;
            j["density"] = summary.density;
            j["reciprocity"] = summary.reciprocity;
            j["weak_components"] = agg.component_count();
            emit(output, j.dump(2) + "\n", manifest, "json", out);
            return exit_ok;
        }

        throw UsageError("unhandled subcommand '" + name + "'");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InconsistentGraphError& e) {
        err << "error: " << e.what() << '\n';
        return exit_inconsistent;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
}

}  // namespace teg::cli
