// tifo — command-line front end for the fandom-emotion analytics library.
//
// Subcommands: ingest, burstiness, cluster, regress, simulate, report.
// Every command writes its artifacts plus a run_manifest.json carrying
// the configuration, a hash of it, the seed, and the artifact list, so
// each output directory is self-describing. Given the same inputs and
// flags, reruns are byte-identical.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tifo/clustering.hpp"
#include "tifo/csv.hpp"
#include "tifo/dtw.hpp"
#include "tifo/errors.hpp"
#include "tifo/ingest.hpp"
#include "tifo/io.hpp"
#include "tifo/regression.hpp"
#include "tifo/simulate.hpp"
#include "tifo/temporal_stats.hpp"
#include "tifo/types.hpp"
#include "tifo/util.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- plumbing

// Hash of (command, canonical config serialization). The output
// directory never participates, so runs into different directories
// produce identical manifests.
std::string manifest_config_hash(const std::string& command, const ordered_json& config) {
    return tifo::hex64(tifo::fnv1a64(command + "\n" + config.dump()));
}

void write_manifest(const fs::path& out, const std::string& command, const ordered_json& config,
                    std::uint64_t seed, const std::vector<std::string>& artifacts) {
    ordered_json m;
    m["command"] = command;
    m["config"] = config;
    m["config_hash"] = manifest_config_hash(command, config);
    m["seed"] = seed;
    m["artifacts"] = artifacts;
    tifo::write_text_file(out / "run_manifest.json", m.dump(2) + "\n");
}

void announce(const fs::path& out, const std::vector<std::string>& artifacts) {
    for (const std::string& a : artifacts)
        std::cout << "wrote " << (out / a).generic_string() << "\n";
}

std::ifstream open_input(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tifo::Error("cannot open '" + path.string() + "'");
    return in;
}

// Collects every '*<suffix>' series document under dir, ordered by team
// id so downstream artifacts never depend on directory enumeration.
std::vector<tifo::EmotionalSeries> load_series_dir(const fs::path& dir,
                                                   const std::string& suffix) {
    std::vector<tifo::EmotionalSeries> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (name.size() < suffix.size() ||
            name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0)
            continue;
        out.push_back(tifo::series_from_json(tifo::read_text_file(entry.path())));
    }
    if (out.empty())
        throw tifo::Error("no '*" + suffix + "' series files in '" + dir.string() + "'");
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.team_id() < b.team_id();
    });
    return out;
}

std::vector<std::string> split_list(const std::string& spec) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<tifo::Emotion> parse_emotions(const std::string& spec) {
    std::vector<tifo::Emotion> out;
    if (spec == "all") {
        out.assign(tifo::kAllEmotions.begin(), tifo::kAllEmotions.end());
        return out;
    }
    for (const std::string& name : split_list(spec)) {
        tifo::Emotion e = tifo::emotion_from_string(name);
        if (std::find(out.begin(), out.end(), e) != out.end())
            throw tifo::Error("emotion '" + name + "' listed twice");
        out.push_back(e);
    }
    return out;
}

template <typename Fn>
auto with_input_context(const fs::path& path, Fn&& fn) {
    try {
        return fn();
    } catch (const tifo::ParseError& e) {
        throw tifo::ParseError(path.string() + ": " + e.what());
    }
}

std::vector<tifo::TeamMetadata> load_metadata_file(const fs::path& path) {
    return with_input_context(path, [&] {
        auto in = open_input(path);
        return tifo::load_metadata(in);
    });
}

// ------------------------------------------------------------------ ingest

std::vector<std::string> run_ingest(const fs::path& posts_path, const fs::path& out) {
    auto posts = with_input_context(posts_path, [&] {
        auto in = open_input(posts_path);
        return tifo::load_posts(in);
    });

    fs::create_directories(out / "series");
    std::vector<std::string> artifacts;
    std::vector<tifo::IngestStats> stats;
    std::map<std::string, std::string> stem_owner;

    for (const auto& [team_id, team_posts] : posts) {
        const std::string stem = tifo::sanitize_id(team_id);
        auto [it, fresh] = stem_owner.try_emplace(stem, team_id);
        if (!fresh)
            throw tifo::Error("teams '" + it->second + "' and '" + team_id +
                              "' collide on output file stem '" + stem + "'");

        auto [retained, team_stats] = tifo::apply_median_threshold(team_posts);
        stats.push_back(team_stats);

        tifo::EmotionalSeries series = tifo::series_from_posts(team_id, retained);
        tifo::EmotionalSeries daily = tifo::aggregate_daily(series);

        const std::string retained_name = "series/" + stem + ".retained.json";
        const std::string daily_name = "series/" + stem + ".daily.json";
        tifo::write_text_file(out / retained_name, tifo::posts_to_json(team_id, retained));
        tifo::write_text_file(out / daily_name, tifo::daily_series_to_json(daily));
        artifacts.push_back(retained_name);
        artifacts.push_back(daily_name);
    }

    tifo::write_text_file(out / "ingest_stats.csv", tifo::ingest_stats_csv(stats));
    artifacts.push_back("ingest_stats.csv");
    return artifacts;
}

// -------------------------------------------------------------- burstiness

std::vector<std::string> run_burstiness(const fs::path& series_dir, const fs::path& out,
                                        const std::vector<tifo::Emotion>& emotions,
                                        std::size_t lag) {
    auto series = load_series_dir(series_dir, ".retained.json");

    std::vector<tifo::BurstinessReport> reports;
    std::string warnings = "team_id,emotion,warning\n";
    for (const auto& s : series) {
        for (tifo::Emotion e : emotions) {
            tifo::BinaryEventSeries events = tifo::binarize(s, e);
            try {
                tifo::BurstinessReport rep = tifo::burstiness_report(events, lag);
                if (!rep.memory)
                    warnings += tifo::join_csv_line({s.team_id(), std::string(to_string(e)),
                                                     "memory undefined"}) +
                                "\n";
                reports.push_back(std::move(rep));
            } catch (const tifo::InsufficientEventsError&) {
                warnings += tifo::join_csv_line({s.team_id(), std::string(to_string(e)),
                                                 "fewer than 2 inter-event times"}) +
                            "\n";
            } catch (const tifo::DegenerateSequenceError&) {
                warnings += tifo::join_csv_line({s.team_id(), std::string(to_string(e)),
                                                 "finite-size correction undefined"}) +
                            "\n";
            }
        }
    }

    fs::create_directories(out);
    tifo::write_text_file(out / "burstiness.csv", tifo::burstiness_csv(reports));
    tifo::write_text_file(out / "burstiness_warnings.csv", warnings);
    return {"burstiness.csv", "burstiness_warnings.csv"};
}

// ----------------------------------------------------------------- cluster

struct ClusterOptions {
    fs::path series_dir;
    std::string emotion = "joy";
    std::string method = "hierarchical";
    std::string linkage = "average";
    std::optional<double> cut;
    std::optional<int> k;
    std::uint64_t seed = 0;
    int restarts = 8;
    std::optional<fs::path> metadata;
};

std::vector<std::string> run_cluster(const ClusterOptions& opt, const fs::path& out) {
    const tifo::Emotion emotion = tifo::emotion_from_string(opt.emotion);
    const tifo::Linkage linkage = tifo::linkage_from_string(opt.linkage);
    if (opt.method != "hierarchical" && opt.method != "kmeans")
        throw tifo::Error("--method must be 'hierarchical' or 'kmeans'");
    if (opt.cut && opt.k) throw tifo::Error("choose one of --cut and --k, not both");
    if (opt.method == "kmeans" && opt.cut)
        throw tifo::Error("--cut applies to the hierarchical method only");

    auto series = load_series_dir(opt.series_dir, ".daily.json");
    std::vector<tifo::LabeledSignal> signals;
    for (const auto& s : series) {
        tifo::LabeledSignal sig;
        sig.id = s.team_id();
        for (const auto& obs : s.observations()) sig.values.push_back(obs.dist[emotion]);
        signals.push_back(std::move(sig));
    }

    fs::create_directories(out);
    std::vector<std::string> artifacts;

    tifo::DistanceMatrix dm = tifo::pairwise_distances(signals);
    tifo::write_text_file(out / "distance_matrix.csv", tifo::distance_matrix_csv(dm));
    artifacts.push_back("distance_matrix.csv");

    tifo::Dendrogram dendrogram = tifo::hierarchical_cluster(dm, linkage);
    tifo::write_text_file(out / "dendrogram.csv", tifo::dendrogram_csv(dendrogram));
    artifacts.push_back("dendrogram.csv");

    tifo::Partition partition;
    if (opt.method == "kmeans") {
        const int k = opt.k.value_or(3);
        tifo::KMeansResult km = tifo::kmeans_dtw(signals, k, opt.seed, opt.restarts);
        partition = km.partition;
        ordered_json meta;
        meta["k"] = k;
        meta["total_cost"] = km.total_cost;
        meta["iterations"] = km.cost_trace.size();
        ordered_json trace = ordered_json::array();
        for (double c : km.cost_trace) trace.push_back(c);
        meta["cost_trace"] = std::move(trace);
        ordered_json centroids = ordered_json::array();
        for (const auto& c : km.centroids) centroids.push_back(c);
        meta["centroids"] = std::move(centroids);
        tifo::write_text_file(out / "kmeans.json", meta.dump(2) + "\n");
        artifacts.push_back("kmeans.json");
    } else if (opt.cut) {
        partition = tifo::cut_dendrogram(dendrogram, *opt.cut);
    } else {
        partition = tifo::partition_into_k(dendrogram, opt.k.value_or(3));
    }

    tifo::write_text_file(out / "partition.csv", tifo::partition_csv(partition));
    artifacts.push_back("partition.csv");

    if (opt.metadata) {
        auto meta = load_metadata_file(*opt.metadata);
        auto profiles = tifo::profile_clusters(partition, meta);
        tifo::write_text_file(out / "profiles.json", tifo::profiles_json(profiles));
        artifacts.push_back("profiles.json");
    }
    return artifacts;
}

// ----------------------------------------------------------------- regress

struct RegressOptions {
    fs::path metadata;
    fs::path burstiness;
    std::string response = "final_rank";
    std::string predictors = "heritage,pci,mv,welfare,b_joy";
    std::string drop = "b_joy";
    std::string league;  // empty = pooled across leagues
};

std::vector<std::string> run_regress(const RegressOptions& opt, const fs::path& out) {
    if (opt.response != "final_rank")
        throw tifo::Error("only response 'final_rank' is supported");

    static const std::vector<std::string> known = {"heritage", "pci", "mv", "welfare", "b_joy"};
    std::vector<std::string> selected = split_list(opt.predictors);
    for (const std::string& p : selected) {
        if (std::find(known.begin(), known.end(), p) == known.end())
            throw tifo::Error("unknown predictor '" + p + "'");
        if (std::count(selected.begin(), selected.end(), p) > 1)
            throw tifo::Error("predictor '" + p + "' listed twice");
    }
    if (selected.empty()) throw tifo::Error("need at least one predictor");
    if (std::find(selected.begin(), selected.end(), opt.drop) == selected.end())
        throw tifo::Error("--drop must name one of the selected predictors");

    auto meta = load_metadata_file(opt.metadata);
    if (!opt.league.empty()) {
        const tifo::League league = tifo::league_from_string(opt.league);
        std::erase_if(meta, [&](const tifo::TeamMetadata& t) { return t.league != league; });
        if (meta.empty()) throw tifo::Error("no teams in league '" + opt.league + "'");
    }
    auto reports = with_input_context(opt.burstiness, [&] {
        auto in = open_input(opt.burstiness);
        return tifo::burstiness_from_csv(in);
    });

    tifo::ModelBuild build = tifo::build_full_model(meta, reports);
    tifo::DesignMatrix matrix = build.matrix;
    for (const std::string& name : known)
        if (std::find(selected.begin(), selected.end(), name) == selected.end())
            matrix = matrix.without(name);

    tifo::AblationResult res = tifo::ablation_compare(matrix, opt.drop);

    fs::create_directories(out);
    tifo::write_text_file(out / "regression.json",
                          tifo::ablation_json(res, matrix.row_labels, build.excluded_teams));
    return {"regression.json"};
}

// ---------------------------------------------------------------- simulate

std::vector<std::string> run_simulate(const tifo::SimulateParams& params, const fs::path& out) {
    std::vector<double> events = tifo::simulate_events(params);
    std::string csv = "timestamp\n";
    for (double t : events) {
        csv += tifo::format_double(t);
        csv += '\n';
    }
    fs::create_directories(out);
    tifo::write_text_file(out / "events.csv", csv);
    return {"events.csv"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "tifo - temporal analytics for fan-community emotion series.\n"
        "Reads per-post emotion distributions, extracts emotional event\n"
        "dynamics (burstiness/memory), clusters teams by daily emotion\n"
        "trajectories (DTW), and relates both to final league standings."};
    app.require_subcommand(1);

    // --- ingest ---
    fs::path ingest_posts, ingest_out;
    auto* ingest = app.add_subcommand(
        "ingest",
        "Parse posts.csv (team_id,timestamp,n_comments,joy,anger,sadness,fear; shares as "
        "fractions or percentages), apply the per-team median comment threshold, and write "
        "per-team retained + daily-aggregated series JSON plus ingest_stats.csv");
    ingest->add_option("--posts", ingest_posts, "posts.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    ingest->add_option("--out", ingest_out, "output directory")->required();
    ingest->callback([&] {
        auto artifacts = run_ingest(ingest_posts, ingest_out);
        ordered_json config;
        config["posts"] = ingest_posts.generic_string();
        write_manifest(ingest_out, "ingest", config, 0, artifacts);
        artifacts.push_back("run_manifest.json");
        announce(ingest_out, artifacts);
    });

    // --- burstiness ---
    fs::path burst_series, burst_out;
    std::string burst_emotions = "joy,anger";
    std::size_t burst_lag = 1;
    auto* burst = app.add_subcommand(
        "burstiness",
        "Compute per-(team, emotion) inter-event statistics from retained series: "
        "burstiness.csv with team_id,emotion,n_tau,mu,sigma,r,B,B_n,M,lag (M empty when "
        "undefined) and a burstiness_warnings.csv sidecar for skipped or degenerate series");
    burst->add_option("--series", burst_series, "series directory written by ingest")
        ->required()
        ->check(CLI::ExistingDirectory);
    burst->add_option("--out", burst_out, "output directory")->required();
    burst
        ->add_option("--emotions", burst_emotions,
                     "comma list of joy,anger,sadness,fear or 'all'")
        ->capture_default_str();
    burst->add_option("--lag", burst_lag, "memory lag in inter-event steps")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    burst->callback([&] {
        auto artifacts =
            run_burstiness(burst_series, burst_out, parse_emotions(burst_emotions), burst_lag);
        ordered_json config;
        config["series"] = burst_series.generic_string();
        config["emotions"] = burst_emotions;
        config["lag"] = burst_lag;
        write_manifest(burst_out, "burstiness", config, 0, artifacts);
        artifacts.push_back("run_manifest.json");
        announce(burst_out, artifacts);
    });

    // --- cluster ---
    ClusterOptions cl;
    fs::path cluster_out;
    fs::path cluster_metadata;
    auto* cluster = app.add_subcommand(
        "cluster",
        "Cluster teams by their daily emotion-share trajectories under DTW: writes "
        "distance_matrix.csv, dendrogram.csv (step,left,right,distance,size), partition.csv "
        "(team_id,cluster), and profiles.json when --metadata is given");
    cluster->add_option("--series", cl.series_dir, "series directory written by ingest")
        ->required()
        ->check(CLI::ExistingDirectory);
    cluster->add_option("--out", cluster_out, "output directory")->required();
    cluster->add_option("--emotion", cl.emotion, "emotion share to track")
        ->capture_default_str();
    cluster->add_option("--method", cl.method, "hierarchical or kmeans")
        ->capture_default_str();
    cluster->add_option("--linkage", cl.linkage, "single, complete, or average")
        ->capture_default_str();
    cluster->add_option("--cut", cl.cut, "dendrogram cut height (hierarchical only)")
        ->check(CLI::NonNegativeNumber);
    cluster->add_option("--k", cl.k, "number of clusters (default 3 when --cut absent)")
        ->check(CLI::PositiveNumber);
    cluster->add_option("--seed", cl.seed, "k-means master seed")->capture_default_str();
    cluster->add_option("--restarts", cl.restarts, "k-means restarts")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cluster
        ->add_option("--metadata", cluster_metadata,
                     "metadata.csv (team_id,league,geo,pci,unemployment,welfare,market_value,"
                     "heritage_rank,final_rank); enables cluster profiles")
        ->check(CLI::ExistingFile);
    cluster->callback([&] {
        if (!cluster_metadata.empty()) cl.metadata = cluster_metadata;
        auto artifacts = run_cluster(cl, cluster_out);
        ordered_json config;
        config["series"] = cl.series_dir.generic_string();
        config["emotion"] = cl.emotion;
        config["method"] = cl.method;
        config["linkage"] = cl.linkage;
        if (cl.cut) config["cut"] = *cl.cut;
        if (cl.k) config["k"] = *cl.k;
        config["seed"] = cl.seed;
        config["restarts"] = cl.restarts;
        if (cl.metadata) config["metadata"] = cl.metadata->generic_string();
        write_manifest(cluster_out, "cluster", config, cl.seed, artifacts);
        artifacts.push_back("run_manifest.json");
        announce(cluster_out, artifacts);
    });

    // --- regress ---
    RegressOptions rg;
    fs::path regress_out;
    auto* regress = app.add_subcommand(
        "regress",
        "Fit final rank on socioeconomic predictors plus joy burstiness (OLS), then refit "
        "without --drop and report the R^2 / RMSE changes in regression.json");
    regress->add_option("--metadata", rg.metadata, "metadata.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    regress->add_option("--burstiness", rg.burstiness, "burstiness.csv written by burstiness")
        ->required()
        ->check(CLI::ExistingFile);
    regress->add_option("--out", regress_out, "output directory")->required();
    regress->add_option("--response", rg.response, "response variable (final_rank)")
        ->capture_default_str();
    regress
        ->add_option("--predictors", rg.predictors,
                     "comma list from heritage,pci,mv,welfare,b_joy")
        ->capture_default_str();
    regress->add_option("--drop", rg.drop, "predictor removed in the reduced fit")
        ->capture_default_str();
    regress->add_option("--league", rg.league,
                        "restrict to one league (A, B, or C); default pools all");
    regress->callback([&] {
        auto artifacts = run_regress(rg, regress_out);
        ordered_json config;
        config["metadata"] = rg.metadata.generic_string();
        config["burstiness"] = rg.burstiness.generic_string();
        config["response"] = rg.response;
        config["predictors"] = rg.predictors;
        config["drop"] = rg.drop;
        if (!rg.league.empty()) config["league"] = rg.league;
        write_manifest(regress_out, "regress", config, 0, artifacts);
        artifacts.push_back("run_manifest.json");
        announce(regress_out, artifacts);
    });

    // --- simulate ---
    tifo::SimulateParams sim;
    std::string sim_kind = "poisson";
    fs::path sim_out;
    auto* simulate = app.add_subcommand(
        "simulate",
        "Generate a synthetic event-timestamp file (events.csv, one 'timestamp' column, "
        "t=0 first) from a periodic, poisson, pareto, or markov two-regime point process");
    simulate->add_option("--kind", sim_kind, "periodic, poisson, pareto, or markov")
        ->required();
    simulate->add_option("--n", sim.n_events, "number of events")
        ->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--out", sim_out, "output directory")->required();
    simulate->add_option("--interval", sim.interval, "periodic: gap between events")
        ->capture_default_str();
    simulate->add_option("--rate", sim.rate, "poisson: event rate")->capture_default_str();
    simulate->add_option("--shape", sim.shape, "pareto: tail exponent (> 2)")
        ->capture_default_str();
    simulate->add_option("--scale", sim.scale, "pareto: minimum gap")->capture_default_str();
    simulate->add_option("--p-stay", sim.p_stay, "markov: regime persistence in (0,1)")
        ->capture_default_str();
    simulate->add_option("--tau-short", sim.tau_short, "markov: mean gap, short regime")
        ->capture_default_str();
    simulate->add_option("--tau-long", sim.tau_long, "markov: mean gap, long regime")
        ->capture_default_str();
    simulate->add_option("--seed", sim.seed, "generator seed")->capture_default_str();
    simulate->callback([&] {
        sim.kind = tifo::process_kind_from_string(sim_kind);
        auto artifacts = run_simulate(sim, sim_out);
        ordered_json config;
        config["kind"] = sim_kind;
        config["n"] = sim.n_events;
        config["interval"] = sim.interval;
        config["rate"] = sim.rate;
        config["shape"] = sim.shape;
        config["scale"] = sim.scale;
        config["p_stay"] = sim.p_stay;
        config["tau_short"] = sim.tau_short;
        config["tau_long"] = sim.tau_long;
        write_manifest(sim_out, "simulate", config, sim.seed, artifacts);
        artifacts.push_back("run_manifest.json");
        announce(sim_out, artifacts);
    });

    // --- report ---
    fs::path report_posts, report_metadata, report_out;
    std::string report_emotions = "joy,anger";
    std::size_t report_lag = 1;
    ClusterOptions report_cl;
    RegressOptions report_rg;
    auto* report = app.add_subcommand(
        "report",
        "Run the whole pipeline: ingest/ (series + stats), burstiness/ (reports + warnings), "
        "cluster/ (distances, dendrogram, partition, profiles), regress/ (fit + ablation), "
        "each with its own manifest, plus a top-level run_manifest.json");
    report->add_option("--posts", report_posts, "posts.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    report->add_option("--metadata", report_metadata, "metadata.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    report->add_option("--out", report_out, "output directory")->required();
    report
        ->add_option("--emotions", report_emotions,
                     "burstiness emotions: comma list or 'all'")
        ->capture_default_str();
    report->add_option("--lag", report_lag, "memory lag in inter-event steps")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    report->add_option("--emotion", report_cl.emotion, "clustering emotion share")
        ->capture_default_str();
    report->add_option("--method", report_cl.method, "clustering method")
        ->capture_default_str();
    report->add_option("--linkage", report_cl.linkage, "hierarchical linkage")
        ->capture_default_str();
    report->add_option("--cut", report_cl.cut, "dendrogram cut height")
        ->check(CLI::NonNegativeNumber);
    report->add_option("--k", report_cl.k, "number of clusters")->check(CLI::PositiveNumber);
    report->add_option("--seed", report_cl.seed, "k-means master seed")->capture_default_str();
    report->add_option("--restarts", report_cl.restarts, "k-means restarts")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    report
        ->add_option("--predictors", report_rg.predictors,
                     "comma list from heritage,pci,mv,welfare,b_joy")
        ->capture_default_str();
    report->add_option("--drop", report_rg.drop, "predictor removed in the reduced fit")
        ->capture_default_str();
    report->callback([&] {
        ordered_json config;
        config["posts"] = report_posts.generic_string();
        config["metadata"] = report_metadata.generic_string();
        config["emotions"] = report_emotions;
        config["lag"] = report_lag;
        config["emotion"] = report_cl.emotion;
        config["method"] = report_cl.method;
        config["linkage"] = report_cl.linkage;
        if (report_cl.cut) config["cut"] = *report_cl.cut;
        if (report_cl.k) config["k"] = *report_cl.k;
        config["seed"] = report_cl.seed;
        config["restarts"] = report_cl.restarts;
        config["predictors"] = report_rg.predictors;
        config["drop"] = report_rg.drop;

        std::vector<std::string> all;
        auto add_stage = [&](const std::string& stage, const std::string& command,
                             const ordered_json& stage_config, std::uint64_t seed,
                             std::vector<std::string> artifacts) {
            write_manifest(report_out / stage, command, stage_config, seed, artifacts);
            artifacts.push_back("run_manifest.json");
            for (const std::string& a : artifacts) all.push_back(stage + "/" + a);
        };

        // Stage wiring is recorded relative to the report root, so the
        // manifests stay independent of where --out points.
        ordered_json c_ingest;
        c_ingest["posts"] = report_posts.generic_string();
        add_stage("ingest", "ingest", c_ingest, 0,
                  run_ingest(report_posts, report_out / "ingest"));

        ordered_json c_burst;
        c_burst["series"] = "ingest/series";
        c_burst["emotions"] = report_emotions;
        c_burst["lag"] = report_lag;
        add_stage("burstiness", "burstiness", c_burst, 0,
                  run_burstiness(report_out / "ingest" / "series", report_out / "burstiness",
                                 parse_emotions(report_emotions), report_lag));

        report_cl.series_dir = report_out / "ingest" / "series";
        report_cl.metadata = report_metadata;
        ordered_json c_cluster;
        c_cluster["series"] = "ingest/series";
        c_cluster["emotion"] = report_cl.emotion;
        c_cluster["method"] = report_cl.method;
        c_cluster["linkage"] = report_cl.linkage;
        if (report_cl.cut) c_cluster["cut"] = *report_cl.cut;
        if (report_cl.k) c_cluster["k"] = *report_cl.k;
        c_cluster["seed"] = report_cl.seed;
        c_cluster["restarts"] = report_cl.restarts;
        c_cluster["metadata"] = report_metadata.generic_string();
        add_stage("cluster", "cluster", c_cluster, report_cl.seed,
                  run_cluster(report_cl, report_out / "cluster"));

        report_rg.metadata = report_metadata;
        report_rg.burstiness = report_out / "burstiness" / "burstiness.csv";
        ordered_json c_regress;
        c_regress["metadata"] = report_metadata.generic_string();
        c_regress["burstiness"] = "burstiness/burstiness.csv";
        c_regress["response"] = report_rg.response;
        c_regress["predictors"] = report_rg.predictors;
        c_regress["drop"] = report_rg.drop;
        add_stage("regress", "regress", c_regress, 0,
                  run_regress(report_rg, report_out / "regress"));

        write_manifest(report_out, "report", config, report_cl.seed, all);
        all.push_back("run_manifest.json");
        announce(report_out, all);
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
