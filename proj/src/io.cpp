#include "tifo/io.hpp"

#include <cctype>
#include <fstream>
#include <json.hpp>

#include "tifo/csv.hpp"
#include "tifo/errors.hpp"
#include "tifo/util.hpp"

namespace tifo {

using ordered_json = nlohmann::ordered_json;

namespace {

EmotionDistribution dist_from_json(const ordered_json& j) {
    return EmotionDistribution::normalized(j.at("joy").get<double>(), j.at("anger").get<double>(),
                                           j.at("sadness").get<double>(),
                                           j.at("fear").get<double>());
}

ordered_json fit_to_json(const FitResult& fit, const std::vector<std::string>& row_labels) {
    ordered_json j;
    j["n"] = fit.residuals.size();
    j["predictors"] = std::vector<std::string>(fit.names.begin() + 1, fit.names.end());
    ordered_json coef, zcoef;
    for (std::size_t i = 0; i < fit.names.size(); ++i) {
        coef[fit.names[i]] = fit.coefficients[i];
        zcoef[fit.names[i]] = fit.standardized_coefficients[i];
    }
    j["coefficients"] = coef;
    j["standardized_coefficients"] = zcoef;
    j["r_squared"] = fit.r_squared;
    j["rmse"] = fit.rmse;
    ordered_json resid;
    for (std::size_t i = 0; i < row_labels.size(); ++i) resid[row_labels[i]] = fit.residuals[i];
    j["residuals"] = resid;
    return j;
}

ordered_json five_to_json(const FiveNumber& f) {
    ordered_json j;
    j["min"] = f.min;
    j["q1"] = f.q1;
    j["median"] = f.median;
    j["q3"] = f.q3;
    j["max"] = f.max;
    return j;
}

}  // namespace

std::string posts_to_json(const std::string& team_id, const std::vector<PostRecord>& posts) {
    ordered_json j;
    j["team_id"] = team_id;
    j["kind"] = "retained";
    ordered_json obs = ordered_json::array();
    for (const PostRecord& p : posts) {
        ordered_json o;
        o["timestamp"] = format_iso8601_utc(p.timestamp);
        o["n_comments"] = p.n_comments;
        for (Emotion e : kAllEmotions) o[std::string(to_string(e))] = p.dist[e];
        obs.push_back(std::move(o));
    }
    j["observations"] = std::move(obs);
    return j.dump(2) + "\n";
}

std::string daily_series_to_json(const EmotionalSeries& series) {
    ordered_json j;
    j["team_id"] = series.team_id();
    j["kind"] = "daily";
    ordered_json obs = ordered_json::array();
    for (const Observation& o : series.observations()) {
        ordered_json jo;
        jo["timestamp"] = format_iso8601_utc(o.timestamp);
        jo["n_posts"] = o.n_posts;
        for (Emotion e : kAllEmotions) jo[std::string(to_string(e))] = o.dist[e];
        obs.push_back(std::move(jo));
    }
    j["observations"] = std::move(obs);
    return j.dump(2) + "\n";
}

EmotionalSeries series_from_json(const std::string& content) {
    ordered_json j = ordered_json::parse(content);
    std::vector<Observation> obs;
    for (const auto& o : j.at("observations")) {
        Observation ob;
        ob.timestamp = parse_iso8601_utc(o.at("timestamp").get<std::string>());
        ob.dist = dist_from_json(o);
        ob.n_posts = o.value("n_posts", std::int64_t{1});
        obs.push_back(ob);
    }
    return EmotionalSeries(j.at("team_id").get<std::string>(), std::move(obs));
}

std::string ingest_stats_csv(const std::vector<IngestStats>& stats) {
    std::string out =
        "team_id,total_posts,retained_posts,median_comments,posts_per_day_min,posts_per_day_"
        "median,posts_per_day_max\n";
    for (const IngestStats& s : stats) {
        out += join_csv_line({s.team_id, std::to_string(s.total_posts),
                              std::to_string(s.retained_posts), std::to_string(s.median_comments),
                              std::to_string(s.posts_per_day_min),
                              std::to_string(s.posts_per_day_median),
                              std::to_string(s.posts_per_day_max)});
        out += '\n';
    }
    return out;
}

std::string burstiness_csv(const std::vector<BurstinessReport>& reports) {
    std::string out = "team_id,emotion,n_tau,mu,sigma,r,B,B_n,M,lag\n";
    for (const BurstinessReport& r : reports) {
        out += join_csv_line({r.team_id, std::string(to_string(r.emotion)),
                              std::to_string(r.n_tau), format_double(r.mu_tau),
                              format_double(r.sigma_tau), format_double(r.r), format_double(r.b),
                              format_double(r.b_n), r.memory ? format_double(*r.memory) : "",
                              std::to_string(r.lag)});
        out += '\n';
    }
    return out;
}

std::vector<BurstinessReport> burstiness_from_csv(std::istream& in) {
    CsvReader reader(in);
    auto header = reader.next();
    if (!header) throw ParseError("burstiness CSV is empty");
    const std::vector<std::string> want = {"team_id", "emotion", "n_tau", "mu", "sigma",
                                           "r",       "B",       "B_n",   "M",  "lag"};
    if (*header != want) throw ParseError("bad burstiness CSV header");
    std::vector<BurstinessReport> out;
    while (auto f = reader.next()) {
        if (f->size() != want.size())
            throw ParseError("burstiness CSV row " + std::to_string(reader.row_index()) +
                             ": wrong field count");
        BurstinessReport r;
        r.team_id = (*f)[0];
        r.emotion = emotion_from_string((*f)[1]);
        r.n_tau = std::stoull((*f)[2]);
        r.mu_tau = std::stod((*f)[3]);
        r.sigma_tau = std::stod((*f)[4]);
        r.r = std::stod((*f)[5]);
        r.b = std::stod((*f)[6]);
        r.b_n = std::stod((*f)[7]);
        if (!(*f)[8].empty()) r.memory = std::stod((*f)[8]);
        r.lag = std::stoull((*f)[9]);
        out.push_back(std::move(r));
    }
    return out;
}

std::string distance_matrix_csv(const DistanceMatrix& dm) {
    std::vector<std::string> header = {"team_id"};
    header.insert(header.end(), dm.labels().begin(), dm.labels().end());
    std::string out = join_csv_line(header) + "\n";
    for (std::size_t i = 0; i < dm.size(); ++i) {
        std::vector<std::string> row = {dm.labels()[i]};
        for (std::size_t j = 0; j < dm.size(); ++j) row.push_back(format_double(dm.at(i, j)));
        out += join_csv_line(row);
        out += '\n';
    }
    return out;
}

std::string dendrogram_csv(const Dendrogram& dg) {
    std::string out = "step,left,right,distance,size\n";
    for (std::size_t s = 0; s < dg.steps().size(); ++s) {
        const MergeStep& m = dg.steps()[s];
        out += join_csv_line({std::to_string(s), std::to_string(m.left), std::to_string(m.right),
                              format_double(m.distance), std::to_string(m.size)});
        out += '\n';
    }
    return out;
}

std::string partition_csv(const Partition& p) {
    std::string out = "team_id,cluster\n";
    for (const auto& [team, cluster] : p.assignment) {
        out += join_csv_line({team, std::to_string(cluster)});
        out += '\n';
    }
    return out;
}

std::string profiles_json(const std::vector<ClusterProfile>& profiles) {
    ordered_json arr = ordered_json::array();
    for (const ClusterProfile& cp : profiles) {
        ordered_json j;
        j["cluster"] = cp.cluster;
        j["size"] = cp.size;
        j["geo"] = cp.geo_counts;
        j["league"] = cp.league_counts;
        j["pci_tertile"] = cp.pci_tertile_counts;
        j["mv_tertile"] = cp.mv_tertile_counts;
        j["final_rank"] = five_to_json(cp.final_rank);
        j["delta_pci"] = five_to_json(cp.delta_pci);
        j["delta_mv"] = five_to_json(cp.delta_mv);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string ablation_json(const AblationResult& res, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& excluded) {
    ordered_json j;
    j["dropped"] = res.dropped;
    j["full"] = fit_to_json(res.full, row_labels);
    j["reduced"] = fit_to_json(res.reduced, row_labels);
    j["delta_r2_pct"] = res.delta_r2_pct;
    j["delta_rmse_pct"] = res.delta_rmse_pct;
    j["excluded_teams"] = excluded;
    return j.dump(2) + "\n";
}

std::string sanitize_id(const std::string& id) {
    std::string out;
    for (char c : id) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')
            out += c;
        else
            out += '_';
    }
    if (out.empty()) out = "_";
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return content;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw Error("short write to '" + path.string() + "'");
}

}  // namespace tifo
