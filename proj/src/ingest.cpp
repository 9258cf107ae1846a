#include "tifo/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "tifo/csv.hpp"
#include "tifo/errors.hpp"
#include "tifo/util.hpp"

namespace tifo {

namespace {

double parse_number(const std::string& s, std::size_t row, const char* field) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || !std::isfinite(v))
        throw ParseError("row " + std::to_string(row) + ": field '" + field + "' is not a number: '" +
                         s + "'");
    return v;
}

std::int64_t parse_count(const std::string& s, std::size_t row, const char* field) {
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0')
        throw ParseError("row " + std::to_string(row) + ": field '" + field +
                         "' is not an integer: '" + s + "'");
    return v;
}

void expect_header(const std::vector<std::string>& got, const std::vector<std::string>& want,
                   const char* what) {
    if (got != want) {
        std::string msg = std::string("bad ") + what + " header, expected '";
        msg += join_csv_line(want) + "' got '" + join_csv_line(got) + "'";
        throw ParseError(msg);
    }
}

}  // namespace

std::map<std::string, std::vector<PostRecord>> load_posts(std::istream& in) {
    CsvReader reader(in);
    auto header = reader.next();
    if (!header) throw ParseError("posts stream is empty");
    expect_header(*header,
                  {"team_id", "timestamp", "n_comments", "joy", "anger", "sadness", "fear"},
                  "posts.csv");

    std::vector<RawPostRow> rows;
    double max_emotion = 0;
    while (auto f = reader.next()) {
        if (f->size() != 7)
            throw ParseError("row " + std::to_string(reader.row_index()) + ": expected 7 fields, got " +
                             std::to_string(f->size()));
        RawPostRow r;
        r.row_index = reader.row_index();
        r.team_id = (*f)[0];
        if (r.team_id.empty())
            throw ParseError("row " + std::to_string(r.row_index) + ": field 'team_id' is empty");
        r.timestamp = (*f)[1];
        r.n_comments = parse_count((*f)[2], r.row_index, "n_comments");
        if (r.n_comments < 0)
            throw ParseError("row " + std::to_string(r.row_index) + ": field 'n_comments' is negative");
        r.joy = parse_number((*f)[3], r.row_index, "joy");
        r.anger = parse_number((*f)[4], r.row_index, "anger");
        r.sadness = parse_number((*f)[5], r.row_index, "sadness");
        r.fear = parse_number((*f)[6], r.row_index, "fear");
        for (double v : {r.joy, r.anger, r.sadness, r.fear}) {
            if (v < 0)
                throw ParseError("row " + std::to_string(r.row_index) +
                                 ": negative emotion percentage " + format_double(v));
            max_emotion = std::max(max_emotion, v);
        }
        rows.push_back(std::move(r));
    }

    // Percent-vs-fraction scale is a property of the whole file.
    const double scale = max_emotion > 1.5 ? 100.0 : 1.0;

    std::map<std::string, std::vector<PostRecord>> grouped;
    for (const RawPostRow& r : rows) {
        double sum = (r.joy + r.anger + r.sadness + r.fear) / scale;
        if (sum < 0.999 || sum > 1.001)
            throw ParseError("row " + std::to_string(r.row_index) + ": emotion fields sum to " +
                             format_double(sum) + ", expected 1 within [0.999, 1.001]");
        PostRecord p;
        p.team_id = r.team_id;
        try {
            p.timestamp = parse_iso8601_utc(r.timestamp);
        } catch (const ParseError& e) {
            throw ParseError("row " + std::to_string(r.row_index) + ": field 'timestamp': " +
                             e.what());
        }
        p.n_comments = r.n_comments;
        p.dist = EmotionDistribution::normalized(r.joy, r.anger, r.sadness, r.fear);
        grouped[p.team_id].push_back(std::move(p));
    }

    for (auto& [team, posts] : grouped) {
        std::stable_sort(posts.begin(), posts.end(),
                         [](const PostRecord& a, const PostRecord& b) {
                             return a.timestamp < b.timestamp;
                         });
        for (std::size_t i = 1; i < posts.size(); ++i)
            if (posts[i].timestamp == posts[i - 1].timestamp)
                throw ParseError("duplicate timestamp " + format_iso8601_utc(posts[i].timestamp) +
                                 " for team '" + team + "'");
    }
    return grouped;
}

std::int64_t lower_median(std::vector<std::int64_t> values) {
    if (values.empty()) throw Error("median of empty list");
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

std::pair<std::vector<PostRecord>, IngestStats> apply_median_threshold(
    const std::vector<PostRecord>& posts) {
    if (posts.empty()) throw Error("cannot threshold an empty post list");

    std::vector<std::int64_t> counts;
    counts.reserve(posts.size());
    for (const PostRecord& p : posts) counts.push_back(p.n_comments);
    std::int64_t median = lower_median(std::move(counts));

    std::vector<PostRecord> retained;
    for (const PostRecord& p : posts)
        if (p.n_comments >= median) retained.push_back(p);

    IngestStats stats;
    stats.team_id = posts.front().team_id;
    stats.total_posts = posts.size();
    stats.retained_posts = retained.size();
    stats.median_comments = median;

    std::map<Timestamp, std::int64_t> per_day;
    for (const PostRecord& p : retained) ++per_day[floor_to_day(p.timestamp)];
    std::vector<std::int64_t> day_counts;
    day_counts.reserve(per_day.size());
    for (const auto& [day, n] : per_day) day_counts.push_back(n);
    stats.posts_per_day_min = *std::min_element(day_counts.begin(), day_counts.end());
    stats.posts_per_day_max = *std::max_element(day_counts.begin(), day_counts.end());
    stats.posts_per_day_median = lower_median(std::move(day_counts));
    return {std::move(retained), stats};
}

EmotionalSeries series_from_posts(const std::string& team_id,
                                  const std::vector<PostRecord>& posts) {
    std::vector<Observation> obs;
    obs.reserve(posts.size());
    for (const PostRecord& p : posts) obs.push_back({p.timestamp, p.dist, 1});
    return EmotionalSeries(team_id, std::move(obs));
}

EmotionalSeries aggregate_daily(const EmotionalSeries& series) {
    std::map<Timestamp, std::array<double, 5>> days;  // 4 sums + post count
    for (const Observation& o : series.observations()) {
        auto& acc = days[floor_to_day(o.timestamp)];
        for (int i = 0; i < 4; ++i) acc[i] += o.dist[kAllEmotions[i]];
        acc[4] += 1;
    }
    std::vector<Observation> out;
    out.reserve(days.size());
    for (const auto& [day, acc] : days) {
        Observation o;
        o.timestamp = day;
        o.dist = EmotionDistribution::normalized(acc[0], acc[1], acc[2], acc[3]);
        o.n_posts = static_cast<std::int64_t>(acc[4]);
        out.push_back(o);
    }
    return EmotionalSeries(series.team_id(), std::move(out));
}

BinaryEventSeries binarize(const EmotionalSeries& series, Emotion emotion) {
    BinaryEventSeries out;
    out.team_id = series.team_id();
    out.emotion = emotion;
    out.events.reserve(series.length());
    for (const Observation& o : series.observations())
        out.events.push_back({o.timestamp, o.dist.is_maximal(emotion)});
    return out;
}

InterEventTimes extract_inter_event(const BinaryEventSeries& series) {
    std::vector<Timestamp> hits;
    for (const BinaryEvent& e : series.events)
        if (e.value) hits.push_back(e.timestamp);
    if (hits.size() < 2)
        throw InsufficientEventsError("series '" + series.team_id + "'/" +
                                      std::string(to_string(series.emotion)) + " has " +
                                      std::to_string(hits.size()) +
                                      " events; inter-event times need at least 2");
    std::vector<double> taus;
    taus.reserve(hits.size() - 1);
    for (std::size_t i = 1; i < hits.size(); ++i)
        taus.push_back(static_cast<double>(hits[i] - hits[i - 1]));
    return InterEventTimes(std::move(taus));
}

std::vector<TeamMetadata> load_metadata(std::istream& in) {
    CsvReader reader(in);
    auto header = reader.next();
    if (!header) throw ParseError("metadata stream is empty");
    expect_header(*header,
                  {"team_id", "league", "geo", "pci", "unemployment", "welfare", "market_value",
                   "heritage_rank", "final_rank"},
                  "metadata.csv");

    std::vector<TeamMetadata> teams;
    std::set<std::string> seen;
    while (auto f = reader.next()) {
        std::size_t row = reader.row_index();
        if (f->size() != 9)
            throw ParseError("row " + std::to_string(row) + ": expected 9 fields, got " +
                             std::to_string(f->size()));
        TeamMetadata t;
        t.team_id = (*f)[0];
        if (!seen.insert(t.team_id).second)
            throw ParseError("row " + std::to_string(row) + ": duplicate team '" + t.team_id + "'");
        t.league = league_from_string((*f)[1]);
        t.geo = geo_from_string((*f)[2]);
        t.pci = parse_number((*f)[3], row, "pci");
        t.unemployment = parse_number((*f)[4], row, "unemployment");
        t.welfare = parse_number((*f)[5], row, "welfare");
        t.market_value = parse_number((*f)[6], row, "market_value");
        t.heritage_rank = static_cast<int>(parse_count((*f)[7], row, "heritage_rank"));
        t.final_rank = static_cast<int>(parse_count((*f)[8], row, "final_rank"));
        if (t.heritage_rank < 1 || t.final_rank < 1)
            throw ParseError("row " + std::to_string(row) + ": ranks must be >= 1");
        teams.push_back(std::move(t));
    }

    // Expected ranks, per league: 1 = highest value.
    auto rank_by = [&](auto key, int TeamMetadata::* slot) {
        for (League league : {League::A, League::B, League::C}) {
            std::vector<TeamMetadata*> group;
            for (TeamMetadata& t : teams)
                if (t.league == league) group.push_back(&t);
            std::sort(group.begin(), group.end(), [&](TeamMetadata* a, TeamMetadata* b) {
                if (key(*a) != key(*b)) return key(*a) > key(*b);
                return a->team_id < b->team_id;
            });
            int rank = 1;
            for (TeamMetadata* t : group) (*t).*slot = rank++;
        }
    };
    rank_by([](const TeamMetadata& t) { return t.market_value; }, &TeamMetadata::mv_rank);
    rank_by([](const TeamMetadata& t) { return t.pci; }, &TeamMetadata::pci_rank);

    for (League league : {League::A, League::B, League::C}) {
        std::set<int> finals;
        for (const TeamMetadata& t : teams)
            if (t.league == league && !finals.insert(t.final_rank).second)
                throw ParseError("final rank " + std::to_string(t.final_rank) +
                                 " duplicated in league " + std::string(to_string(league)));
    }
    return teams;
}

}  // namespace tifo
