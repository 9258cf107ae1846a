#pragma once

#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tifo/types.hpp"

namespace tifo {

// Raw post row as it appears in posts.csv, before validation.
struct RawPostRow {
    std::size_t row_index = 0;  // 1-based data row in the file
    std::string team_id;
    std::string timestamp;
    std::int64_t n_comments = 0;
    double joy = 0, anger = 0, sadness = 0, fear = 0;
};

// Per-team ingestion summary: how hard the median threshold bit and how
// heterogeneous the posting activity is.
struct IngestStats {
    std::string team_id;
    std::size_t total_posts = 0;
    std::size_t retained_posts = 0;
    std::int64_t median_comments = 0;      // the threshold actually applied
    std::int64_t posts_per_day_min = 0;    // over calendar days with >= 1 retained post
    std::int64_t posts_per_day_median = 0;
    std::int64_t posts_per_day_max = 0;
};

// Parses posts.csv (header: team_id,timestamp,n_comments,joy,anger,
// sadness,fear). Emotion columns may be fractions or percentages; the
// scale is auto-detected per file by any column value > 1.5. Rows come
// back grouped by team and time-sorted. Malformed rows and duplicate
// (team, timestamp) pairs throw ParseError naming the data row.
std::map<std::string, std::vector<PostRecord>> load_posts(std::istream& in);

// Lower-middle median of the sorted values; the threshold is always an
// attained count so ">= median" can hold with equality.
std::int64_t lower_median(std::vector<std::int64_t> values);

// Keeps the posts with n_comments >= median over this team's posts.
std::pair<std::vector<PostRecord>, IngestStats> apply_median_threshold(
    const std::vector<PostRecord>& posts);

// Wraps a team's retained posts as an EmotionalSeries.
EmotionalSeries series_from_posts(const std::string& team_id,
                                  const std::vector<PostRecord>& posts);

// One observation per calendar day with >= 1 post: the day's
// distributions are averaged then renormalized; timestamps become
// day-start UTC; empty days are omitted, never filled.
EmotionalSeries aggregate_daily(const EmotionalSeries& series);

// Bit 1 exactly where the emotion's share is maximal (ties all get 1).
BinaryEventSeries binarize(const EmotionalSeries& series, Emotion emotion);

// Gaps between consecutive bit-1 events, in seconds. Throws
// InsufficientEventsError when fewer than 2 events carry bit 1.
InterEventTimes extract_inter_event(const BinaryEventSeries& series);

// Parses metadata.csv (header: team_id,league,geo,pci,unemployment,
// welfare,market_value,heritage_rank,final_rank) and derives mv_rank and
// pci_rank within each league (value descending, team_id as tiebreak).
// Validates that final ranks are unique within a league.
std::vector<TeamMetadata> load_metadata(std::istream& in);

}  // namespace tifo
