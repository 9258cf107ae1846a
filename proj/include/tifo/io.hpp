#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "tifo/clustering.hpp"
#include "tifo/dtw.hpp"
#include "tifo/ingest.hpp"
#include "tifo/regression.hpp"
#include "tifo/types.hpp"

namespace tifo {

// Serializers for every file the pipeline reads or writes. All output is
// deterministic: fixed key order, shortest round-tripping doubles, "\n"
// line endings, no clocks or absolute paths.

// One JSON document per team.
std::string posts_to_json(const std::string& team_id, const std::vector<PostRecord>& posts);
std::string daily_series_to_json(const EmotionalSeries& series);

// Accepts both document kinds; extra per-observation fields are ignored.
EmotionalSeries series_from_json(const std::string& content);

std::string ingest_stats_csv(const std::vector<IngestStats>& stats);

// team_id,emotion,n_tau,mu,sigma,r,B,B_n,M,lag with M empty when undefined.
std::string burstiness_csv(const std::vector<BurstinessReport>& reports);
std::vector<BurstinessReport> burstiness_from_csv(std::istream& in);

// Square matrix with a leading team_id header row and column.
std::string distance_matrix_csv(const DistanceMatrix& dm);

// step,left,right,distance,size; leaves are numbered in the distance
// matrix's label order.
std::string dendrogram_csv(const Dendrogram& dg);

std::string partition_csv(const Partition& p);

std::string profiles_json(const std::vector<ClusterProfile>& profiles);

// Residuals are keyed by row_labels (one per design-matrix row).
std::string ablation_json(const AblationResult& res, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& excluded);

// Filesystem-safe team file stem: alnum, '-', '_' kept, rest replaced.
std::string sanitize_id(const std::string& id);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace tifo
