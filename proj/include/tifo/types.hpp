#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tifo/timeutil.hpp"

namespace tifo {

// The closed set of base emotions a comment can be classified into.
enum class Emotion : int { joy = 0, anger = 1, sadness = 2, fear = 3 };

inline constexpr std::array<Emotion, 4> kAllEmotions = {Emotion::joy, Emotion::anger,
                                                        Emotion::sadness, Emotion::fear};

std::string_view to_string(Emotion e);
Emotion emotion_from_string(std::string_view name);

// Per-post shares of the four emotions. Values are fractions in [0,1]
// summing to 1 within 1e-9; every construction path re-establishes this.
class EmotionDistribution {
public:
    // Validates the invariant as-is; throws ParseError on violation.
    static EmotionDistribution from_fractions(double joy, double anger, double sadness,
                                              double fear);

    // Rescales non-negative weights with a positive sum so they sum to 1.
    static EmotionDistribution normalized(double joy, double anger, double sadness, double fear);

    double operator[](Emotion e) const { return shares_[static_cast<int>(e)]; }
    double max_value() const;

    // True when e holds the maximal share (ties included, exact compare).
    bool is_maximal(Emotion e) const { return (*this)[e] == max_value(); }

    bool operator==(const EmotionDistribution&) const = default;

private:
    EmotionDistribution() = default;
    std::array<double, 4> shares_{};
};

// One post that survived thresholding, with its aggregate emotion shares.
// No comment text is ever stored at any point of the pipeline.
struct PostRecord {
    std::string team_id;
    Timestamp timestamp = 0;
    std::int64_t n_comments = 0;
    EmotionDistribution dist = EmotionDistribution::normalized(1, 1, 1, 1);
};

struct Observation {
    Timestamp timestamp = 0;
    EmotionDistribution dist = EmotionDistribution::normalized(1, 1, 1, 1);
    // Posts folded into this observation (1 for raw series, >=1 for daily).
    std::int64_t n_posts = 1;
};

// Time-ordered emotion shares for one team. Strictly increasing
// timestamps, at least one observation; immutable after construction.
class EmotionalSeries {
public:
    EmotionalSeries(std::string team_id, std::vector<Observation> observations);

    const std::string& team_id() const { return team_id_; }
    const std::vector<Observation>& observations() const { return observations_; }
    std::size_t length() const { return observations_.size(); }

private:
    std::string team_id_;
    std::vector<Observation> observations_;
};

struct BinaryEvent {
    Timestamp timestamp = 0;
    bool value = false;  // 1 iff the emotion is maximal at this observation
};

// Event-based signal for one (team, emotion); same timestamps as source.
struct BinaryEventSeries {
    std::string team_id;
    Emotion emotion = Emotion::joy;
    std::vector<BinaryEvent> events;
};

// Strictly positive gaps (seconds) between consecutive bit-1 events.
class InterEventTimes {
public:
    explicit InterEventTimes(std::vector<double> taus);

    const std::vector<double>& taus() const { return taus_; }
    std::size_t count() const { return taus_.size(); }

private:
    std::vector<double> taus_;
};

enum class League : int { A = 0, B = 1, C = 2 };  // Serie A, Serie B, Lega Pro
enum class Geo : int { North = 0, Center = 1, South = 2 };

std::string_view to_string(League l);
League league_from_string(std::string_view name);
std::string_view to_string(Geo g);
Geo geo_from_string(std::string_view name);

// Static context of one team: socioeconomics, pre-season expectations,
// and league-scoped ranks. mv_rank/pci_rank are derived at load time by
// ranking market value / per-capita income descending within the league.
struct TeamMetadata {
    std::string team_id;
    League league = League::A;
    Geo geo = Geo::North;
    double pci = 0;           // per-capita income, currency/year
    double unemployment = 0;  // fraction
    double welfare = 0;       // currency/year
    double market_value = 0;  // currency at season kickoff
    int heritage_rank = 0;    // ordinal reputation rank
    int final_rank = 0;       // within league
    int mv_rank = 0;          // expected rank by market value, within league
    int pci_rank = 0;         // expected rank by PCI, within league

    int delta_mv() const;   // mv_rank - final_rank
    int delta_pci() const;  // pci_rank - final_rank
};

// Expected minus final rank; negative means the team underperformed.
int delta_rank(int expected_rank, int final_rank);

// Inter-event statistics for one (team, emotion) pair. b_n is the
// headline burstiness figure; memory is absent for zero-variance windows.
struct BurstinessReport {
    std::string team_id;
    Emotion emotion = Emotion::joy;
    std::size_t n_tau = 0;
    double mu_tau = 0;     // seconds
    double sigma_tau = 0;  // seconds
    double r = 0;
    double b = 0;
    double b_n = 0;
    std::optional<double> memory;
    std::size_t lag = 1;
};

}  // namespace tifo
