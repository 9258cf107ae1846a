#include "tifo/types.hpp"

#include <algorithm>
#include <cmath>

#include "tifo/errors.hpp"
#include "tifo/util.hpp"

namespace tifo {

namespace {
constexpr double kSumTolerance = 1e-9;
}

std::string_view to_string(Emotion e) {
    switch (e) {
        case Emotion::joy: return "joy";
        case Emotion::anger: return "anger";
        case Emotion::sadness: return "sadness";
        case Emotion::fear: return "fear";
    }
    return "?";
}

Emotion emotion_from_string(std::string_view name) {
    for (Emotion e : kAllEmotions)
        if (name == to_string(e)) return e;
    throw ParseError("unknown emotion '" + std::string(name) + "'");
}

EmotionDistribution EmotionDistribution::from_fractions(double joy, double anger, double sadness,
                                                        double fear) {
    EmotionDistribution d;
    d.shares_ = {joy, anger, sadness, fear};
    double sum = 0;
    for (double v : d.shares_) {
        if (!(v >= 0.0 && v <= 1.0))
            throw ParseError("emotion fraction " + format_double(v) + " outside [0,1]");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw ParseError("emotion fractions sum to " + format_double(sum) + ", expected 1");
    return d;
}

EmotionDistribution EmotionDistribution::normalized(double joy, double anger, double sadness,
                                                    double fear) {
    std::array<double, 4> w = {joy, anger, sadness, fear};
    double sum = 0;
    for (double v : w) {
        if (!(v >= 0.0)) throw ParseError("negative emotion weight " + format_double(v));
        sum += v;
    }
    if (!(sum > 0)) throw ParseError("emotion weights sum to zero");
    EmotionDistribution d;
    for (int i = 0; i < 4; ++i) d.shares_[i] = w[i] / sum;
    return d;
}

double EmotionDistribution::max_value() const {
    return *std::max_element(shares_.begin(), shares_.end());
}

EmotionalSeries::EmotionalSeries(std::string team_id, std::vector<Observation> observations)
    : team_id_(std::move(team_id)), observations_(std::move(observations)) {
    if (observations_.empty())
        throw Error("emotional series for '" + team_id_ + "' is empty");
    for (std::size_t i = 1; i < observations_.size(); ++i)
        if (observations_[i].timestamp <= observations_[i - 1].timestamp)
            throw Error("timestamps for '" + team_id_ + "' are not strictly increasing at index " +
                        std::to_string(i));
}

InterEventTimes::InterEventTimes(std::vector<double> taus) : taus_(std::move(taus)) {
    for (double t : taus_)
        if (!(t > 0)) throw Error("non-positive inter-event time " + format_double(t));
}

std::string_view to_string(League l) {
    switch (l) {
        case League::A: return "A";
        case League::B: return "B";
        case League::C: return "C";
    }
    return "?";
}

League league_from_string(std::string_view name) {
    if (name == "A") return League::A;
    if (name == "B") return League::B;
    if (name == "C") return League::C;
    throw ParseError("unknown league '" + std::string(name) + "' (expected A, B or C)");
}

std::string_view to_string(Geo g) {
    switch (g) {
        case Geo::North: return "North";
        case Geo::Center: return "Center";
        case Geo::South: return "South";
    }
    return "?";
}

Geo geo_from_string(std::string_view name) {
    if (name == "North") return Geo::North;
    if (name == "Center") return Geo::Center;
    if (name == "South") return Geo::South;
    throw ParseError("unknown geo '" + std::string(name) + "' (expected North, Center or South)");
}

int delta_rank(int expected_rank, int final_rank) {
    if (expected_rank < 1 || final_rank < 1)
        throw Error("ranks must be >= 1, got expected=" + std::to_string(expected_rank) +
                    " final=" + std::to_string(final_rank));
    return expected_rank - final_rank;
}

int TeamMetadata::delta_mv() const { return delta_rank(mv_rank, final_rank); }
int TeamMetadata::delta_pci() const { return delta_rank(pci_rank, final_rank); }

}  // namespace tifo
