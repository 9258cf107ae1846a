#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace tifo {

// Deterministic generator with a fixed bit-to-double mapping, so the
// same seed yields the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double next_double();  // uniform in [0, 1) with 53 random bits
    double exponential(double rate);
    double pareto(double shape, double scale);

private:
    std::uint64_t state_;
};

enum class ProcessKind { periodic, poisson, pareto, markov };

std::string_view to_string(ProcessKind k);
ProcessKind process_kind_from_string(std::string_view name);

struct SimulateParams {
    ProcessKind kind = ProcessKind::poisson;
    std::size_t n_events = 0;
    double interval = 1.0;       // periodic
    double rate = 1.0;           // poisson
    double shape = 2.5;          // pareto; must be > 2 so variance exists
    double scale = 1.0;          // pareto
    double p_stay = 0.9;         // markov: probability of keeping the regime
    double tau_short = 1.0;      // markov: mean gap in the short regime
    double tau_long = 10.0;      // markov: mean gap in the long regime
    std::uint64_t seed = 0;
};

// Event timestamps starting at t = 0; n_events points, so n_events - 1
// inter-event gaps. The markov kind alternates between two exponential
// gap regimes with persistence p_stay, giving positive-memory chains.
// Throws Error on invalid parameters.
std::vector<double> simulate_events(const SimulateParams& params);

}  // namespace tifo
