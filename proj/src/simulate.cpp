#include "tifo/simulate.hpp"

#include <cmath>
#include <string>

#include "tifo/errors.hpp"
#include "tifo/util.hpp"

namespace tifo {

std::uint64_t Rng::next_u64() {
    state_ = splitmix64(state_);
    return state_;
}

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::exponential(double rate) {
    // Inverse CDF on 1-U, which never hits log(0).
    return -std::log1p(-next_double()) / rate;
}

double Rng::pareto(double shape, double scale) {
    return scale * std::pow(1.0 - next_double(), -1.0 / shape);
}

std::string_view to_string(ProcessKind k) {
    switch (k) {
        case ProcessKind::periodic: return "periodic";
        case ProcessKind::poisson: return "poisson";
        case ProcessKind::pareto: return "pareto";
        case ProcessKind::markov: return "markov";
    }
    return "?";
}

ProcessKind process_kind_from_string(std::string_view name) {
    if (name == "periodic") return ProcessKind::periodic;
    if (name == "poisson") return ProcessKind::poisson;
    if (name == "pareto") return ProcessKind::pareto;
    if (name == "markov") return ProcessKind::markov;
    throw Error("unknown process kind '" + std::string(name) + "'");
}

std::vector<double> simulate_events(const SimulateParams& params) {
    if (params.n_events < 1) throw Error("n_events must be >= 1");
    switch (params.kind) {
        case ProcessKind::periodic:
            if (!(params.interval > 0)) throw Error("periodic interval must be > 0");
            break;
        case ProcessKind::poisson:
            if (!(params.rate > 0)) throw Error("poisson rate must be > 0");
            break;
        case ProcessKind::pareto:
            if (!(params.shape > 2)) throw Error("pareto shape must be > 2");
            if (!(params.scale > 0)) throw Error("pareto scale must be > 0");
            break;
        case ProcessKind::markov:
            if (!(params.p_stay > 0 && params.p_stay < 1))
                throw Error("markov p_stay must be in (0, 1)");
            if (!(params.tau_short > 0) || !(params.tau_long > 0))
                throw Error("markov regime means must be > 0");
            break;
    }

    Rng rng(params.seed);
    std::vector<double> out;
    out.reserve(params.n_events);
    double t = 0;
    bool long_regime = false;
    for (std::size_t i = 0; i < params.n_events; ++i) {
        out.push_back(t);
        if (i + 1 == params.n_events) break;
        double tau = 0;
        switch (params.kind) {
            case ProcessKind::periodic: tau = params.interval; break;
            case ProcessKind::poisson: tau = rng.exponential(params.rate); break;
            case ProcessKind::pareto: tau = rng.pareto(params.shape, params.scale); break;
            case ProcessKind::markov:
                tau = rng.exponential(1.0 / (long_regime ? params.tau_long : params.tau_short));
                if (rng.next_double() >= params.p_stay) long_regime = !long_regime;
                break;
        }
        t += tau;
    }
    return out;
}

}  // namespace tifo
