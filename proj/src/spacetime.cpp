#include "rqct/spacetime.hpp"

#include <cmath>

namespace rqct::spacetime {

const char* to_string(IntervalClass c) noexcept {
    switch (c) {
        case IntervalClass::Timelike: return "Timelike";
        case IntervalClass::Spacelike: return "Spacelike";
        case IntervalClass::Lightlike: return "Lightlike";
    }
    return "?";
}

IntervalClass classify_interval(const SpacetimeEvent& e1, const SpacetimeEvent& e2) {
    if (!std::isfinite(e1.t) || !std::isfinite(e1.x) || !std::isfinite(e2.t) ||
        !std::isfinite(e2.x)) {
        throw InvalidInputError("classify_interval: non-finite coordinates");
    }
    const double dt = e2.t - e1.t;
    const double dx = e2.x - e1.x;
    const double interval2 = dt * dt - dx * dx;
    if (std::abs(interval2) <= kIntervalTolerance) return IntervalClass::Lightlike;
    return interval2 > 0.0 ? IntervalClass::Timelike : IntervalClass::Spacelike;
}

double earliest_arrival(const SpacetimeEvent& emission, double receiver_x) {
    if (!std::isfinite(emission.t) || !std::isfinite(emission.x) || !std::isfinite(receiver_x)) {
        throw InvalidInputError("earliest_arrival: non-finite input");
    }
    return emission.t + std::abs(receiver_x - emission.x);
}

double min_identification_time(double L) {
    if (!std::isfinite(L) || L < 0.0) {
        throw InvalidInputError("min_identification_time: L must be finite and >= 0");
    }
    return L / 2.0;
}

}  // namespace rqct::spacetime
