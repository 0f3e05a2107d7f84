#pragma once

#include "rqct/errors.hpp"

namespace rqct::spacetime {

// 1+1-dimensional kinematics in natural units (c = 1). Times are seconds,
// positions light-seconds; the protocol geometry is a line through the two
// laboratories, so one spatial dimension is all we track.

struct SpacetimeEvent {
    double t = 0.0;  // seconds
    double x = 0.0;  // light-seconds
};

enum class IntervalClass { Timelike, Spacelike, Lightlike };

const char* to_string(IntervalClass c) noexcept;

// Absolute tolerance on (dt)^2 - (dx)^2 below which a pair is called
// lightlike; far below any protocol timescale.
inline constexpr double kIntervalTolerance = 1e-12;

// Sign of the squared interval (dt)^2 - (dx)^2.
// Throws InvalidInputError on non-finite coordinates.
IntervalClass classify_interval(const SpacetimeEvent& e1, const SpacetimeEvent& e2);

// Earliest time a light-speed signal emitted at `emission` can reach a
// receiver sitting at receiver_x. Throws InvalidInputError on non-finite
// input.
double earliest_arrival(const SpacetimeEvent& emission, double receiver_x);

// Lower bound on the time needed to gather all local measurement
// information from a region of diameter L at a single point: L/2 with c=1,
// for an observer placed at the region's midpoint. Throws InvalidInputError
// for L < 0 or non-finite L.
double min_identification_time(double L);

}  // namespace rqct::spacetime
