#pragma once

#include <optional>
#include <string>

#include "bloch/core.hpp"

namespace bloch {

struct strategy_report {
    std::string strategy;
    double alpha = 0.0;
    int n = 0;                              // number of four-arc cycles
    std::optional<double> gamma;            // de-rating factor (amplitude-limited strategy)
    double arc_duration = 0.0;              // per-arc duration on the normalized clock
    double transfer_time_normalized = 0.0;
    std::optional<double> transfer_time_physical;
    vec3 final_state{};
    double miss_angle = 0.0;                // angular distance of final state to south pole
    control_schedule schedule;
};

// saturated quarter-turn cycles; lands within O(alpha) of the south pole.
// cycle_shift rotates the starting corner (miss angle is invariant under it).
strategy_report s1_schedule(double alpha, int cycle_shift = 0);

// de-rated cycles tuned so the south pole is reached exactly: the drive amplitude
// gamma and the arc length are chosen so each cycle is the zero-first-arc cycle of a
// smaller effective tilt whose per-cycle rotation step divides pi evenly.
strategy_report s2_schedule(double alpha);

// literal textbook variant (gamma = sin(ab)/sin(alpha), undilated arcs); kept as a
// regression witness: it misses the pole by O(alpha^2)-ish amounts.
strategy_report s2_schedule_printed(double alpha);

// solves 4*n*|theta(a)| = pi for a in (0, alpha]
double alpha_bar(double alpha, int n);

// resonant circular drive reaches the pole in exactly pi/(2M) physical time
double circle_transfer_time(double M);

// RK4 integration of the physical ODE under the circular drive, from the north pole
vec3 circle_simulate(double E, double M, double phase, double t_final, int steps);

// physical S1 transfer time over the circular-drive time, at E=1, M = tan(alpha)/sqrt(2)
double compare_ratio(double alpha);
double compare_ratio_s2(double alpha);

}
