#pragma once

#include <string>

#include "bloch/core.hpp"

namespace bloch {

struct oracle_result {
    vec3 target{};
    double t_lower = 0.0;   // great-circle bound (bang speeds are unit)
    double t_lo = 0.0;
    double t_hi = 0.0;
    double dt = 0.0;
    double eps = 0.0;
    int frontier_peak = 0;
    // search scope statement: only the four bang controls are enumerated
    std::string assumption;
};

// forward reachable-set sweep from the north pole: per-step frontier expansion by
// the four bang flows, pruning on a latitude-row grid of cell size eps/4 where the
// southernmost point per cell survives (first-come on exact ties); the target test
// runs before pruning so an eps-optimal point is never discarded.
oracle_result min_time_bracket(const vec3& target, const model& md, double dt,
                               double eps, int max_steps = 5000);

struct bb_structure_report {
    int n_extremals = 0;
    bool pass = false;
    double worst_first_arc_excess = 0.0;   // max over grid of first switch minus the family bound
    int alternation_violations = 0;
    double worst_gap_spread = 0.0;         // max over grid of (max - min) interior gap
};

// raw PMP simulation sweep over a theta grid (offset half a step to stay clear of
// the quadrant boundaries): first arc within its family bound, alternating switch
// indices, equal interior gaps
bb_structure_report verify_bb_structure(const model& md, int n_theta, double horizon);

}
