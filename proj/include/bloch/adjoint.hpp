#pragma once

#include <vector>

#include "bloch/core.hpp"

namespace bloch {

// adjoint pairings (phi0, phi1, phi2) with the constant multiplier lambda0;
// on extremal arcs phi0 + |phi1| + |phi2| + lambda0 = 0 and
// phi0^2/cos^2(a) + phi1^2/(sin a sin b)^2 + phi2^2/(sin a cos b)^2 = 1
struct switching_state {
    double phi0;
    double phi1;
    double phi2;
    double lambda0;
};

// covector slice lambda(0) = (cos theta, sin theta, 0):
// phi0 = 0, phi1 = -sin a sin b sin theta, phi2 = -sin a cos b cos theta,
// lambda0 = -(|phi1| + |phi2|)
switching_state initial_switching(double theta, const model& md);

// sign(phi_i(0)); a vanishing phi_i(0) is resolved by the sign of its derivative
control initial_bang_control(double theta, const model& md);

// matrix of the linear ODE phi' = P(u) phi
mat3 p_matrix(control u, const model& md);

// closed-form propagation of (phi0, phi1, phi2) along a bang arc:
// conjugation of a one-parameter block rotation; lambda0 is carried unchanged
switching_state propagate_switching(const switching_state& s0, control u, double t,
                                    const model& md);

struct switch_event {
    double dt;  // time to the next zero of phi1 or phi2
    int index;  // 1 or 2: which switching function vanishes
};

// smallest t > 0 where phi1 or phi2 crosses zero along the bang arc, from the
// closed phase-shift form A cos t + B sin t + C; tangential zeros (no sign
// change) are rejected; throws NoSwitching if neither function crosses
switch_event next_switching_time(const switching_state& s0, control u, const model& md);

struct extremal_arc {
    double t_start;
    control u;
    double duration;
    switching_state phi_start; // adjoint state at the beginning of the arc
};

struct extremal_trace {
    std::vector<extremal_arc> arcs;
    std::vector<double> switch_times;
    std::vector<int> switch_indices;
    double lambda0;

    control_schedule schedule() const;
};

// event-driven forward construction of the bang-bang extremal for covector
// angle theta up to the horizon
extremal_trace extremal_from_theta(double theta, double horizon, const model& md);

// state along a traced extremal at absolute time t (exact chained rotations)
vec3 extremal_state(const model& md, const extremal_trace& tr, double t);

} // namespace bloch
