#pragma once

#include <complex>
#include <vector>

#include "bloch/geom.hpp"

namespace bloch {

inline constexpr vec3 north{0.0, 0.0, 1.0};
inline constexpr vec3 south{0.0, 0.0, -1.0};

// raw field data: energy half-gap E and the two control bounds
struct physical_params {
    double E;
    double M1;
    double M2;
};

// (alpha, beta) with the physical time scale k; all closed-form durations in
// this library are expressed in normalized time (k = 1 dynamics)
struct normalized_params {
    double alpha;
    double beta;
    double k = 1.0;
};

// alpha = arctan(sqrt(M1^2+M2^2)/E), beta = arctan(M1/M2),
// k = 2 sqrt(E^2+M1^2+M2^2); rejects alpha >= pi/4 and beta outside (0, pi/4]
normalized_params normalize_params(const physical_params& p);

// normalized duration -> physical duration (divide by k)
double rescale_time(double t_normalized, const physical_params& p);

struct control {
    double u1;
    double u2;
};

struct schedule_arc {
    control u;
    double duration;
};

using control_schedule = std::vector<schedule_arc>;

// precomputed trigonometry and generators of one (alpha, beta) instance
struct model {
    normalized_params p;
    double sa, ca;   // sin/cos alpha
    double sb, cb;   // sin/cos beta
    vec3 f;          // drift axis (0, 0, cos a)
    vec3 g1;         // (sin a sin b, 0, 0)
    vec3 g2;         // (0, -sin a cos b, 0)
    double a1, a2, a3; // switching-function ODE coefficients

    explicit model(const normalized_params& np);

    static model from_angles(double alpha, double beta, double k = 1.0);

    // rotation axis of the constant-control generator; unit norm for bang controls
    vec3 axis(double u1, double u2) const;

    // longest possible first bang arc on the branch selected by sign(u1*u2)
    double s_max_branch(double u1, double u2) const;
};

// k * (F + u1 G1 + u2 G2) as a skew matrix
mat3 generator(const model& md, control u);

// exp(t * generator) x in closed form, renormalized; t is physical time, so
// the rotation angle picks up the factor k
vec3 flow(const model& md, const vec3& x, control u, double t);

// same rotation on the normalized clock: the angle is exactly t, whatever k
// the model carries; every duration produced by this library is on this clock
vec3 flow_normalized(const model& md, const vec3& x, control u, double t);

struct trajectory_sample {
    double t;
    control u;
    vec3 x;
};

// normalized-clock flows arc by arc, sampled at step dt plus the exact arc
// ends; schedule durations and sample times are on the normalized clock
std::vector<trajectory_sample> simulate(const model& md, const vec3& x0,
                                        const control_schedule& sched, double dt);

// (psi1, psi2) -> (2 Re psi1 conj(psi2), 2 Im psi1 conj(psi2), |psi1|^2 - |psi2|^2)
vec3 hopf_project(std::complex<double> psi1, std::complex<double> psi2);

} // namespace bloch
