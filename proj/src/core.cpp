#include "bloch/core.hpp"

#include <cmath>

#include "bloch/errors.hpp"

namespace bloch {

namespace {
constexpr double pi = 3.14159265358979323846;
}

normalized_params normalize_params(const physical_params& p) {
    if (!(p.E > 0))
        throw error(errc::non_positive_e, "E must be positive");
    if (p.M1 < 0 || p.M2 < 0 || p.M1 + p.M2 <= 0)
        throw error(errc::bad_arguments, "control bounds must be nonnegative with M1+M2 > 0");
    double alpha = std::atan(std::sqrt(p.M1 * p.M1 + p.M2 * p.M2) / p.E);
    if (alpha >= pi / 4)
        throw error(errc::alpha_out_of_range, "alpha = arctan(|M|/E) must be below pi/4");
    if (p.M1 <= 0 || p.M1 > p.M2)
        throw error(errc::beta_out_of_range, "beta = arctan(M1/M2) must lie in (0, pi/4]: need 0 < M1 <= M2");
    double beta = std::atan(p.M1 / p.M2);
    double k = 2.0 * std::sqrt(p.E * p.E + p.M1 * p.M1 + p.M2 * p.M2);
    return {alpha, beta, k};
}

double rescale_time(double t_normalized, const physical_params& p) {
    return t_normalized / (2.0 * std::sqrt(p.E * p.E + p.M1 * p.M1 + p.M2 * p.M2));
}

model::model(const normalized_params& np) : p(np) {
    if (!(np.alpha > 0) || np.alpha >= pi / 4)
        throw error(errc::alpha_out_of_range, "alpha must lie in (0, pi/4)");
    if (!(np.beta > 0) || np.beta > pi / 4 + 1e-15)
        throw error(errc::beta_out_of_range, "beta must lie in (0, pi/4]");
    sa = std::sin(np.alpha);
    ca = std::cos(np.alpha);
    sb = std::sin(np.beta);
    cb = std::cos(np.beta);
    f = {0.0, 0.0, ca};
    g1 = {sa * sb, 0.0, 0.0};
    g2 = {0.0, -sa * cb, 0.0};
    a1 = ca * cb / sb;
    a2 = ca * sb / cb;
    a3 = sa * sa * sb * cb / ca;
}

model model::from_angles(double alpha, double beta, double k) {
    return model(normalized_params{alpha, beta, k});
}

vec3 model::axis(double u1, double u2) const {
    return {u1 * g1[0], u2 * g2[1], f[2]};
}

double model::s_max_branch(double u1, double u2) const {
    double sa2 = sa * sa;
    double r = u1 * u2 > 0 ? sa2 * cb * cb : sa2 * sb * sb;
    return std::acos(-r / (1.0 - r));
}

mat3 generator(const model& md, control u) {
    return md.p.k * skew(md.axis(u.u1, u.u2));
}

vec3 flow(const model& md, const vec3& x, control u, double t) {
    return normalized(mul(rotation(md.axis(u.u1, u.u2), md.p.k * t), x));
}

vec3 flow_normalized(const model& md, const vec3& x, control u, double t) {
    return normalized(mul(rotation(md.axis(u.u1, u.u2), t), x));
}

std::vector<trajectory_sample> simulate(const model& md, const vec3& x0,
                                        const control_schedule& sched, double dt) {
    if (sched.empty())
        throw error(errc::empty_schedule, "schedule has no arcs");
    if (!(dt > 0))
        throw error(errc::bad_arguments, "dt must be positive");
    std::vector<trajectory_sample> out;
    double t = 0.0;
    vec3 x = x0;
    out.push_back({t, sched.front().u, x});
    for (const auto& arc : sched) {
        if (arc.duration < 0)
            throw error(errc::bad_arguments, "arc durations must be nonnegative");
        if (arc.duration == 0)
            continue;
        int steps = static_cast<int>(arc.duration / dt);
        for (int i = 1; i <= steps; ++i) {
            double tau = i * dt;
            if (tau >= arc.duration)
                break;
            out.push_back({t + tau, arc.u, flow_normalized(md, x, arc.u, tau)});
        }
        // exact arc end, no step-size error
        x = flow_normalized(md, x, arc.u, arc.duration);
        t += arc.duration;
        out.push_back({t, arc.u, x});
    }
    return out;
}

vec3 hopf_project(std::complex<double> psi1, std::complex<double> psi2) {
    double n2 = std::norm(psi1) + std::norm(psi2);
    if (std::abs(n2 - 1.0) > 1e-10)
        throw error(errc::not_normalized, "|psi1|^2 + |psi2|^2 must equal 1");
    std::complex<double> w = psi1 * std::conj(psi2);
    return {2.0 * w.real(), 2.0 * w.imag(), std::norm(psi1) - std::norm(psi2)};
}

} // namespace bloch
