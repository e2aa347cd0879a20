#include "bloch/adjoint.hpp"

#include <cmath>

#include "bloch/errors.hpp"

namespace bloch {

namespace {

constexpr double pi = 3.14159265358979323846;

double sgn(double x) { return x >= 0 ? 1.0 : -1.0; }

// eigenbasis of P(u) for bang u: P = Q diag-rotation Q^{-1}; both matrices are
// exact rational expressions in a1, a2, a3 (their product is the identity
// because a1 a2 + a1 a3 + a2 a3 = 1)
void q_matrices(const model& md, double u1, double u2, mat3& Q, mat3& Qi) {
    double a1 = md.a1, a2 = md.a2, a3 = md.a3;
    double apa = a1 + a3;
    Q = {{{a2 / (u2 * a3), -u2 * a1 / apa, -u1 / apa},
          {u1 * a2 / (u2 * a1), -u1 * u2 * a3 / apa, 1.0 / apa},
          {1.0, 1.0, 0.0}}};
    Qi = {{{u2 * a1 * a3, u1 * u2 * a1 * a3, a1 * a3},
           {-u2 * a1 * a3, -u1 * u2 * a1 * a3, a2 * apa},
           {-u1 * a3, a1, 0.0}}};
}

} // namespace

switching_state initial_switching(double theta, const model& md) {
    double phi1 = -md.sa * md.sb * std::sin(theta);
    double phi2 = -md.sa * md.cb * std::cos(theta);
    return {0.0, phi1, phi2, -(std::abs(phi1) + std::abs(phi2))};
}

control initial_bang_control(double theta, const model& md) {
    switching_state s = initial_switching(theta, md);
    if (std::abs(s.phi1) < 1e-15 && std::abs(s.phi2) < 1e-15)
        throw error(errc::degenerate_covector, "phi1(0) = phi2(0) = 0");
    // phi1' = a2 phi2 and phi2' = -a1 phi1 at t = 0 (phi0(0) = 0)
    double u1 = std::abs(s.phi1) > 1e-14 ? sgn(s.phi1) : sgn(md.a2 * s.phi2);
    double u2 = std::abs(s.phi2) > 1e-14 ? sgn(s.phi2) : sgn(-md.a1 * s.phi1);
    return {u1, u2};
}

mat3 p_matrix(control u, const model& md) {
    double a1 = md.a1, a2 = md.a2, a3 = md.a3;
    return {{{0.0, u.u2 * a1, -u.u1 * a2},
             {-u.u2 * a3, 0.0, a2},
             {u.u1 * a3, -a1, 0.0}}};
}

switching_state propagate_switching(const switching_state& s0, control u, double t,
                                    const model& md) {
    mat3 Q, Qi;
    q_matrices(md, u.u1, u.u2, Q, Qi);
    vec3 xi = mul(Qi, vec3{s0.phi0, s0.phi1, s0.phi2});
    double c = std::cos(t), s = std::sin(t);
    vec3 rxi{xi[0], c * xi[1] - s * xi[2], s * xi[1] + c * xi[2]};
    vec3 phi = mul(Q, rxi);
    return {phi[0], phi[1], phi[2], s0.lambda0};
}

switch_event next_switching_time(const switching_state& s0, control u, const model& md) {
    mat3 Q, Qi;
    q_matrices(md, u.u1, u.u2, Q, Qi);
    vec3 xi = mul(Qi, vec3{s0.phi0, s0.phi1, s0.phi2});
    double scale = std::max({std::abs(s0.phi0), std::abs(s0.phi1), std::abs(s0.phi2)}) + 1e-30;
    double best = -1.0;
    int comp = 0;
    for (int i = 1; i <= 2; ++i) {
        // phi_i(t) = C + A cos t + B sin t
        double A = Q.m[i][1] * xi[1] + Q.m[i][2] * xi[2];
        double B = Q.m[i][2] * xi[1] - Q.m[i][1] * xi[2];
        double C = Q.m[i][0] * xi[0];
        double R = std::hypot(A, B);
        if (R < std::abs(C) - 1e-15 * scale)
            continue; // never reaches zero
        if (R - std::abs(C) < 1e-12 * scale)
            continue; // tangential zero: no sign change
        double ph = std::atan2(B, A);
        double arg = -C / R;
        arg = arg > 1 ? 1 : (arg < -1 ? -1 : arg);
        double base = std::acos(arg);
        for (double cand : {ph + base, ph - base}) {
            double t = std::fmod(cand, 2 * pi);
            if (t < 0) t += 2 * pi;
            if (t < 1e-9) t += 2 * pi;
            if (best < 0 || t < best) {
                best = t;
                comp = i;
            }
        }
    }
    if (best < 0)
        throw error(errc::no_switching, "neither switching function crosses zero");
    return {best, comp};
}

control_schedule extremal_trace::schedule() const {
    control_schedule sched;
    sched.reserve(arcs.size());
    for (const auto& a : arcs)
        sched.push_back({a.u, a.duration});
    return sched;
}

extremal_trace extremal_from_theta(double theta, double horizon, const model& md) {
    if (!(horizon > 0))
        throw error(errc::bad_arguments, "horizon must be positive");
    extremal_trace tr;
    control u = initial_bang_control(theta, md);
    switching_state phi = initial_switching(theta, md);
    tr.lambda0 = phi.lambda0;
    double t = 0.0;
    for (int guard = 0; guard < 100000; ++guard) {
        switch_event ev = next_switching_time(phi, u, md);
        if (t + ev.dt >= horizon) {
            tr.arcs.push_back({t, u, horizon - t, phi});
            return tr;
        }
        tr.arcs.push_back({t, u, ev.dt, phi});
        phi = propagate_switching(phi, u, ev.dt, md);
        t += ev.dt;
        tr.switch_times.push_back(t);
        tr.switch_indices.push_back(ev.index);
        if (ev.index == 1)
            u.u1 = -u.u1;
        else
            u.u2 = -u.u2;
    }
    throw error(errc::budget_exceeded, "switching count guard tripped");
}

vec3 extremal_state(const model& md, const extremal_trace& tr, double t) {
    vec3 x = north;
    for (const auto& a : tr.arcs) {
        double d = std::min(a.duration, t - a.t_start);
        if (d <= 0)
            break;
        x = flow_normalized(md, x, a.u, d);
    }
    return x;
}

} // namespace bloch
