#include "doctest.h"

#include <cmath>
#include <vector>

#include "bloch/adjoint.hpp"
#include "bloch/errors.hpp"

using namespace bloch;

namespace {

constexpr double pi = 3.14159265358979323846;

vec3 as_vec(const switching_state& s) { return {s.phi0, s.phi1, s.phi2}; }

// independent integrator for phi' = P(u) phi
switching_state rk4_phi(const switching_state& s0, control u, double t, const model& md,
                        int steps) {
    mat3 P = p_matrix(u, md);
    vec3 phi = as_vec(s0);
    double h = t / steps;
    for (int i = 0; i < steps; ++i) {
        vec3 k1 = mul(P, phi);
        vec3 k2 = mul(P, phi + (h / 2) * k1);
        vec3 k3 = mul(P, phi + (h / 2) * k2);
        vec3 k4 = mul(P, phi + h * k3);
        phi = phi + (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return {phi[0], phi[1], phi[2], s0.lambda0};
}

double hamiltonian_residual(const switching_state& s) {
    return s.phi0 + std::abs(s.phi1) + std::abs(s.phi2) + s.lambda0;
}

double ellipsoid_residual(const switching_state& s, const model& md) {
    double q = s.phi0 * s.phi0 / (md.ca * md.ca)
             + s.phi1 * s.phi1 / (md.sa * md.sa * md.sb * md.sb)
             + s.phi2 * s.phi2 / (md.sa * md.sa * md.cb * md.cb);
    return q - 1.0;
}

} // namespace

TEST_CASE("initial adjoint pairings and both pointwise identities at t = 0") {
    model md = model::from_angles(0.25, pi / 4);
    for (double theta : {0.0, 0.3, 1.1, 2.0, 3.3, 4.4, 5.9}) {
        switching_state s = initial_switching(theta, md);
        CHECK(s.phi0 == 0.0);
        CHECK(s.phi1 == doctest::Approx(-md.sa * md.sb * std::sin(theta)).epsilon(1e-15));
        CHECK(s.phi2 == doctest::Approx(-md.sa * md.cb * std::cos(theta)).epsilon(1e-15));
        CHECK(s.lambda0 == -(std::abs(s.phi1) + std::abs(s.phi2)));
        CHECK(s.lambda0 < 0);
        CHECK(std::fabs(hamiltonian_residual(s)) <= 1e-15);
        CHECK(std::fabs(ellipsoid_residual(s, md)) <= 1e-14);
    }
}

TEST_CASE("initial bang control: quadrant signs and derivative tie-breaks") {
    model md = model::from_angles(0.25, pi / 4);

    auto same = [](control a, double u1, double u2) { return a.u1 == u1 && a.u2 == u2; };

    // interior of each quadrant
    CHECK(same(initial_bang_control(0.4, md), -1, -1));
    CHECK(same(initial_bang_control(0.4 + pi / 2, md), -1, 1));
    CHECK(same(initial_bang_control(0.4 + pi, md), 1, 1));
    CHECK(same(initial_bang_control(0.4 + 3 * pi / 2, md), 1, -1));

    // quadrant corners: one pairing vanishes, its derivative picks the sign
    CHECK(same(initial_bang_control(0.0, md), -1, -1));
    CHECK(same(initial_bang_control(pi / 2, md), -1, 1));
    CHECK(same(initial_bang_control(pi, md), 1, 1));
    CHECK(same(initial_bang_control(3 * pi / 2, md), 1, -1));
}

TEST_CASE("switching ODE matrix layout for every bang pair") {
    model md = model::from_angles(0.3, pi / 8);
    for (double u1 : {-1.0, 1.0})
        for (double u2 : {-1.0, 1.0}) {
            mat3 P = p_matrix({u1, u2}, md);
            CHECK(P.m[0][0] == 0.0);
            CHECK(P.m[1][1] == 0.0);
            CHECK(P.m[2][2] == 0.0);
            CHECK(P.m[0][1] == u2 * md.a1);
            CHECK(P.m[0][2] == -u1 * md.a2);
            CHECK(P.m[1][0] == -u2 * md.a3);
            CHECK(P.m[1][2] == md.a2);  // independent of the control
            CHECK(P.m[2][0] == u1 * md.a3);
            CHECK(P.m[2][1] == -md.a1); // independent of the control
        }
}

TEST_CASE("closed-form adjoint propagation against an independent integrator") {
    for (auto [alpha, beta] : {std::pair{0.25, pi / 4}, {0.1, pi / 8}, {0.5, 0.3}}) {
        model md = model::from_angles(alpha, beta);
        for (double theta : {0.3, 1.9, 3.5, 5.2}) {
            switching_state s0 = initial_switching(theta, md);
            control u = initial_bang_control(theta, md);
            for (double t : {0.2, 0.9, 2.7}) {
                switching_state a = propagate_switching(s0, u, t, md);
                switching_state b = rk4_phi(s0, u, t, md, 6000);
                CHECK(std::fabs(a.phi0 - b.phi0) <= 1e-10);
                CHECK(std::fabs(a.phi1 - b.phi1) <= 1e-10);
                CHECK(std::fabs(a.phi2 - b.phi2) <= 1e-10);
                CHECK(a.lambda0 == s0.lambda0);
                // the ellipsoid is invariant under the flow for all t
                CHECK(std::fabs(ellipsoid_residual(a, md)) <= 1e-13);
            }
            // the Hamiltonian identity holds while the controls match the signs,
            // i.e. up to the first switch
            double first = next_switching_time(s0, u, md).dt;
            switching_state mid = propagate_switching(s0, u, 0.5 * first, md);
            CHECK(std::fabs(hamiltonian_residual(mid)) <= 1e-13);
        }
    }
}

TEST_CASE("propagation composes over subintervals") {
    model md = model::from_angles(0.25, pi / 4);
    switching_state s0 = initial_switching(1.234, md);
    control u{1, -1};
    switching_state whole = propagate_switching(s0, u, 1.7, md);
    switching_state parts = propagate_switching(propagate_switching(s0, u, 0.6, md), u, 1.1, md);
    CHECK(std::fabs(whole.phi0 - parts.phi0) <= 1e-14);
    CHECK(std::fabs(whole.phi1 - parts.phi1) <= 1e-14);
    CHECK(std::fabs(whole.phi2 - parts.phi2) <= 1e-14);
}

TEST_CASE("next switching time: frozen case and scan-plus-bisection oracle") {
    model md = model::from_angles(0.25, pi / 4);

    {
        switching_state s0 = initial_switching(0.3, md);
        control u = initial_bang_control(0.3, md);
        switch_event ev = next_switching_time(s0, u, md);
        CHECK(ev.index == 2);
        CHECK(ev.dt == doctest::Approx(1.3080138398862742).epsilon(1e-12));
    }

    for (int j = 0; j < 20; ++j) {
        double theta = 0.11 + j * 0.31;
        switching_state s0 = initial_switching(theta, md);
        control u = initial_bang_control(theta, md);
        switch_event ev = next_switching_time(s0, u, md);

        // brute force: march the closed-form propagation and bisect the first
        // sign change of either pairing
        double h = 1e-3;
        double brute = -1.0;
        int brute_idx = 0;
        switching_state prev = s0;
        for (double t = h; t < 2 * pi + 1.0; t += h) {
            switching_state cur = propagate_switching(s0, u, t, md);
            for (int i = 1; i <= 2; ++i) {
                double p0 = i == 1 ? prev.phi1 : prev.phi2;
                double p1 = i == 1 ? cur.phi1 : cur.phi2;
                if (p0 * p1 < 0) {
                    double lo = t - h, hi = t;
                    for (int it = 0; it < 60; ++it) {
                        double m = 0.5 * (lo + hi);
                        switching_state sm = propagate_switching(s0, u, m, md);
                        double pm = i == 1 ? sm.phi1 : sm.phi2;
                        (p0 * pm <= 0 ? hi : lo) = m;
                    }
                    brute = 0.5 * (lo + hi);
                    brute_idx = i;
                    break;
                }
            }
            if (brute > 0)
                break;
            prev = cur;
        }
        REQUIRE(brute > 0);
        CHECK(ev.index == brute_idx);
        CHECK(ev.dt == doctest::Approx(brute).epsilon(1e-8));
    }
}

TEST_CASE("event-driven extremal construction") {
    model md = model::from_angles(0.25, pi / 4);
    double horizon = 8 * pi;

    for (double theta : {0.3, 1.7, 3.0, 4.9}) {
        extremal_trace tr = extremal_from_theta(theta, horizon, md);
        REQUIRE(!tr.arcs.empty());
        CHECK(tr.lambda0 < 0);

        double total = 0;
        for (const auto& a : tr.arcs) {
            CHECK(a.t_start == doctest::Approx(total).epsilon(1e-12));
            CHECK(a.duration > 0);
            total += a.duration;
        }
        CHECK(total == doctest::Approx(horizon).epsilon(1e-12));

        const auto& st = tr.switch_times;
        REQUIRE(st.size() >= 4);
        for (size_t i = 1; i < st.size(); ++i)
            CHECK(st[i] > st[i - 1]);
        // all interior gaps share one duration
        double v = st[1] - st[0];
        for (size_t i = 2; i < st.size(); ++i)
            CHECK(std::fabs((st[i] - st[i - 1]) - v) <= 1e-9);
        CHECK(v > 0);
        CHECK(v <= pi + 1e-12);
        // the two switching functions alternate strictly
        for (size_t i = 1; i < tr.switch_indices.size(); ++i)
            CHECK(tr.switch_indices[i] != tr.switch_indices[i - 1]);

        // replaying the schedule reproduces the traced endpoint
        auto rows = simulate(md, north, tr.schedule(), 0.5);
        CHECK(norm(rows.back().x - extremal_state(md, tr, horizon)) <= 1e-12);

        // state is continuous across each switch
        for (double ts : {st[0], st[2]}) {
            vec3 l = extremal_state(md, tr, ts - 1e-12);
            vec3 r = extremal_state(md, tr, ts + 1e-12);
            CHECK(norm(l - r) <= 1e-10);
        }
    }
}

TEST_CASE("construction guards") {
    model md = model::from_angles(0.25, pi / 4);
    CHECK_THROWS_AS(extremal_from_theta(0.3, 0.0, md), error);
    try {
        extremal_from_theta(0.3, 2e5, md); // ~1.3e5 switches, above the guard
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == std::string(errc::budget_exceeded));
    }
}
