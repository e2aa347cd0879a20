#include "doctest.h"

#include <cmath>
#include <set>
#include <string>

#include "bloch/errors.hpp"
#include "bloch/synthesis.hpp"

using namespace bloch;

namespace {

constexpr double pi = 3.14159265358979323846;

// reference chain: first arc s, then whole interior arcs of duration v in
// cycle order, then the remainder on the arc in progress
vec3 chain_reference(const model& md, family f, double s, double t) {
    if (t <= s)
        return flow(md, north, first_control(f), t);
    double v = interbang_duration(s, f, md);
    vec3 x = flow(md, north, first_control(f), s);
    auto cyc = bang_cycle(f);
    double left = t - s;
    int arc = 0;
    while (left > v) {
        x = flow(md, x, cyc[arc % 4], v);
        left -= v;
        ++arc;
    }
    return flow(md, x, cyc[arc % 4], left);
}

} // namespace

TEST_CASE("cycle bookkeeping along one extremal") {
    model md = model::from_angles(0.25, pi / 4);
    family f = family::pp;
    double s = 0.8;
    double v = interbang_duration(s, f, md);

    extremal_spec sp = spec_at_time(0.3, f, s, md);
    CHECK(sp.n == 0);
    CHECK(sp.phase == 0);
    CHECK(sp.leftover == doctest::Approx(0.3));

    sp = spec_at_time(s, f, s, md);
    CHECK(sp.phase == 0);
    CHECK(sp.leftover == doctest::Approx(s));

    sp = spec_at_time(s + 0.5 * v, f, s, md);
    CHECK(sp.n == 0);
    CHECK(sp.phase == 1);
    CHECK(sp.leftover == doctest::Approx(0.5 * v).epsilon(1e-12));

    sp = spec_at_time(s + 3.5 * v, f, s, md);
    CHECK(sp.n == 0);
    CHECK(sp.phase == 4);
    CHECK(sp.leftover == doctest::Approx(0.5 * v).epsilon(1e-12));

    sp = spec_at_time(s + 4 * v + 0.01, f, s, md);
    CHECK(sp.n == 1);
    CHECK(sp.phase == 1);
    CHECK(sp.leftover == doctest::Approx(0.01).epsilon(1e-9));

    sp = spec_at_time(s + 5.5 * v, f, s, md);
    CHECK(sp.n == 1);
    CHECK(sp.phase == 2);
    CHECK(sp.leftover == doctest::Approx(0.5 * v).epsilon(1e-12));

    sp = spec_at_time(s + 9.25 * v, f, s, md);
    CHECK(sp.n == 2);
    CHECK(sp.phase == 2);
    CHECK(sp.leftover == doctest::Approx(0.25 * v).epsilon(1e-12));
}

TEST_CASE("extremal point equals the explicit arc chain") {
    model md = model::from_angles(0.25, pi / 4);
    for (family f : {family::pp, family::mp}) {
        double s = 0.6;
        for (double t : {0.2, 0.6, 1.1, 3.7, 9.4, 17.3}) {
            vec3 a = extremal_point(t, f, s, md);
            vec3 b = chain_reference(md, f, s, t);
            CHECK(norm(a - b) <= 1e-12);
        }
        // continuity across the first switch and an interior switch
        double v = interbang_duration(s, f, md);
        for (double ts : {s, s + 2 * v}) {
            vec3 l = extremal_point(ts - 1e-10, f, s, md);
            vec3 r = extremal_point(ts + 1e-10, f, s, md);
            CHECK(norm(l - r) <= 1e-8);
        }
    }
}

TEST_CASE("extremal point agrees with the event-driven trace") {
    model md = model::from_angles(0.25, pi / 4);
    family f = family::pm;
    double s = 0.9;
    double theta = theta_of_first_switch(f, s, md);
    extremal_trace tr = extremal_from_theta(theta, 12.0, md);
    REQUIRE(std::fabs(tr.arcs.front().duration - s) <= 1e-9);
    for (double t : {0.5, 2.0, 7.3, 11.5})
        CHECK(norm(extremal_point(t, f, s, md) - extremal_state(md, tr, t)) <= 1e-7);
}

TEST_CASE("switching curves: first arc, recursion, and guards") {
    model md = model::from_angles(0.25, pi / 4);
    family f = family::pp;
    double sm = s_max(f, md);
    int n = 24;

    auto c1 = switching_curve(1, f, n, md);
    REQUIRE(static_cast<int>(c1.size()) == n);
    for (int i = 0; i < n; ++i) {
        double s = sm * (i + 1) / n;
        CHECK(c1[i].k == 1);
        CHECK(c1[i].s == doctest::Approx(s).epsilon(1e-14));
        CHECK(norm(c1[i].point - flow(md, north, first_control(f), s)) <= 1e-14);
    }
    CHECK(c1.back().s == doctest::Approx(sm).epsilon(1e-14));

    auto c2 = switching_curve(2, f, n, md);
    auto c3 = switching_curve(3, f, n, md);
    for (int i = 0; i < n; ++i) {
        mat3 M = monodromy(c1[i].s, f, md);
        CHECK(norm(c2[i].point - mul(M, c1[i].point)) <= 1e-12);
        CHECK(norm(c3[i].point - mul(M, c2[i].point)) <= 1e-12);
        CHECK(std::fabs(norm(c2[i].point) - 1.0) <= 1e-13);
    }

    CHECK_THROWS_AS(switching_curve(0, f, n, md), error);
    CHECK_THROWS_AS(switching_curve(2, f, 1, md), error);
}

TEST_CASE("refraction: the first curve is tangential, later curves separate") {
    model md = model::from_angles(0.25, pi / 4);
    double alpha = 0.25;
    family f = family::pp;
    double sm = s_max(f, md);

    // on the first curve the tangent IS the incoming field direction
    refraction_result r1 = refraction_test(1, f, 0.5 * sm, md);
    CHECK(r1.c1 == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(std::fabs(r1.c2) <= 1e-4);
    CHECK(r1.residual <= 1e-6);

    // outside the pole disk every later curve refracts transversally
    int outside = 0, outside_pass = 0, inside = 0, inside_fail = 0;
    for (int k = 2; k <= 7; ++k) {
        auto samples = switching_curve(k, f, 40, md);
        for (const auto& cs : samples) {
            refraction_result r = refraction_test(cs.k, f, cs.s, md);
            if (angle_between(cs.point, south) > 3 * alpha) {
                ++outside;
                outside_pass += r.locally_optimal ? 1 : 0;
            } else {
                ++inside;
                inside_fail += r.locally_optimal ? 0 : 1;
            }
        }
    }
    CHECK(outside > 100);
    CHECK(outside_pass == outside);
    CHECK(inside > 10);
    CHECK(inside_fail >= 1);

    // boundary samples are legal (stencil shifts inward), out-of-range is not
    CHECK_NOTHROW(refraction_test(2, f, sm, md));
    CHECK_NOTHROW(refraction_test(2, f, 0.0, md));
    CHECK_THROWS_AS(refraction_test(2, f, sm * 1.01, md), error);
}

TEST_CASE("extremal front") {
    model md = model::from_angles(0.25, pi / 4);
    auto f0 = extremal_front(0.0, 12, md);
    REQUIRE(f0.size() == 12);
    for (const auto& p : f0) {
        CHECK(norm(p.x - north) <= 1e-9);
    }
    CHECK(f0[3].theta == doctest::Approx(2 * pi * 3 / 12).epsilon(1e-15));

    auto f1 = extremal_front(2.0, 36, md);
    for (const auto& p : f1)
        CHECK(std::fabs(norm(p.x) - 1.0) <= 1e-12);
}

TEST_CASE("front self-intersection counter on synthetic curves") {
    // an embedded circle near the south pole: no crossings
    std::vector<front_sample> circle;
    for (int i = 0; i < 200; ++i) {
        double t = 2 * pi * i / 200;
        double x = 0.3 * std::cos(t), y = 0.3 * std::sin(t);
        circle.push_back({t, {x, y, -std::sqrt(1 - x * x - y * y)}});
    }
    CHECK(count_front_self_intersections(circle) == 0);

    // a figure-eight through the pole: exactly one transversal crossing
    std::vector<front_sample> eight;
    for (int i = 0; i < 200; ++i) {
        double t = 0.013 + 2 * pi * i / 200;
        double x = 0.2 * std::sin(t), y = 0.2 * std::sin(t) * std::cos(t);
        eight.push_back({t, {x, y, -std::sqrt(1 - x * x - y * y)}});
    }
    CHECK(count_front_self_intersections(eight) == 1);

    CHECK(count_front_self_intersections({}) == 0);
}

TEST_CASE("singular loci") {
    model md = model::from_angles(0.25, pi / 4);
    double ta = md.sa / md.ca;
    int per = 16;
    auto loci = singular_loci(per, md);
    REQUIRE(loci.size() == 5u * per);

    std::set<std::string> labels;
    for (const auto& l : loci) {
        labels.insert(l.label);
        CHECK(std::fabs(norm(l.x) - 1.0) <= 1e-14);
        if (l.label == "C0") {
            CHECK(std::fabs(l.x[2]) <= 1e-14);
            CHECK(l.u.u1 == 0);
            CHECK(l.u.u2 == 0);
        } else if (l.label == "C1+") {
            CHECK(std::fabs(l.x[2] - ta * md.cb * l.x[1]) <= 1e-13);
            CHECK(l.u.u1 == 0);
            CHECK(l.u.u2 == 1);
        } else if (l.label == "C1-") {
            CHECK(std::fabs(l.x[2] + ta * md.cb * l.x[1]) <= 1e-13);
            CHECK(l.u.u2 == -1);
        } else if (l.label == "C2+") {
            CHECK(std::fabs(l.x[2] + ta * md.sb * l.x[0]) <= 1e-13);
            CHECK(l.u.u1 == 1);
            CHECK(l.u.u2 == 0);
        } else if (l.label == "C2-") {
            CHECK(std::fabs(l.x[2] - ta * md.sb * l.x[0]) <= 1e-13);
            CHECK(l.u.u1 == -1);
        }
    }
    CHECK(labels == std::set<std::string>{"C0", "C1+", "C1-", "C2+", "C2-"});
    CHECK_THROWS_AS(singular_loci(2, md), error);
}

TEST_CASE("synthesis solver") {
    model md = model::from_angles(0.25, pi / 4);

    SUBCASE("target on the first bang arc") {
        vec3 target = flow(md, north, {1, 1}, 0.5);
        synthesis_result r = solve_synthesis(target, md);
        CHECK(r.fam == family::pp);
        CHECK(r.n == 0);
        CHECK(r.phase == 0);
        CHECK(r.total_time == doctest::Approx(0.5).epsilon(1e-6));
        CHECK(r.s == doctest::Approx(0.5).epsilon(1e-6));
        CHECK(r.residual <= 1e-7);
        CHECK(r.switch_times.empty());
    }

    SUBCASE("roundtrip through points taken on known extremals") {
        struct probe {
            family f;
            double s;
            double t;
        };
        for (const probe& q : {probe{family::pp, 0.9, 2.5}, probe{family::mm, 1.2, 4.1}}) {
            vec3 target = extremal_point(q.t, q.f, q.s, md);
            if (angle_between(target, south) <= 3 * 0.25)
                continue;
            synthesis_result r = solve_synthesis(target, md);
            CHECK(r.residual <= 1e-7);
            CHECK(r.total_time <= q.t + 1e-6); // never slower than the generator
            CHECK(r.total_time >= angle_between(north, target) - 1e-9);
            vec3 replay = extremal_point(r.total_time, r.fam, r.s, md);
            CHECK(norm(replay - target) <= 5e-7);
            // switch times: first at s, then evenly spaced
            if (r.switch_times.size() >= 2) {
                CHECK(r.switch_times[0] == doctest::Approx(r.s).epsilon(1e-9));
                double v = interbang_duration(r.s, r.fam, md);
                for (size_t i = 1; i < r.switch_times.size(); ++i)
                    CHECK(r.switch_times[i] - r.switch_times[i - 1]
                          == doctest::Approx(v).epsilon(1e-9));
            }
        }
    }

    SUBCASE("the trivial target") {
        synthesis_result r = solve_synthesis(north, md);
        CHECK(r.total_time == 0.0);
        CHECK(r.residual == 0.0);
    }

    SUBCASE("solution does not depend on the physical clock rate") {
        normalized_params np = normalize_params({1.0, 0.3, 0.3});
        model fast(np);                                    // k > 1
        model slow = model::from_angles(np.alpha, np.beta); // k = 1
        for (const vec3& target : {vec3{0, 1, 0}, normalized(vec3{0.1, 0.99, 0.05})}) {
            synthesis_result a = solve_synthesis(target, fast);
            synthesis_result b = solve_synthesis(target, slow);
            CHECK(a.fam == b.fam);
            CHECK(a.n == b.n);
            CHECK(a.phase == b.phase);
            CHECK(a.s == doctest::Approx(b.s).epsilon(1e-12));
            CHECK(a.total_time == doctest::Approx(b.total_time).epsilon(1e-12));
            CHECK(a.residual <= 1e-7);
        }
    }

    SUBCASE("guards") {
        CHECK_THROWS_AS(solve_synthesis(vec3{0, 0, 0.9}, md), error);
        try {
            solve_synthesis(south, md);
            CHECK(false);
        } catch (const error& e) {
            CHECK(e.code() == std::string(errc::target_in_cut_locus));
        }
        // just inside the default disk
        vec3 near_south = normalized(vec3{0.0, std::sin(0.6), -std::cos(0.6)});
        CHECK_THROWS_AS(solve_synthesis(near_south, md), error);
    }
}

TEST_CASE("first entry time into a ball and the spin-flip scan") {
    model md = model::from_angles(0.25, pi / 4);
    double theta = 0.3;
    extremal_trace tr = extremal_from_theta(theta, 3.0, md);
    vec3 p = extremal_state(md, tr, 2.0);

    auto hit = first_time_within(theta, p, 0.005, 3.0, 0.01, md);
    REQUIRE(hit.has_value());
    CHECK(*hit >= 1.98);
    CHECK(*hit <= 2.02);

    auto miss = first_time_within(theta, south, 0.001, 5.0, 0.01, md);
    CHECK(!miss.has_value());

    double t_flip = spin_flip_time(md);
    CHECK(std::fabs(t_flip - 13.962064) <= 5e-3);
}
