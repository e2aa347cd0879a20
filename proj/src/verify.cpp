#include "bloch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bloch/adjoint.hpp"
#include "bloch/core.hpp"
#include "bloch/errors.hpp"
#include "bloch/oracle.hpp"
#include "bloch/rng.hpp"
#include "bloch/suboptimal.hpp"
#include "bloch/switching.hpp"
#include "bloch/synthesis.hpp"

namespace bloch {

namespace {

constexpr double pi = 3.14159265358979323846;

struct checker {
    std::vector<check_result> out;

    void add(std::string name, bool pass, double worst, const char* what) {
        std::ostringstream ss;
        ss << what << " = " << worst;
        out.push_back({std::move(name), pass, ss.str()});
    }

    void add(std::string name, bool pass, std::string detail) {
        out.push_back({std::move(name), pass, std::move(detail)});
    }
};

mat3 rot_x1(double phi) {
    mat3 r = mat3::identity();
    r.m[1][1] = std::cos(phi);
    r.m[1][2] = std::sin(phi);
    r.m[2][1] = -std::sin(phi);
    r.m[2][2] = std::cos(phi);
    return r;
}

// state along the (family, s) extremal by folding plain flows; the reference
// that extremal_point must reproduce
vec3 chained_state(double t, family f, double s, const model& md) {
    double v = interbang_duration(s, f, md);
    vec3 x = north;
    control u = first_control(f);
    double first = std::min(t, s);
    x = flow_normalized(md, x, u, first);
    double left = t - first;
    auto cyc = bang_cycle(f);
    int idx = 0;
    while (left > 0) {
        double step = std::min(left, v);
        x = flow_normalized(md, x, cyc[idx % 4], step);
        left -= step;
        ++idx;
    }
    return x;
}

vec3 random_target_outside(sampler& rng, double exclusion) {
    for (;;) {
        vec3 t = rng.unit_vector();
        if (angle_between(t, south) > exclusion * 1.05)
            return t;
    }
}

void suite_invariants(checker& ck, uint64_t seed) {
    sampler rng(seed);
    double worst2 = 0, worst3 = 0, worst_gap_lo = 1e300, worst_gap_hi = 0;
    for (double alpha : {0.1, 0.25, 0.5}) {
        for (double beta : {pi / 8, pi / 4}) {
            model md = model::from_angles(alpha, beta);
            for (int i = 0; i < 10; ++i) {
                double theta = rng.uniform(0, 2 * pi);
                extremal_trace tr = extremal_from_theta(theta, 8 * pi, md);
                for (const auto& arc : tr.arcs) {
                    for (int j = 0; j <= 4; ++j) {
                        switching_state phi = propagate_switching(
                            arc.phi_start, arc.u, arc.duration * j / 4, md);
                        double id2 = std::fabs(phi.phi0 + std::fabs(phi.phi1) +
                                               std::fabs(phi.phi2) + phi.lambda0);
                        double id3 = std::fabs(
                            phi.phi0 * phi.phi0 / (md.ca * md.ca) +
                            phi.phi1 * phi.phi1 / (md.sa * md.sa * md.sb * md.sb) +
                            phi.phi2 * phi.phi2 / (md.sa * md.sa * md.cb * md.cb) - 1.0);
                        worst2 = std::max(worst2, id2);
                        worst3 = std::max(worst3, id3);
                    }
                }
                for (size_t j = 1; j < tr.switch_times.size(); ++j) {
                    double gap = tr.switch_times[j] - tr.switch_times[j - 1];
                    worst_gap_lo = std::min(worst_gap_lo, gap);
                    worst_gap_hi = std::max(worst_gap_hi, gap);
                }
            }
        }
    }
    ck.add("pmp-hamiltonian-identity", worst2 <= 1e-9, worst2, "max deviation");
    ck.add("pmp-ellipsoid-identity", worst3 <= 1e-9, worst3, "max deviation");
    ck.add("interior-gaps-in-range", worst_gap_lo > 0 && worst_gap_hi <= pi + 1e-12,
           worst_gap_hi, "max gap");

    {
        bool ok = true;
        double worst_excess = -1e300, worst_spread = 0;
        for (double beta : {pi / 4, pi / 8}) {
            model md = model::from_angles(0.25, beta);
            bb_structure_report rep = verify_bb_structure(md, 100, 8 * pi);
            ok = ok && rep.pass;
            worst_excess = std::max(worst_excess, rep.worst_first_arc_excess);
            worst_spread = std::max(worst_spread, rep.worst_gap_spread);
        }
        std::ostringstream ss;
        ss << "first-arc excess = " << worst_excess << ", gap spread = " << worst_spread;
        ck.add("bang-structure", ok, ss.str());
    }

    {
        model md = model::from_angles(0.25, pi / 4);
        bool ok = true;
        double margin = 1e300;
        for (int j = 0; j < 360; ++j) {
            double theta = 2 * pi * (j + 0.5) / 360;
            switching_state phi = initial_switching(theta, md);
            double delta = 1.0 - phi.lambda0 * phi.lambda0 - md.sa * md.sa * md.cb * md.cb;
            ok = ok && phi.lambda0 < 0 && delta > md.sa * md.sa * md.sb * md.sb;
            margin = std::min(margin, delta - md.sa * md.sa * md.sb * md.sb);
        }
        ck.add("no-abnormal-extremals", ok, margin, "min drop margin");
    }

    {
        double worst = 0;
        for (family f : {family::pp, family::pm, family::mm, family::mp}) {
            model md = model::from_angles(0.25, pi / 4);
            double s = 0.6 * s_max(f, md);
            double v = interbang_duration(s, f, md);
            for (double t : {0.5 * s, s + 0.5 * v, s + 3.7 * v, s + 8.2 * v}) {
                vec3 a = extremal_point(t, f, s, md);
                vec3 b = chained_state(t, f, s, md);
                worst = std::max(worst, norm(a - b));
            }
        }
        ck.add("extremal-point-vs-flows", worst <= 1e-10, worst, "max distance");
    }

    {
        sampler rng2(seed ^ 0x9e3779b97f4a7c15ULL);
        double worst = 0;
        for (int i = 0; i < 50; ++i) {
            std::complex<double> p1(rng2.gaussian(), rng2.gaussian());
            std::complex<double> p2(rng2.gaussian(), rng2.gaussian());
            double n = std::sqrt(std::norm(p1) + std::norm(p2));
            if (n == 0) continue;
            vec3 x = hopf_project(p1 / n, p2 / n);
            worst = std::max(worst, std::fabs(norm(x) - 1.0));
        }
        vec3 ground = hopf_project(1.0, 0.0);
        worst = std::max(worst, norm(ground - north));
        ck.add("spinor-projection-unit", worst <= 1e-12, worst, "max defect");
    }
}

void suite_switching(checker& ck, uint64_t) {
    {
        model md = model::from_angles(0.25, pi / 4);
        double s_pi = first_switch_of_theta(pi, md);
        double sm = s_max(family::pp, md);
        double d1 = std::fabs(s_pi - sm);
        double d2 = std::fabs(sm - 1.6023721297233275);
        ck.add("first-arc-supremum-closed-form", d1 <= 1e-10 && d2 <= 1e-6,
               std::max(d1, d2), "max deviation");
    }
    {
        double worst = 0;
        for (double alpha : {0.1, 0.25}) {
            for (double beta : {pi / 8, pi / 4}) {
                model md = model::from_angles(alpha, beta);
                double sm = s_max(family::pp, md);
                for (int i = 1; i <= 10; ++i) {
                    double s = sm * i / 10.5;
                    double va = interbang_duration(s, family::pp, md);
                    double vb = v_general_closed_form(s, family::pp, md);
                    worst = std::max(worst, std::fabs(va - vb));
                    if (beta == pi / 4)
                        worst = std::max(worst, std::fabs(va - v_pi4_closed_form(s, md)));
                    double theta = theta_of_first_switch(family::pp, s, md);
                    extremal_trace tr = extremal_from_theta(theta, s + 3 * va, md);
                    if (tr.switch_times.size() >= 2)
                        worst = std::max(worst, std::fabs(tr.switch_times[1] -
                                                          tr.switch_times[0] - va));
                }
            }
        }
        ck.add("interior-duration-triple-agreement", worst <= 1e-8, worst, "max spread");
    }
    {
        double worst = 0;
        for (double alpha : {0.1, 0.25}) {
            model md = model::from_angles(alpha, pi / 4);
            double sm = s_max(family::pp, md);
            worst = std::max(worst,
                             std::fabs(interbang_duration(1e-12, family::pp, md) - sm));
            worst = std::max(worst, std::fabs(interbang_duration(sm, family::pp, md) - sm));
        }
        ck.add("interior-duration-endpoints", worst <= 1e-10, worst, "max deviation");
    }
    {
        double worst = 0;
        for (double alpha : {0.05, 0.1, 0.2, 0.3, 0.4, 0.7}) {
            model md = model::from_angles(alpha, pi / 4);
            double sm = s_max(family::pp, md);
            mat3 mb = monodromy(sm, family::pp, md);
            worst = std::max(worst, max_abs_diff(mb, rot_x1(4 * theta_of_alpha(alpha))));
        }
        ck.add("monodromy-boundary-rotation", worst <= 1e-12, worst, "max entry error");
    }
    {
        model md = model::from_angles(0.25, pi / 4);
        mat3 mb = monodromy(1e-12, family::pp, md);
        vec3 x = north;
        double worst = 0;
        for (int n = 1; n <= 50; ++n) {
            x = normalized(mul(mb, x));
            worst = std::max(worst, std::fabs(x[0]));
        }
        ck.add("monodromy-powers-meridian", worst <= 1e-12, worst, "max x1");
    }
    {
        auto v_err = [](double alpha) {
            model md = model::from_angles(alpha, pi / 4);
            double sm = s_max(family::pp, md);
            double worst = 0;
            for (int i = 1; i <= 12; ++i) {
                double s = sm * i / 12.5;
                worst = std::max(worst, std::fabs(interbang_duration(s, family::pp, md) -
                                                  v_taylor(s, alpha)));
            }
            return worst;
        };
        double e1 = v_err(0.1), e2 = v_err(0.05), e3 = v_err(0.025);
        bool ok = e1 / e2 >= 32 && e1 / e2 <= 128 && e2 / e3 >= 32 && e2 / e3 <= 128;
        std::ostringstream ss;
        ss << "halving ratios " << e1 / e2 << ", " << e2 / e3;
        ck.add("interior-duration-series-rate", ok, ss.str());
    }
    {
        auto m_err = [](double alpha) {
            model md = model::from_angles(alpha, pi / 4);
            double sm = s_max(family::pp, md);
            double worst = 0;
            for (int i = 1; i <= 8; ++i) {
                double s = sm * i / 8.5;
                worst = std::max(worst, max_abs_diff(monodromy(s, family::pp, md),
                                                     monodromy_taylor(s, alpha)));
            }
            return worst;
        };
        double e1 = m_err(0.1), e2 = m_err(0.05), e3 = m_err(0.025);
        bool ok = e1 / e2 >= 16 && e1 / e2 <= 64 && e2 / e3 >= 16 && e2 / e3 <= 64;
        std::ostringstream ss;
        ss << "halving ratios " << e1 / e2 << ", " << e2 / e3;
        ck.add("monodromy-series-rate", ok, ss.str());
    }
    {
        model md = model::from_angles(0.25, pi / 4);
        const struct {
            double theta;
            int expected;
        } cases[] = {{0.4, 2}, {0.4 + pi / 2, 1}, {0.4 + pi, 2}, {0.4 + 3 * pi / 2, 1}};
        bool ok = true;
        for (const auto& c : cases) {
            extremal_trace tr = extremal_from_theta(c.theta, 8.0, md);
            ok = ok && !tr.switch_indices.empty() && tr.switch_indices[0] == c.expected;
        }
        ck.add("first-switch-component-by-family", ok,
               ok ? "all four quadrants as expected" : "unexpected first component");
    }
    {
        double d1 = std::fabs(theta_of_alpha(0.25) - (-0.35725900791669046));
        double d2 = std::fabs(theta_of_alpha(0.01) + std::sqrt(2.0) * 0.01);
        ck.add("cycle-step-angle", d1 <= 1e-12 && d2 <= 1e-5, std::max(d1, d2),
               "max deviation");
    }
}

void suite_synthesis(checker& ck, uint64_t seed) {
    model md = model::from_angles(0.25, pi / 4);
    double exclusion = 3 * 0.25;

    {
        sampler rng(seed);
        double worst_res = 0, worst_rt = 0;
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            vec3 target = random_target_outside(rng, exclusion);
            synthesis_result sol = solve_synthesis(target, md);
            worst_res = std::max(worst_res, sol.residual);
            vec3 again = extremal_point(sol.total_time, sol.fam, sol.s, md);
            worst_rt = std::max(worst_rt, norm(again - target));
            ok = ok && sol.total_time >= angle_between(north, target) - 1e-9;
        }
        std::ostringstream ss;
        ss << "max residual = " << worst_res << ", max replay distance = " << worst_rt;
        ck.add("solver-roundtrip", ok && worst_res <= 1e-7 && worst_rt <= 1e-6, ss.str());
    }
    {
        sampler rng(seed ^ 0xabcdef12345ULL);
        bool ok = true;
        double worst_ds = 0;
        for (int i = 0; i < 10; ++i) {
            vec3 target = random_target_outside(rng, exclusion);
            synthesis_result a = solve_synthesis(target, md);
            vec3 nudged = normalized(target + 1e-10 * cross(target, north));
            synthesis_result b = solve_synthesis(nudged, md);
            ok = ok && a.fam == b.fam && a.n == b.n && a.phase == b.phase;
            worst_ds = std::max(worst_ds, std::fabs(a.s - b.s));
        }
        ck.add("solver-uniqueness-stability", ok && worst_ds <= 1e-5, worst_ds,
               "max first-arc shift");
    }
    {
        vec3 target = flow_normalized(md, north, {1, 1}, 0.5);
        synthesis_result sol = solve_synthesis(target, md);
        bool ok = sol.fam == family::pp && sol.n == 0 && sol.phase == 0 &&
                  std::fabs(sol.total_time - 0.5) <= 1e-9;
        ck.add("solver-first-arc-target", ok, std::fabs(sol.total_time - 0.5),
               "time deviation");
    }
    {
        bool ok = false;
        std::string code = "(none)";
        try {
            solve_synthesis(south, md);
        } catch (const error& e) {
            code = e.code();
            ok = code == errc::target_in_cut_locus;
        }
        ck.add("solver-rejects-pole-disk", ok, "error code " + code);
    }
    {
        double worst = 0;
        mat3 mb0 = monodromy(1e-12, family::pp, md);
        double sm = s_max(family::pp, md);
        mat3 mbs = monodromy(sm, family::pp, md);
        vec3 e0 = north;
        vec3 es = flow_normalized(md, north, {1, 1}, sm);
        for (int k = 1; k <= 6; ++k) {
            worst = std::max(worst, std::min(std::fabs(e0[0]), std::fabs(e0[1])));
            worst = std::max(worst, std::min(std::fabs(es[0]), std::fabs(es[1])));
            e0 = normalized(mul(mb0, e0));
            es = normalized(mul(mbs, es));
        }
        ck.add("curve-endpoints-on-meridians", worst <= 1e-10, worst,
               "max off-plane coordinate");
    }
    {
        bool all_outside_pass = true;
        bool some_inside_fails = false;
        int outside = 0, inside = 0;
        for (int k = 2; k <= 7; ++k) {
            for (const auto& cs : switching_curve(k, family::pp, 40, md)) {
                refraction_result rr = refraction_test(cs.k, family::pp, cs.s, md);
                if (angle_between(cs.point, south) > exclusion) {
                    ++outside;
                    all_outside_pass = all_outside_pass && rr.locally_optimal;
                } else {
                    ++inside;
                    if (!rr.locally_optimal) some_inside_fails = true;
                }
            }
        }
        std::ostringstream ss;
        ss << outside << " samples outside, " << inside << " inside";
        ck.add("refraction-outside-pole-disk", all_outside_pass, ss.str());
        ck.add("refraction-fails-inside-disk", some_inside_fails, ss.str());
    }
    {
        double reps[4] = {0.3, 0.3 + pi / 2, 0.3 + pi, 0.3 + 3 * pi / 2};
        extremal_trace trs[4];
        double arrive = 1e300;
        for (int i = 0; i < 4; ++i) {
            trs[i] = extremal_from_theta(reps[i], 30.0, md);
            auto hit = first_time_within(reps[i], south, exclusion, 30.0, 0.02, md);
            if (hit) arrive = std::min(arrive, *hit);
        }
        double min_dist = 1e300;
        for (double t = 0.05; t < arrive; t += 0.05)
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    min_dist = std::min(min_dist,
                                        norm(extremal_state(md, trs[i], t) -
                                             extremal_state(md, trs[j], t)));
        ck.add("four-family-disjointness", min_dist > 1e-6, min_dist,
               "min pairwise distance");
    }
    {
        auto loci = singular_loci(90, md);
        double worst = 0;
        double ta = md.sa / md.ca;
        for (const auto& smp : loci) {
            double defect;
            if (smp.label == "C0")
                defect = std::fabs(smp.x[2]);
            else if (smp.label == "C1+")
                defect = std::fabs(smp.x[2] - ta * md.cb * smp.x[1]);
            else if (smp.label == "C1-")
                defect = std::fabs(smp.x[2] + ta * md.cb * smp.x[1]);
            else if (smp.label == "C2+")
                defect = std::fabs(smp.x[2] + ta * md.sb * smp.x[0]);
            else
                defect = std::fabs(smp.x[2] - ta * md.sb * smp.x[0]);
            worst = std::max(worst, std::fabs(norm(smp.x) - 1.0));
            worst = std::max(worst, defect);
        }
        ck.add("singular-loci-planes", worst <= 1e-12, worst, "max plane defect");
    }
    {
        sampler rng(seed ^ 0x5555aaaa5555ULL);
        double dt = 0.02, eps = 0.05;
        bool ok = true;
        std::ostringstream ss;
        for (int i = 0; i < 3; ++i) {
            vec3 target = random_target_outside(rng, exclusion);
            synthesis_result sol = solve_synthesis(target, md);
            oracle_result orc = min_time_bracket(target, md, dt, eps);
            // honest band: near the slow cap the ball is crossed at tangential
            // speed ~sin(alpha), and the spiral heading can halve the closing
            // rate again, so allow twice the first-order corner cut plus a step
            double slack = 2 * eps / md.sa + dt;
            bool this_ok = orc.t_lower <= sol.total_time + 1e-9 &&
                           sol.total_time >= orc.t_lo - 0.1 - 1e-9 &&
                           sol.total_time <= orc.t_hi + slack + 1e-9;
            ok = ok && this_ok;
            ss << "T=" << sol.total_time << " in [" << orc.t_lo - 0.1 << ", "
               << orc.t_hi + slack << "]; ";
        }
        ck.add("sweep-bracket-consistency", ok, ss.str());
    }
}

void suite_appendix(checker& ck, uint64_t) {
    {
        bool ok = true;
        double worst_ratio = 0;
        for (double alpha : {0.01, 0.05, 0.1}) {
            strategy_report rep = s1_schedule(alpha);
            ok = ok && rep.miss_angle <= 5.7 * alpha;
            worst_ratio = std::max(worst_ratio, rep.miss_angle / alpha);
        }
        ck.add("saturated-cycles-miss-scaling", ok, worst_ratio, "max miss/alpha");
    }
    {
        strategy_report rep = s1_schedule(0.01);
        bool ok = rep.n == 56;
        for (double alpha : {0.02, 0.01}) {
            strategy_report r = s1_schedule(alpha);
            double predicted = pi * pi / (2 * std::sqrt(2.0) * alpha);
            ok = ok && std::fabs(r.transfer_time_normalized / predicted - 1.0) <= 0.02;
        }
        ck.add("saturated-cycles-duration", ok,
               ok ? "cycle count and leading-order time agree"
                  : "count or duration off");
    }
    {
        double m0 = s1_schedule(0.05, 0).miss_angle;
        double worst = 0;
        for (int shift = 1; shift < 4; ++shift)
            worst = std::max(worst,
                             std::fabs(s1_schedule(0.05, shift).miss_angle - m0));
        ck.add("saturated-cycles-cyclic-shift", worst <= 1e-9, worst, "max miss spread");
    }
    {
        auto percycle_err = [](double alpha) {
            model md = model::from_angles(alpha, pi / 4);
            mat3 m = mat3::identity();
            const control cyc[4] = {{1, -1}, {-1, -1}, {-1, 1}, {1, 1}};
            for (const auto& u : cyc)
                m = mul(rotation(md.axis(u.u1, u.u2), pi / 2), m);
            return max_abs_diff(m, rot_x1(-4 * std::sqrt(2.0) * alpha));
        };
        double e1 = percycle_err(0.1), e2 = percycle_err(0.05), e3 = percycle_err(0.025);
        bool ok = e1 <= 2 * 0.1 * 0.1 && e1 / e2 >= 2.8 && e1 / e2 <= 4.5 &&
                  e2 / e3 >= 2.8 && e2 / e3 <= 4.5;
        std::ostringstream ss;
        ss << "halving ratios " << e1 / e2 << ", " << e2 / e3;
        ck.add("saturated-cycle-rotation-step", ok, ss.str());
    }
    {
        double worst = 0;
        bool ok = true;
        for (double alpha : {0.05, 0.1, 0.2}) {
            strategy_report rep = s2_schedule(alpha);
            worst = std::max(worst, rep.miss_angle);
            ok = ok && rep.gamma && *rep.gamma <= 1.0 + 1e-12;
        }
        strategy_report small = s2_schedule(0.01);
        ok = ok && std::fabs(*small.gamma - 0.9917) <= 2e-4 &&
             small.miss_angle <= 1e-8;
        ck.add("derated-cycles-exact-arrival", ok && worst <= 1e-8, worst, "max miss");
    }
    {
        double lo = 1e300, hi = 0;
        for (double alpha : {0.05, 0.1}) {
            double miss = s2_schedule_printed(alpha).miss_angle;
            lo = std::min(lo, miss);
            hi = std::max(hi, miss);
        }
        ck.add("derated-cycles-literal-variant-misses", lo >= 1e-6 && hi <= 0.1, hi,
               "max miss");
    }
    {
        int n = static_cast<int>(std::ceil(pi / (4 * std::fabs(theta_of_alpha(0.2)))));
        // nudge off the fixed point so the cycle-count ceiling cannot flip
        double fixed = alpha_bar(0.2, n) + 1e-9;
        strategy_report rep = s2_schedule(fixed);
        bool ok = rep.gamma && std::fabs(*rep.gamma - 1.0) <= 1e-6;
        ck.add("derated-cycles-fixed-point", ok, std::fabs(*rep.gamma - 1.0),
               "gamma shortfall");
    }
    {
        double d_tc = std::fabs(circle_transfer_time(0.1) - 5 * pi);
        vec3 f1 = circle_simulate(1.0, 0.01, 0.0, circle_transfer_time(0.01), 40000);
        vec3 f2 = circle_simulate(1.0, 0.01, 1.2, circle_transfer_time(0.01), 40000);
        vec3 f3 = circle_simulate(1.0, 0.1, 0.0, circle_transfer_time(0.1), 40000);
        double worst = std::max({angle_between(f1, south), angle_between(f2, south)});
        bool ok = d_tc <= 1e-12 && worst <= 1e-3 && angle_between(f3, south) <= 1e-6;
        ck.add("circular-drive-exact-transfer", ok, worst, "max integrated miss");
    }
    {
        double r005 = compare_ratio(0.005);
        double r05 = compare_ratio(0.05), r02 = compare_ratio(0.02);
        double rs2 = compare_ratio_s2(0.01), rs1 = compare_ratio(0.01);
        bool ok = r005 >= 0.77 && r005 <= 0.80 && r05 > r02 &&
                  std::fabs(rs2 - rs1) <= 5 * 0.01;
        std::ostringstream ss;
        ss << "ratio(0.005) = " << r005 << ", ratio(0.05) = " << r05;
        ck.add("strategy-vs-circle-ratio", ok, ss.str());
    }
    {
        mat3 id = monodromy_taylor(0.7, 0.0);
        double worst = max_abs_diff(id, mat3::identity());
        double alpha = 0.1, s = 0.9;
        double f8 = (2 * std::sqrt(2.0) / 3) * (-34 + 3 * std::cos(s) + 3 * std::sin(s));
        mat3 ma = monodromy_taylor(s, alpha);
        double expect = -(4 * std::sqrt(2.0) * alpha + f8 * alpha * alpha * alpha);
        worst = std::max(worst, std::fabs(ma.m[1][2] - expect));
        ck.add("monodromy-series-structure", worst <= 1e-15, worst, "max defect");
    }
}

} // namespace

std::vector<check_result> run_suite(const std::string& suite, uint64_t seed) {
    checker ck;
    bool any = false;
    if (suite == "invariants" || suite == "all") {
        suite_invariants(ck, seed);
        any = true;
    }
    if (suite == "switching" || suite == "all") {
        suite_switching(ck, seed);
        any = true;
    }
    if (suite == "synthesis" || suite == "all") {
        suite_synthesis(ck, seed);
        any = true;
    }
    if (suite == "appendix" || suite == "all") {
        suite_appendix(ck, seed);
        any = true;
    }
    if (!any)
        throw error(errc::bad_arguments, "unknown suite: " + suite);
    return ck.out;
}

bool all_passed(const std::vector<check_result>& checks) {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

}
