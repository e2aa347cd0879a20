#include "bloch/suboptimal.hpp"

#include <cmath>

#include "bloch/errors.hpp"
#include "bloch/switching.hpp"

namespace bloch {

namespace {

constexpr double pi = 3.14159265358979323846;

constexpr control k_cycle[4] = {{1, -1}, {-1, -1}, {-1, 1}, {1, 1}};

vec3 run_schedule(const model& md, const control_schedule& sched) {
    vec3 x = north;
    for (const auto& arc : sched)
        x = flow_normalized(md, x, arc.u, arc.duration);
    return x;
}

strategy_report finish(strategy_report rep, const model& md) {
    rep.final_state = run_schedule(md, rep.schedule);
    rep.miss_angle = angle_between(rep.final_state, south);
    return rep;
}

} // namespace

strategy_report s1_schedule(double alpha, int cycle_shift) {
    model md = model::from_angles(alpha, pi / 4);
    strategy_report rep;
    rep.strategy = "s1";
    rep.alpha = alpha;
    rep.n = static_cast<int>(std::ceil(pi / (4.0 * std::sqrt(2.0) * alpha)));
    rep.arc_duration = pi / 2;
    rep.transfer_time_normalized = rep.n * 2.0 * pi;
    int shift = ((cycle_shift % 4) + 4) % 4;
    for (int c = 0; c < rep.n; ++c)
        for (int i = 0; i < 4; ++i)
            rep.schedule.push_back({k_cycle[(i + shift) % 4], rep.arc_duration});
    return finish(std::move(rep), md);
}

double alpha_bar(double alpha, int n) {
    auto g = [n](double a) { return 4.0 * n * std::fabs(theta_of_alpha(a)) - pi; };
    double lo = 0.0, hi = alpha;
    if (g(hi) < 0.0)
        throw error(errc::solve_failed, "alpha_bar: bracket does not contain a root");
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

strategy_report s2_common(double alpha, bool exact) {
    model md = model::from_angles(alpha, pi / 4);
    strategy_report rep;
    rep.strategy = "s2";
    rep.alpha = alpha;
    rep.n = static_cast<int>(std::ceil(pi / (4.0 * std::fabs(theta_of_alpha(alpha)))));
    double ab = alpha_bar(alpha, rep.n);
    model mb = model::from_angles(ab, pi / 4);
    double arc_bar = s_max(family::pp, mb);
    if (exact) {
        // flowing the de-rated field for t equals flowing the smaller-tilt unit field
        // for t*cos(alpha)/cos(ab); gamma = tan(ab)/tan(alpha) makes the axes collinear
        rep.gamma = std::tan(ab) / std::tan(alpha);
        rep.arc_duration = arc_bar * std::cos(ab) / std::cos(alpha);
    } else {
        rep.gamma = std::sin(ab) / std::sin(alpha);
        rep.arc_duration = arc_bar;
    }
    rep.transfer_time_normalized = 4.0 * rep.n * rep.arc_duration;
    double g = *rep.gamma;
    for (int c = 0; c < rep.n; ++c)
        for (const auto& u : k_cycle)
            rep.schedule.push_back({{g * u.u1, g * u.u2}, rep.arc_duration});
    return finish(std::move(rep), md);
}

} // namespace

strategy_report s2_schedule(double alpha) { return s2_common(alpha, true); }

strategy_report s2_schedule_printed(double alpha) { return s2_common(alpha, false); }

double circle_transfer_time(double M) {
    if (M <= 0)
        throw error(errc::bad_arguments, "circle_transfer_time: M must be positive");
    return pi / (2.0 * M);
}

vec3 circle_simulate(double E, double M, double phase, double t_final, int steps) {
    if (E <= 0)
        throw error(errc::non_positive_e, "circle_simulate: E must be positive");
    if (M <= 0 || steps < 1)
        throw error(errc::bad_arguments, "circle_simulate: need M > 0 and steps >= 1");
    auto deriv = [&](double t, const vec3& x) {
        double o1 = M * std::sin(2.0 * E * t + phase);
        double o2 = M * std::cos(2.0 * E * t + phase);
        vec3 w{2.0 * o1, -2.0 * o2, 2.0 * E};
        return cross(w, x);
    };
    vec3 x = north;
    double h = t_final / steps;
    for (int i = 0; i < steps; ++i) {
        double t = i * h;
        vec3 k1 = deriv(t, x);
        vec3 k2 = deriv(t + h / 2, x + (h / 2) * k1);
        vec3 k3 = deriv(t + h / 2, x + (h / 2) * k2);
        vec3 k4 = deriv(t + h, x + h * k3);
        x = x + (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        x = normalized(x);
    }
    return x;
}

namespace {

double ratio_for(const strategy_report& rep, double alpha) {
    double M = std::tan(alpha) / std::sqrt(2.0);
    double k = 2.0 * std::sqrt(1.0 + 2.0 * M * M);
    double t_phys = rep.transfer_time_normalized / k;
    return t_phys / circle_transfer_time(M);
}

} // namespace

double compare_ratio(double alpha) { return ratio_for(s1_schedule(alpha), alpha); }

double compare_ratio_s2(double alpha) { return ratio_for(s2_schedule(alpha), alpha); }

}
