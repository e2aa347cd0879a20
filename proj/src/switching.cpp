#include "bloch/switching.hpp"

#include <cmath>

#include "bloch/errors.hpp"

namespace bloch {

namespace {

constexpr double pi = 3.14159265358979323846;

double clamp1(double x, double tol, const char* what) {
    if (x > 1.0 + tol || x < -1.0 - tol)
        throw error(errc::domain_error, std::string(what) + ": arccos argument outside [-1,1]");
    return x > 1.0 ? 1.0 : (x < -1.0 ? -1.0 : x);
}

} // namespace

control first_control(family f) {
    switch (f) {
    case family::pp: return {1, 1};
    case family::pm: return {1, -1};
    case family::mm: return {-1, -1};
    default: return {-1, 1};
    }
}

std::array<control, 4> bang_cycle(family f) {
    switch (f) {
    case family::pp: return {{{1, -1}, {-1, -1}, {-1, 1}, {1, 1}}};
    case family::pm: return {{{-1, -1}, {-1, 1}, {1, 1}, {1, -1}}};
    case family::mm: return {{{-1, 1}, {1, 1}, {1, -1}, {-1, -1}}};
    default: return {{{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}};
    }
}

const char* family_name(family f) {
    switch (f) {
    case family::pp: return "pp";
    case family::pm: return "pm";
    case family::mm: return "mm";
    default: return "mp";
    }
}

family family_from_name(const std::string& s) {
    if (s == "pp") return family::pp;
    if (s == "pm") return family::pm;
    if (s == "mm") return family::mm;
    if (s == "mp") return family::mp;
    throw error(errc::bad_arguments, "unknown family '" + s + "'");
}

family family_of_theta(double theta) {
    double th = std::fmod(theta, 2 * pi);
    if (th < 0) th += 2 * pi;
    if (th < pi / 2) return family::mm;
    if (th < pi) return family::mp;
    if (th < 3 * pi / 2) return family::pp;
    return family::pm;
}

double s_max(family f, const model& md) {
    control u = first_control(f);
    return md.s_max_branch(u.u1, u.u2);
}

double first_switch_of_theta(double theta, const model& md) {
    switching_state s0 = initial_switching(theta, md);
    control u = initial_bang_control(theta, md);
    try {
        return next_switching_time(s0, u, md).dt;
    } catch (const error&) {
        throw error(errc::no_root, "no first switching time for this covector angle");
    }
}

first_switch_coeffs first_switch_equation_pp(double theta, const model& md) {
    double sa2 = md.sa * md.sa;
    double a = (2.0 * (1.0 - sa2 * md.cb * md.cb) / sa2) * std::cos(theta)
             - std::sin(2 * md.p.beta) * std::sin(theta);
    double b = (2.0 * md.ca / sa2) * std::sin(theta);
    double c = (1.0 + std::cos(2 * md.p.beta)) * std::cos(theta)
             + std::sin(2 * md.p.beta) * std::sin(theta);
    return {a, b, c};
}

double theta_of_first_switch(family f, double s, const model& md) {
    static const double qlo[] = {pi, 3 * pi / 2, 0.0, pi / 2};
    int qi = f == family::pp ? 0 : f == family::pm ? 1 : f == family::mm ? 2 : 3;
    // the duration decreases from s_max at the left quadrant edge towards zero
    // at the right one; stay far enough from the right edge that the vanishing
    // first switch is still resolvable as a positive root
    double lo = qlo[qi] + 1e-9, hi = qlo[qi] + pi / 2 - 1e-7;
    double slo = first_switch_of_theta(lo, md);
    double shi = first_switch_of_theta(hi, md);
    if ((s - slo) * (s - shi) > 0)
        throw error(errc::no_root, "first-arc duration outside this family's range");
    bool increasing = shi > slo;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double sm = first_switch_of_theta(mid, md);
        if ((sm < s) == increasing)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

trig_coeffs interbang_coeffs(double s, family f, const model& md) {
    control uf = first_control(f);
    vec3 xs = flow_normalized(md, north, uf, s);
    // the switch swaps the component whose field enters the coplanarity test;
    // after a u1*u2 > 0 arc the u2 sign flips first, otherwise the u1 sign
    control un{};
    vec3 gj, gjp;
    if (uf.u1 * uf.u2 > 0) {
        un = {uf.u1, -uf.u2};
        gj = md.g2;
        gjp = md.g1;
    } else {
        un = {-uf.u1, uf.u2};
        gj = md.g1;
        gjp = md.g2;
    }
    vec3 ax = md.axis(un.u1, un.u2);
    auto h = [&](double v) {
        return det(gj, mul(rotation(ax, -v), gjp), xs);
    };
    double h0 = h(0), hpi = h(pi), hhalf = h(pi / 2);
    double a = 0.5 * (h0 - hpi);
    double c = 0.5 * (h0 + hpi);
    double b = hhalf - c;
    return {a, b, c};
}

double interbang_duration(double s, family f, const model& md) {
    trig_coeffs tc = interbang_coeffs(s, f, md);
    auto hv = [&](double v) { return tc.a * std::cos(v) + tc.b * std::sin(v) + tc.c; };
    double prev_v = 1e-9, prev_h = hv(prev_v);
    double lo = -1, hi = -1;
    for (int i = 1; i <= 256; ++i) {
        double v = i * pi / 256;
        double hh = hv(v);
        if (prev_h * hh <= 0) {
            lo = prev_v;
            hi = v;
            break;
        }
        prev_v = v;
        prev_h = hh;
    }
    if (lo < 0)
        throw error(errc::root_outside_range, "interior-arc equation has no root in (0, pi]");
    for (int i = 0; i < 100; ++i) {
        double mid = 0.5 * (lo + hi);
        if (hv(lo) * hv(mid) <= 0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double v_general_closed_form(double s, family f, const model& md) {
    trig_coeffs tc = interbang_coeffs(s, f, md);
    double R = std::hypot(tc.a, tc.b);
    if (R < 1e-300)
        throw error(errc::domain_error, "degenerate interior-arc equation");
    double arg = clamp1(-tc.c / R, 1e-9, "interior-arc duration");
    double ph = std::atan2(tc.b, tc.a);
    double base = std::acos(arg);
    double best = -1;
    for (double cand : {ph + base, ph - base}) {
        double v = std::fmod(cand, 2 * pi);
        if (v < 0) v += 2 * pi;
        if (v > 1e-12 && v <= pi + 1e-9 && (best < 0 || v < best))
            best = v;
    }
    if (best < 0)
        throw error(errc::root_outside_range, "interior-arc root not in (0, pi]");
    return std::min(best, pi);
}

double v_pi4_closed_form(double s, const model& md) {
    if (std::abs(md.p.beta - pi / 4) > 1e-12)
        throw error(errc::beta_not_quarter_pi, "formula requires beta = pi/4");
    double sa = md.sa, ca = md.ca;
    double s2a = std::sin(2 * md.p.alpha);
    double A = 8 * ca * sa * sa * std::sin(s);
    double B = 2 * s2a * s2a * std::cos(s);
    double C = 4 * sa * sa * sa * sa * std::cos(2 * s);
    double d = s2a * s2a;
    double e = 5 + 2 * std::cos(2 * md.p.alpha) + std::cos(4 * md.p.alpha);
    double arg = clamp1((d - A - B - C) / (e - A + B), 1e-9, "quarter-pi interior duration");
    return std::acos(arg);
}

double theta_of_alpha(double alpha) {
    double sa = std::sin(alpha), ca = std::cos(alpha);
    return std::asin(-2 * std::sqrt(2.0) * sa * ca / (1 + ca * ca));
}

double v_taylor(double s, double alpha) {
    double f1 = -0.5 + std::cos(s) + std::sin(s);
    double f2 = -1.0 / 12 + std::sin(s) / 6 + 2 * std::cos(s) / 3 - 0.5 * std::cos(2 * s);
    double a2 = alpha * alpha;
    return pi / 2 + f1 * a2 + f2 * a2 * a2;
}

mat3 monodromy(double s, family f, const model& md) {
    double v = interbang_duration(s, f, md);
    mat3 M = mat3::identity();
    for (const control& u : bang_cycle(f))
        M = mul(rotation(md.axis(u.u1, u.u2), v), M);
    return M;
}

mat3 monodromy_taylor(double s, double alpha) {
    double cs = std::cos(s), sn = std::sin(s);
    double f3 = 16 * sn - 16 * cs * sn - 16 + 16 * cs;
    double f4 = 4 - 4 * cs - 4 * sn;
    double f5 = -70.0 / 3 + 58.0 / 3 * cs + 64.0 / 3 * sn + 4 * cs * cs;
    double f6 = 8 * std::sqrt(2.0) * (-1 + cs + sn);
    double f7 = 112.0 / 3 - 16 * cs * sn;
    double f8 = 2 * std::sqrt(2.0) / 3 * (-34 + 3 * cs + 3 * sn);
    double f9 = 160.0 / 3 - 16 * sn - 16 * cs;
    double a = alpha, a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
    double r = 4 * std::sqrt(2.0) * a + f8 * a3;
    return {{{1 + f3 * a4, f4 * a2 + f5 * a4, f6 * a3},
             {-f4 * a2 - f5 * a4, 1 - 16 * a2 + f7 * a4, -r},
             {f6 * a3, r, 1 - 16 * a2 + f9 * a4}}};
}

} // namespace bloch
