#include "bloch/synthesis.hpp"

#include <algorithm>
#include <cmath>

#include "bloch/errors.hpp"

namespace bloch {

namespace {

constexpr double pi = 3.14159265358979323846;

vec3 chain_point(const model& md, family f, double s, double v, int m, double tail) {
    // first arc s, then m-1 interior arcs of duration v, then `tail` on arc m
    vec3 x = flow_normalized(md, north, first_control(f), s);
    auto cyc = bang_cycle(f);
    for (int i = 0; i < m - 1; ++i) {
        const control& u = cyc[i % 4];
        x = flow_normalized(md, x, u, v);
    }
    if (m >= 1 && tail != 0.0) {
        const control& u = cyc[(m - 1) % 4];
        x = flow_normalized(md, x, u, tail);
    }
    return x;
}

} // namespace

extremal_spec spec_at_time(double t, family f, double s, const model& md) {
    if (t <= s)
        return {f, s, 0, 0, t};
    double v = interbang_duration(s, f, md);
    double w = t - s;
    int n = static_cast<int>(std::floor(w / (4 * v)));
    double r = w - 4 * v * n;
    int phase = static_cast<int>(std::floor(r / v)) + 1;
    if (phase > 4) phase = 4; // guard against r == 4v rounding
    double leftover = r - (phase - 1) * v;
    return {f, s, n, phase, leftover};
}

vec3 extremal_point(double t, family f, double s, const model& md) {
    if (t <= s)
        return flow_normalized(md, north, first_control(f), t);
    extremal_spec sp = spec_at_time(t, f, s, md);
    double v = interbang_duration(s, f, md);
    vec3 x = flow_normalized(md, north, first_control(f), s);
    mat3 M = monodromy(s, f, md);
    for (int i = 0; i < sp.n; ++i)
        x = normalized(mul(M, x));
    auto cyc = bang_cycle(f);
    for (int i = 0; i < sp.phase - 1; ++i)
        x = flow_normalized(md, x, cyc[i], v);
    x = flow_normalized(md, x, cyc[sp.phase - 1], sp.leftover);
    return x;
}

std::vector<curve_sample> switching_curve(int k, family f, int samples, const model& md) {
    if (k < 1)
        throw error(errc::bad_arguments, "switching-curve index starts at 1");
    if (samples < 2)
        throw error(errc::bad_arguments, "need at least two samples");
    double sm = s_max(f, md);
    std::vector<curve_sample> out;
    out.reserve(samples);
    for (int i = 1; i <= samples; ++i) {
        double s = sm * i / samples;
        vec3 x = flow_normalized(md, north, first_control(f), s);
        if (k > 1) {
            mat3 M = monodromy(s, f, md);
            for (int j = 0; j < k - 1; ++j)
                x = normalized(mul(M, x));
        }
        out.push_back({k, s, x});
    }
    return out;
}

refraction_result refraction_test(int k, family f, double s, const model& md) {
    double sm = s_max(f, md);
    double ds = 1e-4 * sm;
    if (s < 0 || s > sm)
        throw error(errc::bad_arguments, "sample outside the parameter range");
    auto curve_point = [&](double s_) {
        vec3 x = flow_normalized(md, north, first_control(f), s_);
        mat3 M = monodromy(s_, f, md);
        for (int j = 0; j < k - 1; ++j)
            x = normalized(mul(M, x));
        return x;
    };
    vec3 p = curve_point(s);
    // differencing stencil shifted inward at the endpoints so the tangent is
    // always a symmetric estimate of an interior derivative
    double sc = std::min(std::max(s, ds), sm - ds);
    vec3 tangent = (1.0 / (2 * ds)) * (curve_point(sc + ds) - curve_point(sc - ds));
    control uin = first_control(f);
    control uout = bang_cycle(f)[0];
    vec3 y1 = cross(md.axis(uin.u1, uin.u2), p);
    vec3 y2 = cross(md.axis(uout.u1, uout.u2), p);
    // least squares for tangent = c1 y1 + c2 y2 via the 2x2 normal equations
    double g11 = dot(y1, y1), g12 = dot(y1, y2), g22 = dot(y2, y2);
    double b1 = dot(y1, tangent), b2 = dot(y2, tangent);
    double den = g11 * g22 - g12 * g12;
    if (den < 1e-18 * std::max(g11 * g22, 1e-300))
        throw error(errc::degenerate_fields, "incoming and outgoing fields are parallel here");
    double c1 = (g22 * b1 - g12 * b2) / den;
    double c2 = (g11 * b2 - g12 * b1) / den;
    vec3 fit = c1 * y1 + c2 * y2;
    double residual = norm(tangent - fit) / std::max(norm(tangent), 1e-300);
    // opposite-sign coefficients mean the two fields cross the curve from
    // opposite sides; an outgoing component at noise level means the curve is
    // itself a trajectory of the incoming field (the tangential first curve),
    // which is optimal as well
    bool optimal = c1 * c2 < 0 || std::fabs(c2) <= 1e-9 * std::max(1.0, std::fabs(c1));
    return {c1, c2, residual, optimal};
}

std::vector<front_sample> extremal_front(double t, int samples, const model& md) {
    std::vector<front_sample> out;
    out.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        double theta = 2 * pi * i / samples;
        extremal_trace tr = extremal_from_theta(theta, t + 1e-12, md);
        out.push_back({theta, extremal_state(md, tr, t)});
    }
    return out;
}

int count_front_self_intersections(const std::vector<front_sample>& front) {
    int n = static_cast<int>(front.size());
    if (n < 4)
        return 0;
    int count = 0;
    for (int i = 0; i < n; ++i) {
        const vec3& a1 = front[i].x;
        const vec3& a2 = front[(i + 1) % n].x;
        for (int j = i + 1; j < n; ++j) {
            int gap = std::min(j - i, n - (j - i));
            if (gap <= 2)
                continue; // adjacent segments share endpoints
            const vec3& b1 = front[j].x;
            const vec3& b2 = front[(j + 1) % n].x;
            vec3 mid = a1 + a2 + b1 + b2;
            double nm = norm(mid);
            if (nm < 1e-6)
                continue;
            mid = (1.0 / nm) * mid;
            // both segments must sit well inside the gnomonic chart at mid
            double dmin = std::min(std::min(dot(a1, mid), dot(a2, mid)),
                                   std::min(dot(b1, mid), dot(b2, mid)));
            if (dmin < 0.5)
                continue;
            vec3 e1 = cross(mid, vec3{0, 0, 1});
            if (norm(e1) < 1e-9)
                e1 = cross(mid, vec3{1, 0, 0});
            e1 = normalized(e1);
            vec3 e2 = cross(mid, e1);
            auto chart = [&](const vec3& q) {
                double d = dot(q, mid);
                return std::array<double, 2>{dot(q, e1) / d, dot(q, e2) / d};
            };
            auto A1 = chart(a1), A2 = chart(a2), B1 = chart(b1), B2 = chart(b2);
            double d1x = A2[0] - A1[0], d1y = A2[1] - A1[1];
            double d2x = B2[0] - B1[0], d2y = B2[1] - B1[1];
            double den = d1x * d2y - d1y * d2x;
            if (std::abs(den) < 1e-18)
                continue;
            double rx = B1[0] - A1[0], ry = B1[1] - A1[1];
            double tt = (rx * d2y - ry * d2x) / den;
            double uu = (rx * d1y - ry * d1x) / den;
            if (tt >= 0 && tt <= 1 && uu >= 0 && uu <= 1)
                ++count;
        }
    }
    return count;
}

std::vector<locus_sample> singular_loci(int samples_per_locus, const model& md) {
    if (samples_per_locus < 3)
        throw error(errc::bad_arguments, "need at least three samples per locus");
    std::vector<locus_sample> out;
    double ta = md.sa / md.ca;
    auto circle = [&](const std::string& label, const vec3& e1, const vec3& e2, control u) {
        for (int i = 0; i < samples_per_locus; ++i) {
            double t = 2 * pi * i / samples_per_locus;
            out.push_back({label, std::cos(t) * e1 + std::sin(t) * e2, u});
        }
    };
    // equator: both switching functions vanish, the drift alone sustains it
    circle("C0", vec3{1, 0, 0}, vec3{0, 1, 0}, control{0, 0});
    // x3 = +-tan(a) cos(b) x2 with u = (0, +-1)
    for (double sign : {1.0, -1.0}) {
        vec3 e2 = normalized(vec3{0, 1, sign * ta * md.cb});
        circle(sign > 0 ? "C1+" : "C1-", vec3{1, 0, 0}, e2, control{0, sign});
    }
    // x3 = -+tan(a) sin(b) x1 with u = (+-1, 0)
    for (double sign : {1.0, -1.0}) {
        vec3 e2 = normalized(vec3{1, 0, -sign * ta * md.sb});
        circle(sign > 0 ? "C2+" : "C2-", vec3{0, 1, 0}, e2, control{sign, 0});
    }
    return out;
}

synthesis_result solve_synthesis(const vec3& target, const model& md,
                                 double exclusion_radius, double endpoint_tol) {
    if (std::abs(norm(target) - 1.0) > 1e-9)
        throw error(errc::bad_arguments, "target must be a unit vector");
    if (exclusion_radius < 0)
        exclusion_radius = 3 * md.p.alpha;
    if (angle_between(target, south) <= exclusion_radius)
        throw error(errc::target_in_cut_locus,
                    "target lies inside the exclusion disk around the south pole");

    bool have = false;
    synthesis_result best{};
    auto consider = [&](double T, family f, double s, int m, double v, double tau, const vec3& xe) {
        if (have && T >= best.total_time)
            return;
        synthesis_result r;
        r.fam = f;
        r.s = s;
        if (m == 0) {
            r.n = 0;
            r.phase = 0;
            r.leftover = tau;
        } else {
            r.n = (m - 1) / 4;
            r.phase = (m - 1) % 4 + 1;
            r.leftover = tau;
        }
        r.total_time = T;
        for (int i = 0; i < m; ++i)
            r.switch_times.push_back(s + i * v);
        r.final_state = xe;
        r.residual = norm(xe - target);
        best = r;
        have = true;
    };

    // trivial target on the source itself
    if (angle_between(target, north) < 1e-12)
        return {family::pp, 0.0, 0, 0, 0.0, 0.0, {}, north, 0.0};

    for (family f : {family::pp, family::pm, family::mm, family::mp}) {
        double sm = s_max(f, md);
        control uf = first_control(f);
        vec3 w = md.axis(uf.u1, uf.u2);
        auto cyc = bang_cycle(f);

        // switchless candidate: target on the first bang circle through north
        if (std::abs(dot(w, target) - dot(w, north)) < 1e-9) {
            vec3 a = north - dot(w, north) * w;
            vec3 b = target - dot(w, target) * w;
            double na = norm(a), nb = norm(b);
            if (na > 1e-12 && nb > 1e-12) {
                double cosang = dot(a, b) / (na * nb);
                double sinang = dot(cross(a, b), w) / (na * nb);
                double tau0 = std::atan2(sinang, cosang);
                if (tau0 < 0) tau0 += 2 * pi;
                if (tau0 <= sm + 1e-12) {
                    vec3 xe = flow_normalized(md, north, uf, tau0);
                    if (norm(xe - target) < endpoint_tol)
                        consider(tau0, f, tau0, 0, 0.0, tau0, xe);
                }
            }
        }

        for (int m = 1; m <= 11; ++m) {
            const control& um = cyc[(m - 1) % 4];
            vec3 ax_m = md.axis(um.u1, um.u2);
            auto pm_of = [&](double s, double& v_out) {
                v_out = interbang_duration(s, f, md);
                return chain_point(md, f, s, v_out, m, 0.0);
            };
            auto g = [&](double s) {
                double v;
                vec3 x = pm_of(s, v);
                return dot(ax_m, target - x);
            };
            double prev_s = 1e-9, prev_g = g(prev_s);
            std::vector<double> roots;
            for (int i = 1; i <= 128; ++i) {
                double s = sm * i / 128;
                double gs = g(s);
                if (prev_g * gs <= 0) {
                    double lo = prev_s, hi = s, glo = prev_g;
                    for (int it = 0; it < 80; ++it) {
                        double mid = 0.5 * (lo + hi);
                        double gm = g(mid);
                        if (glo * gm <= 0)
                            hi = mid;
                        else {
                            lo = mid;
                            glo = gm;
                        }
                    }
                    roots.push_back(0.5 * (lo + hi));
                }
                prev_s = s;
                prev_g = gs;
            }
            for (double s : roots) {
                double v;
                vec3 x = pm_of(s, v);
                vec3 a = x - dot(ax_m, x) * ax_m;
                vec3 b = target - dot(ax_m, target) * ax_m;
                double na = norm(a), nb = norm(b);
                if (na < 1e-12 || nb < 1e-12)
                    continue;
                double cosang = std::max(-1.0, std::min(1.0, dot(a, b) / (na * nb)));
                double sinang = dot(cross(a, b), ax_m) / (na * nb);
                double tau = std::atan2(sinang, cosang);
                if (tau < 0) tau += 2 * pi;
                if (tau > v + 1e-9)
                    continue; // the residual arc must not outlast an interior arc
                vec3 xe = normalized(mul(rotation(ax_m, tau), x));
                if (norm(xe - target) >= endpoint_tol)
                    continue;
                consider(s + (m - 1) * v + tau, f, s, m, v, tau, xe);
            }
        }
    }
    if (!have)
        throw error(errc::no_convergence, "no extremal of any family reaches the target");
    return best;
}

std::optional<double> first_time_within(double theta, const vec3& p, double radius,
                                        double t_hi, double scan_dt, const model& md) {
    control u = initial_bang_control(theta, md);
    switching_state phi = initial_switching(theta, md);
    vec3 x = north;
    double t = 0.0;
    while (t < t_hi) {
        bool has_switch = true;
        switch_event ev{};
        try {
            ev = next_switching_time(phi, u, md);
        } catch (const error&) {
            has_switch = false;
        }
        bool final_arc = !has_switch || t + ev.dt >= t_hi;
        double dt = final_arc ? t_hi - t : ev.dt;
        int steps = std::max(3, static_cast<int>(dt / scan_dt));
        vec3 w = md.axis(u.u1, u.u2);
        for (int i = 1; i <= steps; ++i) {
            double tau = dt * i / steps;
            vec3 xx = normalized(mul(rotation(w, tau), x));
            if (angle_between(xx, p) < radius)
                return t + tau;
        }
        if (final_arc)
            break;
        x = normalized(mul(rotation(w, dt), x));
        phi = propagate_switching(phi, u, dt, md);
        t += dt;
        if (ev.index == 1)
            u.u1 = -u.u1;
        else
            u.u2 = -u.u2;
    }
    return std::nullopt;
}

double spin_flip_time(const model& md, int n_theta, double radius, double t_hi) {
    double best = -1;
    for (int i = 0; i < n_theta; ++i) {
        double theta = 2 * pi * i / n_theta;
        auto t = first_time_within(theta, south, radius, t_hi, 0.01, md);
        if (t && (best < 0 || *t < best))
            best = *t;
    }
    if (best < 0)
        throw error(errc::no_convergence, "no extremal reached the south pole in the horizon");
    return best;
}

} // namespace bloch
