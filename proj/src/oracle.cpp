#include "bloch/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "bloch/adjoint.hpp"
#include "bloch/errors.hpp"
#include "bloch/switching.hpp"

namespace bloch {

namespace {

constexpr double pi = 3.14159265358979323846;

// latitude-row grid: rows of height `cell` along the polar angle, each row split
// into enough azimuthal bins to keep bin width <= cell at the row's midlatitude
struct sphere_grid {
    double cell;
    int64_t rows, pitch;
    std::vector<int32_t> stamp;
    std::vector<int32_t> slot;
    int32_t epoch = 0;

    explicit sphere_grid(double cell_size) : cell(cell_size) {
        rows = static_cast<int64_t>(std::ceil(pi / cell)) + 1;
        pitch = static_cast<int64_t>(std::ceil(2 * pi / cell)) + 1;
        if (rows * pitch > 50'000'000)
            throw error(errc::budget_exceeded, "pruning grid would exceed the memory budget");
        stamp.assign(static_cast<size_t>(rows * pitch), 0);
        slot.assign(static_cast<size_t>(rows * pitch), -1);
    }

    int64_t key_of(const vec3& x) const {
        double x3 = std::clamp(x[2], -1.0, 1.0);
        int64_t row = std::min<int64_t>(rows - 1, static_cast<int64_t>(std::acos(x3) / cell));
        double mid = (row + 0.5) * cell;
        auto ncols = std::max<int64_t>(
            1, static_cast<int64_t>(std::ceil(2 * pi * std::sin(mid) / cell)));
        double az = std::atan2(x[1], x[0]);
        if (az < 0) az += 2 * pi;
        int64_t col = std::min<int64_t>(ncols - 1, static_cast<int64_t>(az / (2 * pi) * ncols));
        return row * pitch + col;
    }
};

} // namespace

oracle_result min_time_bracket(const vec3& target, const model& md, double dt,
                               double eps, int max_steps) {
    if (dt <= 0 || eps <= 0)
        throw error(errc::bad_arguments, "min_time_bracket: dt and eps must be positive");
    oracle_result res;
    res.target = target;
    res.dt = dt;
    res.eps = eps;
    res.t_lower = angle_between(north, target);
    res.assumption = "bang-only search: the four extreme controls are enumerated";

    double cos_eps = std::cos(eps);
    if (dot(north, target) > cos_eps) {
        res.t_lo = 0.0;
        res.t_hi = 0.0;
        res.frontier_peak = 1;
        return res;
    }

    const control bangs[4] = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
    mat3 steps_mat[4];
    for (int i = 0; i < 4; ++i)
        steps_mat[i] = rotation(md.axis(bangs[i].u1, bangs[i].u2), md.p.k * dt);

    sphere_grid grid(eps / 4);
    std::vector<vec3> frontier{north}, next;
    res.frontier_peak = 1;

    for (int m = 1; m <= max_steps; ++m) {
        next.clear();
        ++grid.epoch;
        for (const vec3& x : frontier) {
            for (const auto& R : steps_mat) {
                vec3 y = normalized(mul(R, x));
                if (dot(y, target) > cos_eps) {
                    res.t_hi = m * dt;
                    res.t_lo = (m - 1) * dt;
                    res.frontier_peak = std::max(res.frontier_peak,
                                                 static_cast<int>(frontier.size()));
                    return res;
                }
                auto key = static_cast<size_t>(grid.key_of(y));
                if (grid.stamp[key] != grid.epoch) {
                    grid.stamp[key] = grid.epoch;
                    grid.slot[key] = static_cast<int32_t>(next.size());
                    next.push_back(y);
                } else if (y[2] < next[grid.slot[key]][2]) {
                    next[grid.slot[key]] = y;
                }
            }
        }
        frontier.swap(next);
        res.frontier_peak = std::max(res.frontier_peak, static_cast<int>(frontier.size()));
    }
    throw error(errc::budget_exceeded, "min_time_bracket: step budget exhausted");
}

bb_structure_report verify_bb_structure(const model& md, int n_theta, double horizon) {
    if (n_theta < 4)
        throw error(errc::bad_arguments, "verify_bb_structure: need at least 4 angles");
    bb_structure_report rep;
    rep.worst_first_arc_excess = -1e300;
    for (int j = 0; j < n_theta; ++j) {
        double theta = 2 * pi * (j + 0.5) / n_theta;
        extremal_trace tr = extremal_from_theta(theta, horizon, md);
        if (tr.switch_times.empty())
            continue;
        ++rep.n_extremals;
        double sm = s_max(family_of_theta(theta), md);
        rep.worst_first_arc_excess =
            std::max(rep.worst_first_arc_excess, tr.switch_times.front() - sm);
        for (size_t i = 1; i < tr.switch_indices.size(); ++i)
            if (tr.switch_indices[i] == tr.switch_indices[i - 1])
                ++rep.alternation_violations;
        if (tr.switch_times.size() >= 2) {
            double lo = 1e300, hi = -1e300;
            for (size_t i = 1; i < tr.switch_times.size(); ++i) {
                double gap = tr.switch_times[i] - tr.switch_times[i - 1];
                lo = std::min(lo, gap);
                hi = std::max(hi, gap);
            }
            rep.worst_gap_spread = std::max(rep.worst_gap_spread, hi - lo);
        }
    }
    rep.pass = rep.n_extremals > 0 && rep.worst_first_arc_excess <= 1e-10 &&
               rep.alternation_violations == 0 && rep.worst_gap_spread <= 1e-8;
    return rep;
}

}
