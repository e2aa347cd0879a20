#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bloch/switching.hpp"

namespace bloch {

// address of a point on one extremal: n full four-arc cycles after the first
// switch, then `phase` in 1..4 counting the interior arc in progress, with
// `leftover` time spent on it; phase 0 with leftover tau addresses a point on
// the first arc itself
struct extremal_spec {
    family fam;
    double s;        // first-arc duration
    int n;           // completed four-arc cycles after the first switch
    int phase;       // interior arc in progress (1..4), or 0 on the first arc
    double leftover; // time into that arc
};

// bookkeeping for absolute time t along the (family, s) extremal
extremal_spec spec_at_time(double t, family f, double s, const model& md);

// state at absolute time t (monodromy powers plus the partial cycle)
vec3 extremal_point(double t, family f, double s, const model& md);

struct curve_sample {
    int k;
    double s;
    vec3 point;
};

// k-th switching locus across the family, sampled on a uniform s-grid in
// (0, s_max]; C_1(s) is the first-arc endpoint, each further index applies
// one monodromy
std::vector<curve_sample> switching_curve(int k, family f, int samples, const model& md);

struct refraction_result {
    double c1;
    double c2;
    double residual;      // relative defect of the tangent decomposition
    bool locally_optimal; // true when the tangent separates the two fields
};

// decompose the curve tangent in the incoming/outgoing bang fields at the
// sample point; opposite-sign coefficients mean extremals cross the curve
refraction_result refraction_test(int k, family f, double s, const model& md);

struct front_sample {
    double theta;
    vec3 x;
};

// endpoints of all extremals at time t over a uniform covector grid
std::vector<front_sample> extremal_front(double t, int samples, const model& md);

// polyline self-intersections of a closed spherical front, detected in local
// gnomonic charts; adjacent segments are skipped
int count_front_self_intersections(const std::vector<front_sample>& front);

struct locus_sample {
    std::string label; // C0, C1+, C1-, C2+, C2-
    vec3 x;
    control u; // the singular control sustaining the locus
};

// the five circles on which an extremal can run with a vanishing switching
// function: the equator (u = 0) and the four tilted planes with one control
// saturated and the other zero
std::vector<locus_sample> singular_loci(int samples_per_locus, const model& md);

struct synthesis_result {
    family fam;
    double s;
    int n;
    int phase;
    double leftover;
    double total_time;
    std::vector<double> switch_times;
    vec3 final_state;
    double residual;
};

// time-optimal transfer from the north pole to the target: scans the four
// families and all switch counts, shooting on the first-arc duration; rejects
// targets inside the exclusion disk around the south pole where optimality
// is not decided by these families alone
synthesis_result solve_synthesis(const vec3& target, const model& md,
                                 double exclusion_radius = -1.0,
                                 double endpoint_tol = 1e-7);

// first time the theta-extremal enters the angular ball around p, or nullopt
std::optional<double> first_time_within(double theta, const vec3& p, double radius,
                                        double t_hi, double scan_dt, const model& md);

// earliest arrival near the south pole over a covector grid
double spin_flip_time(const model& md, int n_theta = 48, double radius = 0.02,
                      double t_hi = 40.0);

} // namespace bloch
