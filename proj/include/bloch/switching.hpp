#pragma once

#include <array>
#include <string>

#include "bloch/adjoint.hpp"
#include "bloch/core.hpp"

namespace bloch {

// the four bang-bang extremal families, named by their initial control
enum class family { pp, pm, mm, mp };

control first_control(family f);

// order of the controls applied after the first switch (first applied first);
// the pattern repeats with period four
std::array<control, 4> bang_cycle(family f);

const char* family_name(family f);
family family_from_name(const std::string& s);

// which family the covector angle theta generates
family family_of_theta(double theta);

// supremum of the first-arc duration over the family:
// arccos(-sin^2 a cos^2 b/(1 - sin^2 a cos^2 b)) when u1 u2 > 0,
// the sin^2 b branch otherwise
double s_max(family f, const model& md);

// duration of the first bang arc for covector angle theta (closed form via the
// phase-shift zero of the switching functions)
double first_switch_of_theta(double theta, const model& md);

// coefficients of the first-switch equation a cos s - b sin s + c = 0 on the
// quadrant of family pp; exposed for cross-checks
struct first_switch_coeffs {
    double a, b, c;
};
first_switch_coeffs first_switch_equation_pp(double theta, const model& md);

// inverse of first_switch_of_theta restricted to one family's quadrant
double theta_of_first_switch(family f, double s, const model& md);

// coefficients of the interior-arc equation a cos v + b sin v + c = 0,
// built from three exact coplanarity probes of the flowed fields
struct trig_coeffs {
    double a, b, c;
};
trig_coeffs interbang_coeffs(double s, family f, const model& md);

// common duration v(s) of all interior bang arcs: bracketed root of the trig
// equation on (0, pi] (256 probes + bisection); the authoritative route
double interbang_duration(double s, family f, const model& md);

// the same root in closed form (phase-shift inversion); agrees with
// interbang_duration to machine precision
double v_general_closed_form(double s, family f, const model& md);

// arccos form specialized to beta = pi/4
double v_pi4_closed_form(double s, const model& md);

// rotation angle of the four-arc monodromy at s in {0, s_max}:
// arcsin(-2 sqrt2 sin a cos a/(1+cos^2 a)); negative for a in (0, pi/4)
double theta_of_alpha(double alpha);

// small-alpha expansion v = pi/2 + f1(s) a^2 + f2(s) a^4 (beta = pi/4)
double v_taylor(double s, double alpha);

// product of the four interior bang rotations, each of duration v(s)
mat3 monodromy(double s, family f, const model& md);

// small-alpha expansion of the monodromy (beta = pi/4)
mat3 monodromy_taylor(double s, double alpha);

} // namespace bloch
