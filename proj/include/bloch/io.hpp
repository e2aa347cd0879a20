#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bloch/adjoint.hpp"
#include "bloch/core.hpp"
#include "bloch/synthesis.hpp"

namespace bloch {

// shortest round-trip decimal form used by every emitter
std::string g17(double x);

// header: t,u1,u2,x1,x2,x3
void write_trajectory_csv(std::ostream& os, const std::vector<trajectory_sample>& rows);

// header: t,phi0,phi1,phi2,event -- dt-grid rows carry event=none, exact switch
// rows carry swi1/swi2
void write_switching_csv(std::ostream& os, const model& md, const extremal_trace& tr,
                         double dt);

struct curve_csv_row {
    int k;
    double s;
    vec3 x;
    double c1, c2;
    bool locally_optimal;
};

// header: k,s,x1,x2,x3,c1,c2,locally_optimal
void write_curves_csv(std::ostream& os, const std::vector<curve_csv_row>& rows);

// header: theta,x1,x2,x3
void write_front_csv(std::ostream& os, const std::vector<front_sample>& rows);

// header: locus,x1,x2,x3,u1,u2
void write_loci_csv(std::ostream& os, const std::vector<locus_sample>& rows);

}
