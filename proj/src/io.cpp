#include "bloch/io.hpp"

#include <cstdio>

namespace bloch {

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_trajectory_csv(std::ostream& os, const std::vector<trajectory_sample>& rows) {
    os << "t,u1,u2,x1,x2,x3\n";
    for (const auto& r : rows)
        os << g17(r.t) << ',' << g17(r.u.u1) << ',' << g17(r.u.u2) << ',' << g17(r.x[0])
           << ',' << g17(r.x[1]) << ',' << g17(r.x[2]) << '\n';
}

void write_switching_csv(std::ostream& os, const model& md, const extremal_trace& tr,
                         double dt) {
    os << "t,phi0,phi1,phi2,event\n";
    auto row = [&](double t, const switching_state& phi, const char* event) {
        os << g17(t) << ',' << g17(phi.phi0) << ',' << g17(phi.phi1) << ','
           << g17(phi.phi2) << ',' << event << '\n';
    };
    for (size_t i = 0; i < tr.arcs.size(); ++i) {
        const auto& arc = tr.arcs[i];
        row(arc.t_start, arc.phi_start, "none");
        for (int j = 1; j * dt < arc.duration; ++j)
            row(arc.t_start + j * dt,
                propagate_switching(arc.phi_start, arc.u, j * dt, md), "none");
        const char* event = "none";
        if (i + 1 < tr.arcs.size())
            event = tr.switch_indices[i] == 1 ? "swi1" : "swi2";
        row(arc.t_start + arc.duration,
            propagate_switching(arc.phi_start, arc.u, arc.duration, md), event);
    }
}

void write_curves_csv(std::ostream& os, const std::vector<curve_csv_row>& rows) {
    os << "k,s,x1,x2,x3,c1,c2,locally_optimal\n";
    for (const auto& r : rows)
        os << r.k << ',' << g17(r.s) << ',' << g17(r.x[0]) << ',' << g17(r.x[1]) << ','
           << g17(r.x[2]) << ',' << g17(r.c1) << ',' << g17(r.c2) << ','
           << (r.locally_optimal ? 1 : 0) << '\n';
}

void write_front_csv(std::ostream& os, const std::vector<front_sample>& rows) {
    os << "theta,x1,x2,x3\n";
    for (const auto& r : rows)
        os << g17(r.theta) << ',' << g17(r.x[0]) << ',' << g17(r.x[1]) << ','
           << g17(r.x[2]) << '\n';
}

void write_loci_csv(std::ostream& os, const std::vector<locus_sample>& rows) {
    os << "locus,x1,x2,x3,u1,u2\n";
    for (const auto& r : rows)
        os << r.label << ',' << g17(r.x[0]) << ',' << g17(r.x[1]) << ',' << g17(r.x[2])
           << ',' << g17(r.u.u1) << ',' << g17(r.u.u2) << '\n';
}

}
