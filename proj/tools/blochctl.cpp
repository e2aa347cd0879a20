#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bloch/adjoint.hpp"
#include "bloch/core.hpp"
#include "bloch/errors.hpp"
#include "bloch/io.hpp"
#include "bloch/oracle.hpp"
#include "bloch/suboptimal.hpp"
#include "bloch/switching.hpp"
#include "bloch/synthesis.hpp"
#include "bloch/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr double k_pi = 3.14159265358979323846;

// parameter group shared by most subcommands: either the pair of angles or the
// three physical field constants, never both
struct param_opts {
    double alpha = 0.25;
    double beta = k_pi / 4;
    double E = 0, M1 = 0, M2 = 0;
    CLI::Option *o_alpha = nullptr, *o_beta = nullptr, *o_E = nullptr, *o_M1 = nullptr,
                *o_M2 = nullptr;

    void attach(CLI::App* cmd) {
        o_alpha = cmd->add_option("--alpha", alpha, "tilt angle in radians");
        o_beta = cmd->add_option("--beta", beta, "bound-ratio angle in radians");
        o_E = cmd->add_option("--E", E, "energy half-gap");
        o_M1 = cmd->add_option("--M1", M1, "first control bound");
        o_M2 = cmd->add_option("--M2", M2, "second control bound");
    }

    bool physical_given() const {
        return o_E->count() || o_M1->count() || o_M2->count();
    }

    bloch::model make_model() const {
        bool angles = o_alpha->count() || o_beta->count();
        if (angles && physical_given())
            throw bloch::error(bloch::errc::bad_arguments,
                               "give either --alpha/--beta or --E/--M1/--M2, not both");
        if (physical_given()) {
            if (!(o_E->count() && o_M1->count() && o_M2->count()))
                throw bloch::error(bloch::errc::bad_arguments,
                                   "--E, --M1 and --M2 must be given together");
            return bloch::model(bloch::normalize_params({E, M1, M2}));
        }
        return bloch::model::from_angles(alpha, beta);
    }
};

bloch::vec3 parse_target(const std::string& text) {
    bloch::vec3 t{};
    std::istringstream ss(text);
    char c1 = 0, c2 = 0;
    if (!(ss >> t[0] >> c1 >> t[1] >> c2 >> t[2]) || c1 != ',' || c2 != ',' ||
        !(ss >> std::ws).eof())
        throw bloch::error(bloch::errc::bad_arguments,
                           "--target expects three comma-separated numbers");
    double n = bloch::norm(t);
    if (std::abs(n - 1.0) > 1e-6)
        throw bloch::error(bloch::errc::bad_arguments, "target must lie on the unit sphere");
    return bloch::normalized(t);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw bloch::error(bloch::errc::bad_arguments, "cannot open output file: " + out_path);
    f << content;
}

ordered_json vec_json(const bloch::vec3& x) { return ordered_json{x[0], x[1], x[2]}; }

int cmd_synth(const param_opts& po, const std::string& target_text, double tol,
              double exclusion, const std::string& out) {
    bloch::model md = po.make_model();
    bloch::vec3 target = parse_target(target_text);
    bloch::synthesis_result sol =
        tol > 0 ? bloch::solve_synthesis(target, md, exclusion, tol)
                : bloch::solve_synthesis(target, md, exclusion);
    ordered_json j{{"family", bloch::family_name(sol.fam)},
                   {"s", sol.s},
                   {"n", sol.n},
                   {"phase", sol.phase},
                   {"leftover", sol.leftover},
                   {"total_time", sol.total_time},
                   {"physical_time", sol.total_time / md.p.k},
                   {"switch_times", sol.switch_times},
                   {"final_state", vec_json(sol.final_state)},
                   {"residual", sol.residual}};
    emit(out, j.dump(2) + "\n");
    return 0;
}

int cmd_extremal(const param_opts& po, const std::string& fam_name, double s, double time,
                 double dt, const std::string& out, const std::string& switchings) {
    bloch::model md = po.make_model();
    bloch::family f = bloch::family_from_name(fam_name);
    double theta = bloch::theta_of_first_switch(f, s, md);
    bloch::extremal_trace tr = bloch::extremal_from_theta(theta, time, md);
    auto rows = bloch::simulate(md, bloch::north, tr.schedule(), dt);
    std::ostringstream csv;
    bloch::write_trajectory_csv(csv, rows);
    emit(out, csv.str());
    if (!switchings.empty()) {
        std::ostringstream sw;
        bloch::write_switching_csv(sw, md, tr, dt);
        emit(switchings, sw.str());
    }
    return 0;
}

int cmd_front(const param_opts& po, double time, int samples, const std::string& out) {
    bloch::model md = po.make_model();
    auto rows = bloch::extremal_front(time, samples, md);
    std::ostringstream csv;
    bloch::write_front_csv(csv, rows);
    emit(out, csv.str());
    return 0;
}

int cmd_curves(const param_opts& po, int k, int samples, const std::string& fam_name,
               const std::string& out) {
    bloch::model md = po.make_model();
    bloch::family f = bloch::family_from_name(fam_name);
    std::vector<bloch::curve_csv_row> rows;
    for (const auto& cs : bloch::switching_curve(k, f, samples, md)) {
        bloch::refraction_result rr = bloch::refraction_test(cs.k, f, cs.s, md);
        rows.push_back({cs.k, cs.s, cs.point, rr.c1, rr.c2, rr.locally_optimal});
    }
    std::ostringstream csv;
    bloch::write_curves_csv(csv, rows);
    emit(out, csv.str());
    return 0;
}

int cmd_loci(const param_opts& po, int samples, const std::string& out) {
    bloch::model md = po.make_model();
    auto rows = bloch::singular_loci(samples, md);
    std::ostringstream csv;
    bloch::write_loci_csv(csv, rows);
    emit(out, csv.str());
    return 0;
}

int cmd_suboptimal(const param_opts& po, const std::string& strategy,
                   const std::string& out) {
    double alpha = po.alpha;
    std::optional<double> k_phys;
    if (po.physical_given()) {
        bloch::normalized_params np = bloch::normalize_params({po.E, po.M1, po.M2});
        alpha = np.alpha;
        k_phys = np.k;
    }
    bloch::strategy_report rep;
    if (strategy == "s1")
        rep = bloch::s1_schedule(alpha);
    else if (strategy == "s2")
        rep = bloch::s2_schedule(alpha);
    else
        throw bloch::error(bloch::errc::bad_arguments, "--strategy must be s1 or s2");
    ordered_json j{{"strategy", rep.strategy},
                   {"alpha", rep.alpha},
                   {"n", rep.n}};
    if (rep.gamma)
        j["gamma"] = *rep.gamma;
    j["arc_duration"] = rep.arc_duration;
    j["transfer_time_normalized"] = rep.transfer_time_normalized;
    if (k_phys)
        j["transfer_time_physical"] = rep.transfer_time_normalized / *k_phys;
    j["final_state"] = vec_json(rep.final_state);
    j["miss_angle"] = rep.miss_angle;
    emit(out, j.dump(2) + "\n");
    return 0;
}

int cmd_compare(double alpha, const std::string& out) {
    double M = std::tan(alpha) / std::sqrt(2.0);
    double k = 2.0 * std::sqrt(1.0 + 2.0 * M * M);
    bloch::strategy_report rep = bloch::s1_schedule(alpha);
    ordered_json j{{"alpha", alpha},
                   {"M", M},
                   {"n", rep.n},
                   {"t_strategy_physical", rep.transfer_time_normalized / k},
                   {"t_circle_physical", bloch::circle_transfer_time(M)},
                   {"ratio", bloch::compare_ratio(alpha)}};
    emit(out, j.dump(2) + "\n");
    return 0;
}

int cmd_oracle(const param_opts& po, const std::string& target_text, double dt, double eps,
               int max_steps, const std::string& out) {
    bloch::model md = po.make_model();
    bloch::vec3 target = parse_target(target_text);
    bloch::oracle_result res = bloch::min_time_bracket(target, md, dt, eps, max_steps);
    ordered_json j{{"target", vec_json(res.target)},
                   {"t_lower", res.t_lower},
                   {"t_lo", res.t_lo},
                   {"t_hi", res.t_hi},
                   {"dt", res.dt},
                   {"eps", res.eps},
                   {"frontier_peak", res.frontier_peak},
                   {"assumption", res.assumption}};
    emit(out, j.dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::string& suite, uint64_t seed) {
    auto checks = bloch::run_suite(suite, seed);
    int failed = 0;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail
                  << "\n";
        if (!c.pass)
            ++failed;
    }
    std::cout << checks.size() - failed << " of " << checks.size() << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-optimal and suboptimal bang-bang control on the Bloch sphere"};
    app.require_subcommand(1);

    auto* synth = app.add_subcommand("synth", "solve the transfer to a target point");
    param_opts synth_po;
    synth_po.attach(synth);
    std::string synth_target, synth_out;
    double synth_tol = -1, synth_exclusion = -1;
    synth->add_option("--target", synth_target, "target point X,Y,Z")->required();
    synth->add_option("--tol", synth_tol, "endpoint acceptance tolerance");
    synth->add_option("--exclusion", synth_exclusion, "pole exclusion radius");
    synth->add_option("--out", synth_out, "output file (default stdout)");

    auto* extremal = app.add_subcommand("extremal", "trace one bang-bang extremal");
    param_opts ext_po;
    ext_po.attach(extremal);
    std::string ext_family, ext_out, ext_switchings;
    double ext_s = 0, ext_time = 0, ext_dt = 0;
    extremal->add_option("--family", ext_family, "pp, pm, mm or mp")->required();
    extremal->add_option("--s", ext_s, "first-arc duration")->required();
    extremal->add_option("--time", ext_time, "horizon")->required();
    extremal->add_option("--dt", ext_dt, "sampling step")->required();
    extremal->add_option("--out", ext_out, "output file (default stdout)");
    extremal->add_option("--switchings", ext_switchings,
                         "also write the switching-function trace to this file");

    auto* front = app.add_subcommand("front", "extremal front at a fixed time");
    param_opts front_po;
    front_po.attach(front);
    double front_time = 0;
    int front_samples = 360;
    std::string front_out;
    front->add_option("--time", front_time, "front time")->required();
    front->add_option("--samples", front_samples, "number of covector angles");
    front->add_option("--out", front_out, "output file (default stdout)");

    auto* curves = app.add_subcommand("curves", "switching curve with refraction verdicts");
    param_opts curves_po;
    curves_po.attach(curves);
    int curves_k = 1, curves_samples = 40;
    std::string curves_family = "pp", curves_out;
    curves->add_option("--k", curves_k, "curve index (1-based)")->required();
    curves->add_option("--samples", curves_samples, "number of s samples");
    curves->add_option("--family", curves_family, "pp, pm, mm or mp");
    curves->add_option("--out", curves_out, "output file (default stdout)");

    auto* loci = app.add_subcommand("loci", "singular loci circles");
    param_opts loci_po;
    loci_po.attach(loci);
    int loci_samples = 90;
    std::string loci_out;
    loci->add_option("--samples", loci_samples, "samples per locus");
    loci->add_option("--out", loci_out, "output file (default stdout)");

    auto* subopt = app.add_subcommand("suboptimal", "closed-form pole-transfer schedules");
    param_opts subopt_po;
    subopt_po.attach(subopt);
    std::string subopt_strategy, subopt_out;
    subopt->add_option("--strategy", subopt_strategy, "s1 or s2")->required();
    subopt->add_option("--out", subopt_out, "output file (default stdout)");

    auto* compare = app.add_subcommand("compare", "strategy time against the circular drive");
    double compare_alpha = 0;
    std::string compare_out;
    compare->add_option("--alpha", compare_alpha, "tilt angle in radians")->required();
    compare->add_option("--out", compare_out, "output file (default stdout)");

    auto* oracle = app.add_subcommand("oracle", "reachable-set minimum-time bracket");
    param_opts oracle_po;
    oracle_po.attach(oracle);
    std::string oracle_target, oracle_out;
    double oracle_dt = 0.01, oracle_eps = 0.02;
    int oracle_max_steps = 5000;
    oracle->add_option("--target", oracle_target, "target point X,Y,Z")->required();
    oracle->add_option("--dt", oracle_dt, "sweep step");
    oracle->add_option("--eps", oracle_eps, "target ball radius");
    oracle->add_option("--max-steps", oracle_max_steps, "step budget");
    oracle->add_option("--out", oracle_out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a property suite");
    std::string verify_suite;
    uint64_t verify_seed = 0;
    verify->add_option("--suite", verify_suite,
                       "invariants, switching, synthesis, appendix or all")
        ->required();
    verify->add_option("--seed", verify_seed, "seed for randomized grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        nlohmann::ordered_json j{{"error", bloch::errc::bad_arguments},
                                 {"message", e.what()}};
        std::cerr << j.dump() << "\n";
        return 2;
    }

    try {
        if (synth->parsed())
            return cmd_synth(synth_po, synth_target, synth_tol, synth_exclusion, synth_out);
        if (extremal->parsed())
            return cmd_extremal(ext_po, ext_family, ext_s, ext_time, ext_dt, ext_out,
                                ext_switchings);
        if (front->parsed())
            return cmd_front(front_po, front_time, front_samples, front_out);
        if (curves->parsed())
            return cmd_curves(curves_po, curves_k, curves_samples, curves_family,
                              curves_out);
        if (loci->parsed())
            return cmd_loci(loci_po, loci_samples, loci_out);
        if (subopt->parsed())
            return cmd_suboptimal(subopt_po, subopt_strategy, subopt_out);
        if (compare->parsed())
            return cmd_compare(compare_alpha, compare_out);
        if (oracle->parsed())
            return cmd_oracle(oracle_po, oracle_target, oracle_dt, oracle_eps,
                              oracle_max_steps, oracle_out);
        if (verify->parsed())
            return cmd_verify(verify_suite, verify_seed);
    } catch (const bloch::error& e) {
        nlohmann::ordered_json j{{"error", e.code()}, {"message", e.what()}};
        std::cerr << j.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        nlohmann::ordered_json j{{"error", "Internal"}, {"message", e.what()}};
        std::cerr << j.dump() << "\n";
        return 2;
    }
    return 2;
}
