#include "starb/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "starb/format.hpp"

namespace starb {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json check_json(const BoundCheck& c) {
    ordered_json j;
    j["name"] = c.name;
    ordered_json bound;
    if (c.bound.exact) {
        bound["num"] = c.bound.num;
        bound["den"] = c.bound.den;
    } else {
        bound["num"] = nullptr;
        bound["den"] = nullptr;
    }
    bound["decimal"] = fmt17(c.bound.decimal);
    j["bound"] = bound;
    j["observed"] = fmt17(c.observed_sup);
    j["argmax"] = c.argmax;
    j["extremal"] = c.extremal;
    j["attained"] = fmt17(c.attained_value);
    j["verdict"] = to_string(c.verdict);
    return j;
}

} // namespace

std::string report_json(const Report& rep) {
    ordered_json j;
    ordered_json cfg;
    cfg["zeta1_points"] = rep.config.zeta1_points;
    cfg["radial_points"] = rep.config.radial_points;
    cfg["angular_points"] = rep.config.angular_points;
    cfg["minor_radial"] = rep.config.minor_radial;
    cfg["minor_angular"] = rep.config.minor_angular;
    cfg["schur_radial"] = rep.config.schur_radial;
    cfg["schur_angular"] = rep.config.schur_angular;
    cfg["tol_upper"] = fmt17(rep.config.tol_upper);
    cfg["tol_sharp"] = fmt17(rep.config.tol_sharp);
    cfg["order"] = rep.config.order;
    j["config"] = cfg;

    ordered_json mus = ordered_json::array();
    for (const cd m : rep.mu_grid) mus.push_back(fmt_complex(m));
    j["mu_grid"] = mus;

    ordered_json checks = ordered_json::array();
    for (const BoundCheck& c : rep.checks) checks.push_back(check_json(c));
    j["checks"] = checks;

    ordered_json env;
    env["h22_max"] = fmt17(rep.envelopes.h22_max);
    env["h22_argmax"] = fmt17(rep.envelopes.h22_argmax);
    env["log_max"] = fmt17(rep.envelopes.log_max);
    env["log_argmax"] = fmt17(rep.envelopes.log_argmax);
    env["invlog_max"] = fmt17(rep.envelopes.invlog_max);
    env["invlog_argmax"] = fmt17(rep.envelopes.invlog_argmax);
    env["phi2_log_max"] = fmt17(rep.envelopes.phi2_log_max);
    env["phi2_log_argmax"] = fmt17(rep.envelopes.phi2_log_argmax);
    env["phi2_invlog_max"] = fmt17(rep.envelopes.phi2_invlog_max);
    env["phi2_invlog_argmax"] = fmt17(rep.envelopes.phi2_invlog_argmax);
    j["envelopes"] = env;

    auto scalar_json = [](const ScalarAudit& a) {
        ordered_json s;
        s["t1_positive"] = a.t1_positive;
        s["t2_nonpositive"] = a.t2_nonpositive;
        s["t3_positive"] = a.t3_positive;
        s["t4_negative"] = a.t4_negative;
        s["t5_negative"] = a.t5_negative;
        s["t6_sign_change_matches"] = a.t6_sign_change_matches;
        s["zeta_prime"] = fmt17(a.zeta_prime);
        s["t6_root"] = fmt17(a.t6_root);
        s["t6_residual_at_prime"] = fmt17(a.t6_residual_at_prime);
        return s;
    };
    ordered_json sc;
    sc["log"] = scalar_json(rep.scalars.log);
    sc["invlog"] = scalar_json(rep.scalars.invlog);
    sc["h22_case_ok"] = rep.scalars.h22_case_ok;
    j["case_scalars"] = sc;

    ordered_json ms;
    ms["max_value"] = fmt17(rep.msurface.max_value);
    ms["argmax_x"] = fmt17(rep.msurface.argmax_x);
    ms["argmax_y"] = fmt17(rep.msurface.argmax_y);
    ms["corner_value"] = fmt17(rep.msurface.corner_value);
    ms["edge_x_printed_max"] = fmt17(rep.msurface.edge_x_printed_max);
    ms["edge_y_printed_max"] = fmt17(rep.msurface.edge_y_printed_max);
    ms["edge_y_full_max"] = fmt17(rep.msurface.edge_y_full_max);
    j["m_surface"] = ms;

    ordered_json geo;
    geo["samples"] = rep.geometry.samples;
    geo["max_boundary_defect"] = fmt17(rep.geometry.max_boundary_defect);
    geo["tip_error_vs_printed"] = fmt17(rep.geometry.tip_error_vs_printed);
    geo["conj_symmetry_error"] = fmt17(rep.geometry.conj_symmetry_error);
    geo["starlike"] = rep.geometry.starlike.starlike;
    geo["starlike_min_increment"] = fmt17(rep.geometry.starlike.min_increment);
    geo["near_origin_circle_deviation"] =
        fmt17(rep.geometry.starlike.near_origin_circle_deviation);
    geo["leftmost_re"] = fmt17(rep.geometry.leftmost_re);
    geo["leftmost_im"] = fmt17(rep.geometry.leftmost_im);
    geo["leftmost_deviation_vs_quoted"] =
        fmt17(rep.geometry.leftmost_deviation_vs_quoted);
    j["geometry"] = geo;

    ordered_json rot = ordered_json::array();
    for (const RotationCheck& rc : rep.rotation) {
        ordered_json r;
        r["name"] = rc.name;
        r["real_axis_sup"] = fmt17(rc.real_axis_sup);
        r["complex_sup"] = fmt17(rc.complex_sup);
        r["ok"] = rc.ok;
        rot.push_back(r);
    }
    j["rotation_spot_check"] = rot;

    j["notes"] = rep.notes;
    j["all_certified"] = rep.all_certified();
    return j.dump(2) + "\n";
}

std::string report_csv(const Report& rep) {
    std::ostringstream os;
    os << "name,bound_num,bound_den,bound,observed,argmax,extremal,attained,verdict\n";
    for (const BoundCheck& c : rep.checks) {
        os << c.name << ',';
        if (c.bound.exact) {
            os << c.bound.num << ',' << c.bound.den << ',';
        } else {
            os << ",,";
        }
        os << fmt17(c.bound.decimal) << ',' << fmt17(c.observed_sup) << ',' << '"'
           << c.argmax << '"' << ',' << c.extremal << ',' << fmt17(c.attained_value)
           << ',' << to_string(c.verdict) << '\n';
    }
    return os.str();
}

std::string report_text(const Report& rep) {
    std::ostringstream os;
    os << "functional        bound         observed      attained      extremal  verdict\n";
    for (const BoundCheck& c : rep.checks) {
        char line[256];
        std::snprintf(line, sizeof line, "%-17s %-13s %-13s %-13s %-9s %s\n",
                      c.name.c_str(), fmt7(c.bound.decimal).c_str(),
                      fmt7(c.observed_sup).c_str(), fmt7(c.attained_value).c_str(),
                      c.extremal.c_str(), to_string(c.verdict).c_str());
        os << line;
    }
    os << "\nenvelopes: h22 " << fmt7(rep.envelopes.h22_max) << " | log "
       << fmt7(rep.envelopes.log_max) << " | invlog " << fmt7(rep.envelopes.invlog_max)
       << " | phi2_log " << fmt7(rep.envelopes.phi2_log_max) << " | phi2_invlog "
       << fmt7(rep.envelopes.phi2_invlog_max) << "\n";
    os << "case scalars: log " << (rep.scalars.log.ok() ? "ok" : "FAIL") << ", invlog "
       << (rep.scalars.invlog.ok() ? "ok" : "FAIL") << ", h22 case "
       << (rep.scalars.h22_case_ok ? "ok" : "FAIL") << " (zeta' log "
       << fmt7(rep.scalars.log.zeta_prime) << ", invlog "
       << fmt7(rep.scalars.invlog.zeta_prime) << ")\n";
    os << "M surface: max " << fmt7(rep.msurface.max_value) << " at ("
       << fmt7(rep.msurface.argmax_x) << ", " << fmt7(rep.msurface.argmax_y)
       << "); printed edges " << fmt7(rep.msurface.edge_x_printed_max) << " / "
       << fmt7(rep.msurface.edge_y_printed_max) << "\n";
    os << "geometry: boundary defect " << fmt7(rep.geometry.max_boundary_defect)
       << ", tip err " << fmt7(rep.geometry.tip_error_vs_printed) << ", starlike "
       << (rep.geometry.starlike.starlike ? "yes" : "NO") << ", leftmost ("
       << fmt7(rep.geometry.leftmost_re) << ", " << fmt7(rep.geometry.leftmost_im)
       << ")\n";
    for (const auto& n : rep.notes) os << "note: " << n << "\n";
    os << (rep.all_certified() ? "ALL CERTIFIED\n" : "NOT ALL CERTIFIED\n");
    return os.str();
}

std::string boundary_csv(const std::vector<BoundaryPoint>& pts) {
    std::ostringstream os;
    os << "theta,re_w,im_w\n";
    for (const auto& p : pts) {
        os << fmt17(p.theta) << ',' << fmt17(p.w.real()) << ',' << fmt17(p.w.imag())
           << '\n';
    }
    return os.str();
}

std::string boundary_json(const std::vector<BoundaryPoint>& pts) {
    ordered_json j;
    j["samples"] = pts.size();
    ordered_json arr = ordered_json::array();
    for (const auto& p : pts) {
        ordered_json q;
        q["theta"] = fmt17(p.theta);
        q["re_w"] = fmt17(p.w.real());
        q["im_w"] = fmt17(p.w.imag());
        arr.push_back(q);
    }
    j["points"] = arr;
    return j.dump(2) + "\n";
}

} // namespace starb
