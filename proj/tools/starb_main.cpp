#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "starb/balloon.hpp"
#include "starb/choi.hpp"
#include "starb/format.hpp"
#include "starb/functionals.hpp"
#include "starb/report.hpp"
#include "starb/schwarz.hpp"
#include "starb/verifier.hpp"

using namespace starb;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Output {
    std::string format = "text";
    std::string path;

    int emit(const std::string& payload) const {
        if (path.empty()) {
            std::fputs(payload.c_str(), stdout);
            return 0;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) {
            std::cerr << "cannot open output file: " << path << "\n";
            return 2;
        }
        os << payload;
        return 0;
    }
};

std::string series_payload(const std::string& label, const PowerSeries& s,
                           const std::string& format, int first) {
    if (format == "json") {
        ordered_json j;
        j["series"] = label;
        ordered_json arr = ordered_json::array();
        for (int k = first; k <= s.order(); ++k) {
            ordered_json c;
            c["n"] = k;
            c["re"] = fmt17(s.c(k).real());
            c["im"] = fmt17(s.c(k).imag());
            arr.push_back(c);
        }
        j["coefficients"] = arr;
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::string out = "n,re,im\n";
        for (int k = first; k <= s.order(); ++k) {
            out += std::to_string(k) + "," + fmt17(s.c(k).real()) + "," +
                   fmt17(s.c(k).imag()) + "\n";
        }
        return out;
    }
    std::string out = label + "\n";
    for (int k = first; k <= s.order(); ++k) {
        out += "  c" + std::to_string(k) + " = " + fmt_complex(s.c(k), 7) + "\n";
    }
    return out;
}

CoefficientSet set_from_schwarz_list(const std::vector<cd>& b, int order) {
    std::vector<cd> w(static_cast<std::size_t>(order) + 1, cd{});
    for (std::size_t k = 0; k < b.size() && k + 1 < w.size(); ++k) w[k + 1] = b[k];
    const ClassMember m = member_from_schwarz(PowerSeries(std::move(w)), std::max(order, 8));
    return coefficient_set(m);
}

CoefficientSet set_from_zeta_list(const std::vector<cd>& z) {
    if (z.size() != 3) throw DomainError("--zeta needs exactly three parameters");
    const CaratheodoryPrefix p = p_from_params(SchwarzParams{z[0], z[1], z[2]});
    const InitialCoefficients ic = coeffs_from_p(p);
    return full_coefficient_set(ic.a2, ic.a3, ic.a4);
}

std::string coeffs_payload(const CoefficientSet& c, const std::string& format,
                           bool has_a5) {
    auto item = [&](const char* k, cd v) {
        return std::string(k) + " = " + fmt_complex(v, 7) + "  (|.| = " +
               fmt7(std::abs(v)) + ")\n";
    };
    if (format == "json") {
        ordered_json j;
        auto put = [&](const char* k, cd v) {
            ordered_json e;
            e["re"] = fmt17(v.real());
            e["im"] = fmt17(v.imag());
            j[k] = e;
        };
        put("a2", c.a2);
        put("a3", c.a3);
        put("a4", c.a4);
        if (has_a5) put("a5", c.a5);
        put("gamma1", c.gamma1);
        put("gamma2", c.gamma2);
        put("gamma3", c.gamma3);
        put("Gamma1", c.inv_gamma1);
        put("Gamma2", c.inv_gamma2);
        put("Gamma3", c.inv_gamma3);
        return j.dump(2) + "\n";
    }
    std::string out;
    out += item("a2", c.a2);
    out += item("a3", c.a3);
    out += item("a4", c.a4);
    if (has_a5) out += item("a5", c.a5);
    out += item("gamma1", c.gamma1);
    out += item("gamma2", c.gamma2);
    out += item("gamma3", c.gamma3);
    out += item("Gamma1", c.inv_gamma1);
    out += item("Gamma2", c.inv_gamma2);
    out += item("Gamma3", c.inv_gamma3);
    return out;
}

cd eval_functional(const std::string& id, const CoefficientSet& c, cd mu, int q, int n,
                   const std::string& stream) {
    auto lower = id;
    for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == "fs") return fekete_szego(c, mu);
    if (lower == "h21") return fekete_szego(c, cd{1.0, 0.0});
    if (lower == "h22") return hankel22(c);
    if (lower == "h21log" || lower == "h21_log") return hankel21_log(c);
    if (lower == "h21invlog" || lower == "h21_invlog") return hankel21_invlog(c);
    if (lower == "t21") return toeplitz_initial(c, 1);
    if (lower == "t22") return toeplitz_initial(c, 2);
    if (lower == "t23") return toeplitz_initial(c, 3);
    if (lower == "t21log" || lower == "t21_log") return toeplitz_log(c);
    if (lower == "t21invlog" || lower == "t21_invlog") return toeplitz_invlog(c);
    const bool hankel = lower == "hankel" || lower == "hqn";
    const bool toeplitz = lower == "toeplitz" || lower == "tqn";
    if (hankel || toeplitz) {
        std::vector<cd> seq;
        if (stream == "a") {
            seq = a_stream(c);
        } else if (stream == "log") {
            seq = gamma_stream(c);
        } else if (stream == "invlog") {
            seq = inv_gamma_stream(c);
        } else {
            throw DomainError("--stream must be a, log or invlog");
        }
        return hankel ? generic_hankel(seq, q, n) : generic_toeplitz(seq, q, n);
    }
    throw DomainError("unknown functional id: " + id);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"starb: numerical certification for the balloon-kernel starlike class"};
    app.require_subcommand(1);

    Output out;
    int order = 12;
    app.add_option("--order", order, "series truncation order (default 12)");
    app.add_option("--format", out.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out.path, "write output to a file instead of stdout");

    // kernel
    auto* kernel_cmd = app.add_subcommand("kernel", "Taylor coefficients of the kernel");

    // extremal
    std::string which = "f1";
    auto* extremal_cmd = app.add_subcommand("extremal", "extreme member coefficients");
    extremal_cmd->add_option("which", which, "f1, f2 or f3")
        ->check(CLI::IsMember({"f1", "f2", "f3"}));

    // coeffs
    std::string schwarz_list, zeta_list;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "coefficient set from parameters");
    coeffs_cmd->add_option("--schwarz", schwarz_list, "Schwarz prefix b1[,b2[,b3[,b4]]]");
    coeffs_cmd->add_option("--zeta", zeta_list, "disk parameters zeta1,zeta2,zeta3");

    // functional
    std::string func_id, func_schwarz, func_zeta, func_extremal, stream = "a", mu_text = "1";
    int gen_q = 2, gen_n = 1;
    auto* functional_cmd = app.add_subcommand("functional", "evaluate one functional");
    functional_cmd->add_option("id", func_id,
                               "FS|H21|H22|H21log|H21invlog|T21|T22|T23|T21log|T21invlog|"
                               "hankel|toeplitz")
        ->required();
    functional_cmd->add_option("--schwarz", func_schwarz, "Schwarz prefix");
    functional_cmd->add_option("--zeta", func_zeta, "disk parameters");
    functional_cmd->add_option("--extremal", func_extremal, "f1|f2|f3");
    functional_cmd->add_option("--mu", mu_text, "Fekete-Szego weight (complex)");
    functional_cmd->add_option("--q", gen_q, "generic determinant size");
    functional_cmd->add_option("--n", gen_n, "generic determinant start index");
    functional_cmd->add_option("--stream", stream, "generic stream: a|log|invlog");

    // verify
    std::string only_list, grid_text, mu_grid_text = "default";
    SweepConfig cfg;
    bool serial = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the certification sweeps");
    verify_cmd->add_option("--only", only_list, "comma-separated functional names");
    verify_cmd->add_option("--grid", grid_text, "primary polar grid RxA (default 24x64)");
    verify_cmd->add_option("--zeta1-points", cfg.zeta1_points, "real-axis points");
    verify_cmd->add_option("--minor-radial", cfg.minor_radial, "secondary radial points");
    verify_cmd->add_option("--minor-angular", cfg.minor_angular, "secondary angular points");
    verify_cmd->add_option("--schur-radial", cfg.schur_radial,
                           "radial points per fifth-coefficient axis");
    verify_cmd->add_option("--schur-angular", cfg.schur_angular,
                           "angular points per fifth-coefficient axis");
    verify_cmd->add_option("--tol-sharp", cfg.tol_sharp, "sharpness tolerance (default 1e-3)");
    verify_cmd->add_option("--tol-upper", cfg.tol_upper, "upper tolerance (default 1e-8)");
    verify_cmd->add_option("--mu-grid", mu_grid_text,
                           "Fekete-Szego mu values, empty to omit (default 1/4..5/4)");
    verify_cmd->add_flag("--serial", serial, "use the serial reference sweeps");

    // y-lemma
    std::string abc_text;
    int random_n = 0;
    unsigned long long seed = 1;
    int oracle_grid = 2000;
    bool oracle_serial = false;
    auto* y_cmd = app.add_subcommand("y-lemma", "disk maximum: exact vs grid oracle");
    y_cmd->add_option("--abc", abc_text, "coefficients A,B,C");
    y_cmd->add_option("--random", random_n, "check N random triples in [-3,3]^3");
    y_cmd->add_option("--seed", seed, "random seed (default 1)");
    y_cmd->add_option("--grid", oracle_grid, "oracle grid (default 2000)");
    y_cmd->add_flag("--serial", oracle_serial, "use the serial reference oracle");

    // boundary
    int samples = 4096;
    double cusp_gap = 1e-2;
    auto* boundary_cmd = app.add_subcommand("boundary", "sample the image-domain boundary");
    boundary_cmd->add_option("--samples", samples, "number of samples (default 4096)");
    boundary_cmd->add_option("--cusp-gap", cusp_gap, "excluded neighborhood of theta=+-pi");

    for (CLI::App* sub : app.get_subcommands(
             [](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (kernel_cmd->parsed()) {
            return out.emit(series_payload("B", kernel_series(order).series, out.format, 0));
        }
        if (extremal_cmd->parsed()) {
            const int idx = which[1] - '0';
            const ClassMember m = extremal_member(idx, order);
            return out.emit(series_payload(which, m.f, out.format, 1));
        }
        if (coeffs_cmd->parsed()) {
            if (schwarz_list.empty() == zeta_list.empty()) {
                std::cerr << "coeffs needs exactly one of --schwarz or --zeta\n";
                return 2;
            }
            CoefficientSet c;
            bool has_a5 = false;
            if (!schwarz_list.empty()) {
                c = set_from_schwarz_list(parse_complex_list(schwarz_list), order);
                has_a5 = true;
            } else {
                c = set_from_zeta_list(parse_complex_list(zeta_list));
            }
            return out.emit(coeffs_payload(c, out.format, has_a5));
        }
        if (functional_cmd->parsed()) {
            const int sources = (!func_schwarz.empty()) + (!func_zeta.empty()) +
                                (!func_extremal.empty());
            if (sources != 1) {
                std::cerr << "functional needs exactly one of --schwarz, --zeta, --extremal\n";
                return 2;
            }
            CoefficientSet c;
            if (!func_schwarz.empty()) {
                c = set_from_schwarz_list(parse_complex_list(func_schwarz), order);
            } else if (!func_zeta.empty()) {
                c = set_from_zeta_list(parse_complex_list(func_zeta));
                const std::string low = [&] {
                    std::string s = func_id;
                    for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
                    return s;
                }();
                if (low == "hankel" || low == "hqn" || low == "toeplitz" || low == "tqn") {
                    std::cerr << "note: three disk parameters determine a2..a4 only; "
                                 "the a-stream carries a5 = 0\n";
                }
            } else {
                c = coefficient_set(extremal_member(func_extremal[1] - '0',
                                                    std::max(order, 8)));
            }
            const cd value =
                eval_functional(func_id, c, parse_complex(mu_text), gen_q, gen_n, stream);
            if (out.format == "json") {
                ordered_json j;
                j["functional"] = func_id;
                j["re"] = fmt17(value.real());
                j["im"] = fmt17(value.imag());
                j["modulus"] = fmt17(std::abs(value));
                return out.emit(j.dump(2) + "\n");
            }
            if (out.format == "csv") {
                return out.emit("functional,re,im,modulus\n" + func_id + "," +
                                fmt17(value.real()) + "," + fmt17(value.imag()) + "," +
                                fmt17(std::abs(value)) + "\n");
            }
            return out.emit(func_id + " = " + fmt_complex(value, 7) +
                            "  |.| = " + fmt7(std::abs(value)) + "\n");
        }
        if (verify_cmd->parsed()) {
            if (!grid_text.empty()) {
                const auto x = grid_text.find('x');
                if (x == std::string::npos) {
                    std::cerr << "--grid expects RxA, e.g. 24x64\n";
                    return 2;
                }
                cfg.radial_points = std::stoi(grid_text.substr(0, x));
                cfg.angular_points = std::stoi(grid_text.substr(x + 1));
            }
            cfg.order = order;
            cfg.mode = serial ? ExecMode::Serial : ExecMode::Parallel;
            std::vector<cd> mu_grid;
            if (mu_grid_text == "default") {
                mu_grid = default_mu_grid();
            } else if (!mu_grid_text.empty()) {
                mu_grid = parse_complex_list(mu_grid_text);
            }
            Report rep = full_report(cfg, mu_grid);
            if (!only_list.empty()) {
                std::vector<BoundCheck> kept;
                std::string cur;
                std::vector<std::string> names;
                for (char ch : only_list + ",") {
                    if (ch == ',') {
                        if (!cur.empty()) names.push_back(cur);
                        cur.clear();
                    } else {
                        cur += ch;
                    }
                }
                for (const auto& c : rep.checks) {
                    for (const auto& n : names) {
                        if (c.name == n) kept.push_back(c);
                    }
                }
                rep.checks = std::move(kept);
            }
            std::string payload;
            if (out.format == "json") {
                payload = report_json(rep);
            } else if (out.format == "csv") {
                payload = report_csv(rep);
            } else {
                payload = report_text(rep);
            }
            const int rc = out.emit(payload);
            if (rc != 0) return rc;
            return rep.all_certified() ? 0 : 1;
        }
        if (y_cmd->parsed()) {
            auto oracle = [&](const YInput& in) {
                return oracle_serial ? y_oracle_serial(in, oracle_grid)
                                     : y_oracle(in, oracle_grid);
            };
            if (!abc_text.empty()) {
                const auto vals = parse_complex_list(abc_text);
                if (vals.size() != 3) {
                    std::cerr << "--abc expects A,B,C\n";
                    return 2;
                }
                const YInput in{vals[0].real(), vals[1].real(), vals[2].real()};
                const YResult ex = y_exact(in);
                const double orc = oracle(in);
                if (out.format == "json") {
                    ordered_json j;
                    j["A"] = fmt17(in.A);
                    j["B"] = fmt17(in.B);
                    j["C"] = fmt17(in.C);
                    j["exact"] = fmt17(ex.value);
                    j["branch"] = to_string(ex.branch);
                    j["oracle"] = fmt17(orc);
                    j["gap"] = fmt17(ex.value - orc);
                    return out.emit(j.dump(2) + "\n");
                }
                return out.emit("Y = " + fmt7(ex.value) + " via " + to_string(ex.branch) +
                                "; oracle(" + std::to_string(oracle_grid) + ") = " +
                                fmt7(orc) + "; gap = " + fmt7(ex.value - orc) + "\n");
            }
            if (random_n <= 0) {
                std::cerr << "y-lemma needs --abc or --random N\n";
                return 2;
            }
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> u(-3.0, 3.0);
            double max_gap = 0.0, min_gap = 1e300;
            int violations = 0;
            for (int k = 0; k < random_n; ++k) {
                const YInput in{u(rng), u(rng), u(rng)};
                const double ex = y_exact(in).value;
                const double orc = oracle(in);
                const double gap = ex - orc;
                max_gap = std::max(max_gap, gap);
                min_gap = std::min(min_gap, gap);
                if (orc > ex + 1e-12) ++violations;
            }
            const std::string payload =
                "n = " + std::to_string(random_n) + ", grid = " + std::to_string(oracle_grid) +
                ", gap in [" + fmt7(min_gap) + ", " + fmt7(max_gap) + "], violations = " +
                std::to_string(violations) + "\n";
            const int rc = out.emit(payload);
            if (rc != 0) return rc;
            return violations == 0 ? 0 : 1;
        }
        if (boundary_cmd->parsed()) {
            const auto pts = boundary_curve(samples, cusp_gap);
            if (out.format == "json") return out.emit(boundary_json(pts));
            if (out.format == "csv") return out.emit(boundary_csv(pts));
            const StarlikeReport probe = starlikeness_probe(samples, cusp_gap);
            double defect = 0.0;
            for (const auto& p : pts) {
                defect = std::max(defect, std::abs(boundary_indicator(p.w)));
            }
            return out.emit(
                "samples = " + std::to_string(samples) + ", tip = " +
                fmt7(boundary_tip().real()) + ", max boundary defect = " + fmt7(defect) +
                ", starlike = " + (probe.starlike ? "yes" : "no") +
                ", min winding increment = " + fmt7(probe.min_increment) + "\n");
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
