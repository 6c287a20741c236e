// Command-line front end: parameter ingestion, analysis subcommands, and
// CSV/JSON emission for plots and CI.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 undefined-regime request, 4 numerical instability.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosserat/dispersion.hpp"
#include "cosserat/energy.hpp"
#include "cosserat/initial_data.hpp"
#include "cosserat/material.hpp"
#include "cosserat/simulate.hpp"
#include "cosserat/soliton.hpp"
#include "cosserat/verify.hpp"

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr std::uint64_t kDefaultSeed = 20240817u;

using json = nlohmann::ordered_json;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Round to 15 significant digits for the derived-quantity report.
double sig15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

std::uint64_t resolve_seed() {
    if (const char* env = std::getenv("COSSERAT_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        std::cerr << "warning: ignoring malformed COSSERAT_SEED\n";
    }
    return kDefaultSeed;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

json params_echo(const cosserat::MaterialParams& p) {
    return json::parse(cosserat::params_to_json_text(p));
}

json base_report(const std::string& command, const cosserat::MaterialParams& p) {
    json j;
    j["command"] = command;
    j["tool_version"] = kToolVersion;
    j["seed"] = resolve_seed();
    j["params"] = params_echo(p);
    j["outputs"] = json::array();
    return j;
}

json derived_json(const cosserat::DerivedWaveQuantities& d) {
    json j;
    j["M"] = {{sig15(d.m11), sig15(d.m12)}, {sig15(d.m21), sig15(d.m22)}};
    j["v_elas"] = sig15(d.v_elas);
    j["v_rot"] = sig15(d.v_rot);
    j["v_chi_sq"] = sig15(d.v_chi_sq);
    j["m_sq"] = sig15(d.m_sq);
    j["m0_sq"] = sig15(d.m0_sq);
    if (d.v0_infinite())
        j["v0"] = "infinity";
    else
        j["v0"] = sig15(d.v0);
    j["roots_real"] = d.roots_real;
    j["v1"] = sig15(d.v1);
    j["v2"] = sig15(d.v2);
    j["v3"] = sig15(d.v3);
    j["v4"] = sig15(d.v4);
    j["discriminant"] = sig15(d.discriminant);
    return j;
}

json intervals_json(const std::vector<cosserat::VelocityInterval>& intervals) {
    json arr = json::array();
    for (const auto& band : intervals) {
        json b;
        b["lo"] = sig15(band.lo);
        if (std::isinf(band.hi))
            b["hi"] = "infinity";
        else
            b["hi"] = sig15(band.hi);
        b["lo_closed"] = band.lo_closed;
        b["hi_closed"] = band.hi_closed;
        arr.push_back(b);
    }
    return arr;
}

void emit(const json& report, const std::optional<std::string>& out_file) {
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (out_file) atomic_write(*out_file, text);
}

std::string describe_allowed(const cosserat::MaterialParams& p) {
    try {
        const cosserat::ClassificationReport rep = cosserat::classify(p);
        std::string s = "allowed velocity bands:";
        for (const auto& band : rep.allowed_intervals) {
            s += band.lo_closed ? " [" : " (";
            s += fmt17(band.lo) + ", ";
            s += std::isinf(band.hi) ? "inf" : fmt17(band.hi);
            s += band.hi_closed ? "]" : ")";
        }
        return s;
    } catch (const std::exception&) {
        return "allowed velocity bands unavailable (characteristic speeds not all real)";
    }
}

// ------------------------------------------------------------------------

int cmd_derive(const std::string& params_file, const std::optional<std::string>& out_file) {
    const cosserat::MaterialParams p = cosserat::load_params_file(params_file);
    json report = base_report("derive", p);
    report["derived"] = derived_json(cosserat::derive(p));
    if (out_file) report["outputs"].push_back(*out_file);
    emit(report, out_file);
    return 0;
}

int cmd_dispersion(const std::string& params_file, double v_min, double v_max, long steps,
                   const std::string& out_csv) {
    if (!(v_min >= 0.0) || !(v_min < v_max) || steps < 2)
        throw CLI::ValidationError("requires 0 <= v-min < v-max and steps >= 2");
    const cosserat::MaterialParams p = cosserat::load_params_file(params_file);
    const cosserat::DerivedWaveQuantities d = cosserat::derive(p);

    std::string csv = "v,k,b,m2_plus_b,defined\n";
    long defined_rows = 0;
    for (long i = 0; i < steps; ++i) {
        const double v = v_min + (v_max - v_min) * double(i) / double(steps - 1);
        const cosserat::KResult kr = cosserat::k_of_v(p, v);
        const cosserat::BResult br = cosserat::b_of_v(p, v);
        const bool defined = kr.status == cosserat::KStatus::Defined;
        if (defined) ++defined_rows;
        csv += fmt17(v);
        csv += ',';
        csv += defined ? fmt17(kr.k) : "nan";
        csv += ',';
        csv += br.defined ? fmt17(br.value) : "nan";
        csv += ',';
        csv += br.defined ? fmt17(d.m_sq + br.value) : "nan";
        csv += ',';
        csv += defined ? '1' : '0';
        csv += '\n';
    }
    atomic_write(out_csv, csv);

    json report = base_report("dispersion", p);
    report["config"] = {{"v_min", v_min}, {"v_max", v_max}, {"steps", steps}};
    report["derived"] = derived_json(d);
    report["rows"] = steps;
    report["defined_rows"] = defined_rows;
    report["outputs"].push_back(out_csv);
    emit(report, std::nullopt);
    return 0;
}

int cmd_classify(const std::string& params_file) {
    const cosserat::MaterialParams p = cosserat::load_params_file(params_file);
    const cosserat::ClassificationReport rep = cosserat::classify(p);
    json report = base_report("classify", p);
    report["regime"] = std::string(1, rep.regime);
    report["boundary_case"] = rep.boundary_case;
    report["derived"] = derived_json(rep.derived);
    report["allowed_intervals"] = intervals_json(rep.allowed_intervals);
    report["notes"] = rep.notes;
    emit(report, std::nullopt);
    return 0;
}

int cmd_soliton(const std::string& params_file, double v, const std::string& form, double z_min,
                double z_max, long n, double t, int branch, const std::string& out_csv) {
    if (!(z_min < z_max) || n < 2)
        throw CLI::ValidationError("requires z-min < z-max and n >= 2");
    const cosserat::MaterialParams p = cosserat::load_params_file(params_file);

    const cosserat::SolitonSolution sol = cosserat::make_soliton(p, v, branch);
    const cosserat::DerivedWaveQuantities d = cosserat::derive(p);
    const double gap = v * v - d.m22;

    std::vector<double> grid(n);
    for (long i = 0; i < n; ++i)
        grid[i] = z_min + (z_max - z_min) * double(i) / double(n - 1);
    const cosserat::DisplacementSolution disp = cosserat::psi_quadrature(sol, grid, t);

    std::string csv = "z,phi,psi,phi_z,psi_z,branch,psi_closed,psi_closed_defined\n";
    for (long i = 0; i < n; ++i) {
        const double z = grid[i];
        const cosserat::PhiEval pe = cosserat::phi_exact_eval(sol, z, t);
        double phi = pe.phi, phi_z = pe.phi_z, psi = disp.psi[i], psi_z;
        psi_z = cosserat::psi_z_closed(sol, z, t);
        if (form == "paper") {
            phi = cosserat::phi_arctan_branch(sol, z, t);
            // Both branch signs rise 0 -> 2 pi (the mirror is through z).
            const double x = sol.k * double(sol.branch_sign) * (z - v * t) + sol.delta;
            const double e = std::exp(-std::abs(x));
            phi_z = sol.k * 4.0 * e / (1.0 + e * e);
        } else if (form == "linearised") {
            phi = cosserat::phi_linearised(p, v, z, t, branch);
            psi = cosserat::psi_linearised(p, v, z, t, branch);
            const cosserat::KResult kr = cosserat::k_of_v(p, v);
            const double x = kr.k0 * double(branch) * (z - v * t) + sol.delta;
            const double e = std::exp(-std::abs(x));
            phi_z = kr.k0 * 4.0 * e / (1.0 + e * e);
            psi_z = d.m21 / gap * phi_z;
        }
        const cosserat::ClosedFormPsi cf = cosserat::psi_closed_form_arccoth(sol, z, t);
        csv += fmt17(z);
        csv += ',';
        csv += fmt17(phi);
        csv += ',';
        csv += fmt17(psi);
        csv += ',';
        csv += fmt17(phi_z);
        csv += ',';
        csv += fmt17(psi_z);
        csv += ',';
        csv += std::to_string(cosserat::arctan_branch_index(sol, z, t));
        csv += ',';
        csv += cf.defined ? fmt17(cf.value) : "nan";
        csv += ',';
        csv += cf.defined ? '1' : '0';
        csv += '\n';
    }
    atomic_write(out_csv, csv);

    json report = base_report("soliton", p);
    report["config"] = {{"v", v},       {"form", form}, {"z_min", z_min}, {"z_max", z_max},
                        {"n", n},       {"t", t},       {"branch", branch}};
    report["k"] = sig15(sol.k);
    report["m_sq"] = sig15(sol.m_sq);
    report["b"] = sig15(sol.b);
    report["delta"] = sig15(sol.delta);
    report["branch_switch_z"] = sig15(cosserat::branch_switch_z(sol.k, v, t));
    report["outputs"].push_back(out_csv);
    emit(report, std::nullopt);
    return 0;
}

int cmd_simulate(const std::string& params_file, double v, double z_min, double z_max, long n,
                 double t_end, const std::string& dt_text, long snapshots,
                 const std::string& out_dir) {
    if (!(z_min < z_max) || n < 16 || t_end < 0.0 || snapshots < 1)
        throw CLI::ValidationError("requires z-min < z-max, n >= 16, t-end >= 0, snapshots >= 1");
    const cosserat::MaterialParams p = cosserat::load_params_file(params_file);
    // Dynamical runs use the decaying-slope pair: the exact traveling
    // solution compatible with quiescent far fields (see soliton.hpp).
    const cosserat::SolitonSolution sol = cosserat::make_decaying_soliton(p, v);

    cosserat::SimConfig cfg;
    cfg.t_end = t_end;
    if (dt_text == "auto") {
        cfg.dt_auto = true;
    } else {
        cfg.dt_auto = false;
        cfg.dt = std::strtod(dt_text.c_str(), nullptr);
        if (!(cfg.dt > 0.0)) throw CLI::ValidationError("--dt must be 'auto' or a positive number");
    }

    const cosserat::FieldState initial =
        cosserat::soliton_initial_state(sol, z_min, z_max, std::size_t(n));
    const double dt = cfg.dt_auto ? cosserat::auto_dt(p, cfg, initial.h) : cfg.dt;
    const long total_steps = t_end > 0.0 ? long(std::ceil(t_end / dt - 1e-12)) : 0;
    cfg.record_every = std::max(1L, total_steps / snapshots);

    const cosserat::RunResult rr = cosserat::run(initial, cfg, p, [&](double z, double t) {
        return cosserat::phi_exact(sol, z, t);
    });

    std::filesystem::create_directories(out_dir);
    json report = base_report("simulate", p);
    report["config"] = {{"v", v},         {"z_min", z_min},       {"z_max", z_max},
                        {"n", n},         {"t_end", t_end},       {"dt", rr.dt_used},
                        {"snapshots", snapshots}, {"record_every", cfg.record_every}};

    for (std::size_t s = 0; s < rr.snapshots.size(); ++s) {
        const cosserat::FieldState& st = rr.snapshots[s];
        std::string csv = "# t=" + fmt17(st.t) + "\n";
        csv += "z,phi,psi,phi_t,psi_t\n";
        for (std::size_t i = 0; i < st.n(); ++i) {
            csv += fmt17(st.z(i));
            csv += ',';
            csv += fmt17(st.phi[i]);
            csv += ',';
            csv += fmt17(st.psi[i]);
            csv += ',';
            csv += fmt17(st.phi_t[i]);
            csv += ',';
            csv += fmt17(st.psi_t[i]);
            csv += '\n';
        }
        const std::string path = out_dir + "/fields_" + std::to_string(s) + ".csv";
        atomic_write(path, csv);
        report["outputs"].push_back(path);
    }

    report["k"] = sig15(sol.k);
    report["m_sq_effective"] = sig15(sol.m_sq);
    report["b"] = sig15(sol.b);

    json metrics;
    metrics["l2_shape_error"] = rr.metrics.l2_shape_error
                                    ? json(sig15(*rr.metrics.l2_shape_error))
                                    : json(nullptr);
    metrics["center_position"] = sig15(rr.metrics.center_position);
    metrics["measured_speed"] = rr.metrics.measured_speed
                                    ? json(sig15(*rr.metrics.measured_speed))
                                    : json(nullptr);
    metrics["energy_drift"] = sig15(rr.metrics.energy_drift);
    metrics["steps"] = rr.steps_taken;
    metrics["dt"] = sig15(rr.dt_used);
    const std::string metrics_path = out_dir + "/metrics.json";
    atomic_write(metrics_path, metrics.dump(2) + "\n");
    report["outputs"].push_back(metrics_path);
    report["metrics"] = metrics;
    emit(report, std::nullopt);
    return 0;
}

int cmd_verify(const std::string& suite, double tolerance_scale,
               const std::optional<std::string>& out_file) {
    const std::uint64_t seed = resolve_seed();
    cosserat::VerifyReport rep;
    try {
        rep = cosserat::verify_suite(suite, seed, tolerance_scale);
    } catch (const std::invalid_argument&) {
        throw;  // unknown suite name: input error, exit 2
    } catch (const std::exception& e) {
        // A check blew up instead of failing cleanly: verification failure.
        std::cerr << "FAILED: suite '" << suite << "' aborted: " << e.what() << "\n";
        return 1;
    }

    json report;
    report["command"] = "verify";
    report["tool_version"] = kToolVersion;
    report["seed"] = seed;
    report["suite"] = suite;
    report["tolerance_scale"] = tolerance_scale;
    json checks = json::array();
    for (const cosserat::CheckResult& c : rep.checks) {
        json jc;
        jc["suite"] = c.suite;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        checks.push_back(jc);
    }
    report["checks"] = checks;
    json findings = json::array();
    for (const cosserat::Finding& f : rep.findings) {
        json jf;
        jf["id"] = f.id;
        jf["description"] = f.description;
        jf["measured"] = f.measured;
        findings.push_back(jf);
    }
    report["findings"] = findings;
    report["all_pass"] = rep.all_pass;
    emit(report, out_file);

    if (!rep.all_pass) {
        for (const cosserat::CheckResult& c : rep.checks)
            if (!c.pass)
                std::cerr << "FAILED: [" << c.suite << "] " << c.name
                          << " residual=" << fmt17(c.residual)
                          << " tolerance=" << fmt17(c.tolerance) << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-axis micropolar elasticity: dispersion, solitons, simulation"};
    app.require_subcommand(1);

    std::string params_file, out_file, out_csv, out_dir, form = "exact", suite = "all";
    std::string dt_text = "auto";
    double v = 0.1, v_min = 0.0, v_max = 1.0, z_min = -40.0, z_max = 40.0, t = 0.0,
           t_end = 10.0, tolerance_scale = 1.0;
    long steps = 100, n = 1024, snapshots = 10;
    int branch = 1;
    bool have_out_file = false;

    CLI::App* derive = app.add_subcommand("derive", "derived wave quantities as JSON");
    derive->add_option("--params", params_file, "params JSON file")->required();
    derive->add_option("--out", out_file, "also write the report to this file")
        ->each([&](const std::string&) { have_out_file = true; });

    CLI::App* dispersion = app.add_subcommand("dispersion", "k(v) sweep as CSV");
    dispersion->add_option("--params", params_file)->required();
    dispersion->add_option("--v-min", v_min)->required();
    dispersion->add_option("--v-max", v_max)->required();
    dispersion->add_option("--steps", steps)->required();
    dispersion->add_option("--out", out_csv, "output CSV path")->required();

    CLI::App* classify = app.add_subcommand("classify", "parameter-regime classification");
    classify->add_option("--params", params_file)->required();

    CLI::App* soliton = app.add_subcommand("soliton", "sample the traveling-wave solution");
    soliton->add_option("--params", params_file)->required();
    soliton->add_option("--v", v)->required();
    soliton->add_option("--form", form)->check(CLI::IsMember({"exact", "paper", "linearised"}));
    soliton->add_option("--z-min", z_min)->required();
    soliton->add_option("--z-max", z_max)->required();
    soliton->add_option("--n", n)->required();
    soliton->add_option("--t", t);
    soliton->add_option("--branch", branch)->check(CLI::IsMember({1, -1}));
    soliton->add_option("--out", out_csv)->required();

    CLI::App* simulate = app.add_subcommand("simulate", "method-of-lines soliton run");
    simulate->add_option("--params", params_file)->required();
    simulate->add_option("--v", v)->required();
    simulate->add_option("--z-min", z_min)->required();
    simulate->add_option("--z-max", z_max)->required();
    simulate->add_option("--n", n)->required();
    simulate->add_option("--t-end", t_end)->required();
    simulate->add_option("--dt", dt_text, "'auto' or a positive step");
    simulate->add_option("--snapshots", snapshots);
    simulate->add_option("--out-dir", out_dir)->required();

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"tensor", "energy", "dispersion", "soliton", "simulate", "all"}));
    verify->add_option("--out", out_file, "also write the report to this file")
        ->each([&](const std::string&) { have_out_file = true; });
    verify->add_option("--tolerance-scale", tolerance_scale)
        ->description("testing hook: scale every tolerance (0 forces failure)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const std::optional<std::string> maybe_out =
        have_out_file ? std::optional<std::string>(out_file) : std::nullopt;

    try {
        if (derive->parsed()) return cmd_derive(params_file, maybe_out);
        if (dispersion->parsed()) return cmd_dispersion(params_file, v_min, v_max, steps, out_csv);
        if (classify->parsed()) return cmd_classify(params_file);
        if (soliton->parsed()) {
            try {
                return cmd_soliton(params_file, v, form, z_min, z_max, n, t, branch, out_csv);
            } catch (const std::domain_error& e) {
                // Undefined-regime request: report the admissible bands.
                const cosserat::MaterialParams p = cosserat::load_params_file(params_file);
                std::cerr << "error: " << e.what() << "\n" << describe_allowed(p) << "\n";
                return 3;
            }
        }
        if (simulate->parsed()) {
            try {
                return cmd_simulate(params_file, v, z_min, z_max, n, t_end, dt_text, snapshots,
                                    out_dir);
            } catch (const cosserat::instability_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 4;
            } catch (const std::domain_error& e) {
                const cosserat::MaterialParams p = cosserat::load_params_file(params_file);
                std::cerr << "error: " << e.what() << "\n" << describe_allowed(p) << "\n";
                return 3;
            }
        }
        if (verify->parsed()) return cmd_verify(suite, tolerance_scale, maybe_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
