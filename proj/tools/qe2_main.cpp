// qe2-verify: numerical verification of the braided quantum E(2) operator
// identities on truncated lattice windows.
//
// Subcommands: run, check, list, list-ops, fourier, sweep.
// Exit codes: 0 all pass, 1 check failure, 2 usage/config error.

#include <filesystem>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "qe2/report.hpp"

using namespace qe2;

namespace {

struct QArgs {
    double q_mod = -1.0;
    std::string q_arg_pi;
    double q_arg = std::numeric_limits<double>::quiet_NaN();
};

void apply_q_args(RunConfig& cfg, const QArgs& qa) {
    if (qa.q_mod > 0.0) cfg.q_mod = qa.q_mod;
    if (!qa.q_arg_pi.empty()) {
        RunConfig tmp = parse_config_text("q_arg_pi = " + qa.q_arg_pi + "\n");
        cfg.theta_exact = true;
        cfg.theta_num = tmp.theta_num;
        cfg.theta_den = tmp.theta_den;
    } else if (!std::isnan(qa.q_arg)) {
        cfg.theta_exact = false;
        cfg.theta_float = qa.q_arg;
    }
    if (!(cfg.q_mod > 0.0 && cfg.q_mod < 1.0))
        throw ConfigError("q_mod must satisfy 0 < |q| < 1");
}

void print_result_line(const CheckResult& c) {
    std::cout << (c.error ? "[ERR ] " : (c.pass ? "[PASS] " : "[FAIL] ")) << std::left
              << std::setw(26) << c.name << " residual " << std::scientific
              << std::setprecision(3) << c.max_residual << "  tol " << c.tolerance << "  ("
              << c.probe_count << " probes, " << std::fixed << std::setprecision(0) << c.wall_ms
              << " ms)";
    if (!c.message.empty()) std::cout << "  " << c.message;
    std::cout << "\n";
}

int emit_report(Report& rep, const std::string& out_dir) {
    rep.tally();
    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/report.json", report_to_json(rep));
    write_file(out_dir + "/report.md", report_to_markdown(rep));
    std::cout << "report: " << out_dir << "/report.json, " << out_dir << "/report.md\n";
    return rep.all_pass() ? 0 : 1;
}

int cmd_run(const std::string& config_path, const std::string& out_dir, const QArgs& qa) {
    RunConfig cfg = config_path.empty() ? RunConfig{} : parse_config_file(config_path);
    apply_q_args(cfg, qa);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    Engine eng(cfg);
    std::cout << "band limit M = " << eng.band << " (eps_band = " << cfg.eps_band << ")\n";
    Report rep = run_suite(eng);
    for (const auto& c : rep.checks) print_result_line(c);
    std::cout << "summary: " << rep.passed << " passed, " << rep.failed << " failed, "
              << rep.errored << " errored\n";
    return emit_report(rep, cfg.out_dir);
}

int cmd_check(const std::string& name, const std::string& config_path, const QArgs& qa,
              std::int64_t wlo, std::int64_t whi, std::uint64_t probes) {
    const CheckDef* def = find_check(name);
    if (!def) {
        std::cerr << "unknown check '" << name << "'; see `qe2-verify list`\n";
        return 2;
    }
    RunConfig cfg = config_path.empty() ? RunConfig{} : parse_config_file(config_path);
    apply_q_args(cfg, qa);
    if (wlo <= whi && !(wlo == 0 && whi == 0)) cfg.window_override[name] = {wlo, whi};
    if (probes > 0) cfg.probe_override[name] = probes;
    Engine eng(cfg);
    CheckResult res = run_check(*def, eng);
    print_result_line(res);
    for (const auto& [k, v] : res.metrics)
        std::cout << "    " << k << " = " << std::scientific << std::setprecision(6) << v << "\n";
    return res.pass && !res.error ? 0 : 1;
}

int cmd_list() {
    for (const auto& d : check_registry())
        std::cout << std::left << std::setw(26) << d.name << " [" << tol_class_name(d.cls) << "] "
                  << d.identity << "\n";
    return 0;
}

int cmd_list_ops(const QArgs& qa) {
    RunConfig cfg;
    apply_q_args(cfg, qa);
    for (const auto& op : named_catalog(cfg.make_q()))
        std::cout << std::left << std::setw(10) << op.name << " on " << std::setw(12) << op.legs
                  << " " << op.formula << "\n";
    std::cout << "(plus banded operators F_q(X), F = F_q(X)Y, F~, T(l), T'(l), Wb built per run)\n";
    return 0;
}

int cmd_fourier(std::int64_t n_lo, std::int64_t n_hi, int m_max, const QArgs& qa, int samples,
                const std::string& out_csv) {
    RunConfig cfg;
    apply_q_args(cfg, qa);
    if (samples > 0) cfg.quad_samples = samples;
    FourierCache fc(cfg.q_mod, cfg.quad_samples, m_max + 2);
    std::ostringstream csv;
    csv << "n";
    for (int m = -m_max; m <= m_max; ++m) csv << ",F_" << m;
    csv << ",parseval_defect,symmetry_defect\n";
    double worst_sym = 0.0;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        csv << n;
        double sym = 0.0;
        for (int m = -m_max; m <= m_max; ++m) {
            csv << "," << std::setprecision(17) << fc.coeff(m, n);
            double rhs = std::pow(-cfg.q_mod, static_cast<double>(m)) * fc.coeff(-m, n - m);
            sym = std::max(sym, std::abs(fc.coeff(m, n) - rhs));
        }
        worst_sym = std::max(worst_sym, sym);
        csv << "," << fc.parseval_defect(n) << "," << sym << "\n";
    }
    if (out_csv.empty()) {
        std::cout << csv.str();
    } else {
        write_file(out_csv, csv.str());
        std::cout << "wrote " << out_csv << "\n";
    }
    std::cout << "max symmetry defect: " << std::scientific << worst_sym << "\n";
    return worst_sym <= 1e-9 ? 0 : 1;
}

int cmd_sweep(const std::string& mods, const std::string& args_pi, const std::string& config_path,
              const std::string& out_dir) {
    RunConfig base = config_path.empty() ? RunConfig{} : parse_config_file(config_path);
    std::vector<double> qmods;
    for (const auto& tok : [&] {
             std::vector<std::string> v;
             std::stringstream ss(mods);
             std::string s;
             while (std::getline(ss, s, ',')) v.push_back(s);
             return v;
         }())
        qmods.push_back(std::stod(tok));
    std::vector<std::pair<std::int64_t, std::int64_t>> angles;
    {
        std::stringstream ss(args_pi);
        std::string s;
        while (std::getline(ss, s, ',')) {
            RunConfig tmp = parse_config_text("q_arg_pi = " + s + "\n");
            angles.push_back({tmp.theta_num, tmp.theta_den});
        }
    }
    if (qmods.empty() || angles.empty()) throw ConfigError("sweep: empty q grid");
    int rc = 0;
    std::vector<std::pair<std::string, Report>> runs;
    std::cout << "| |q| | arg/pi | passed | failed | errored | worst residual | worst check |\n";
    for (double m : qmods)
        for (auto [num, den] : angles) {
            RunConfig cfg = base;
            cfg.q_mod = m;
            cfg.theta_exact = true;
            cfg.theta_num = num;
            cfg.theta_den = den;
            if (!(m > 0.0 && m < 1.0)) throw ConfigError("sweep: q_mod out of range");
            Engine eng(cfg);
            Report rep = run_suite(eng);
            rep.tally();
            double worst = 0.0;
            std::string worst_name;
            for (const auto& c : rep.checks)
                if (c.cls != TolClass::Decay && c.max_residual > worst) {
                    worst = c.max_residual;
                    worst_name = c.name;
                }
            std::cout << "| " << m << " | " << num << "/" << den << " | " << rep.passed << " | "
                      << rep.failed << " | " << rep.errored << " | " << std::scientific
                      << std::setprecision(3) << worst << " | " << worst_name << " |\n";
            if (!out_dir.empty()) {
                std::ostringstream dir;
                dir << out_dir << "/q_" << m << "_arg_" << num << "_" << den;
                Report copy = rep;
                emit_report(copy, dir.str());
            }
            if (!rep.all_pass()) rc = 1;
            std::ostringstream tag;
            tag << m << " " << num << "/" << den;
            runs.emplace_back(tag.str(), std::move(rep));
        }
    // max residual per check per q point
    std::cout << "\n| check |";
    for (auto& [tag, rep] : runs) std::cout << " " << tag << " |";
    std::cout << "\n";
    if (!runs.empty())
        for (std::size_t i = 0; i < runs.front().second.checks.size(); ++i) {
            std::cout << "| " << runs.front().second.checks[i].name << " |";
            for (auto& [tag, rep] : runs)
                std::cout << " " << std::scientific << std::setprecision(2)
                          << rep.checks[i].max_residual << " |";
            std::cout << "\n";
        }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification engine for braided quantum E(2) operator identities"};
    app.require_subcommand(1);

    QArgs qa;
    std::string config_path, out_dir, check_name, out_csv;
    std::int64_t n_lo = -3, n_hi = 3, wlo = 0, whi = 0;
    int m_max = 20, samples = 0;
    std::uint64_t probes = 0;
    std::string sweep_mods = "0.3,0.5,0.7", sweep_args = "0,1/8,1/3";

    auto add_q_opts = [&](CLI::App* sub) {
        sub->add_option("--q-mod", qa.q_mod, "modulus of q (0 < |q| < 1)");
        sub->add_option("--q-arg-pi", qa.q_arg_pi, "arg q as a rational multiple of pi, e.g. 1/8");
        sub->add_option("--q-arg", qa.q_arg, "arg q in radians (float fallback)");
    };

    auto* run = app.add_subcommand("run", "run the full check suite");
    run->add_option("--config", config_path, "key = value configuration file");
    run->add_option("--out", out_dir, "report output directory");
    add_q_opts(run);

    auto* chk = app.add_subcommand("check", "run a single named check");
    chk->add_option("name", check_name, "check name (see `list`)")->required();
    chk->add_option("--config", config_path);
    chk->add_option("--window-lo", wlo, "probe window lower bound");
    chk->add_option("--window-hi", whi, "probe window upper bound");
    chk->add_option("--probes", probes, "probe cap override");
    add_q_opts(chk);

    app.add_subcommand("list", "list all registered checks");
    auto* lops = app.add_subcommand("list-ops", "list the named operator catalog");
    add_q_opts(lops);

    auto* fou = app.add_subcommand("fourier", "dump the quantum-exponential Fourier table");
    fou->add_option("--n-lo", n_lo);
    fou->add_option("--n-hi", n_hi);
    fou->add_option("--m-max", m_max);
    fou->add_option("--samples", samples);
    fou->add_option("--out", out_csv, "CSV output path (default: stdout)");
    add_q_opts(fou);

    auto* sw = app.add_subcommand("sweep", "run the suite over a q grid");
    sw->add_option("--q-mods", sweep_mods, "comma list of |q| values");
    sw->add_option("--q-args-pi", sweep_args, "comma list of arg q as rational multiples of pi");
    sw->add_option("--config", config_path);
    sw->add_option("--out", out_dir, "per-run report directory root");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("run")) return cmd_run(config_path, out_dir, qa);
        if (app.got_subcommand("check"))
            return cmd_check(check_name, config_path, qa, wlo, whi, probes);
        if (app.got_subcommand("list")) return cmd_list();
        if (app.got_subcommand("list-ops")) return cmd_list_ops(qa);
        if (app.got_subcommand("fourier"))
            return cmd_fourier(n_lo, n_hi, m_max, qa, samples, out_csv);
        if (app.got_subcommand("sweep"))
            return cmd_sweep(sweep_mods, sweep_args, config_path, out_dir);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
