#include "qe2/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace qe2 {

namespace {

nlohmann::json config_json(const RunConfig& c) {
    nlohmann::json j;
    j["q_mod"] = c.q_mod;
    if (c.theta_exact) {
        j["q_arg_pi"] = {{"num", c.theta_num}, {"den", c.theta_den}};
    } else {
        j["q_arg"] = c.theta_float;
    }
    j["eps_band"] = c.eps_band;
    j["quad_samples"] = c.quad_samples;
    j["m_cap"] = c.m_cap;
    j["band_n_range"] = {c.band_n_lo, c.band_n_hi};
    j["tol_exact"] = c.tol_exact;
    j["tol_banded"] = c.tol_banded;
    j["decay_rel_band"] = c.decay_rel_band;
    j["probe_full_threshold"] = c.probe_full_threshold;
    j["probe_cap"] = c.probe_cap;
    j["seed"] = c.seed;
    j["l_range"] = {c.l_lo, c.l_hi};
    j["r_max"] = c.r_max;
    j["poch_K"] = c.poch_K;
    j["alpha_limit_k"] = c.alpha_limit_k;
    nlohmann::json lams = nlohmann::json::array();
    for (const auto& l : c.lambdas)
        lams.push_back({{"n", l.n}, {"theta_mult", l.theta_mult},
                        {"pi_num", l.pi_num}, {"pi_den", l.pi_den}});
    j["lambdas"] = lams;
    nlohmann::json wo = nlohmann::json::object();
    for (const auto& [k, v] : c.window_override) wo[k] = {v.first, v.second};
    j["window_override"] = wo;
    nlohmann::json po = nlohmann::json::object();
    for (const auto& [k, v] : c.probe_override) po[k] = v;
    j["probe_override"] = po;
    return j;
}

}  // namespace

std::string report_to_json(const Report& r) {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool_version"] = r.version;
    j["config"] = config_json(r.cfg);
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["identity"] = c.identity;
        cj["class"] = tol_class_name(c.cls);
        cj["window"] = c.window_str;
        cj["probes"] = c.probe_count;
        cj["max_residual"] = c.max_residual;
        cj["tolerance"] = c.tolerance;
        cj["pass"] = c.pass;
        cj["error"] = c.error;
        if (!c.message.empty()) cj["message"] = c.message;
        if (!c.metrics.empty()) {
            nlohmann::json m = nlohmann::json::object();
            for (const auto& [k, v] : c.metrics) m[k] = v;
            cj["metrics"] = m;
        }
        cj["wall_ms"] = c.wall_ms;
        checks.push_back(std::move(cj));
    }
    j["checks"] = checks;
    j["summary"] = {{"total", r.checks.size()},
                    {"passed", r.passed},
                    {"failed", r.failed},
                    {"errored", r.errored}};
    j["total_ms"] = r.total_ms;
    return j.dump(2) + "\n";
}

std::string report_to_markdown(const Report& r) {
    std::ostringstream os;
    os << "# Identity verification report\n\n";
    os << "Tool: " << r.version << "\n\n";
    os << "q: |q| = " << r.cfg.q_mod;
    if (r.cfg.theta_exact)
        os << ", arg q = " << r.cfg.theta_num << "/" << r.cfg.theta_den << " pi";
    else
        os << ", arg q = " << r.cfg.theta_float << " rad";
    os << "; eps_band = " << r.cfg.eps_band << ", samples = " << r.cfg.quad_samples
       << ", seed = " << r.cfg.seed << "\n\n";
    os << "Summary: " << r.passed << " passed, " << r.failed << " failed, " << r.errored
       << " errored, of " << r.checks.size() << "\n\n";
    os << "| check | class | window | probes | max residual | tolerance | status |\n";
    os << "|---|---|---|---:|---:|---:|---|\n";
    for (const auto& c : r.checks) {
        os << "| " << c.name << " | " << tol_class_name(c.cls) << " | " << c.window_str << " | "
           << c.probe_count << " | " << std::scientific << std::setprecision(3) << c.max_residual
           << " | " << c.tolerance << " | "
           << (c.error ? "ERROR" : (c.pass ? "pass" : "FAIL")) << " |\n";
    }
    os << "\n## Identities\n\n";
    for (const auto& c : r.checks) os << "- `" << c.name << "`: " << c.identity << "\n";
    bool any_metrics = false;
    for (const auto& c : r.checks)
        if (!c.metrics.empty()) any_metrics = true;
    if (any_metrics) {
        os << "\n## Metrics\n\n";
        for (const auto& c : r.checks) {
            if (c.metrics.empty() && c.message.empty()) continue;
            os << "- `" << c.name << "`:";
            for (const auto& [k, v] : c.metrics)
                os << " " << k << " = " << std::scientific << std::setprecision(4) << v << ";";
            if (!c.message.empty()) os << " message: " << c.message;
            os << "\n";
        }
    }
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace qe2
