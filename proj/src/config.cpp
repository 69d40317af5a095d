#include "qe2/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qe2 {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (...) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + v);
    }
}

std::int64_t parse_int(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        long long i = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return i;
    } catch (...) {
        throw ConfigError("config: bad integer value for '" + key + "': " + v);
    }
}

// "p/r" or "p"
std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& v, const std::string& key) {
    auto slash = v.find('/');
    if (slash == std::string::npos) return {parse_int(v, key), 1};
    std::int64_t num = parse_int(trim(v.substr(0, slash)), key);
    std::int64_t den = parse_int(trim(v.substr(slash + 1)), key);
    if (den == 0) throw ConfigError("config: zero denominator in '" + key + "'");
    return {num, den};
}

std::vector<std::string> split(const std::string& v, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

// Angle token for a lambda: "<k>q" = k*theta, else rational multiple of pi.
LambdaSpec parse_lambda(const std::string& tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw ConfigError("config: lambda entry needs n:psi, got " + tok);
    LambdaSpec l;
    l.n = parse_int(trim(tok.substr(0, colon)), "lambda");
    std::string psi = trim(tok.substr(colon + 1));
    if (!psi.empty() && psi.back() == 'q') {
        std::string k = trim(psi.substr(0, psi.size() - 1));
        l.theta_mult = k.empty() ? 1 : parse_int(k, "lambda");
    } else {
        auto [num, den] = parse_fraction(psi, "lambda");
        l.pi_num = num;
        l.pi_den = den;
    }
    return l;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + " is not key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "q_mod") cfg.q_mod = parse_double(val, key);
        else if (key == "q_arg_pi") {
            auto [num, den] = parse_fraction(val, key);
            cfg.theta_exact = true;
            cfg.theta_num = num;
            cfg.theta_den = den;
        } else if (key == "q_arg") {
            cfg.theta_exact = false;
            cfg.theta_float = parse_double(val, key);
        } else if (key == "q_cartesian") {
            // "re,im" — float-theta fallback
            auto parts = split(val, ',');
            if (parts.size() != 2) throw ConfigError("config: q_cartesian needs re,im");
            const double re = parse_double(parts[0], key);
            const double im = parse_double(parts[1], key);
            cfg.q_mod = std::hypot(re, im);
            cfg.theta_exact = false;
            cfg.theta_float = std::atan2(im, re);
        } else if (key == "eps_band") cfg.eps_band = parse_double(val, key);
        else if (key == "quad_samples") cfg.quad_samples = static_cast<int>(parse_int(val, key));
        else if (key == "m_cap") cfg.m_cap = static_cast<int>(parse_int(val, key));
        else if (key == "band_n_lo") cfg.band_n_lo = parse_int(val, key);
        else if (key == "band_n_hi") cfg.band_n_hi = parse_int(val, key);
        else if (key == "tol_exact") cfg.tol_exact = parse_double(val, key);
        else if (key == "tol_banded") cfg.tol_banded = parse_double(val, key);
        else if (key == "decay_rel_band") cfg.decay_rel_band = parse_double(val, key);
        else if (key == "probe_full_threshold")
            cfg.probe_full_threshold = static_cast<std::uint64_t>(parse_int(val, key));
        else if (key == "probe_cap") cfg.probe_cap = static_cast<std::uint64_t>(parse_int(val, key));
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(val, key));
        else if (key == "l_lo") cfg.l_lo = static_cast<int>(parse_int(val, key));
        else if (key == "l_hi") cfg.l_hi = static_cast<int>(parse_int(val, key));
        else if (key == "r_max") cfg.r_max = static_cast<int>(parse_int(val, key));
        else if (key == "poch_K") cfg.poch_K = parse_int(val, key);
        else if (key == "alpha_limit_k") cfg.alpha_limit_k = static_cast<int>(parse_int(val, key));
        else if (key == "lambda") {
            cfg.lambdas.clear();
            for (const auto& tok : split(val, ',')) cfg.lambdas.push_back(parse_lambda(tok));
        } else if (key.rfind("window.", 0) == 0) {
            std::string check = key.substr(7);
            auto dots = val.find("..");
            if (dots == std::string::npos)
                throw ConfigError("config: window override needs lo..hi, got " + val);
            std::int64_t lo = parse_int(trim(val.substr(0, dots)), key);
            std::int64_t hi = parse_int(trim(val.substr(dots + 2)), key);
            if (lo > hi) throw ConfigError("config: empty window in '" + key + "'");
            cfg.window_override[check] = {lo, hi};
        } else if (key.rfind("probes.", 0) == 0) {
            cfg.probe_override[key.substr(7)] = static_cast<std::uint64_t>(parse_int(val, key));
        } else if (key == "jobs") cfg.jobs = static_cast<int>(parse_int(val, key));
        else if (key == "out_dir") cfg.out_dir = val;
        else throw ConfigError("config: unknown key '" + key + "'");
    }
    if (!(cfg.q_mod > 0.0 && cfg.q_mod < 1.0))
        throw ConfigError("config: q_mod must satisfy 0 < |q| < 1");
    if (cfg.quad_samples < 64 || cfg.quad_samples % 2 != 0)
        throw ConfigError("config: quad_samples must be even and >= 64");
    if (cfg.m_cap < 4 || cfg.m_cap > 4096) throw ConfigError("config: m_cap out of range");
    if (cfg.l_hi < cfg.l_lo) throw ConfigError("config: l range empty");
    if (cfg.eps_band <= 0.0) throw ConfigError("config: eps_band must be positive");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string default_config_text() {
    return
        "# qe2-verify run configuration\n"
        "q_mod = 0.5\n"
        "q_arg_pi = 1/8        # theta as an exact rational multiple of pi\n"
        "eps_band = 1e-10\n"
        "quad_samples = 4096\n"
        "m_cap = 512\n"
        "band_n_lo = -40\n"
        "band_n_hi = 42\n"
        "tol_exact = 1e-12\n"
        "tol_banded = 1e-8\n"
        "decay_rel_band = 0.10\n"
        "probe_full_threshold = 2000\n"
        "probe_cap = 500\n"
        "seed = 20240901\n"
        "l_lo = 1\n"
        "l_hi = 8\n"
        "r_max = 16\n"
        "poch_K = 0            # 0 = truncate the q-Pochhammer tail below 1e-15\n"
        "alpha_limit_k = 40\n"
        "lambda = 1:1q, 2:2q, 1:1/3\n"
        "jobs = 0\n"
        "out_dir = .\n";
}

}  // namespace qe2
