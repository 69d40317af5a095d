#pragma once

#include <map>
#include <optional>
#include <string>

#include "qe2/shiftop.hpp"

namespace qe2 {

// Raised on malformed configuration; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One lambda in C-bar^|q|: |q|^n * exp(i (theta_mult * theta + pi * pi_num / pi_den)).
struct LambdaSpec {
    std::int64_t n = 1;
    std::int64_t theta_mult = 0;
    std::int64_t pi_num = 0;
    std::int64_t pi_den = 1;
};

// Flat, typed key = value configuration for suite runs.
struct RunConfig {
    // deformation parameter; angle preferably as an exact rational multiple of pi
    double q_mod = 0.5;
    bool theta_exact = true;
    std::int64_t theta_num = 1;
    std::int64_t theta_den = 8;
    double theta_float = 0.0;  // used when theta_exact == false

    double eps_band = 1e-10;
    int quad_samples = 4096;
    int m_cap = 512;
    // Rows of the Fourier table the band limit must cover. The spectral mass
    // of row n sits near m = n-1 for n < 0, so the range has to reach the rows
    // touched after one band displacement of a [-6,6] probe window, or
    // composed banded products lose the drifted centers of their inner rows.
    std::int64_t band_n_lo = -40;
    std::int64_t band_n_hi = 42;

    double tol_exact = 1e-12;
    double tol_banded = 1e-8;
    double decay_rel_band = 0.10;

    std::uint64_t probe_full_threshold = 2000;
    std::uint64_t probe_cap = 500;
    std::uint64_t seed = 20240901;

    int l_lo = 1, l_hi = 8;       // decay range
    int r_max = 16;               // Y series truncation
    std::int64_t poch_K = 0;      // q-Pochhammer depth; 0 = auto tail < 1e-15
    int alpha_limit_k = 40;       // k for alpha^k v^{-k} -> t^{1/2}

    std::vector<LambdaSpec> lambdas = {{1, 1, 0, 1}, {2, 2, 0, 1}, {1, 0, 1, 3}};

    // per-check probe window override (cube bounds)
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> window_override;
    // per-check probe cap override; the heavy 6- and 9-leg banded products ship
    // with smaller caps to keep each check well under its runtime budget
    std::map<std::string, std::uint64_t> probe_override = {
        {"C07_braided_pentagon", 200}, {"C08_corep_family", 128},
        {"C09_lemma_pentagon", 128},   {"C10_tprime", 128},
        {"C17_boson_pentagon", 128}};

    int jobs = 0;  // 0 = hardware concurrency
    std::string out_dir = ".";

    QParam make_q() const;
    double lambda_psi(const LambdaSpec& l) const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);
std::string default_config_text();

}  // namespace qe2
