#pragma once

#include "qe2/config.hpp"
#include "qe2/constructions.hpp"

namespace qe2 {

enum class TolClass { Exact, Banded, Decay, Table, Scalar };

const char* tol_class_name(TolClass c);

// Operator product L = factors[0] * factors[1] * ... * factors[k-1],
// applied to vectors right-to-left. Kept as a chain so large banded products
// are never materialized term-by-term.
struct OpChain {
    std::vector<ShiftOperator> factors;

    OpChain() = default;
    OpChain(std::initializer_list<ShiftOperator> fs) : factors(fs) {}
    explicit OpChain(ShiftOperator op) { factors.push_back(std::move(op)); }

    int dim() const { return factors.empty() ? 0 : factors.front().d; }
    StateVector apply(const StateVector& v, const QParam& q) const;
    // Window the chain's image of probe-window vectors is guaranteed to stay
    // inside (probe window expanded by accumulated per-factor margins).
    Window clip_window(const Window& probe_window) const;
};

struct CheckResult {
    std::string name;
    std::string identity;
    TolClass cls = TolClass::Exact;
    std::string window_str;
    std::size_t probe_count = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool error = false;
    std::string message;
    double wall_ms = 0.0;
    // named sub-metrics (decay ratios, table defects, ...)
    std::vector<std::pair<std::string, double>> metrics;
};

// Per-suite context: deformation parameter, Fourier table, band limit.
struct Engine {
    RunConfig cfg;
    QParam q;
    std::shared_ptr<const FourierCache> cache;
    int band = 0;

    explicit Engine(RunConfig config);

    std::vector<GridScalar> lambda_values() const;
    Window window_for(const std::string& check, int d, std::int64_t lo, std::int64_t hi) const;
    std::uint64_t probe_cap_for(const std::string& check) const;
    std::uint64_t check_seed(const std::string& check) const;
};

// Probes: every interior point when the pool is small, else a seeded sample.
std::vector<LatticeIndex> select_probes(const Window& probe_window, std::uint64_t full_threshold,
                                        std::uint64_t cap, std::uint64_t seed);

// max over probes of || lhs e - rhs e ||; apply results outside the expanded
// clip window are reported as errors (margin bug), never silently clipped.
struct ResidualStats {
    double max_residual = 0.0;
    std::size_t probes = 0;
};
ResidualStats residual(const OpChain& lhs, const OpChain& rhs, const Window& probe_window,
                       const Engine& eng, const std::string& check_name);

// Residual sequence r_l for l in [l_lo, l_hi] against a fixed target, with a
// least-squares geometric-ratio fit on the log residuals. Residuals below
// 1e-15 truncate the fit range; all-zero sequences are reported as exact.
struct DecayFit {
    std::vector<double> residuals;
    double ratio = 0.0;
    bool exact = false;   // every residual below the floor
    bool monotone = true; // non-increasing over the fitted range
};
DecayFit decay_sequence(const std::function<OpChain(int)>& family, const OpChain& target,
                        const std::vector<StateVector>& probes, int l_lo, int l_hi,
                        const QParam& q);
double fit_geometric_ratio(const std::vector<double>& residuals, bool* monotone = nullptr);

struct CheckDef {
    std::string name;
    std::string identity;
    TolClass cls = TolClass::Exact;
    std::function<void(const Engine&, CheckResult&)> run;
};

const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(const std::string& name);

CheckResult run_check(const CheckDef& def, const Engine& eng);

struct Report;
Report run_suite(const Engine& eng);

}  // namespace qe2
