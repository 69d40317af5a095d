#include "qe2/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

#include "qe2/report.hpp"

namespace qe2 {

const char* tol_class_name(TolClass c) {
    switch (c) {
        case TolClass::Exact: return "EXACT";
        case TolClass::Banded: return "BANDED";
        case TolClass::Decay: return "DECAY";
        case TolClass::Table: return "TABLE";
        case TolClass::Scalar: return "SCALAR";
    }
    return "?";
}

StateVector OpChain::apply(const StateVector& v, const QParam& q) const {
    StateVector cur = v;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) cur = it->apply(cur, q);
    return cur;
}

Window OpChain::clip_window(const Window& probe_window) const {
    Window w = probe_window;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) w = w.expand(it->margin(w));
    return w;
}

QParam RunConfig::make_q() const {
    if (theta_exact) return QParam::from_pi_fraction(q_mod, theta_num, theta_den);
    return QParam(q_mod, theta_float);
}

double RunConfig::lambda_psi(const LambdaSpec& l) const {
    const double theta = make_q().theta;
    return static_cast<double>(l.theta_mult) * theta +
           std::numbers::pi * static_cast<double>(l.pi_num) / static_cast<double>(l.pi_den);
}

Engine::Engine(RunConfig config) : cfg(std::move(config)), q(cfg.make_q()) {
    named_catalog(q);  // every documented operator self-tests against its formula
    const int width = std::min(cfg.m_cap + 2, cfg.quad_samples / 4 - 1);
    cache = std::make_shared<FourierCache>(q.qmod, cfg.quad_samples, width);
    band = band_cutoff(cfg.band_n_lo, cfg.band_n_hi, cfg.eps_band, *cache, cfg.m_cap);
}

std::vector<GridScalar> Engine::lambda_values() const {
    std::vector<GridScalar> v;
    v.reserve(cfg.lambdas.size());
    for (const auto& l : cfg.lambdas) v.push_back(GridScalar::make(l.n, cfg.lambda_psi(l)));
    return v;
}

Window Engine::window_for(const std::string& check, int d, std::int64_t lo, std::int64_t hi) const {
    auto it = cfg.window_override.find(check);
    if (it != cfg.window_override.end()) return Window::cube(d, it->second.first, it->second.second);
    return Window::cube(d, lo, hi);
}

std::uint64_t Engine::probe_cap_for(const std::string& check) const {
    auto it = cfg.probe_override.find(check);
    return it != cfg.probe_override.end() ? it->second : cfg.probe_cap;
}

std::uint64_t Engine::check_seed(const std::string& check) const {
    std::uint64_t h = cfg.seed;
    for (char c : check) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<LatticeIndex> select_probes(const Window& probe_window, std::uint64_t full_threshold,
                                        std::uint64_t cap, std::uint64_t seed) {
    if (probe_window.point_count() <= full_threshold) return probe_window.enumerate();
    std::mt19937_64 rng(seed);
    std::vector<LatticeIndex> out;
    std::unordered_map<LatticeIndex, bool, LatticeIndexHash> seen;
    out.reserve(cap);
    while (out.size() < cap) {
        LatticeIndex x = probe_window.sample(rng);
        if (seen.emplace(x, true).second) out.push_back(x);
    }
    return out;
}

ResidualStats residual(const OpChain& lhs, const OpChain& rhs, const Window& probe_window,
                       const Engine& eng, const std::string& check_name) {
    if (lhs.dim() != rhs.dim()) throw std::invalid_argument("residual: dimension mismatch");
    const Window clip_l = lhs.clip_window(probe_window);
    const Window clip_r = rhs.clip_window(probe_window);
    auto probes = select_probes(probe_window, eng.cfg.probe_full_threshold,
                                eng.probe_cap_for(check_name), eng.check_seed(check_name));
    ResidualStats st;
    st.probes = probes.size();
    for (const auto& x : probes) {
        StateVector e = basis_vector(x);
        StateVector a = lhs.apply(e, eng.q);
        StateVector b = rhs.apply(e, eng.q);
        for (auto& [y, amp] : a.amp)
            if (!clip_l.contains(y))
                throw std::logic_error(check_name + ": amplitude escaped the clip window (margin bug)");
        for (auto& [y, amp] : b.amp)
            if (!clip_r.contains(y))
                throw std::logic_error(check_name + ": amplitude escaped the clip window (margin bug)");
        st.max_residual = std::max(st.max_residual, diff_norm(a, b));
    }
    return st;
}

double fit_geometric_ratio(const std::vector<double>& residuals, bool* monotone) {
    // least squares on log r_l = a + l log(ratio); entries below 1e-15 end the fit
    std::vector<double> ys;
    for (double r : residuals) {
        if (r < 1e-15) break;
        ys.push_back(std::log(r));
    }
    if (monotone) {
        *monotone = true;
        for (std::size_t i = 1; i < ys.size(); ++i)
            if (ys[i] > ys[i - 1] + 1e-12) *monotone = false;
    }
    if (ys.size() < 2) return 0.0;
    const double m = static_cast<double>(ys.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const double xi = static_cast<double>(i);
        sx += xi;
        sy += ys[i];
        sxx += xi * xi;
        sxy += xi * ys[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return std::exp(slope);
}

DecayFit decay_sequence(const std::function<OpChain(int)>& family, const OpChain& target,
                        const std::vector<StateVector>& probes, int l_lo, int l_hi,
                        const QParam& q) {
    DecayFit fit;
    std::vector<StateVector> targets;
    targets.reserve(probes.size());
    for (const auto& e : probes) targets.push_back(target.apply(e, q));
    for (int l = l_lo; l <= l_hi; ++l) {
        OpChain op = family(l);
        double r = 0.0;
        for (std::size_t i = 0; i < probes.size(); ++i)
            r = std::max(r, diff_norm(op.apply(probes[i], q), targets[i]));
        fit.residuals.push_back(r);
    }
    fit.exact = std::all_of(fit.residuals.begin(), fit.residuals.end(),
                            [](double r) { return r < 1e-15; });
    if (!fit.exact) fit.ratio = fit_geometric_ratio(fit.residuals, &fit.monotone);
    return fit;
}

CheckResult run_check(const CheckDef& def, const Engine& eng) {
    CheckResult r;
    r.name = def.name;
    r.identity = def.identity;
    r.cls = def.cls;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        def.run(eng, r);
    } catch (const std::exception& ex) {
        r.error = true;
        r.pass = false;
        r.message = ex.what();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Report run_suite(const Engine& eng) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& defs = check_registry();
    Report rep;
    rep.cfg = eng.cfg;
    rep.checks.resize(defs.size());

    unsigned jobs = eng.cfg.jobs > 0 ? static_cast<unsigned>(eng.cfg.jobs)
                                     : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(defs.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= defs.size()) return;
            rep.checks[i] = run_check(defs[i], eng);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t + 1 < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    rep.tally();
    rep.total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

void Report::tally() {
    passed = failed = errored = 0;
    for (const auto& c : checks) {
        if (c.error) ++errored;
        else if (c.pass) ++passed;
        else ++failed;
    }
}

}  // namespace qe2
