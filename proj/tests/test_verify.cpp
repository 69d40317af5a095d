#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qe2/report.hpp"

using namespace qe2;
using namespace qe2::ops;

namespace {

RunConfig small_cfg() {
    RunConfig cfg;
    cfg.quad_samples = 1024;
    cfg.m_cap = 128;
    cfg.band_n_lo = -24;
    cfg.band_n_hi = 26;
    return cfg;
}

}  // namespace

TEST_CASE("residual calibration: equal, perturbed, pentagon") {
    Engine eng(small_cfg());
    Window w2 = Window::cube(2, -8, 8);

    CHECK(residual(OpChain(v()), OpChain(v()), w2, eng, "t").max_residual == 0.0);

    double r = residual(OpChain(v()), OpChain(v().scale(1.0 + 1e-6)), w2, eng, "t").max_residual;
    CHECK(r == doctest::Approx(1e-6).epsilon(1e-9));

    ShiftOperator w12 = W().embed(3, {0, 1}), w13 = W().embed(3, {0, 2}), w23 = W().embed(3, {1, 2});
    double p = residual(OpChain{w23, w12}, OpChain{w12, w13, w23}, Window::cube(3, -8, 8), eng,
                        "pentagon")
                   .max_residual;
    CHECK(p <= 1e-14);
}

TEST_CASE("probe selection: full enumeration under the threshold, seeded sample above") {
    auto all = select_probes(Window::cube(2, -8, 8), 2000, 500, 42);
    CHECK(all.size() == 17 * 17);
    auto sampled = select_probes(Window::cube(3, -8, 8), 2000, 500, 42);
    CHECK(sampled.size() == 500);
    auto sampled2 = select_probes(Window::cube(3, -8, 8), 2000, 500, 42);
    CHECK(sampled.size() == sampled2.size());
    for (std::size_t i = 0; i < sampled.size(); ++i) CHECK(sampled[i] == sampled2[i]);
}

TEST_CASE("residual is independent of probe evaluation order") {
    Engine eng(small_cfg());
    Window w = Window::cube(2, -6, 6);
    auto probes = select_probes(w, 2000, 500, 7);
    ShiftOperator a = vn(), b = vn().scale(1.0 + 1e-9);
    double fwd = 0, rev = 0;
    for (auto& x : probes)
        fwd = std::max(fwd, diff_norm(a.apply(basis_vector(x), eng.q), b.apply(basis_vector(x), eng.q)));
    std::reverse(probes.begin(), probes.end());
    for (auto& x : probes)
        rev = std::max(rev, diff_norm(a.apply(basis_vector(x), eng.q), b.apply(basis_vector(x), eng.q)));
    CHECK(fwd == rev);
}

TEST_CASE("chain clip windows cover every produced amplitude") {
    Engine eng(small_cfg());
    ShiftOperator f = qexp_X(GridScalar::make(0, 0.0), eng.band, eng.cache);
    OpChain chain{f, f.adjoint()};
    Window probe_w = Window::cube(4, -3, 3);
    Window clip = chain.clip_window(probe_w);
    auto pts = probe_w.enumerate();
    for (std::size_t i = 0; i < pts.size() && i < 20; ++i) {
        StateVector out = chain.apply(basis_vector(pts[i]), eng.q);
        for (auto& [y, a] : out.amp) CHECK(clip.contains(y));
    }
}

TEST_CASE("decay examples") {
    Engine eng(small_cfg());
    std::vector<StateVector> probes = {basis_vector(LatticeIndex{0, 0})};

    // tau^l(v) vs v: all residuals zero, reported exact
    DecayFit fv = decay_sequence([&](int l) { return OpChain(tau_conj(v(), l, {0})); },
                                 OpChain(v()), probes, 1, 8, eng.q);
    CHECK(fv.exact);

    // tau^l(gamma) vs 0 on e00: residuals |q|^l exactly
    DecayFit fg = decay_sequence([&](int l) { return OpChain(tau_conj(gamma(), l, {0})); },
                                 OpChain(ShiftOperator::zero(2)), probes, 1, 8, eng.q);
    REQUIRE(fg.residuals.size() == 8);
    for (int l = 1; l <= 8; ++l)
        CHECK(fg.residuals[static_cast<std::size_t>(l - 1)] ==
              doctest::Approx(std::pow(0.5, l)).epsilon(1e-12));
    CHECK(fg.ratio == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(fg.monotone);
}

TEST_CASE("geometric fit truncates below the floor") {
    std::vector<double> rs = {1e-2, 1e-4, 1e-6, 1e-17, 1e-18};
    double ratio = fit_geometric_ratio(rs);
    CHECK(ratio == doctest::Approx(1e-2).epsilon(1e-6));
}

TEST_CASE("registry names and classes") {
    const auto& defs = check_registry();
    CHECK(defs.size() == 22);
    CHECK(find_check("C07_braided_pentagon") != nullptr);
    CHECK(find_check("no_such_check") == nullptr);
    for (const auto& d : defs) CHECK_FALSE(d.identity.empty());
}

TEST_CASE("build failures are recorded, not thrown") {
    RunConfig cfg = small_cfg();
    cfg.m_cap = 8;  // band cutoff cannot reach its target
    cfg.band_n_lo = -24;
    cfg.band_n_hi = 26;
    auto make_engine = [&] { return Engine(cfg); };
    CHECK_THROWS_AS(make_engine(), std::domain_error);

    // per-check errors are captured in the result
    Engine eng(small_cfg());
    CheckDef bad{"bad", "x", TolClass::Exact,
                 [](const Engine&, CheckResult&) { throw std::runtime_error("boom"); }};
    CheckResult r = run_check(bad, eng);
    CHECK(r.error);
    CHECK_FALSE(r.pass);
    CHECK(r.message == "boom");
}

TEST_CASE("truncation dominance: halving eps_band does not increase the residual") {
    RunConfig loose_cfg = small_cfg();
    loose_cfg.eps_band = 1e-6;
    RunConfig tight_cfg = small_cfg();
    tight_cfg.eps_band = 5e-7;
    Engine loose(loose_cfg), tight(tight_cfg);
    const CheckDef* c4 = find_check("C04_qexp_unitarity");
    REQUIRE(c4 != nullptr);
    double r_loose = run_check(*c4, loose).max_residual;
    double r_tight = run_check(*c4, tight).max_residual;
    CHECK(r_tight <= r_loose * (1.0 + 1e-9));
}

TEST_CASE("shrinking the probe window never increases the residual") {
    RunConfig cfg = small_cfg();
    cfg.eps_band = 1e-6;  // visible truncation error
    cfg.window_override["C04_qexp_unitarity"] = {-6, 6};
    Engine big(cfg);
    cfg.window_override["C04_qexp_unitarity"] = {-3, 3};
    Engine small(cfg);
    const CheckDef* c4 = find_check("C04_qexp_unitarity");
    double r_big = run_check(*c4, big).max_residual;
    double r_small = run_check(*c4, small).max_residual;
    CHECK(r_small <= r_big * (1.0 + 1e-12));
}

TEST_CASE("real q degenerates the braiding to the plain flip") {
    RunConfig cfg = small_cfg();
    cfg.theta_num = 0;
    cfg.theta_den = 1;
    Engine eng(cfg);
    double r = residual(OpChain(braiding()), OpChain(swap_pairs()), Window::cube(4, -6, 6), eng,
                        "flip")
                   .max_residual;
    CHECK(r == 0.0);
}

TEST_CASE("suite report tallies match and survive serialization") {
    RunConfig cfg = small_cfg();
    // tiny windows to keep the suite quick in unit tests
    for (const auto& d : check_registry()) cfg.window_override[d.name] = {-3, 3};
    cfg.probe_cap = 40;
    for (auto& [k, v] : cfg.probe_override) v = 24;
    Engine eng(cfg);
    Report rep = run_suite(eng);
    CHECK(rep.checks.size() == 22);
    CHECK(rep.passed + rep.failed + rep.errored == rep.checks.size());
    CHECK(rep.passed == 22);
    CHECK(std::is_sorted(rep.checks.begin(), rep.checks.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; }));
    std::string js = report_to_json(rep);
    CHECK(js.find("\"schema_version\"") != std::string::npos);
    std::string md = report_to_markdown(rep);
    for (const auto& c : rep.checks) CHECK(md.find(c.name) != std::string::npos);
    // the markdown summary lists every check with its identity string
    for (const auto& d : check_registry()) CHECK(md.find(d.identity) != std::string::npos);
}
