// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
//  A1  exact identities at 1e-12 on [-8,8]^d windows, >= 200 probes, <= 30 s
//  A2  quantum-exponential layer (symmetry, Parseval, singular values,
//      reconstruction) for |q| in {0.3, 0.5, 0.7}
//  A3  banded identities at 1e-8 with eps_band = 1e-10 and 4096 samples;
//      each check <= 2 min, all banded checks <= 15 min
//  A4  manageability three-way agreement over [-4,4] tuples at 1e-8
//  A5  contraction decay ratios within 10% of |q|^2 and |q|;
//      alpha^k v^{-k} -> t^{1/2} within 1e-10 at k = 40
//  A6  real-q degeneration: braiding equals the flip and the suite passes
//  A7  dense-oracle equivalence within 1e-10 on the 20-expression set

#include <chrono>
#include <cstdio>
#include <map>

#include "oracle_regression.hpp"
#include "qe2/report.hpp"

using namespace qe2;

namespace {

int g_failures = 0;

void line(const char* id, bool pass, const std::string& detail) {
    std::printf("[%s] %s %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

const CheckResult* by_name(const Report& rep, const std::string& name) {
    for (const auto& c : rep.checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

int main() {
    RunConfig cfg;  // defaults: q = 0.5 e^{i pi/8}, eps_band 1e-10, 4096 samples
    Engine eng(cfg);
    std::printf("default engine: |q| = %.2f, arg q = pi*%lld/%lld, band M = %d\n", cfg.q_mod,
                static_cast<long long>(cfg.theta_num), static_cast<long long>(cfg.theta_den),
                eng.band);
    Report rep = run_suite(eng);
    rep.tally();

    // ---- A1: exact identities
    {
        const char* names[] = {"C01_pentagon_w",   "C02_relations",       "C03_heisenberg_z",
                               "C15_coassoc_generators", "C16_yd_compat", "C19_equivariance_tau",
                               "C22_g_theta"};
        bool ok = true;
        double worst = 0, total_ms = 0;
        std::size_t min_probes = SIZE_MAX;
        for (const char* n : names) {
            const CheckResult* c = by_name(rep, n);
            if (!c || c->error || !c->pass || c->max_residual > 1e-12) ok = false;
            if (c) {
                worst = std::max(worst, c->max_residual);
                total_ms += c->wall_ms;
                min_probes = std::min(min_probes, c->probe_count);
            }
        }
        if (min_probes < 200) ok = false;
        if (total_ms > 30000) ok = false;
        line("A1 exact-identities", ok,
             "worst residual " + fmt(worst) + ", min probes " + std::to_string(min_probes) +
                 ", total " + fmt(total_ms / 1000) + " s (tol 1e-12, >= 200, <= 30 s)");
    }

    // ---- A2: quantum-exponential layer (C5 covers 0.3/0.5/0.7 internally)
    {
        const CheckResult* c = by_name(rep, "C05_fourier_symmetry");
        bool ok = c && c->pass && !c->error;
        std::map<std::string, double> m;
        if (c)
            for (auto& [k, v] : c->metrics) m[k] = v;
        ok = ok && m["symmetry"] <= 1e-9 && m["parseval"] <= 1e-8 &&
             m["reconstruction"] <= 1e-8 && m["singular_points"] == 0.0;
        line("A2 qexp-layer", ok,
             "symmetry " + fmt(m["symmetry"]) + ", parseval " + fmt(m["parseval"]) +
                 ", reconstruction " + fmt(m["reconstruction"]) + ", singular exact " +
                 (m["singular_points"] == 0.0 ? "yes" : "no"));
    }

    // ---- A3: banded identities
    {
        const char* names[] = {"C04_qexp_unitarity", "C06_u_invariance", "C07_braided_pentagon",
                               "C08_corep_family",   "C09_lemma_pentagon", "C10_tprime",
                               "C11_manageability",  "C12_ql_invariance",  "C13_comult_n",
                               "C14_comult_v",       "C17_boson_pentagon", "C18_boson_comult"};
        bool ok = true;
        double worst = 0, total_ms = 0, worst_ms = 0;
        for (const char* n : names) {
            const CheckResult* c = by_name(rep, n);
            if (!c || c->error || !c->pass || c->max_residual > 1e-8) ok = false;
            if (c) {
                worst = std::max(worst, c->max_residual);
                total_ms += c->wall_ms;
                worst_ms = std::max(worst_ms, c->wall_ms);
            }
        }
        if (worst_ms > 120000 || total_ms > 900000) ok = false;
        line("A3 banded-identities", ok,
             "worst residual " + fmt(worst) + ", slowest " + fmt(worst_ms / 1000) + " s, total " +
                 fmt(total_ms / 1000) + " s (tol 1e-8, <= 120 s each, <= 900 s all)");
    }

    // ---- A4: manageability three-way agreement
    {
        const CheckResult* c = by_name(rep, "C11_manageability");
        bool ok = c && c->pass && !c->error;
        double worst = 0;
        if (c)
            for (auto& [k, v] : c->metrics)
                if (k != "off_constraint") worst = std::max(worst, v);
        ok = ok && worst <= 1e-8;
        line("A4 manageability-three-way", ok,
             "worst pairwise " + fmt(worst) + " over " + std::to_string(c ? c->probe_count : 0) +
                 " admissible tuples (tol 1e-8)");
    }

    // ---- A5: contraction decay
    {
        const CheckResult* c20 = by_name(rep, "C20_contraction_generators");
        const CheckResult* c21 = by_name(rep, "C21_contraction_t_y");
        bool ok = c20 && c21 && c20->pass && c21->pass && !c20->error && !c21->error;
        std::map<std::string, double> m;
        if (c20)
            for (auto& [k, v] : c20->metrics) m[k] = v;
        if (c21)
            for (auto& [k, v] : c21->metrics) m[k] = v;
        double q2 = cfg.q_mod * cfg.q_mod;
        ok = ok && std::abs(m["ratio_alpha"] / q2 - 1.0) <= 0.10 &&
             std::abs(m["ratio_gamma"] / cfg.q_mod - 1.0) <= 0.10 &&
             std::abs(m["ratio_Y"] / q2 - 1.0) <= 0.10 && m["alpha_limit_dev"] <= 1e-10;
        line("A5 contraction-decay", ok,
             "ratios alpha " + fmt(m["ratio_alpha"]) + ", gamma " + fmt(m["ratio_gamma"]) +
                 ", Y " + fmt(m["ratio_Y"]) + " (targets " + fmt(q2) + "/" + fmt(cfg.q_mod) + "/" +
                 fmt(q2) + " +-10%), alpha-limit dev " + fmt(m["alpha_limit_dev"]));
    }

    // ---- A6: real-q degeneration
    {
        RunConfig rc = cfg;
        rc.theta_num = 0;
        rc.theta_den = 1;
        Engine re(rc);
        double flip = residual(OpChain(ops::braiding()), OpChain(ops::swap_pairs()),
                               Window::cube(4, -6, 6), re, "A6_flip")
                          .max_residual;
        Report rrep = run_suite(re);
        rrep.tally();
        bool ok = flip == 0.0 && rrep.all_pass();
        line("A6 real-q-degeneration", ok,
             "braiding vs flip residual " + fmt(flip) + " (exact), theta=0 suite " +
                 std::to_string(rrep.passed) + "/" + std::to_string(rrep.checks.size()) +
                 " passed");
    }

    // ---- A7: dense-oracle equivalence
    {
        auto out = oracle::run_oracle_regression(eng.q);
        bool ok = out.expressions == 20 && out.worst <= 1e-10 && out.worst_funcalc <= 1e-10;
        line("A7 oracle-equivalence", ok,
             std::to_string(out.expressions) + " expressions, worst " + fmt(out.worst) +
                 ", functional calculus " + fmt(out.worst_funcalc) + " (tol 1e-10)");
    }

    std::printf("%s\n", g_failures == 0 ? "acceptance: all criteria pass"
                                        : "acceptance: FAILURES present");
    return g_failures == 0 ? 0 : 1;
}
