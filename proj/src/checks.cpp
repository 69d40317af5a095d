#include <cmath>
#include <numbers>
#include <sstream>

#include "qe2/verify.hpp"

namespace qe2 {

namespace {

using namespace ops;

std::string cube_str(int d, std::int64_t lo, std::int64_t hi) {
    std::ostringstream os;
    os << "[" << lo << "," << hi << "]^" << d;
    return os.str();
}

std::string window_str(const Window& w) {
    std::ostringstream os;
    bool uniform = true;
    for (int k = 1; k < w.dim(); ++k)
        if (w.bounds[static_cast<std::size_t>(k)] != w.bounds[0]) uniform = false;
    if (uniform) return cube_str(w.dim(), w.lo(0), w.hi(0));
    os << "[";
    for (int k = 0; k < w.dim(); ++k)
        os << (k ? "x" : "") << "[" << w.lo(k) << "," << w.hi(k) << "]";
    os << "]";
    return os.str();
}

// Run lhs/rhs residual parts sharing one tolerance; aggregates the max.
void residual_parts(const Engine& eng, CheckResult& r, double tol,
                    const std::vector<std::tuple<OpChain, OpChain, Window>>& parts) {
    r.tolerance = tol;
    for (const auto& [lhs, rhs, w] : parts) {
        ResidualStats st = residual(lhs, rhs, w, eng, r.name);
        r.max_residual = std::max(r.max_residual, st.max_residual);
        r.probe_count += st.probes;
        if (r.window_str.empty()) r.window_str = window_str(w);
    }
    r.pass = r.max_residual <= tol;
}

ShiftOperator diag_mod(const LinForm& form) {
    // |q|^{form(x)} as a diagonal operator
    CoeffExpr e(form.dim());
    e.mod2 = form;
    for (auto& a : e.mod2.a) a *= 2;
    e.mod2.c *= 2;
    return ShiftOperator::diagonal(e);
}

ShiftOperator scale_absq_pow(const ShiftOperator& op, std::int64_t k) {
    ShiftOperator r = op;
    for (auto& t : r.terms) t.coeff.mod2.c += 2 * k;
    return r;
}

// ---------------------------------------------------------------- C1
void c1_pentagon_w(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 3, -8, 8);
    ShiftOperator w12 = W().embed(3, {0, 1});
    ShiftOperator w13 = W().embed(3, {0, 2});
    ShiftOperator w23 = W().embed(3, {1, 2});
    residual_parts(eng, r, eng.cfg.tol_exact,
                   {{OpChain{w23, w12}, OpChain{w12, w13, w23}, w}});
}

// ---------------------------------------------------------------- C2
void c2_relations(const Engine& eng, CheckResult& r) {
    Window w2 = eng.window_for(r.name, 2, -8, 8);
    Window w1 = Window::cube(1, -8, 8);
    Window w3 = Window::cube(3, -8, 8);
    std::vector<std::tuple<OpChain, OpChain, Window>> parts;
    parts.push_back({OpChain{v(), n(), vstar()}, OpChain(scale_q_pow(n(), 1)), w2});
    parts.push_back({OpChain{v(), nstar(), vstar()}, OpChain(scale_qbar_pow(nstar(), 1)), w2});
    parts.push_back({OpChain{v(), abs_n(), vstar()}, OpChain(scale_absq_pow(abs_n(), 1)), w2});
    parts.push_back({OpChain{z().adjoint(), Nhat(), z()},
                     OpChain(Nhat().add(ShiftOperator::identity(1))), w1});
    parts.push_back({OpChain{z(), Vtilde()}, OpChain(scale_zeta_pow(Vtilde().compose(z()), 1)), w1});
    // bosonisation relations in the concrete j-realization
    parts.push_back({OpChain{jz(), jB_v(), jz().adjoint()}, OpChain(jB_v()), w3});
    parts.push_back({OpChain{jz(), jB_n(), jz().adjoint()}, OpChain(scale_zeta_pow(jB_n(), 1)), w3});
    parts.push_back({OpChain{jB_v(), jB_n(), jB_v().adjoint()}, OpChain(scale_q_pow(jB_n(), 1)), w3});
    residual_parts(eng, r, eng.cfg.tol_exact, parts);
}

// ---------------------------------------------------------------- C3
void c3_heisenberg_z(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 5, -8, 8);
    ShiftOperator u1a = U().embed(5, {0, 1, 4});
    CoeffExpr e(5);
    e.phase2 = QuadForm::cross(5, 3, 4, -4);  // zeta^{-pl} on e_{k,l} ⊗ e_p
    ShiftOperator u2b = ShiftOperator::diagonal(e);
    ShiftOperator z12 = Z().embed(5, {0, 1, 2, 3});
    residual_parts(eng, r, eng.cfg.tol_exact,
                   {{OpChain{u2b.adjoint(), u1a.adjoint(), u2b, u1a}, OpChain(z12), w}});
}

// ---------------------------------------------------------------- C4
void c4_qexp_unitarity(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 4, -6, 6);
    ShiftOperator fq = qexp_X(GridScalar::make(0, 0.0), eng.band, eng.cache);
    residual_parts(eng, r, eng.cfg.tol_banded,
                   {{OpChain{fq, fq.adjoint()}, OpChain(ShiftOperator::identity(4)), w}});
}

// ---------------------------------------------------------------- C5
void c5_fourier_symmetry(const Engine& eng, CheckResult& r) {
    r.cls = TolClass::Table;
    r.tolerance = 1e-9;
    r.window_str = "n in [-6,6], |m| <= 40";
    std::vector<double> mods = {0.3, 0.5, 0.7};
    if (std::none_of(mods.begin(), mods.end(),
                     [&](double m) { return std::abs(m - eng.q.qmod) < 1e-12; }))
        mods.push_back(eng.q.qmod);
    const int mmax = 40;
    double sym = 0, parseval = 0, recon = 0, singular = 0;
    for (double mod : mods) {
        QParam qq(mod, eng.q.theta);
        // rows with the slow |q|^m tail need the full width for reconstruction
        const int width = std::max(
            mmax + 2, static_cast<int>(std::ceil(std::log(1e-12) / std::log(mod))) + 24);
        FourierCache fc(mod, eng.cfg.quad_samples, width);
        for (std::int64_t n = -6; n <= 6; ++n) {
            for (std::int64_t m = -mmax; m <= mmax; ++m) {
                double lhs = fc.coeff(m, n);
                double rhs = std::pow(-mod, static_cast<double>(m)) * fc.coeff(-m, n - m);
                sym = std::max(sym, std::abs(lhs - rhs));
            }
            parseval = std::max(parseval, fc.parseval_defect(n));
            for (int a = 0; a < 32; ++a) {
                double phi = 2.0 * std::numbers::pi * (a + 0.25) / 32.0;
                cplx direct = qexp_value_on_circle(n, phi, qq);
                cplx series = 0.0;
                for (std::int64_t m = -width; m <= width; ++m)
                    series += fc.coeff(m, n) * std::polar(1.0, static_cast<double>(m) * phi);
                recon = std::max(recon, std::abs(direct - series));
            }
            r.probe_count += 32;
        }
        for (int k = 0; k <= 3; ++k) {
            cplx val = qexp_value(cplx(-std::pow(mod, -2.0 * k), 0.0), qq);
            singular = std::max(singular, std::abs(val - cplx(-1.0, 0.0)));
        }
        if (qexp_value(cplx(0.0, 0.0), qq) != cplx(1.0, 0.0)) singular = 1.0;
    }
    r.metrics = {{"symmetry", sym}, {"parseval", parseval}, {"reconstruction", recon},
                 {"singular_points", singular}};
    r.max_residual = sym;
    r.pass = sym <= 1e-9 && parseval <= 1e-8 && recon <= 1e-8 && singular == 0.0;
}

// ---------------------------------------------------------------- C6
void c6_u_invariance(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 5, -6, 6);
    ShiftOperator f12 = f_lambda(GridScalar::make(0, 0.0), eng.band, eng.cache).embed(5, {0, 1, 2, 3});
    ShiftOperator u13 = U().embed(5, {0, 1, 4});
    ShiftOperator u23 = U().embed(5, {2, 3, 4});
    residual_parts(eng, r, eng.cfg.tol_banded,
                   {{OpChain{f12, u13, u23}, OpChain{u13, u23, f12}, w}});
}

// ------------------------------------------------------- C7 / C8 core
void braided_pentagon_for(const Engine& eng, CheckResult& r, const std::vector<GridScalar>& ls) {
    Window w = eng.window_for(r.name, 6, -6, 6);
    ShiftOperator f = f_lambda(GridScalar::make(0, 0.0), eng.band, eng.cache);
    ShiftOperator f23 = f.embed(6, {2, 3, 4, 5});
    ShiftOperator psi23 = braiding().embed(6, {2, 3, 4, 5});
    ShiftOperator psi23s = psi23.adjoint();
    std::vector<std::tuple<OpChain, OpChain, Window>> parts;
    for (const auto& lam : ls) {
        ShiftOperator fl12 = f_lambda(lam, eng.band, eng.cache).embed(6, {0, 1, 2, 3});
        parts.push_back({OpChain{f23, fl12}, OpChain{fl12, psi23, fl12, psi23s, f23}, w});
    }
    residual_parts(eng, r, eng.cfg.tol_banded, parts);
}

void c7_braided_pentagon(const Engine& eng, CheckResult& r) {
    braided_pentagon_for(eng, r, {GridScalar::make(0, 0.0)});
}

void c8_corep_family(const Engine& eng, CheckResult& r) {
    braided_pentagon_for(eng, r, eng.lambda_values());
}

// ---------------------------------------------------------------- C9
void c9_lemma_pentagon(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 6, -6, 6);
    ShiftOperator qx23 = qexp_X(GridScalar::make(0, 0.0), eng.band, eng.cache).embed(6, {2, 3, 4, 5});

    // polar cross-commutation of the pair (R, S) = (lambda X_12, lambda n^{-1}vP ⊗ v^2P ⊗ vn):
    // Ph(R)|S|Ph(R)* = |q|^{-1}|S| and Ph(S)|R|Ph(S)* = |q||R|, exact.
    LinForm s_mod(6);
    s_mod.a = {-1, 0, 0, 0, 1, 0};
    s_mod.c = 1;
    ShiftOperator abs_s = diag_mod(s_mod);
    ShiftOperator abs_r = diag_mod(x_mod_form()).embed(6, {0, 1, 2, 3});
    ShiftOperator ph_r = ShiftOperator::single(x_phase_term()).embed(6, {0, 1, 2, 3});
    ShiftOperator ph_s(6);
    {
        LinForm p(6);
        p.a = {-2, -4, 0, -4, 2, 0};
        p.c = 2;
        CoeffExpr e(6);
        e.phase2 = QuadForm::from_linear(p);
        ph_s = ShiftOperator::single({IntAffine::translation(6, {-1, -1, -2, 0, -1, 1}), e});
    }
    std::vector<std::tuple<OpChain, OpChain, Window>> parts;
    parts.push_back({OpChain{ph_r, abs_s, ph_r.adjoint()}, OpChain(scale_absq_pow(abs_s, -1)), w});
    parts.push_back({OpChain{ph_s, abs_r, ph_s.adjoint()}, OpChain(scale_absq_pow(abs_r, 1)), w});
    for (const auto& lam : eng.lambda_values()) {
        ShiftOperator tl12 = qexp_X(lam, eng.band, eng.cache).embed(6, {0, 1, 2, 3});
        ShiftOperator mid = lemma_middle(lam, eng.band, eng.cache);
        parts.push_back({OpChain{qx23, tl12}, OpChain{tl12, mid, qx23}, w});
    }
    residual_parts(eng, r, eng.cfg.tol_banded, parts);
}

// ---------------------------------------------------------------- C10
void c10_tprime(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 6, -6, 6);
    ShiftOperator f = f_lambda(GridScalar::make(0, 0.0), eng.band, eng.cache);
    ShiftOperator f23 = f.embed(6, {2, 3, 4, 5});
    ShiftOperator psi23 = braiding().embed(6, {2, 3, 4, 5});
    std::vector<std::tuple<OpChain, OpChain, Window>> parts;
    for (const auto& lam : eng.lambda_values()) {
        ShiftOperator fl12 = f_lambda(lam, eng.band, eng.cache).embed(6, {0, 1, 2, 3});
        ShiftOperator tp = t_prime(lam, eng.band, eng.cache);
        OpChain a{fl12.adjoint(), f23, fl12, f23.adjoint()};
        OpChain b{psi23, fl12, psi23.adjoint()};
        parts.push_back({a, b, w});
        parts.push_back({b, OpChain(tp), w});
    }
    residual_parts(eng, r, eng.cfg.tol_banded, parts);
}

// ---------------------------------------------------------------- C11
void c11_manageability(const Engine& eng, CheckResult& r) {
    const std::int64_t R = 4;
    r.tolerance = eng.cfg.tol_banded;
    r.window_str = "tuples in [-4,4]^8";
    ShiftOperator f4 = qexp_X(GridScalar::make(0, 0.0), eng.band, eng.cache);
    ShiftOperator ft = f_tilde(eng.band, eng.cache);

    std::unordered_map<LatticeIndex, StateVector, LatticeIndexHash> lhs_cache, rhs_cache;
    auto applied = [&](const ShiftOperator& op, const LatticeIndex& x,
                       std::unordered_map<LatticeIndex, StateVector, LatticeIndexHash>& cache)
        -> const StateVector& {
        auto it = cache.find(x);
        if (it != cache.end()) return it->second;
        return cache.emplace(x, op.apply(basis_vector(x), eng.q)).first->second;
    };
    auto amp_at = [](const StateVector& v, const LatticeIndex& y) -> cplx {
        auto it = v.amp.find(y);
        return it == v.amp.end() ? cplx(0.0, 0.0) : it->second;
    };

    double d_lr = 0, d_lc = 0, d_rc = 0;
    std::size_t tuples = 0;
    for (std::int64_t s = -R; s <= R; ++s)
        for (std::int64_t t = -R; t <= R; ++t)
            for (std::int64_t a = -R; a <= R; ++a)
                for (std::int64_t b = -R; b <= R; ++b)
                    for (std::int64_t l = -R; l <= R; ++l) {
                        const std::int64_t i = s - l + b;
                        const std::int64_t j = t - l + b;
                        const std::int64_t k = a + i + j + l - b;
                        if (std::abs(i) > R || std::abs(j) > R || std::abs(k) > R) continue;
                        ++tuples;
                        // LHS: zeta^{jl} <e_{i,j} ⊗ e_{k,l} | F_q(X) | e_{s,t} ⊗ e_{a+s+t,b}>
                        cplx lhs = eng.q.phase_unit(4 * j * l) *
                                   amp_at(applied(f4, LatticeIndex{s, t, a + s + t, b}, lhs_cache),
                                          LatticeIndex{i, j, k, l});
                        // RHS: |q|^{l-b} zeta^{-jb} <e~_{s,t} ⊗ e_{k,l} | F~ | e~_{i,j} ⊗ e_{a,b}>
                        cplx rhs = std::pow(eng.q.qmod, static_cast<double>(l - b)) *
                                   eng.q.phase_unit(-4 * j * b) *
                                   amp_at(applied(ft, LatticeIndex{i, j, a, b}, rhs_cache),
                                          LatticeIndex{s, t, k, l});
                        // closed delta-form
                        const std::int64_t m = b - l;
                        double sgn = (std::abs(m) % 2 == 0) ? 1.0 : -1.0;
                        cplx closed = sgn * std::pow(eng.q.qmod, static_cast<double>(l - b)) *
                                      eng.q.phase_unit(4 * j * b) *
                                      eng.q.phase_unit(2 * (b - l) * (s - k)) *
                                      eng.cache->coeff(m, k - s + 1);
                        d_lr = std::max(d_lr, std::abs(lhs - rhs));
                        d_lc = std::max(d_lc, std::abs(lhs - closed));
                        d_rc = std::max(d_rc, std::abs(rhs - closed));
                    }
    // off-constraint tuples must vanish on all three routes
    std::mt19937_64 rng(eng.check_seed(r.name));
    Window box = Window::cube(8, -R, R);
    double off = 0.0;
    for (int it = 0; it < 256; ++it) {
        LatticeIndex x = box.sample(rng);
        const std::int64_t i = x[0], j = x[1], k = x[2], l = x[3], s = x[4], t = x[5], a = x[6],
                           b = x[7];
        if (i == s - l + b && j == t - l + b && k + b - l == a + i + j) continue;
        cplx lhs = eng.q.phase_unit(4 * j * l) *
                   amp_at(applied(f4, LatticeIndex{s, t, a + s + t, b}, lhs_cache),
                          LatticeIndex{i, j, k, l});
        cplx rhs = std::pow(eng.q.qmod, static_cast<double>(l - b)) *
                   eng.q.phase_unit(-4 * j * b) *
                   amp_at(applied(ft, LatticeIndex{i, j, a, b}, rhs_cache),
                          LatticeIndex{s, t, k, l});
        off = std::max(off, std::max(std::abs(lhs), std::abs(rhs)));
    }
    r.probe_count = tuples;
    r.metrics = {{"lhs_vs_rhs", d_lr}, {"lhs_vs_closed", d_lc}, {"rhs_vs_closed", d_rc},
                 {"off_constraint", off}};
    r.max_residual = std::max({d_lr, d_lc, d_rc, off});
    r.pass = r.max_residual <= r.tolerance;
}

// ---------------------------------------------------------------- C12
void c12_ql_invariance(const Engine& eng, CheckResult& r) {
    // F (QL ⊗ QL) F* = QL ⊗ QL means F commutes with the unbounded QL ⊗ QL;
    // checked in commutator form so the measurement is not weighted by the
    // unbounded diagonal.
    Window w4 = eng.window_for(r.name, 4, -6, 6);
    Window w3 = Window::cube(3, -6, 6);
    ShiftOperator f = f_lambda(GridScalar::make(0, 0.0), eng.band, eng.cache);
    ShiftOperator qlql = QL().embed(4, {0, 1}).compose(QL().embed(4, {2, 3}));
    ShiftOperator ql3 = QL().embed(3, {0, 1});
    residual_parts(eng, r, eng.cfg.tol_banded,
                   {{OpChain{f, qlql}, OpChain{qlql, f}, w4},
                    {OpChain{U(), ql3}, OpChain{ql3, U()}, w3}});
}

// ---------------------------------------------------------------- C13
void c13_comult_n(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 4, -6, 6);
    ShiftOperator f = f_lambda(GridScalar::make(0, 0.0), eng.band, eng.cache);
    residual_parts(eng, r, eng.cfg.tol_banded,
                   {{OpChain{f, n().embed(4, {0, 1}), f.adjoint()}, OpChain(delta_n()), w}});
}

// ---------------------------------------------------------------- C14
void c14_comult_v(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 4, -6, 6);
    ShiftOperator f = f_lambda(GridScalar::make(0, 0.0), eng.band, eng.cache);
    residual_parts(eng, r, eng.cfg.tol_banded,
                   {{OpChain{f, v().embed(4, {0, 1}), f.adjoint()}, OpChain(delta_v()), w}});
}

// ---------------------------------------------------------------- C15
void c15_coassoc(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 6, -8, 8);
    auto embed12 = [](const ShiftOperator& op) { return op.embed(6, {0, 1, 2, 3}); };
    auto embed23 = [](const ShiftOperator& op) { return op.embed(6, {2, 3, 4, 5}); };
    ShiftOperator lhs = embed12(delta_n()).compose(vstar().embed(6, {4, 5}))
                            .add(embed12(delta_v()).compose(J_of(3, n(), true)));
    ShiftOperator rhs =
        n().embed(6, {0, 1}).compose(embed23(delta_v().adjoint()))
            .add(v().embed(6, {0, 1}).compose(P().embed(6, {0, 1})).compose(embed23(delta_n())));
    ShiftOperator closed = J_of(1, n(), true).compose(vstar().embed(6, {2, 3}))
                               .compose(vstar().embed(6, {4, 5}))
                               .add(v().embed(6, {0, 1}).compose(J_of(2, n(), true))
                                        .compose(vstar().embed(6, {4, 5})))
                               .add(v().embed(6, {0, 1}).compose(v().embed(6, {2, 3}))
                                        .compose(J_of(3, n(), true)));
    residual_parts(eng, r, eng.cfg.tol_exact,
                   {{OpChain(lhs), OpChain(rhs), w}, {OpChain(lhs), OpChain(closed), w}});
}

// ---------------------------------------------------------------- C16
void c16_yd_compat(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 4, -8, 8);
    ShiftOperator v12 = corep_V().embed(4, {0, 1, 2});
    ShiftOperator u13 = U().embed(4, {0, 1, 3});
    ShiftOperator w23 = W().embed(4, {2, 3});
    residual_parts(eng, r, eng.cfg.tol_exact,
                   {{OpChain{v12, u13, w23}, OpChain{w23, u13, v12}, w}});
}

// ---------------------------------------------------------------- C17
void c17_boson_pentagon(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 9, -3, 3);
    ShiftOperator wb = boson_W(eng.band, eng.cache);
    ShiftOperator wb12 = wb.embed(9, {0, 1, 2, 3, 4, 5});
    ShiftOperator wb13 = wb.embed(9, {0, 1, 2, 6, 7, 8});
    ShiftOperator wb23 = wb.embed(9, {3, 4, 5, 6, 7, 8});
    residual_parts(eng, r, eng.cfg.tol_banded,
                   {{OpChain{wb23, wb12}, OpChain{wb12, wb13, wb23}, w}});
}

// ---------------------------------------------------------------- C18
void c18_boson_comult(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 6, -6, 6);
    ShiftOperator wb = boson_W(eng.band, eng.cache);
    ShiftOperator wbs = wb.adjoint();
    // Delta_C(j_z) = j_z ⊗ j_z
    ShiftOperator dz = z().embed(6, {0}).compose(z().embed(6, {3}));
    // Delta_C(j_B(v)) = j_B(v) ⊗ j_B(v)
    ShiftOperator dv = v().embed(6, {1, 2}).compose(v().embed(6, {4, 5}));
    // Delta_C(j_B(n)) = j_B(n) ⊗ j_z j_B(v*) + j_B(v) ⊗ j_B(n)
    ShiftOperator dn = jB_n().embed(6, {0, 1, 2})
                           .compose(z().embed(6, {3}))
                           .compose(vstar().embed(6, {4, 5}))
                           .add(jB_v().embed(6, {0, 1, 2}).compose(jB_n().embed(6, {3, 4, 5})));
    residual_parts(eng, r, eng.cfg.tol_banded,
                   {{OpChain{wb, jz().embed(6, {0, 1, 2}), wbs}, OpChain(dz), w},
                    {OpChain{wb, jB_v().embed(6, {0, 1, 2}), wbs}, OpChain(dv), w},
                    {OpChain{wb, jB_n().embed(6, {0, 1, 2}), wbs}, OpChain(dn), w}});
}

// ---------------------------------------------------------------- C19
void c19_equivariance_tau(const Engine& eng, CheckResult& r) {
    Window w = eng.window_for(r.name, 4, -8, 8);
    std::vector<std::tuple<OpChain, OpChain, Window>> parts;
    for (int k = -2; k <= 2; ++k) {
        parts.push_back({OpChain(tau_conj(delta_v(), k, {0, 2})), OpChain(delta_v()), w});
        parts.push_back(
            {OpChain(tau_conj(delta_n(), k, {0, 2})), OpChain(scale_q_pow(delta_n(), k)), w});
    }
    residual_parts(eng, r, eng.cfg.tol_exact, parts);
}

// ---------------------------------------------------------------- C20
void c20_contraction_generators(const Engine& eng, CheckResult& r) {
    r.cls = TolClass::Decay;
    r.tolerance = eng.cfg.decay_rel_band;
    r.window_str = "probes e(1,0), e(2,0), e(3,-2)";
    std::vector<StateVector> probes = {basis_vector({1, 0}), basis_vector({2, 0}),
                                       basis_vector({3, -2})};
    r.probe_count = probes.size();
    auto fam_alpha = [&](int l) { return OpChain(tau_conj(alpha(), l, {0})); };
    auto fam_gamma = [&](int l) { return OpChain(tau_conj(gamma(), l, {0})); };
    auto fam_v = [&](int l) { return OpChain(tau_conj(v(), l, {0})); };
    DecayFit fa = decay_sequence(fam_alpha, OpChain(v()), probes, eng.cfg.l_lo, eng.cfg.l_hi, eng.q);
    DecayFit fg = decay_sequence(fam_gamma, OpChain(ShiftOperator::zero(2)), probes, eng.cfg.l_lo,
                                 eng.cfg.l_hi, eng.q);
    DecayFit fv = decay_sequence(fam_v, OpChain(v()), probes, eng.cfg.l_lo, eng.cfg.l_hi, eng.q);
    const double q2 = eng.q.qmod * eng.q.qmod;
    double dev_a = std::abs(fa.ratio / q2 - 1.0);
    double dev_g = std::abs(fg.ratio / eng.q.qmod - 1.0);
    r.metrics = {{"ratio_alpha", fa.ratio}, {"expected_alpha", q2},
                 {"ratio_gamma", fg.ratio}, {"expected_gamma", eng.q.qmod},
                 {"tau_v_exact", fv.exact ? 1.0 : 0.0}};
    r.max_residual = std::max(dev_a, dev_g);
    r.pass = dev_a <= r.tolerance && dev_g <= r.tolerance && fv.exact && fa.monotone && fg.monotone;
}

// ---------------------------------------------------------------- C21
void c21_contraction_t_y(const Engine& eng, CheckResult& r) {
    r.cls = TolClass::Decay;
    r.tolerance = eng.cfg.decay_rel_band;
    r.window_str = "probes with i,k >= 1";
    ShiftOperator yel = y_element(eng.q, eng.cfg.r_max);
    std::vector<StateVector> probes4 = {basis_vector({1, 0, 1, 0}), basis_vector({2, 1, 1, -1}),
                                        basis_vector({1, -1, 2, 0})};
    auto fam_y = [&](int l) { return OpChain(tau_conj(yel, l, {0, 2})); };
    DecayFit fy = decay_sequence(fam_y, OpChain(ShiftOperator::identity(4)), probes4, eng.cfg.l_lo,
                                 eng.cfg.l_hi, eng.q);
    // |q|^{-l} || (tau^l x tau^l) Y psi - psi || -> 0
    bool qscaled_to_zero = true;
    {
        double prev = -1.0;
        for (std::size_t idx = 0; idx < fy.residuals.size(); ++idx) {
            int l = eng.cfg.l_lo + static_cast<int>(idx);
            double scaled = fy.residuals[idx] * std::pow(eng.q.qmod, -static_cast<double>(l));
            if (prev >= 0 && scaled > prev + 1e-15) qscaled_to_zero = false;
            prev = scaled;
        }
    }
    // tau^l(t) -> 1 with ratio |q|^2
    std::vector<StateVector> probes2 = {basis_vector({1, 0}), basis_vector({2, -1})};
    auto fam_t = [&](int l) { return OpChain(tau_conj(t_diag(eng.cfg.poch_K), l, {0})); };
    DecayFit ft = decay_sequence(fam_t, OpChain(ShiftOperator::identity(2)), probes2, eng.cfg.l_lo,
                                 eng.cfg.l_hi, eng.q);
    // alpha^k v^{-k} -> t^{1/2} diagonal values
    double alim = 0.0;
    {
        const int k = eng.cfg.alpha_limit_k;
        ShiftOperator ak_vmk = alpha().pow(k).compose(vstar().pow(k));
        for (std::int64_t i = -2; i <= 5; ++i) {
            StateVector got = ak_vmk.apply(basis_vector({i, 0}), eng.q);
            auto it = got.amp.find(LatticeIndex{i, 0});
            cplx gv = it == got.amp.end() ? cplx(0.0, 0.0) : it->second;
            double want = 0.0;
            if (i >= 0) {
                double p = 1.0, f = std::pow(eng.q.qmod, 2.0 * static_cast<double>(i) + 2.0);
                while (f > 1e-18) {
                    p *= 1.0 - f;
                    f *= eng.q.qmod * eng.q.qmod;
                }
                want = std::sqrt(p);
            }
            alim = std::max(alim, std::abs(gv - cplx(want, 0.0)));
        }
    }
    const double q2 = eng.q.qmod * eng.q.qmod;
    double dev_y = std::abs(fy.ratio / q2 - 1.0);
    double dev_t = std::abs(ft.ratio / q2 - 1.0);
    r.probe_count = probes4.size() + probes2.size() + 8;
    r.metrics = {{"ratio_Y", fy.ratio},      {"expected_Y", q2},
                 {"ratio_t", ft.ratio},      {"expected_t", q2},
                 {"alpha_limit_dev", alim},  {"qscaled_to_zero", qscaled_to_zero ? 1.0 : 0.0}};
    r.max_residual = std::max(dev_y, dev_t);
    r.pass = dev_y <= r.tolerance && dev_t <= r.tolerance && alim <= 1e-10 && qscaled_to_zero;
}

// ---------------------------------------------------------------- C22
void c22_g_theta(const Engine& eng, CheckResult& r) {
    r.cls = TolClass::Scalar;
    r.tolerance = eng.cfg.tol_exact;
    r.window_str = "lambda grid |q|^[-8,8] x 12 angles";
    ScalarMap g = g_theta_map(eng.q);
    ScalarMap gm = g_minus_theta_map(eng.q);
    double worst = 0.0;
    const double psis[] = {0.0,  std::numbers::pi / 3.0, std::numbers::pi / 8.0,
                           1.0,  2.5,  -2.0, 0.4, -0.9, 1.7, -2.9, 3.05, 0.11};
    for (std::int64_t m = -8; m <= 8; ++m)
        for (double psi : psis) {
            cplx lam = std::polar(std::pow(eng.q.qmod, static_cast<double>(m)), psi);
            cplx lhs = g.f(eng.q.q() * lam);
            cplx rhs = eng.q.qmod * g.f(lam);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
            worst = std::max(worst, std::abs(gm.f(g.f(lam)) - lam) / std::max(1.0, std::abs(lam)));
            ++r.probe_count;
        }
    if (g.f(cplx(0.0, 0.0)) != cplx(0.0, 0.0)) worst = 1.0;
    r.max_residual = worst;
    r.pass = worst <= r.tolerance;
}

std::vector<CheckDef> make_registry() {
    std::vector<CheckDef> defs;
    auto put = [&](std::string name, std::string identity, TolClass cls,
                   std::function<void(const Engine&, CheckResult&)> fn) {
        defs.push_back({std::move(name), std::move(identity), cls, std::move(fn)});
    };
    put("C01_pentagon_w", "W23 W12 = W12 W13 W23", TolClass::Exact, c1_pentagon_w);
    put("C02_relations",
        "v n v* = q n; v n* v* = conj(q) n*; v|n|v* = |q||n|; z* N^ z = N^ + 1; "
        "z V~ = zeta V~ z; zt vt zt* = vt; zt nt zt* = zeta nt; vt nt vt* = q nt",
        TolClass::Exact, c2_relations);
    put("C03_heisenberg_z", "Z12 = U2b* U1a* U2b U1a", TolClass::Exact, c3_heisenberg_z);
    put("C04_qexp_unitarity", "F_q(X) F_q(X)* = 1", TolClass::Banded, c4_qexp_unitarity);
    put("C05_fourier_symmetry", "F_m(|q|^n) = (-|q|)^m F_{-m}(|q|^{n-m})", TolClass::Table,
        c5_fourier_symmetry);
    put("C06_u_invariance", "F12 U13 U23 = U13 U23 F12", TolClass::Banded, c6_u_invariance);
    put("C07_braided_pentagon", "F23 F12 = F12 Psi23 F12 Psi23* F23", TolClass::Banded,
        c7_braided_pentagon);
    put("C08_corep_family", "F23 F^l12 = F^l12 Psi23 F^l12 Psi23* F23, l in {q, q^2, |q|e^(i pi/3)}",
        TolClass::Banded, c8_corep_family);
    put("C09_lemma_pentagon",
        "F(X)23 T(l)12 = T(l)12 F(l n^-1vP x v^2P x vn) F(X)23; polar cross-relations",
        TolClass::Banded, c9_lemma_pentagon);
    put("C10_tprime", "(F^l)*12 F23 F^l12 F23* = Psi23 F^l12 Psi23* = T'(l)", TolClass::Banded,
        c10_tprime);
    put("C11_manageability",
        "<x ⊗ u|Z* F|y ⊗ v> = managed form = (-|q|)^(l-b) zeta^(jb) Ph(q)^((b-l)(s-k)) "
        "F_(b-l)(|q|^(k-s+1)) with delta constraints",
        TolClass::Banded, c11_manageability);
    put("C12_ql_invariance", "F (QL ⊗ QL) F* = QL ⊗ QL; U (QL ⊗ 1) U* = QL ⊗ 1", TolClass::Banded,
        c12_ql_invariance);
    put("C13_comult_n", "F (n ⊗ 1) F* = n ⊗ v* + vP ⊗ n", TolClass::Banded, c13_comult_n);
    put("C14_comult_v", "F (v ⊗ 1) F* = v ⊗ v", TolClass::Banded, c14_comult_v);
    put("C15_coassoc_generators",
        "(D x id)D(n) = (id x D)D(n) = J1(n)J2(v*)J3(v*) + J1(v)J2(n)J3(v*) + J1(v)J2(v)J3(n)",
        TolClass::Exact, c15_coassoc);
    put("C16_yd_compat", "V12 U13 W23 = W23 U13 V12", TolClass::Exact, c16_yd_compat);
    put("C17_boson_pentagon", "Wb23 Wb12 = Wb12 Wb13 Wb23", TolClass::Banded, c17_boson_pentagon);
    put("C18_boson_comult",
        "Wb-conjugation of j_z, jB(v), jB(n) equals the closed comultiplication forms",
        TolClass::Banded, c18_boson_comult);
    put("C19_equivariance_tau", "(tau^k x tau^k) Delta = Delta tau^k on v, n for k = -2..2",
        TolClass::Exact, c19_equivariance_tau);
    put("C20_contraction_generators",
        "tau^l(alpha) -> v with ratio |q|^2; tau^l(gamma) -> 0 with ratio |q|; tau^l(v) = v",
        TolClass::Decay, c20_contraction_generators);
    put("C21_contraction_t_y",
        "(tau^l x tau^l)Y -> 1 with ratio |q|^2; tau^l(t) -> 1; alpha^k v^-k -> t^(1/2)",
        TolClass::Decay, c21_contraction_t_y);
    put("C22_g_theta", "g_theta(q lambda) = |q| g_theta(lambda); g_-theta g_theta = id",
        TolClass::Scalar, c22_g_theta);
    return defs;
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> defs = make_registry();
    return defs;
}

const CheckDef* find_check(const std::string& name) {
    for (const auto& d : check_registry())
        if (d.name == name) return &d;
    return nullptr;
}

}  // namespace qe2
