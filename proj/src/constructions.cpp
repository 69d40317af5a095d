#include "qe2/constructions.hpp"

#include <cmath>

namespace qe2 {

GridScalar GridScalar::from_value(cplx value, const QParam& q) {
    const double av = std::abs(value);
    if (av == 0.0) return origin();
    const double n_real = std::log(av) / std::log(q.qmod);
    const double n_round = std::round(n_real);
    if (std::abs(n_real - n_round) > 1e-9 * std::max(1.0, std::abs(n_real)))
        throw std::domain_error("GridScalar: modulus not on the |q|-grid");
    return make(static_cast<std::int64_t>(n_round), std::atan2(value.imag(), value.real()));
}

cplx GridScalar::value(const QParam& q) const {
    if (zero) return 0.0;
    return std::polar(std::pow(q.qmod, static_cast<double>(n)), psi);
}

namespace ops {

namespace {

MonomialTerm term(IntAffine map, CoeffExpr coeff) { return {std::move(map), std::move(coeff)}; }

// q^{w*x_leg + c}: modulus and phase together (doubled internally)
CoeffExpr q_power(int d, int leg, std::int64_t w, std::int64_t c = 0) {
    CoeffExpr e(d);
    e.mod2 = LinForm::coordinate(d, leg, 2 * w, 2 * c);
    e.phase2 = QuadForm::from_linear(LinForm::coordinate(d, leg, 2 * w, 2 * c));
    return e;
}

CoeffExpr zeta_linear(int d, int leg, std::int64_t w) {
    CoeffExpr e(d);
    e.phase2 = QuadForm::from_linear(LinForm::coordinate(d, leg, 4 * w));
    return e;
}

}  // namespace

ShiftOperator v() { return ShiftOperator::shift({-1, 0}); }
ShiftOperator vstar() { return ShiftOperator::shift({1, 0}); }

ShiftOperator n() {
    return ShiftOperator::single(term(IntAffine::translation(2, {0, 1}), q_power(2, 0, 1)));
}

ShiftOperator nstar() { return n().adjoint(); }

ShiftOperator n_inv() {
    return ShiftOperator::single(term(IntAffine::translation(2, {0, -1}), q_power(2, 0, -1)));
}

ShiftOperator abs_n() {
    CoeffExpr e(2);
    e.mod2 = LinForm::coordinate(2, 0, 2);
    return ShiftOperator::diagonal(e);
}

ShiftOperator vn() {
    return ShiftOperator::single(term(IntAffine::translation(2, {-1, 1}), q_power(2, 0, 1)));
}

ShiftOperator P() { return ShiftOperator::diagonal(zeta_linear(2, 1, -1)); }
ShiftOperator Pstar() { return ShiftOperator::diagonal(zeta_linear(2, 1, 1)); }

ShiftOperator QL() {
    CoeffExpr e(2);
    e.mod2 = LinForm::coordinate(2, 1, 2);
    return ShiftOperator::diagonal(e);
}

ShiftOperator z() { return ShiftOperator::shift({1}); }

ShiftOperator Nhat() {
    CoeffExpr e(1);
    e.factors.push_back({FactorKind::Linear, LinForm::coordinate(1, 0, 1), 0, nullptr});
    return ShiftOperator::diagonal(e);
}

ShiftOperator Pprime() { return ShiftOperator::diagonal(zeta_linear(1, 0, -1)); }
ShiftOperator Vtilde() { return Pprime(); }

ShiftOperator W() {
    IntAffine m = IntAffine::identity(2);
    m.at(1, 0) = 1;  // e_k ⊗ e_l -> e_k ⊗ e_{l+k}
    return ShiftOperator::single(term(m, CoeffExpr(2)));
}

ShiftOperator U() {
    IntAffine m = IntAffine::identity(3);
    m.at(2, 1) = 1;  // e_{i,j} ⊗ e_p -> e_{i,j} ⊗ e_{p+j}
    return ShiftOperator::single(term(m, CoeffExpr(3)));
}

ShiftOperator Z() {
    CoeffExpr e(4);
    e.phase2 = QuadForm::cross(4, 1, 3, -4);  // zeta^{-jl}
    return ShiftOperator::diagonal(e);
}

ShiftOperator swap_pairs() {
    IntAffine m;
    m.d = 4;
    m.A.assign(16, 0);
    m.b.assign(4, 0);
    m.at(0, 2) = 1;
    m.at(1, 3) = 1;
    m.at(2, 0) = 1;
    m.at(3, 1) = 1;
    return ShiftOperator::single(term(m, CoeffExpr(4)));
}

ShiftOperator braiding() { return Z().compose(swap_pairs()); }

ShiftOperator Ztilde() {
    CoeffExpr e(4);
    e.phase2 = QuadForm::cross(4, 1, 3, 4);  // zeta^{+jl}
    return ShiftOperator::diagonal(e);
}

ShiftOperator Y() {
    IntAffine m = IntAffine::identity(4);
    m.at(2, 0) = 1;
    m.at(2, 1) = 1;  // e_{i,j} ⊗ e_{k,l} -> e_{i,j} ⊗ e_{k+i+j,l}
    return ShiftOperator::single(term(m, CoeffExpr(4)));
}

ShiftOperator Ytilde() { return Y(); }

LinForm x_mod_form() {
    LinForm f(4);
    f.a = {-1, 0, 1, 0};
    f.c = 1;  // k - i + 1
    return f;
}

MonomialTerm x_phase_term() {
    CoeffExpr e(4);
    LinForm p(4);
    p.a = {-2, -4, 2, 0};  // zeta^{-j} Ph(q)^{k-i+1}, doubled
    p.c = 2;
    e.phase2 = QuadForm::from_linear(p);
    return term(IntAffine::translation(4, {-1, -1, -1, 1}), e);
}

ShiftOperator X() {
    MonomialTerm t = x_phase_term();
    LinForm m2 = x_mod_form();
    for (auto& a : m2.a) a *= 2;
    m2.c *= 2;
    t.coeff.mod2 = m2;
    return ShiftOperator::single(std::move(t));
}

ShiftOperator abs_X() {
    CoeffExpr e(4);
    LinForm m2 = x_mod_form();
    for (auto& a : m2.a) a *= 2;
    m2.c *= 2;
    e.mod2 = m2;
    return ShiftOperator::diagonal(e);
}

LinForm xt_mod_form() { return x_mod_form(); }

MonomialTerm xt_phase_term() {
    CoeffExpr e(4);
    e.kappa = -1.0;
    LinForm p(4);
    p.a = {-2, 0, 2, 0};  // -Ph(q)^{k-i}, doubled
    e.phase2 = QuadForm::from_linear(p);
    return term(IntAffine::translation(4, {1, 1, 1, 1}), e);
}

ShiftOperator Xtilde() {
    MonomialTerm t = xt_phase_term();
    LinForm m2 = xt_mod_form();
    for (auto& a : m2.a) a *= 2;
    m2.c *= 2;
    t.coeff.mod2 = m2;
    return ShiftOperator::single(std::move(t));
}

ShiftOperator alpha() {
    CoeffExpr e(2);
    e.factors.push_back({FactorKind::Sqrt1m, LinForm::coordinate(2, 0, 1), 0, nullptr});
    e.factors.push_back({FactorKind::IndicatorGe0, LinForm::coordinate(2, 0, 1), 0, nullptr});
    return ShiftOperator::single(term(IntAffine::translation(2, {-1, 0}), e));
}

ShiftOperator gamma() {
    CoeffExpr e = q_power(2, 0, 1);
    e.factors.push_back({FactorKind::IndicatorGe0, LinForm::coordinate(2, 0, 1), 0, nullptr});
    return ShiftOperator::single(term(IntAffine::translation(2, {0, -1}), e));
}

ShiftOperator t_diag(std::int64_t K) {
    CoeffExpr e(2);
    e.factors.push_back({FactorKind::QPoch, LinForm::coordinate(2, 0, 1), K, nullptr});
    e.factors.push_back({FactorKind::IndicatorGe0, LinForm::coordinate(2, 0, 1), 0, nullptr});
    return ShiftOperator::diagonal(e);
}

ShiftOperator corep_V() {
    CoeffExpr e(3);
    e.phase2 = QuadForm::cross(3, 2, 1, -4);  // zeta^{-pj} on e_{i,j} ⊗ e_p
    return ShiftOperator::diagonal(e);
}

ShiftOperator ducorep_V() {
    CoeffExpr e(3);
    e.phase2 = QuadForm::cross(3, 0, 2, 4);  // zeta^{+pj} on e_p ⊗ e_{i,j}
    return ShiftOperator::diagonal(e);
}

ShiftOperator j1(const ShiftOperator& op2) { return op2.embed(4, {0, 1}); }
ShiftOperator j2_v() { return v().embed(4, {2, 3}); }
ShiftOperator j2_n() { return P().embed(4, {0, 1}).compose(n().embed(4, {2, 3})); }
ShiftOperator j2_gamma() { return Pstar().embed(4, {0, 1}).compose(gamma().embed(4, {2, 3})); }

ShiftOperator delta_v() { return j1(v()).compose(j2_v()); }

ShiftOperator delta_n() {
    ShiftOperator first = n().embed(4, {0, 1}).compose(vstar().embed(4, {2, 3}));
    ShiftOperator second = v().embed(4, {0, 1}).compose(j2_n());
    return first.add(second);
}

ShiftOperator delta_su_alpha() {
    ShiftOperator first = alpha().embed(4, {0, 1}).compose(alpha().embed(4, {2, 3}));
    ShiftOperator second =
        gamma().adjoint().compose(Pstar()).embed(4, {0, 1}).compose(gamma().embed(4, {2, 3}));
    return first.add(scale_q_pow(second, 1).scale(-1.0));
}

ShiftOperator delta_su_gamma() {
    ShiftOperator first = gamma().embed(4, {0, 1}).compose(alpha().embed(4, {2, 3}));
    ShiftOperator second =
        alpha().adjoint().compose(Pstar()).embed(4, {0, 1}).compose(gamma().embed(4, {2, 3}));
    return first.add(second);
}

ShiftOperator J_of(int k, const ShiftOperator& op2, bool braided_degree_one) {
    if (k < 1 || k > 3) throw std::invalid_argument("J_of: k in 1..3");
    std::vector<int> pair = {2 * (k - 1), 2 * (k - 1) + 1};
    ShiftOperator r = op2.embed(6, pair);
    if (braided_degree_one)
        for (int m = 0; m < k - 1; ++m)
            r = P().embed(6, {2 * m, 2 * m + 1}).compose(r);
    return r;
}

ShiftOperator jz() { return z().embed(3, {0}); }
ShiftOperator jB_v() { return v().embed(3, {1, 2}); }
ShiftOperator jB_n() { return Pprime().embed(3, {0}).compose(n().embed(3, {1, 2})); }

ShiftOperator scale_q_pow(const ShiftOperator& op, std::int64_t k) {
    ShiftOperator r = op;
    for (auto& t : r.terms) {
        t.coeff.mod2.c += 2 * k;
        t.coeff.phase2.c += 2 * k;
    }
    return r;
}

ShiftOperator scale_qbar_pow(const ShiftOperator& op, std::int64_t k) {
    ShiftOperator r = op;
    for (auto& t : r.terms) {
        t.coeff.mod2.c += 2 * k;
        t.coeff.phase2.c -= 2 * k;
    }
    return r;
}

ShiftOperator scale_zeta_pow(const ShiftOperator& op, std::int64_t k) {
    ShiftOperator r = op;
    for (auto& t : r.terms) t.coeff.phase2.c += 4 * k;
    return r;
}

ShiftOperator tau_conj(const ShiftOperator& op, int k, const std::vector<int>& i_legs) {
    std::vector<std::int64_t> s(static_cast<std::size_t>(op.d), 0);
    for (int leg : i_legs) s[static_cast<std::size_t>(leg)] = -k;  // v^k : i -> i - k
    ShiftOperator vk = ShiftOperator::shift(s);
    for (auto& x : s) x = -x;
    ShiftOperator vmk = ShiftOperator::shift(s);
    return vk.compose(op).compose(vmk);
}

}  // namespace ops

ShiftOperator qexp_of_scaled(const LinForm& mod_form, const MonomialTerm& phase_term,
                             const GridScalar& lambda, int band,
                             std::shared_ptr<const FourierCache> cache) {
    if (lambda.zero) return ShiftOperator::identity(phase_term.map.d);
    LinForm m = mod_form;
    m.c += lambda.n;
    MonomialTerm ph = phase_term;
    ph.coeff.kappa *= std::polar(1.0, lambda.psi);
    return qexp_of_normal(m, ph, band, std::move(cache)).op;
}

ShiftOperator qexp_X(const GridScalar& lambda, int band,
                     std::shared_ptr<const FourierCache> cache) {
    return qexp_of_scaled(ops::x_mod_form(), ops::x_phase_term(), lambda, band, std::move(cache));
}

ShiftOperator f_lambda(const GridScalar& lambda, int band,
                       std::shared_ptr<const FourierCache> cache) {
    if (lambda.zero) return ops::Y();
    return qexp_X(lambda, band, std::move(cache)).compose(ops::Y());
}

namespace {

// N' = n^{-1} v P ⊗ P ⊗ v n on legs (i,j),(k,l),(s,t):
//   zeta^{-j-l} q^{s-i+1} e_{i-1,j-1} ⊗ e_{k,l} ⊗ e_{s-1,t+1}
MonomialTerm tprime_phase_term() {
    CoeffExpr e(6);
    LinForm p(6);
    p.a = {-2, -4, 0, -4, 2, 0};
    p.c = 2;
    e.phase2 = QuadForm::from_linear(p);
    return {IntAffine::translation(6, {-1, -1, 0, 0, -1, 1}), e};
}

// N'' = n^{-1} v P ⊗ v^2 P ⊗ v n: same coefficient, middle pair shifted by -2
MonomialTerm lemma_phase_term() {
    MonomialTerm t = tprime_phase_term();
    t.map = IntAffine::translation(6, {-1, -1, -2, 0, -1, 1});
    return t;
}

LinForm six_leg_mod_form() {
    LinForm f(6);
    f.a = {-1, 0, 0, 0, 1, 0};
    f.c = 1;  // s - i + 1
    return f;
}

}  // namespace

ShiftOperator t_prime(const GridScalar& lambda, int band,
                      std::shared_ptr<const FourierCache> cache) {
    ShiftOperator y13 = ops::Y().embed(6, {0, 1, 4, 5});
    if (lambda.zero) return y13;
    return qexp_of_scaled(six_leg_mod_form(), tprime_phase_term(), lambda, band, std::move(cache))
        .compose(y13);
}

ShiftOperator lemma_middle(const GridScalar& lambda, int band,
                           std::shared_ptr<const FourierCache> cache) {
    if (lambda.zero) return ShiftOperator::identity(6);
    return qexp_of_scaled(six_leg_mod_form(), lemma_phase_term(), lambda, band, std::move(cache));
}

ShiftOperator f_tilde(int band, std::shared_ptr<const FourierCache> cache) {
    ShiftOperator qx =
        qexp_of_normal(ops::xt_mod_form(), ops::xt_phase_term(), band, std::move(cache)).op;
    ShiftOperator zt2 = ops::Ztilde().compose(ops::Ztilde());
    return qx.adjoint().compose(zt2).compose(ops::Ytilde());
}

ShiftOperator boson_W(int band, std::shared_ptr<const FourierCache> cache) {
    // legs (p, i, j, s, k, l)
    ShiftOperator w14 = ops::W().embed(6, {0, 3});
    ShiftOperator w34 = ops::W().embed(6, {2, 3});
    ShiftOperator w25 = ops::W().embed(6, {1, 4});
    ShiftOperator w35 = ops::W().embed(6, {2, 4});
    // n^{-1} v P ⊗ P' ⊗ v n: zeta^{-j-s} q^{k-i+1} e_p ⊗ e_{i-1,j-1} ⊗ e_s ⊗ e_{k-1,l+1}
    LinForm mf(6);
    mf.a = {0, -1, 0, 0, 1, 0};
    mf.c = 1;
    CoeffExpr e(6);
    LinForm p(6);
    p.a = {0, -2, -4, -4, 2, 0};
    p.c = 2;
    e.phase2 = QuadForm::from_linear(p);
    MonomialTerm ph{IntAffine::translation(6, {0, -1, -1, 0, -1, 1}), e};
    ShiftOperator fq = qexp_of_normal(mf, ph, band, std::move(cache)).op;
    return w14.compose(w34).compose(fq).compose(w25).compose(w35);
}

ShiftOperator y_element(const QParam& q, int r_max) {
    ShiftOperator sum = ShiftOperator::identity(4);
    ShiftOperator hop =
        ops::gamma().adjoint().compose(ops::Pstar()).embed(4, {0, 1}).compose(
            ops::gamma().embed(4, {2, 3}));
    ShiftOperator vv_inv = ops::vstar().embed(4, {0, 1}).compose(ops::vstar().embed(4, {2, 3}));
    double cr = 1.0;
    ShiftOperator hop_r = ShiftOperator::identity(4);
    ShiftOperator vv_r = ShiftOperator::identity(4);
    for (int r = 1; r <= r_max; ++r) {
        cr /= 1.0 - std::pow(q.qmod, 2.0 * r);
        hop_r = hop_r.compose(hop);
        vv_r = vv_r.compose(vv_inv);
        ShiftOperator term = ops::scale_q_pow(hop_r.compose(vv_r), r).scale(
            cr * (r % 2 == 0 ? 1.0 : -1.0));
        sum = sum.add(term);
    }
    return sum;
}

ScalarMap g_theta_map(const QParam& q) {
    QParam qc = q;
    return {"g_theta", [qc](cplx lam) -> cplx {
                if (lam == cplx(0.0, 0.0)) return 0.0;
                GridScalar g = GridScalar::from_value(lam, qc);
                return lam * std::conj(qc.phase_unit(2 * g.n));  // e^{-i m theta}
            }};
}

ScalarMap g_minus_theta_map(const QParam& q) {
    QParam qc = q;
    return {"g_minus_theta", [qc](cplx lam) -> cplx {
                if (lam == cplx(0.0, 0.0)) return 0.0;
                GridScalar g = GridScalar::from_value(lam, qc);
                return lam * qc.phase_unit(2 * g.n);
            }};
}

ScalarMap f_alpha_map() {
    return {"f_alpha", [](cplx lam) -> cplx {
                double a = std::abs(lam);
                if (a > 1.0) return 0.0;
                return std::sqrt(1.0 - a * a);
            }};
}

ScalarMap f_gamma_map() {
    return {"f_gamma", [](cplx lam) -> cplx {
                if (std::abs(lam) > 1.0) return 0.0;
                return std::conj(lam);
            }};
}

void verify_basis_action(const ShiftOperator& op, const BasisAction& f, const QParam& q,
                         int probes, std::int64_t range, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Window w = Window::cube(op.d, -range, range);
    for (int t = 0; t < probes; ++t) {
        LatticeIndex x = w.sample(rng);
        StateVector got = op.apply(basis_vector(x), q);
        StateVector want(op.d);
        for (auto& [y, a] : f(x)) want.add(y, a);
        want.prune();
        double scale = std::max(1.0, std::max(got.norm(), want.norm()));
        if (diff_norm(got, want) > 1e-12 * scale)
            throw std::logic_error("verify_basis_action: operator does not match its formula");
    }
}

namespace {

cplx qpow(const QParam& q, std::int64_t e) {
    return std::polar(std::pow(q.qmod, static_cast<double>(e)), q.theta * static_cast<double>(e));
}

cplx zpow(const QParam& q, std::int64_t e) { return q.phase_unit(4 * e); }

}  // namespace

std::vector<NamedOperator> named_catalog(const QParam& q) {
    std::vector<NamedOperator> cat;
    auto put = [&](std::string name, std::string legs, std::string formula, ShiftOperator op,
                   BasisAction f) {
        std::uint64_t seed = 0xabcdef17;
        for (char ch : name) seed = seed * 131 + static_cast<unsigned char>(ch);
        verify_basis_action(op, f, q, 100, 12, seed);
        cat.push_back({std::move(name), std::move(legs), std::move(formula), std::move(op)});
    };
    using Out = std::vector<std::pair<LatticeIndex, cplx>>;

    put("v", "L", "e(i,j) -> e(i-1,j)", ops::v(),
        [](const LatticeIndex& x) -> Out { return {{{x[0] - 1, x[1]}, 1.0}}; });
    put("v*", "L", "e(i,j) -> e(i+1,j)", ops::vstar(),
        [](const LatticeIndex& x) -> Out { return {{{x[0] + 1, x[1]}, 1.0}}; });
    put("n", "L", "e(i,j) -> q^i e(i,j+1)", ops::n(),
        [&](const LatticeIndex& x) -> Out { return {{{x[0], x[1] + 1}, qpow(q, x[0])}}; });
    put("n*", "L", "e(i,j) -> conj(q)^i e(i,j-1)", ops::nstar(),
        [&](const LatticeIndex& x) -> Out {
            return {{{x[0], x[1] - 1}, std::conj(qpow(q, x[0]))}};
        });
    put("n^-1", "L", "e(i,j) -> q^-i e(i,j-1)", ops::n_inv(),
        [&](const LatticeIndex& x) -> Out { return {{{x[0], x[1] - 1}, qpow(q, -x[0])}}; });
    put("|n|", "L", "e(i,j) -> |q|^i e(i,j)", ops::abs_n(),
        [&](const LatticeIndex& x) -> Out {
            return {{x, std::pow(q.qmod, static_cast<double>(x[0]))}};
        });
    put("vn", "L", "e(i,j) -> q^i e(i-1,j+1)", ops::vn(),
        [&](const LatticeIndex& x) -> Out { return {{{x[0] - 1, x[1] + 1}, qpow(q, x[0])}}; });
    put("P", "L", "e(i,j) -> zeta^-j e(i,j)", ops::P(),
        [&](const LatticeIndex& x) -> Out { return {{x, zpow(q, -x[1])}}; });
    put("P'", "T", "e(p) -> zeta^-p e(p)", ops::Pprime(),
        [&](const LatticeIndex& x) -> Out { return {{x, zpow(q, -x[0])}}; });
    put("Q_L", "L", "e(i,j) -> |q|^j e(i,j)", ops::QL(),
        [&](const LatticeIndex& x) -> Out {
            return {{x, std::pow(q.qmod, static_cast<double>(x[1]))}};
        });
    put("z", "T", "e(p) -> e(p+1)", ops::z(),
        [](const LatticeIndex& x) -> Out { return {{{x[0] + 1}, 1.0}}; });
    put("N^", "T", "e(p) -> p e(p)", ops::Nhat(),
        [](const LatticeIndex& x) -> Out { return {{x, static_cast<double>(x[0])}}; });
    put("V~", "T", "e(p) -> zeta^-p e(p)", ops::Vtilde(),
        [&](const LatticeIndex& x) -> Out { return {{x, zpow(q, -x[0])}}; });
    put("W", "T ⊗ T", "e(k) ⊗ e(l) -> e(k) ⊗ e(l+k)", ops::W(),
        [](const LatticeIndex& x) -> Out { return {{{x[0], x[1] + x[0]}, 1.0}}; });
    put("U", "L ⊗ T", "e(i,j) ⊗ e(p) -> e(i,j) ⊗ e(p+j)", ops::U(),
        [](const LatticeIndex& x) -> Out { return {{{x[0], x[1], x[2] + x[1]}, 1.0}}; });
    put("Z", "L ⊗ L", "e(i,j) ⊗ e(k,l) -> zeta^-jl e(i,j) ⊗ e(k,l)", ops::Z(),
        [&](const LatticeIndex& x) -> Out { return {{x, zpow(q, -x[1] * x[3])}}; });
    put("Psi", "L ⊗ L", "e(i,j) ⊗ e(k,l) -> zeta^-jl e(k,l) ⊗ e(i,j)", ops::braiding(),
        [&](const LatticeIndex& x) -> Out {
            return {{{x[2], x[3], x[0], x[1]}, zpow(q, -x[1] * x[3])}};
        });
    put("Z~", "conj(L) ⊗ L", "e~(i,j) ⊗ e(k,l) -> zeta^+jl e~(i,j) ⊗ e(k,l)", ops::Ztilde(),
        [&](const LatticeIndex& x) -> Out { return {{x, zpow(q, x[1] * x[3])}}; });
    put("Y", "L ⊗ L", "e(i,j) ⊗ e(k,l) -> e(i,j) ⊗ e(k+i+j,l)", ops::Y(),
        [](const LatticeIndex& x) -> Out {
            return {{{x[0], x[1], x[2] + x[0] + x[1], x[3]}, 1.0}};
        });
    put("Y~", "conj(L) ⊗ L", "e~(i,j) ⊗ e(k,l) -> e~(i,j) ⊗ e(k+i+j,l)", ops::Ytilde(),
        [](const LatticeIndex& x) -> Out {
            return {{{x[0], x[1], x[2] + x[0] + x[1], x[3]}, 1.0}};
        });
    put("X", "L ⊗ L", "e(i,j) ⊗ e(k,l) -> zeta^-j q^(k-i+1) e(i-1,j-1) ⊗ e(k-1,l+1)", ops::X(),
        [&](const LatticeIndex& x) -> Out {
            return {{{x[0] - 1, x[1] - 1, x[2] - 1, x[3] + 1},
                     zpow(q, -x[1]) * qpow(q, x[2] - x[0] + 1)}};
        });
    put("Ph(X)", "L ⊗ L", "e(i,j) ⊗ e(k,l) -> zeta^-j Ph(q)^(k-i+1) e(i-1,j-1) ⊗ e(k-1,l+1)",
        ShiftOperator::single(ops::x_phase_term()),
        [&](const LatticeIndex& x) -> Out {
            return {{{x[0] - 1, x[1] - 1, x[2] - 1, x[3] + 1},
                     zpow(q, -x[1]) * q.phase_unit(2 * (x[2] - x[0] + 1))}};
        });
    put("X~", "conj(L) ⊗ L", "e~(i,j) ⊗ e(k,l) -> -|q|^(k-i+1) Ph(q)^(k-i) e~(i+1,j+1) ⊗ e(k+1,l+1)",
        ops::Xtilde(),
        [&](const LatticeIndex& x) -> Out {
            cplx c = -std::pow(q.qmod, static_cast<double>(x[2] - x[0] + 1)) *
                     q.phase_unit(2 * (x[2] - x[0]));
            return {{{x[0] + 1, x[1] + 1, x[2] + 1, x[3] + 1}, c}};
        });
    put("alpha", "L_SU", "e(i,j) -> sqrt(1-|q|^2i) e(i-1,j) [i >= 0]", ops::alpha(),
        [&](const LatticeIndex& x) -> Out {
            if (x[0] < 0) return {};
            double c = std::sqrt(1.0 - std::pow(q.qmod, 2.0 * static_cast<double>(x[0])));
            return {{{x[0] - 1, x[1]}, c}};
        });
    put("gamma", "L_SU", "e(i,j) -> q^i e(i,j-1) [i >= 0]", ops::gamma(),
        [&](const LatticeIndex& x) -> Out {
            if (x[0] < 0) return {};
            return {{{x[0], x[1] - 1}, qpow(q, x[0])}};
        });
    put("t", "L_SU", "e(i,j) -> prod_k>=1 (1-|q|^(2k+2i)) e(i,j) [i >= 0]", ops::t_diag(),
        [&](const LatticeIndex& x) -> Out {
            if (x[0] < 0) return {};
            double p = 1.0, f = std::pow(q.qmod, 2.0 * static_cast<double>(x[0]) + 2.0);
            while (f > 1e-16) {
                p *= 1.0 - f;
                f *= q.qmod * q.qmod;
            }
            return {{x, p}};
        });
    put("V", "L ⊗ Z", "e(i,j) ⊗ e(p) -> zeta^-pj e(i,j) ⊗ e(p)", ops::corep_V(),
        [&](const LatticeIndex& x) -> Out { return {{x, zpow(q, -x[2] * x[1])}}; });
    put("V^", "Z ⊗ L", "e(p) ⊗ e(i,j) -> zeta^+pj e(p) ⊗ e(i,j)", ops::ducorep_V(),
        [&](const LatticeIndex& x) -> Out { return {{x, zpow(q, x[0] * x[2])}}; });
    put("j2(n)", "L ⊗ L", "e(i,j) ⊗ e(k,l) -> zeta^-j q^k e(i,j) ⊗ e(k,l+1)", ops::j2_n(),
        [&](const LatticeIndex& x) -> Out {
            return {{{x[0], x[1], x[2], x[3] + 1}, zpow(q, -x[1]) * qpow(q, x[2])}};
        });
    put("j2(gamma)", "L ⊗ L", "e(i,j) ⊗ e(k,l) -> zeta^+j q^k e(i,j) ⊗ e(k,l-1) [k >= 0]",
        ops::j2_gamma(),
        [&](const LatticeIndex& x) -> Out {
            if (x[2] < 0) return {};
            return {{{x[0], x[1], x[2], x[3] - 1}, zpow(q, x[1]) * qpow(q, x[2])}};
        });
    put("jB(n)", "T ⊗ L", "e(p) ⊗ e(i,j) -> zeta^-p q^i e(p) ⊗ e(i,j+1)", ops::jB_n(),
        [&](const LatticeIndex& x) -> Out {
            return {{{x[0], x[1], x[2] + 1}, zpow(q, -x[0]) * qpow(q, x[1])}};
        });
    return cat;
}

}  // namespace qe2
