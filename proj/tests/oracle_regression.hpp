#pragma once

// The fixed regression set comparing the shift-operator engine against the
// dense truncated-matrix oracle on [-3,3]^d windows (d <= 4), plus the direct
// quadrature functional-calculus oracle for the banded quantum exponential.
// Shared by the unit tests and the acceptance suite.

#include <numbers>

#include "oracle.hpp"
#include "qe2/constructions.hpp"

namespace qe2::oracle {

struct RegressionOutcome {
    std::size_t expressions = 0;
    double worst = 0.0;           // worst column diff across the 20 expressions
    double worst_funcalc = 0.0;   // banded F_q(X) vs direct quadrature
};

namespace detail {

inline cplx qpow(const QParam& q, std::int64_t e) {
    return std::polar(std::pow(q.qmod, static_cast<double>(e)),
                      q.theta * static_cast<double>(e));
}
inline cplx zpow(const QParam& q, std::int64_t e) { return q.phase_unit(4 * e); }

// Probes whose whole trajectory under the factor list (applied right to left)
// stays inside the window, so the oracle's intermediate clipping is vacuous.
inline std::vector<LatticeIndex> safe_probes(const std::vector<ShiftOperator>& factors,
                                             const Window& w, const QParam& q,
                                             std::size_t cap = 64) {
    std::vector<LatticeIndex> out;
    for (auto& x : w.enumerate()) {
        StateVector cur = basis_vector(x);
        bool ok = true;
        for (auto it = factors.rbegin(); it != factors.rend() && ok; ++it) {
            cur = it->apply(cur, q);
            for (auto& [y, a] : cur.amp)
                if (!w.contains(y)) ok = false;
        }
        if (ok) out.push_back(x);
        if (out.size() >= cap) break;
    }
    return out;
}

inline double compare_columns(const ShiftOperator& engine_op,
                              const std::vector<ShiftOperator>& factors, const DenseOp& oracle_op,
                              const Window& w, const QParam& q) {
    auto probes = safe_probes(factors, w, q);
    if (probes.size() < 5) throw std::logic_error("oracle regression: too few safe probes");
    double worst = 0;
    for (auto& x : probes) {
        StateVector got = engine_op.apply(basis_vector(x), q);
        StateVector want = oracle_op.column(x);
        worst = std::max(worst, diff_norm(got, want));
    }
    return worst;
}

}  // namespace detail

inline RegressionOutcome run_oracle_regression(const QParam& q) {
    using namespace ops;
    using detail::compare_columns;
    const Window w2 = Window::cube(2, -3, 3);
    const Window w3 = Window::cube(3, -3, 3);
    const Window w4 = Window::cube(4, -3, 3);

    Action act_v2 = [](const LatticeIndex& x) -> std::vector<std::pair<LatticeIndex, cplx>> {
        return {{{x[0] - 1, x[1]}, 1.0}};
    };
    Action act_n2 = [&q](const LatticeIndex& x) -> std::vector<std::pair<LatticeIndex, cplx>> {
        return {{{x[0], x[1] + 1}, detail::qpow(q, x[0])}};
    };
    Action act_P2 = [&q](const LatticeIndex& x) -> std::vector<std::pair<LatticeIndex, cplx>> {
        return {{x, detail::zpow(q, -x[1])}};
    };
    Action act_W2 = [](const LatticeIndex& x) -> std::vector<std::pair<LatticeIndex, cplx>> {
        return {{{x[0], x[1] + x[0]}, 1.0}};
    };
    Action act_Z4 = [&q](const LatticeIndex& x) -> std::vector<std::pair<LatticeIndex, cplx>> {
        return {{x, detail::zpow(q, -x[1] * x[3])}};
    };
    Action act_swap4 = [](const LatticeIndex& x) -> std::vector<std::pair<LatticeIndex, cplx>> {
        return {{{x[2], x[3], x[0], x[1]}, 1.0}};
    };
    Action act_Y4 = [](const LatticeIndex& x) -> std::vector<std::pair<LatticeIndex, cplx>> {
        return {{{x[0], x[1], x[2] + x[0] + x[1], x[3]}, 1.0}};
    };
    Action act_X4 = [&q](const LatticeIndex& x) -> std::vector<std::pair<LatticeIndex, cplx>> {
        return {{{x[0] - 1, x[1] - 1, x[2] - 1, x[3] + 1},
                 detail::zpow(q, -x[1]) * detail::qpow(q, x[2] - x[0] + 1)}};
    };
    Action act_PhX4 = [&q](const LatticeIndex& x) -> std::vector<std::pair<LatticeIndex, cplx>> {
        return {{{x[0] - 1, x[1] - 1, x[2] - 1, x[3] + 1},
                 detail::zpow(q, -x[1]) * q.phase_unit(2 * (x[2] - x[0] + 1))}};
    };
    Action act_U3 = [](const LatticeIndex& x) -> std::vector<std::pair<LatticeIndex, cplx>> {
        return {{{x[0], x[1], x[2] + x[1]}, 1.0}};
    };

    DenseOp V2 = DenseOp::from_action(w2, act_v2);
    DenseOp N2 = DenseOp::from_action(w2, act_n2);
    DenseOp P2 = DenseOp::from_action(w2, act_P2);
    DenseOp W2 = DenseOp::from_action(w2, act_W2);
    DenseOp Z4 = DenseOp::from_action(w4, act_Z4);
    DenseOp S4 = DenseOp::from_action(w4, act_swap4);
    DenseOp Y4 = DenseOp::from_action(w4, act_Y4);
    DenseOp X4 = DenseOp::from_action(w4, act_X4);
    DenseOp PhX = DenseOp::from_action(w4, act_PhX4);
    DenseOp U3 = DenseOp::from_action(w3, act_U3);
    DenseOp W12 = DenseOp::from_action(w3, [](const LatticeIndex& x) {
        return std::vector<std::pair<LatticeIndex, cplx>>{{{x[0], x[1] + x[0], x[2]}, 1.0}};
    });
    DenseOp W13 = DenseOp::from_action(w3, [](const LatticeIndex& x) {
        return std::vector<std::pair<LatticeIndex, cplx>>{{{x[0], x[1], x[2] + x[0]}, 1.0}};
    });
    DenseOp W23 = DenseOp::from_action(w3, [](const LatticeIndex& x) {
        return std::vector<std::pair<LatticeIndex, cplx>>{{{x[0], x[1], x[2] + x[1]}, 1.0}};
    });

    ShiftOperator w12e = W().embed(3, {0, 1}), w13e = W().embed(3, {0, 2}),
                  w23e = W().embed(3, {1, 2});
    ShiftOperator x_fact =
        n_inv().compose(v()).compose(P()).embed(4, {0, 1}).compose(vn().embed(4, {2, 3}));
    ShiftOperator ph3 = ShiftOperator::single(x_phase_term()).pow(3);

    RegressionOutcome out;
    auto run = [&](const ShiftOperator& engine_op, const std::vector<ShiftOperator>& factors,
                   const DenseOp& oracle_op, const Window& w) {
        out.worst = std::max(out.worst, compare_columns(engine_op, factors, oracle_op, w, q));
        ++out.expressions;
    };

    run(v().compose(vstar()), {v(), vstar()}, V2.mul(V2.adj()), w2);
    run(vstar().compose(v()), {vstar(), v()}, V2.adj().mul(V2), w2);
    run(nstar().compose(n()), {nstar(), n()}, N2.adj().mul(N2), w2);
    run(v().compose(n()), {v(), n()}, V2.mul(N2), w2);
    run(n().compose(v()).scale(q.q()), {n().compose(v()).scale(q.q())}, N2.mul(V2).scaled(q.q()),
        w2);
    run(v().compose(n()).adjoint(), {v().compose(n()).adjoint()}, V2.mul(N2).adj(), w2);
    run(P().compose(n()).compose(Pstar()), {P(), n(), Pstar()}, P2.mul(N2).mul(P2.adj()), w2);
    run(W().compose(W()), {W(), W()}, W2.mul(W2), w2);
    run(W().compose(W().adjoint()), {W(), W().adjoint()}, W2.mul(W2.adj()), w2);
    run(v().compose(n()).add(n().compose(v())), {v().compose(n()).add(n().compose(v()))},
        V2.mul(N2).add(N2.mul(V2)), w2);
    run(Z().compose(Z()), {Z(), Z()}, Z4.mul(Z4), w4);
    run(braiding(), {braiding()}, Z4.mul(S4), w4);
    run(braiding().compose(braiding().adjoint()), {braiding(), braiding().adjoint()},
        Z4.mul(S4).mul(S4.adj().mul(Z4.adj())), w4);
    run(Y().compose(Y().adjoint()), {Y(), Y().adjoint()}, Y4.mul(Y4.adj()), w4);
    run(x_fact, {x_fact}, X4, w4);
    run(ph3, {ph3}, PhX.mul(PhX).mul(PhX), w4);
    run(X().adjoint().compose(X()), {X().adjoint(), X()}, X4.adj().mul(X4), w4);
    run(U().compose(U().adjoint()), {U(), U().adjoint()}, U3.mul(U3.adj()), w3);
    run(w23e.compose(w12e), {w23e, w12e}, W23.mul(W12), w3);
    run(w12e.compose(w13e).compose(w23e), {w12e, w13e, w23e}, W12.mul(W13).mul(W23), w3);

    // functional-calculus oracle: banded F_q(X) vs direct quadrature of the
    // product formula on the window-truncated matrix of X
    {
        const Window w4b = Window::cube(4, -4, 4);
        DenseOp Ph = DenseOp::from_action(w4b, act_PhX4);
        const int S = 512;
        const int M = 8;
        // direct quadrature of the product formula, memoized per (m, n)
        std::map<std::pair<int, std::int64_t>, double> fm_table;
        for (int m = -M; m <= M; ++m)
            for (std::int64_t n = -7; n <= 9; ++n) {
                double re = 0;
                for (int j = 0; j < S; ++j) {
                    double phi = 2.0 * std::numbers::pi * (j + 0.5) / S;
                    cplx val = qexp_value_on_circle(n, phi, q);
                    re += (val * std::polar(1.0, -static_cast<double>(m) * phi)).real();
                }
                fm_table[{m, n}] = re / S;
            }
        auto fm = [&](int m, std::int64_t n) { return fm_table.at({m, n}); };
        DenseOp F = DenseOp::from_action(
            w4b, [](const LatticeIndex&) { return std::vector<std::pair<LatticeIndex, cplx>>{}; });
        for (int m = -M; m <= M; ++m) {
            DenseOp D = DenseOp::from_action(w4b, [&](const LatticeIndex& x) {
                return std::vector<std::pair<LatticeIndex, cplx>>{
                    {x, cplx(fm(m, x[2] - x[0] + 1), 0.0)}};
            });
            DenseOp Pm = DenseOp::identity(w4b);
            for (int r = 0; r < std::abs(m); ++r) Pm = (m > 0 ? Pm.mul(Ph) : Pm.mul(Ph.adj()));
            F = F.add(Pm.mul(D));
        }
        auto cache = std::make_shared<FourierCache>(q.qmod, 4096, 96);
        int band = band_cutoff(-9, 11, 1e-10, *cache);
        ShiftOperator banded = qexp_X(GridScalar::make(0, 0.0), band, cache);
        StateVector got = banded.apply(basis_vector(LatticeIndex{0, 0, 0, 0}), q);
        for (auto it = got.amp.begin(); it != got.amp.end();)
            it = w4b.contains(it->first) ? std::next(it) : got.amp.erase(it);
        StateVector want = F.column(LatticeIndex{0, 0, 0, 0});
        out.worst_funcalc = diff_norm(got, want);
    }
    return out;
}

}  // namespace qe2::oracle
