#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle_regression.hpp"

using namespace qe2;
using namespace qe2::ops;
using qe2::oracle::DenseOp;

namespace {
const QParam kQ = QParam::from_pi_fraction(0.5, 1, 8);
}

TEST_CASE("regression set: engine vs dense oracle") {
    auto out = oracle::run_oracle_regression(kQ);
    CHECK(out.expressions == 20);
    CHECK(out.worst <= 1e-12);          // generator-built expressions are float-rounding exact
    CHECK(out.worst_funcalc <= 1e-10);  // the two quadratures differ at their sample counts
}

TEST_CASE("regression set holds for real q and other angles") {
    CHECK(oracle::run_oracle_regression(QParam(0.5, 0.0)).worst <= 1e-10);
    CHECK(oracle::run_oracle_regression(QParam::from_pi_fraction(0.3, 1, 3)).worst <= 1e-10);
}

TEST_CASE("adjoint anti-homomorphism against the oracle") {
    Window w2 = Window::cube(2, -3, 3);
    DenseOp N2 = DenseOp::from_action(w2, [](const LatticeIndex& x) {
        return std::vector<std::pair<LatticeIndex, cplx>>{
            {{x[0], x[1] + 1}, oracle::detail::qpow(kQ, x[0])}};
    });
    DenseOp P2 = DenseOp::from_action(w2, [](const LatticeIndex& x) {
        return std::vector<std::pair<LatticeIndex, cplx>>{{x, oracle::detail::zpow(kQ, -x[1])}};
    });
    ShiftOperator lhs = n().compose(P()).adjoint();
    ShiftOperator rhs = P().adjoint().compose(n().adjoint());
    DenseOp orc = N2.mul(P2).adj();
    CHECK(oracle::detail::compare_columns(lhs, {lhs}, orc, w2, kQ) <= 1e-12);
    CHECK(oracle::detail::compare_columns(rhs, {rhs}, orc, w2, kQ) <= 1e-12);
}

TEST_CASE("embed commutes with compose against the oracle") {
    Window w3 = Window::cube(3, -3, 3);
    DenseOp VP = DenseOp::from_action(w3, [](const LatticeIndex& x) {
        return std::vector<std::pair<LatticeIndex, cplx>>{
            {{x[0] - 1, x[1], x[2]}, oracle::detail::zpow(kQ, -x[2])}};
    });
    ShiftOperator a = v().embed(3, {0, 2}).compose(P().embed(3, {0, 2}));
    ShiftOperator b = v().compose(P()).embed(3, {0, 2});
    CHECK(oracle::detail::compare_columns(a, {a}, VP, w3, kQ) <= 1e-12);
    CHECK(oracle::detail::compare_columns(b, {b}, VP, w3, kQ) <= 1e-12);
}
