#pragma once

#include <memory>
#include <string>

#include "qe2/lattice.hpp"

namespace qe2 {

class FourierCache;

// Deformation parameter q = |q| e^{i theta}, 0 < |q| < 1. Single source of
// truth for all phases: zeta = q/conj(q) = e^{2 i theta}, Ph(q) = e^{i theta}.
//
// When theta is an exact rational multiple of pi (num/den), unit phases
// e^{i theta k/2} are computed after exact integer reduction of num*k modulo
// 4*den, so large quadratic-phase exponents lose no precision.
struct QParam {
    double qmod = 0.5;
    double theta = 0.0;
    std::int64_t theta_num = 0;   // theta = pi * theta_num / theta_den when exact
    std::int64_t theta_den = 0;   // 0 => no exact representation
    QParam() = default;
    QParam(double mod, double angle);
    static QParam from_pi_fraction(double mod, std::int64_t num, std::int64_t den);
    static QParam cartesian(double re, double im);

    cplx q() const { return std::polar(qmod, theta); }
    cplx qbar() const { return std::polar(qmod, -theta); }
    cplx zeta() const { return phase_unit(4); }
    cplx ph() const { return phase_unit(2); }

    // e^{i theta k / 2} for doubled exponent k.
    cplx phase_unit(std::int64_t k) const;
    // |q|^{l/2} for doubled exponent l.
    double mod_pow_half(std::int64_t l) const;
    // q^{k/2} for doubled exponent k (modulus and phase together).
    cplx q_pow_half(std::int64_t k) const { return mod_pow_half(k) * phase_unit(k); }
};

// Integer linear form a . x + c on Z^d.
struct LinForm {
    std::vector<std::int64_t> a;
    std::int64_t c = 0;

    LinForm() = default;
    explicit LinForm(int d) : a(static_cast<std::size_t>(d), 0) {}
    static LinForm coordinate(int d, int k, std::int64_t weight = 1, std::int64_t c0 = 0);
    static LinForm constant(int d, std::int64_t c0);

    int dim() const { return static_cast<int>(a.size()); }
    bool is_zero() const;
    std::int64_t eval(const LatticeIndex& x) const;
    LinForm& operator+=(const LinForm& o);
};

struct IntAffine;

// Integer quadratic form x^T S x + lin . x + c (S not required symmetric).
struct QuadForm {
    std::vector<std::int64_t> S;  // d x d, row-major
    LinForm lin;
    std::int64_t c = 0;

    QuadForm() = default;
    explicit QuadForm(int d) : S(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0), lin(d) {}
    static QuadForm from_linear(const LinForm& l);
    // coefficient * x_k1 * x_k2
    static QuadForm cross(int d, int k1, int k2, std::int64_t coefficient);

    int dim() const { return lin.dim(); }
    bool is_zero() const;
    std::int64_t eval(const LatticeIndex& x) const;
    QuadForm substituted(const IntAffine& m) const;
    QuadForm& operator+=(const QuadForm& o);
    void negate();
};

// x -> A x + b with |det A| = 1.
struct IntAffine {
    int d = 0;
    std::vector<std::int64_t> A;  // row-major
    std::vector<std::int64_t> b;

    IntAffine() = default;
    static IntAffine identity(int d);
    static IntAffine translation(int d, const std::vector<std::int64_t>& shift);

    std::int64_t at(int r, int cidx) const { return A[static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(cidx)]; }
    std::int64_t& at(int r, int cidx) { return A[static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(cidx)]; }

    LatticeIndex apply(const LatticeIndex& x) const;
    IntAffine after(const IntAffine& inner) const;  // this ∘ inner
    std::int64_t det() const;
    bool unimodular() const { return std::abs(det()) == 1; }
    IntAffine inverse() const;
};

// Registered scalar function factors appearing in coefficients. Each kind is
// real-valued, hence self-conjugate; the table stays closed under adjoint.
enum class FactorKind {
    Sqrt1m,       // sqrt(1 - |q|^{2 arg})
    QPoch,        // prod_{k>=1} (1 - |q|^{2k + 2 arg}); param = truncation depth K (0 = auto)
    QExpFourier,  // F_m(|q|^{arg}); param = m; needs a Fourier table
    IndicatorGe0, // 1 if arg >= 0 else 0 (undefined-outside-domain yields coefficient 0)
    Linear,       // arg itself as a real number
};

struct FuncFactor {
    FactorKind kind;
    LinForm arg;
    std::int64_t param = 0;
    std::shared_ptr<const FourierCache> table;  // QExpFourier only

    double eval(const LatticeIndex& x, const QParam& q) const;
    const char* name() const;
};

// Coefficient of a monomial term:
//   kappa * (-1)^{sign(x)} * |q|^{mod2(x)/2} * e^{i theta phase2(x)/2} * prod factors.
// mod2/phase2 store doubled exponents so |q|^{1/2}, Ph(q)^m and zeta^{jl} are
// all exactly representable.
struct CoeffExpr {
    cplx kappa = 1.0;
    LinForm sign;
    LinForm mod2;
    QuadForm phase2;
    std::vector<FuncFactor> factors;

    CoeffExpr() = default;
    explicit CoeffExpr(int d) : sign(d), mod2(d), phase2(d) {}
    static CoeffExpr constant(int d, cplx kappa);

    int dim() const { return sign.dim(); }
    cplx eval(const LatticeIndex& x, const QParam& q) const;
    CoeffExpr substituted(const IntAffine& m) const;
    CoeffExpr conjugated() const;
    CoeffExpr times(const CoeffExpr& o) const;
    // Structurally |coeff| == 1 everywhere: |kappa| = 1, no modulus form, no factors.
    bool unimodular() const;
};

// e_x -> coeff(x) * e_{A x + b}
struct MonomialTerm {
    IntAffine map;
    CoeffExpr coeff;
};

// Finite sum of affine monomial terms; the exact representation of every
// operator in the catalog. Unbounded operators are applied only to finitely
// supported vectors.
struct ShiftOperator {
    int d = 0;
    std::vector<MonomialTerm> terms;

    ShiftOperator() = default;
    explicit ShiftOperator(int dim) : d(dim) {}
    static ShiftOperator identity(int d);
    static ShiftOperator zero(int d) { return ShiftOperator(d); }
    static ShiftOperator single(MonomialTerm t);
    // Diagonal operator with the given coefficient expression.
    static ShiftOperator diagonal(CoeffExpr c);
    // Pure shift e_x -> e_{x + shift}.
    static ShiftOperator shift(const std::vector<std::int64_t>& s);

    std::size_t term_count() const { return terms.size(); }

    StateVector apply(const StateVector& v, const QParam& q) const;
    ShiftOperator compose(const ShiftOperator& rhs) const;  // this ∘ rhs  (apply rhs first)
    ShiftOperator adjoint() const;
    ShiftOperator add(const ShiftOperator& o) const;
    ShiftOperator scale(cplx lambda) const;
    ShiftOperator pow(int k) const;  // k < 0 uses the adjoint (unitary terms)
    // Place the operator's coordinates onto legs of a D-dimensional lattice;
    // legs must be injective, identity elsewhere.
    ShiftOperator embed(int D, const std::vector<int>& legs) const;

    // Max displacement |(A - I)x + b| over the window per coordinate and side,
    // maximized over terms.
    Margins margin(const Window& w) const;
};

ShiftOperator operator*(const ShiftOperator& a, const ShiftOperator& b);
ShiftOperator operator+(const ShiftOperator& a, const ShiftOperator& b);

}  // namespace qe2
