#include "qe2/shiftop.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "qe2/qexp.hpp"

namespace qe2 {

namespace {
constexpr double kPi = std::numbers::pi;
}

QParam::QParam(double mod, double angle) : qmod(mod), theta(angle) {
    if (!(mod > 0.0) || !(mod < 1.0))
        throw std::invalid_argument("QParam: need 0 < |q| < 1");
}

QParam QParam::from_pi_fraction(double mod, std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("QParam: zero denominator");
    if (den < 0) { den = -den; num = -num; }
    std::int64_t g = std::gcd(std::abs(num), den);
    if (g > 1) { num /= g; den /= g; }
    QParam q(mod, kPi * static_cast<double>(num) / static_cast<double>(den));
    q.theta_num = num;
    q.theta_den = den;
    return q;
}

QParam QParam::cartesian(double re, double im) {
    return QParam(std::hypot(re, im), std::atan2(im, re));
}

cplx QParam::phase_unit(std::int64_t k) const {
    if (k == 0) return 1.0;
    if (theta_den > 0) {
        // e^{i pi * num * k / (2 den)}: reduce num*k mod 4 den exactly.
        std::int64_t m = 4 * theta_den;
        std::int64_t r = (theta_num % m) * (k % m) % m;
        r = ((r % m) + m) % m;
        if (r == 0) return 1.0;
        if (2 * r == m) return -1.0;
        return std::polar(1.0, kPi * static_cast<double>(r) / (2.0 * static_cast<double>(theta_den)));
    }
    return std::polar(1.0, theta * static_cast<double>(k) / 2.0);
}

double QParam::mod_pow_half(std::int64_t l) const {
    if (l == 0) return 1.0;
    return std::exp(0.5 * static_cast<double>(l) * std::log(qmod));
}

LinForm LinForm::coordinate(int d, int k, std::int64_t weight, std::int64_t c0) {
    LinForm f(d);
    f.a[static_cast<std::size_t>(k)] = weight;
    f.c = c0;
    return f;
}

LinForm LinForm::constant(int d, std::int64_t c0) {
    LinForm f(d);
    f.c = c0;
    return f;
}

bool LinForm::is_zero() const {
    if (c != 0) return false;
    for (auto v : a)
        if (v != 0) return false;
    return true;
}

std::int64_t LinForm::eval(const LatticeIndex& x) const {
    std::int64_t s = c;
    for (int k = 0; k < dim(); ++k) s += a[static_cast<std::size_t>(k)] * x[k];
    return s;
}

LinForm& LinForm::operator+=(const LinForm& o) {
    if (o.dim() != dim()) throw std::invalid_argument("LinForm: dimension mismatch");
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
    c += o.c;
    return *this;
}

namespace {

LinForm substitute_linear(const LinForm& f, const IntAffine& m) {
    // f(Ax + b) = (a^T A) x + a^T b + c
    LinForm r(m.d);
    for (int j = 0; j < m.d; ++j) {
        std::int64_t s = 0;
        for (int i = 0; i < m.d; ++i) s += f.a[static_cast<std::size_t>(i)] * m.at(i, j);
        r.a[static_cast<std::size_t>(j)] = s;
    }
    std::int64_t s = f.c;
    for (int i = 0; i < m.d; ++i) s += f.a[static_cast<std::size_t>(i)] * m.b[static_cast<std::size_t>(i)];
    r.c = s;
    return r;
}

LinForm embed_linear(const LinForm& f, int D, const std::vector<int>& legs) {
    LinForm r(D);
    for (std::size_t k = 0; k < legs.size(); ++k)
        r.a[static_cast<std::size_t>(legs[k])] = f.a[k];
    r.c = f.c;
    return r;
}

}  // namespace

QuadForm QuadForm::from_linear(const LinForm& l) {
    QuadForm q(l.dim());
    q.lin = l;
    return q;
}

QuadForm QuadForm::cross(int d, int k1, int k2, std::int64_t coefficient) {
    QuadForm q(d);
    q.S[static_cast<std::size_t>(k1) * static_cast<std::size_t>(d) + static_cast<std::size_t>(k2)] = coefficient;
    return q;
}

bool QuadForm::is_zero() const {
    if (!lin.is_zero() || c != 0) return false;
    for (auto v : S)
        if (v != 0) return false;
    return true;
}

std::int64_t QuadForm::eval(const LatticeIndex& x) const {
    const int d = dim();
    std::int64_t s = c + lin.eval(x);
    for (int i = 0; i < d; ++i) {
        std::int64_t row = 0;
        for (int j = 0; j < d; ++j) row += S[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)] * x[j];
        s += x[i] * row;
    }
    return s;
}

QuadForm QuadForm::substituted(const IntAffine& m) const {
    const int d = dim();
    QuadForm r(m.d);
    // S' = A^T S A ; lin' = b^T (S + S^T) A + lin^T A ; c' = b^T S b + lin.b + c
    std::vector<std::int64_t> SA(static_cast<std::size_t>(d) * static_cast<std::size_t>(m.d), 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < m.d; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < d; ++k)
                s += S[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + static_cast<std::size_t>(k)] * m.at(k, j);
            SA[static_cast<std::size_t>(i) * static_cast<std::size_t>(m.d) + static_cast<std::size_t>(j)] = s;
        }
    for (int i = 0; i < m.d; ++i)
        for (int j = 0; j < m.d; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < d; ++k)
                s += m.at(k, i) * SA[static_cast<std::size_t>(k) * static_cast<std::size_t>(m.d) + static_cast<std::size_t>(j)];
            r.S[static_cast<std::size_t>(i) * static_cast<std::size_t>(m.d) + static_cast<std::size_t>(j)] = s;
        }
    // b^T S A + b^T S^T A  ==  (b^T S) A + (S b)^T A
    std::vector<std::int64_t> bS(static_cast<std::size_t>(d), 0), Sb(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) {
        std::int64_t s1 = 0, s2 = 0;
        for (int k = 0; k < d; ++k) {
            s1 += m.b[static_cast<std::size_t>(k)] * S[static_cast<std::size_t>(k) * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)];
            s2 += S[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + static_cast<std::size_t>(k)] * m.b[static_cast<std::size_t>(k)];
        }
        bS[static_cast<std::size_t>(i)] = s1;
        Sb[static_cast<std::size_t>(i)] = s2;
    }
    r.lin = substitute_linear(lin, m);
    for (int j = 0; j < m.d; ++j) {
        std::int64_t s = 0;
        for (int i = 0; i < d; ++i)
            s += (bS[static_cast<std::size_t>(i)] + Sb[static_cast<std::size_t>(i)]) * m.at(i, j);
        r.lin.a[static_cast<std::size_t>(j)] += s;
    }
    std::int64_t bSb = 0;
    for (int i = 0; i < d; ++i) bSb += m.b[static_cast<std::size_t>(i)] * Sb[static_cast<std::size_t>(i)];
    r.c = bSb + c;
    return r;
}

QuadForm& QuadForm::operator+=(const QuadForm& o) {
    if (o.dim() != dim()) throw std::invalid_argument("QuadForm: dimension mismatch");
    for (std::size_t k = 0; k < S.size(); ++k) S[k] += o.S[k];
    lin += o.lin;
    c += o.c;
    return *this;
}

void QuadForm::negate() {
    for (auto& v : S) v = -v;
    for (auto& v : lin.a) v = -v;
    lin.c = -lin.c;
    c = -c;
}

IntAffine IntAffine::identity(int d) {
    IntAffine m;
    m.d = d;
    m.A.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0);
    m.b.assign(static_cast<std::size_t>(d), 0);
    for (int k = 0; k < d; ++k) m.at(k, k) = 1;
    return m;
}

IntAffine IntAffine::translation(int d, const std::vector<std::int64_t>& shift) {
    IntAffine m = identity(d);
    if (static_cast<int>(shift.size()) != d) throw std::invalid_argument("IntAffine: bad shift");
    m.b = shift;
    return m;
}

LatticeIndex IntAffine::apply(const LatticeIndex& x) const {
    if (x.d != d) throw std::invalid_argument("IntAffine::apply: dimension mismatch");
    LatticeIndex y(d);
    for (int r = 0; r < d; ++r) {
        std::int64_t s = b[static_cast<std::size_t>(r)];
        for (int cix = 0; cix < d; ++cix) s += at(r, cix) * x[cix];
        y[r] = s;
    }
    return y;
}

IntAffine IntAffine::after(const IntAffine& inner) const {
    if (inner.d != d) throw std::invalid_argument("IntAffine::after: dimension mismatch");
    IntAffine m;
    m.d = d;
    m.A.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0);
    m.b.assign(static_cast<std::size_t>(d), 0);
    for (int r = 0; r < d; ++r)
        for (int cix = 0; cix < d; ++cix) {
            std::int64_t s = 0;
            for (int k = 0; k < d; ++k) s += at(r, k) * inner.at(k, cix);
            m.at(r, cix) = s;
        }
    for (int r = 0; r < d; ++r) {
        std::int64_t s = b[static_cast<std::size_t>(r)];
        for (int k = 0; k < d; ++k) s += at(r, k) * inner.b[static_cast<std::size_t>(k)];
        m.b[static_cast<std::size_t>(r)] = s;
    }
    return m;
}

std::int64_t IntAffine::det() const {
    // Fraction-free Gaussian elimination (Bareiss) on a copy.
    std::vector<std::int64_t> M = A;
    auto at2 = [&](int r, int cix) -> std::int64_t& {
        return M[static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(cix)];
    };
    std::int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (at2(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < d; ++r)
                if (at2(r, k) != 0) { p = r; break; }
            if (p < 0) return 0;
            for (int cix = 0; cix < d; ++cix) std::swap(at2(k, cix), at2(p, cix));
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j)
                at2(i, j) = (at2(i, j) * at2(k, k) - at2(i, k) * at2(k, j)) / prev;
        prev = at2(k, k);
    }
    return sign * at2(d - 1, d - 1);
}

IntAffine IntAffine::inverse() const {
    std::int64_t dt = det();
    if (std::abs(dt) != 1) throw std::domain_error("IntAffine::inverse: matrix not unimodular");
    // Double-precision inverse, rounded, then verified exactly in integers.
    // Entries are tiny (products of shears and permutations), so this is exact.
    std::vector<double> M(static_cast<std::size_t>(d) * static_cast<std::size_t>(2 * d), 0.0);
    auto at2 = [&](int r, int cix) -> double& {
        return M[static_cast<std::size_t>(r) * static_cast<std::size_t>(2 * d) + static_cast<std::size_t>(cix)];
    };
    for (int r = 0; r < d; ++r) {
        for (int cix = 0; cix < d; ++cix) at2(r, cix) = static_cast<double>(at(r, cix));
        at2(r, d + r) = 1.0;
    }
    for (int col = 0; col < d; ++col) {
        int piv = col;
        for (int r = col + 1; r < d; ++r)
            if (std::abs(at2(r, col)) > std::abs(at2(piv, col))) piv = r;
        if (at2(piv, col) == 0.0) throw std::domain_error("IntAffine::inverse: singular");
        if (piv != col)
            for (int cix = 0; cix < 2 * d; ++cix) std::swap(at2(col, cix), at2(piv, cix));
        double p = at2(col, col);
        for (int cix = 0; cix < 2 * d; ++cix) at2(col, cix) /= p;
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            double f = at2(r, col);
            if (f == 0.0) continue;
            for (int cix = 0; cix < 2 * d; ++cix) at2(r, cix) -= f * at2(col, cix);
        }
    }
    IntAffine inv;
    inv.d = d;
    inv.A.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0);
    inv.b.assign(static_cast<std::size_t>(d), 0);
    for (int r = 0; r < d; ++r)
        for (int cix = 0; cix < d; ++cix)
            inv.at(r, cix) = std::llround(at2(r, d + cix));
    // verify A * inv = I exactly
    for (int r = 0; r < d; ++r)
        for (int cix = 0; cix < d; ++cix) {
            std::int64_t s = 0;
            for (int k = 0; k < d; ++k) s += at(r, k) * inv.at(k, cix);
            if (s != (r == cix ? 1 : 0))
                throw std::domain_error("IntAffine::inverse: verification failed");
        }
    // b' = -A^{-1} b
    for (int r = 0; r < d; ++r) {
        std::int64_t s = 0;
        for (int k = 0; k < d; ++k) s += inv.at(r, k) * b[static_cast<std::size_t>(k)];
        inv.b[static_cast<std::size_t>(r)] = -s;
    }
    return inv;
}

double FuncFactor::eval(const LatticeIndex& x, const QParam& q) const {
    std::int64_t a = arg.eval(x);
    switch (kind) {
        case FactorKind::Sqrt1m: {
            if (a < 0) throw std::domain_error("sqrt1m: negative argument");
            if (a == 0) return 0.0;
            return std::sqrt(1.0 - std::pow(q.qmod, 2.0 * static_cast<double>(a)));
        }
        case FactorKind::QPoch: {
            if (a < 0) throw std::domain_error("qpoch: negative argument");
            double p = 1.0;
            const double q2 = q.qmod * q.qmod;
            double f = std::pow(q2, static_cast<double>(a) + 1.0);
            std::int64_t kmax = param > 0 ? param : std::numeric_limits<std::int64_t>::max();
            for (std::int64_t k = 1; k <= kmax; ++k) {
                p *= (1.0 - f);
                f *= q2;
                if (param <= 0 && f < 1e-16) break;
            }
            return p;
        }
        case FactorKind::QExpFourier: {
            if (!table) throw std::logic_error("qexp_fourier: no table attached");
            return table->coeff(param, a);
        }
        case FactorKind::IndicatorGe0:
            return a >= 0 ? 1.0 : 0.0;
        case FactorKind::Linear:
            return static_cast<double>(a);
    }
    throw std::logic_error("FuncFactor: unknown kind");
}

const char* FuncFactor::name() const {
    switch (kind) {
        case FactorKind::Sqrt1m: return "sqrt1m";
        case FactorKind::QPoch: return "qpoch";
        case FactorKind::QExpFourier: return "qexp_fourier";
        case FactorKind::IndicatorGe0: return "indicator_ge0";
        case FactorKind::Linear: return "linear";
    }
    return "?";
}

CoeffExpr CoeffExpr::constant(int d, cplx kappa) {
    CoeffExpr c(d);
    c.kappa = kappa;
    return c;
}

cplx CoeffExpr::eval(const LatticeIndex& x, const QParam& q) const {
    // Indicators first: an indicator outside its domain yields coefficient 0
    // before any other factor (which might be undefined there) is touched.
    for (const auto& f : factors)
        if (f.kind == FactorKind::IndicatorGe0 && f.arg.eval(x) < 0) return 0.0;
    cplx v = kappa;
    if (!sign.is_zero() && (sign.eval(x) & 1)) v = -v;
    std::int64_t l = mod2.eval(x);
    if (l != 0) v *= q.mod_pow_half(l);
    std::int64_t p = phase2.eval(x);
    if (p != 0) v *= q.phase_unit(p);
    for (const auto& f : factors)
        if (f.kind != FactorKind::IndicatorGe0) v *= f.eval(x, q);
    return v;
}

CoeffExpr CoeffExpr::substituted(const IntAffine& m) const {
    CoeffExpr r(m.d);
    r.kappa = kappa;
    r.sign = substitute_linear(sign, m);
    r.mod2 = substitute_linear(mod2, m);
    r.phase2 = phase2.substituted(m);
    r.factors.reserve(factors.size());
    for (const auto& f : factors) {
        FuncFactor g = f;
        g.arg = substitute_linear(f.arg, m);
        r.factors.push_back(std::move(g));
    }
    return r;
}

CoeffExpr CoeffExpr::conjugated() const {
    CoeffExpr r = *this;
    r.kappa = std::conj(kappa);
    r.phase2.negate();
    // every registered factor is real-valued, hence self-conjugate
    return r;
}

CoeffExpr CoeffExpr::times(const CoeffExpr& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("CoeffExpr::times: dimension mismatch");
    CoeffExpr r = *this;
    r.kappa *= o.kappa;
    r.sign += o.sign;
    r.mod2 += o.mod2;
    r.phase2 += o.phase2;
    r.factors.insert(r.factors.end(), o.factors.begin(), o.factors.end());
    return r;
}

bool CoeffExpr::unimodular() const {
    return factors.empty() && mod2.is_zero() && std::abs(std::abs(kappa) - 1.0) < 1e-14;
}

ShiftOperator ShiftOperator::identity(int d) {
    ShiftOperator op(d);
    op.terms.push_back({IntAffine::identity(d), CoeffExpr(d)});
    return op;
}

ShiftOperator ShiftOperator::single(MonomialTerm t) {
    if (!t.map.unimodular()) throw std::invalid_argument("ShiftOperator: term map not unimodular");
    ShiftOperator op(t.map.d);
    op.terms.push_back(std::move(t));
    return op;
}

ShiftOperator ShiftOperator::diagonal(CoeffExpr c) {
    return single({IntAffine::identity(c.dim()), std::move(c)});
}

ShiftOperator ShiftOperator::shift(const std::vector<std::int64_t>& s) {
    int d = static_cast<int>(s.size());
    return single({IntAffine::translation(d, s), CoeffExpr(d)});
}

StateVector ShiftOperator::apply(const StateVector& v, const QParam& q) const {
    if (v.d != d) throw std::invalid_argument("ShiftOperator::apply: dimension mismatch");
    StateVector out(d);
    out.amp.reserve(v.amp.size() * (terms.size() + 1));
    for (const auto& t : terms) {
        for (const auto& [x, a] : v.amp) {
            cplx cv = t.coeff.eval(x, q);
            if (cv == cplx(0.0, 0.0)) continue;
            out.amp[t.map.apply(x)] += cv * a;
        }
    }
    out.prune();
    return out;
}

ShiftOperator ShiftOperator::compose(const ShiftOperator& rhs) const {
    if (rhs.d != d) throw std::invalid_argument("ShiftOperator::compose: dimension mismatch");
    ShiftOperator out(d);
    out.terms.reserve(terms.size() * rhs.terms.size());
    for (const auto& t1 : terms)
        for (const auto& t2 : rhs.terms) {
            MonomialTerm t;
            t.map = t1.map.after(t2.map);
            t.coeff = t2.coeff.times(t1.coeff.substituted(t2.map));
            out.terms.push_back(std::move(t));
        }
    return out;
}

ShiftOperator ShiftOperator::adjoint() const {
    ShiftOperator out(d);
    out.terms.reserve(terms.size());
    for (const auto& t : terms) {
        MonomialTerm a;
        a.map = t.map.inverse();
        a.coeff = t.coeff.conjugated().substituted(a.map);
        out.terms.push_back(std::move(a));
    }
    return out;
}

ShiftOperator ShiftOperator::add(const ShiftOperator& o) const {
    if (o.d != d) throw std::invalid_argument("ShiftOperator::add: dimension mismatch");
    ShiftOperator out = *this;
    out.terms.insert(out.terms.end(), o.terms.begin(), o.terms.end());
    return out;
}

ShiftOperator ShiftOperator::scale(cplx lambda) const {
    ShiftOperator out = *this;
    for (auto& t : out.terms) t.coeff.kappa *= lambda;
    return out;
}

ShiftOperator ShiftOperator::pow(int k) const {
    if (k == 0) return identity(d);
    const ShiftOperator base = k > 0 ? *this : adjoint();
    ShiftOperator r = base;
    for (int i = 1; i < std::abs(k); ++i) r = r.compose(base);
    return r;
}

ShiftOperator ShiftOperator::embed(int D, const std::vector<int>& legs) const {
    if (static_cast<int>(legs.size()) != d) throw std::invalid_argument("embed: legs size != d");
    if (D < d) throw std::invalid_argument("embed: D < d");
    std::vector<bool> used(static_cast<std::size_t>(D), false);
    for (int l : legs) {
        if (l < 0 || l >= D || used[static_cast<std::size_t>(l)])
            throw std::invalid_argument("embed: legs not injective into 1..D");
        used[static_cast<std::size_t>(l)] = true;
    }
    ShiftOperator out(D);
    out.terms.reserve(terms.size());
    for (const auto& t : terms) {
        MonomialTerm e;
        e.map = IntAffine::identity(D);
        for (int r = 0; r < d; ++r) {
            for (int cix = 0; cix < d; ++cix)
                e.map.at(legs[static_cast<std::size_t>(r)], legs[static_cast<std::size_t>(cix)]) =
                    t.map.at(r, cix);
            e.map.b[static_cast<std::size_t>(legs[static_cast<std::size_t>(r)])] =
                t.map.b[static_cast<std::size_t>(r)];
        }
        CoeffExpr c(D);
        c.kappa = t.coeff.kappa;
        c.sign = embed_linear(t.coeff.sign, D, legs);
        c.mod2 = embed_linear(t.coeff.mod2, D, legs);
        c.phase2 = QuadForm(D);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                c.phase2.S[static_cast<std::size_t>(legs[static_cast<std::size_t>(i)]) * static_cast<std::size_t>(D) +
                           static_cast<std::size_t>(legs[static_cast<std::size_t>(j)])] =
                    t.coeff.phase2.S[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)];
        c.phase2.lin = embed_linear(t.coeff.phase2.lin, D, legs);
        c.phase2.c = t.coeff.phase2.c;
        for (const auto& f : t.coeff.factors) {
            FuncFactor g = f;
            g.arg = embed_linear(f.arg, D, legs);
            c.factors.push_back(std::move(g));
        }
        e.coeff = std::move(c);
        out.terms.push_back(std::move(e));
    }
    return out;
}

Margins ShiftOperator::margin(const Window& w) const {
    if (w.dim() != d) throw std::invalid_argument("margin: dimension mismatch");
    Margins m(d);
    for (const auto& t : terms) {
        for (int r = 0; r < d; ++r) {
            // displacement_r(x) = sum_c (A - I)_{rc} x_c + b_r over the box
            std::int64_t mx = t.map.b[static_cast<std::size_t>(r)];
            std::int64_t mn = mx;
            for (int cix = 0; cix < d; ++cix) {
                std::int64_t coef = t.map.at(r, cix) - (r == cix ? 1 : 0);
                if (coef == 0) continue;
                mx += coef > 0 ? coef * w.hi(cix) : coef * w.lo(cix);
                mn += coef > 0 ? coef * w.lo(cix) : coef * w.hi(cix);
            }
            auto& s = m.side[static_cast<std::size_t>(r)];
            s.first = std::max(s.first, std::max<std::int64_t>(0, -mn));
            s.second = std::max(s.second, std::max<std::int64_t>(0, mx));
        }
    }
    return m;
}

ShiftOperator operator*(const ShiftOperator& a, const ShiftOperator& b) { return a.compose(b); }
ShiftOperator operator+(const ShiftOperator& a, const ShiftOperator& b) { return a.add(b); }

}  // namespace qe2
