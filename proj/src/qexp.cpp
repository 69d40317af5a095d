#include "qe2/qexp.hpp"

#include <cmath>
#include <numbers>

namespace qe2 {

namespace {

constexpr double kPi = std::numbers::pi;

// F on the circle |z| = r at angle phi, as a pure phase:
//   F(z) = exp(-2i sum_k arg(1 + |q|^{2k} z)),
// using |1 + a conj(z)| = |conj(1 + a z)|. Keeps |F| = 1 exactly.
double qexp_phase_sum(double r, double phi, double qmod) {
    const double zr = r * std::cos(phi);
    const double zi = r * std::sin(phi);
    double a = 1.0;  // |q|^{2k}
    double s = 0.0;
    // factors converge to 1 geometrically; tail below 1e-17 is dropped
    while (a * std::max(r, 1.0) >= 1e-17) {
        s += std::atan2(a * zi, 1.0 + a * zr);
        a *= qmod * qmod;
    }
    return -2.0 * s;
}

}  // namespace

cplx qexp_value_on_circle(std::int64_t n, double phi, const QParam& q) {
    const double r = std::pow(q.qmod, static_cast<double>(n));
    return std::polar(1.0, qexp_phase_sum(r, phi, q.qmod));
}

cplx qexp_value(cplx z, const QParam& q) {
    const double az = std::abs(z);
    if (az == 0.0) return cplx(1.0, 0.0);
    const double n_real = std::log(az) / std::log(q.qmod);
    const double n_round = std::round(n_real);
    if (std::abs(n_real - n_round) > 1e-9 * std::max(1.0, std::abs(n_real)))
        throw std::domain_error("qexp_value: |z| not on the |q|-grid");
    const std::int64_t n = static_cast<std::int64_t>(n_round);
    // singular points -|q|^{-2k}, k >= 0: exactly -1
    if (n <= 0 && (n % 2) == 0) {
        const double phi = std::atan2(z.imag(), z.real());
        if (std::abs(std::abs(phi) - kPi) < 1e-12) return cplx(-1.0, 0.0);
    }
    return std::polar(1.0, qexp_phase_sum(az, std::atan2(z.imag(), z.real()), q.qmod));
}

FourierCache::FourierCache(double qmod, int samples, int m_width)
    : qmod_(qmod), samples_(samples), m_width_(m_width) {
    if (!(qmod > 0.0 && qmod < 1.0)) throw std::invalid_argument("FourierCache: bad |q|");
    if (samples < 4 * m_width + 4)
        throw std::invalid_argument("FourierCache: samples < 4*m_width + 4");
    if (samples % 2 != 0) throw std::invalid_argument("FourierCache: samples must be even");
}

const std::vector<double>& FourierCache::row_locked(std::int64_t n) const {
    auto it = rows_.find(n);
    if (it != rows_.end()) return it->second;

    const double r = std::pow(qmod_, static_cast<double>(n));
    const int S = samples_;
    std::vector<double> ph(static_cast<std::size_t>(S));
    for (int j = 0; j < S; ++j) {
        const double phi = 2.0 * kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(S);
        ph[static_cast<std::size_t>(j)] = qexp_phase_sum(r, phi, qmod_);
    }
    std::vector<double> row(static_cast<std::size_t>(2 * m_width_ + 1));
    double max_imag = 0.0;
    for (int m = -m_width_; m <= m_width_; ++m) {
        double re = 0.0, im = 0.0;
        for (int j = 0; j < S; ++j) {
            const double phi = 2.0 * kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(S);
            const double t = ph[static_cast<std::size_t>(j)] - static_cast<double>(m) * phi;
            re += std::cos(t);
            im += std::sin(t);
        }
        re /= static_cast<double>(S);
        im /= static_cast<double>(S);
        max_imag = std::max(max_imag, std::abs(im));
        // Coefficients on the superexponentially decaying side of a row are
        // exact zeros at double precision; quadrature noise left there gets
        // amplified by |q|^{-m} when banded operators are conjugated against
        // the unbounded generators, so snap it out.
        if (std::abs(re) < kSnapFloor) re = 0.0;
        row[static_cast<std::size_t>(m + m_width_)] = re;
    }
    if (max_imag > 1e-10)
        throw std::runtime_error("FourierCache: imaginary residue above 1e-10 (row " +
                                 std::to_string(n) + ")");
    max_imag_ = std::max(max_imag_, max_imag);
    return rows_.emplace(n, std::move(row)).first->second;
}

const std::vector<double>& FourierCache::row(std::int64_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    return row_locked(n);
}

double FourierCache::coeff(std::int64_t m, std::int64_t n) const {
    if (std::abs(m) > m_width_)
        throw std::out_of_range("FourierCache::coeff: |m| beyond stored width");
    std::lock_guard<std::mutex> lock(mu_);
    return row_locked(n)[static_cast<std::size_t>(m + m_width_)];
}

double FourierCache::max_imag_residue() const {
    std::lock_guard<std::mutex> lock(mu_);
    return max_imag_;
}

double FourierCache::parseval_defect(std::int64_t n) const {
    const auto& r = row(n);
    double s = 0.0;
    for (double v : r) s += v * v;
    return std::abs(s - 1.0);
}

int band_cutoff(std::int64_t n_lo, std::int64_t n_hi, double eps_band, const FourierCache& cache,
                int hard_cap) {
    if (!(eps_band > 0.0)) throw std::invalid_argument("band_cutoff: eps_band <= 0");
    const int cap = std::min(hard_cap, cache.m_width() - 2);
    for (int M = 0; M <= cap; ++M) {
        bool ok = true;
        for (std::int64_t n = n_lo; n <= n_hi && ok; ++n)
            for (int dm = 0; dm <= 2 && ok; ++dm) {
                const std::int64_t m = M + dm;
                if (std::abs(cache.coeff(m, n)) >= eps_band ||
                    std::abs(cache.coeff(-m, n)) >= eps_band)
                    ok = false;
            }
        if (ok) return M;
    }
    throw std::domain_error("band_cutoff: band limit exceeds the hard cap (|q| too close to 1 "
                            "for the configured budget)");
}

BandedQExp qexp_of_normal(const LinForm& mod_form, const MonomialTerm& phase_term, int band,
                          std::shared_ptr<const FourierCache> cache) {
    if (!cache) throw std::invalid_argument("qexp_of_normal: no Fourier cache");
    if (!phase_term.coeff.unimodular())
        throw std::invalid_argument("qexp_of_normal: phase term coefficient not unimodular");
    if (!phase_term.map.unimodular())
        throw std::invalid_argument("qexp_of_normal: phase term map not unimodular");
    const int d = phase_term.map.d;
    if (mod_form.dim() != d) throw std::invalid_argument("qexp_of_normal: dimension mismatch");

    // Normality: |N| must commute with Ph(N), i.e. the modulus form is
    // invariant under the phase term's index map (hence under all its powers).
    // (mod_form ∘ map) - mod_form must vanish identically.
    {
        LinForm comp(d);
        for (int j = 0; j < d; ++j) {
            std::int64_t s = 0;
            for (int i = 0; i < d; ++i)
                s += mod_form.a[static_cast<std::size_t>(i)] * phase_term.map.at(i, j);
            comp.a[static_cast<std::size_t>(j)] = s - mod_form.a[static_cast<std::size_t>(j)];
        }
        for (int i = 0; i < d; ++i)
            comp.c += mod_form.a[static_cast<std::size_t>(i)] * phase_term.map.b[static_cast<std::size_t>(i)];
        if (!comp.is_zero())
            throw std::invalid_argument("qexp_of_normal: modulus form not invariant under the "
                                        "phase map (operator not normal)");
    }

    BandedQExp out;
    out.band = band;
    out.mod_form = mod_form;
    out.op = ShiftOperator(d);
    out.op.terms.reserve(static_cast<std::size_t>(2 * band + 1));

    const ShiftOperator phase = ShiftOperator::single(phase_term);
    for (int m = -band; m <= band; ++m) {
        CoeffExpr diag(d);
        FuncFactor f;
        f.kind = FactorKind::QExpFourier;
        f.arg = mod_form;
        f.param = m;
        f.table = cache;
        diag.factors.push_back(std::move(f));
        // Ph(N)^m F_m(|N|): diagonal acts first
        ShiftOperator term = phase.pow(m).compose(ShiftOperator::diagonal(std::move(diag)));
        out.op.terms.push_back(std::move(term.terms.front()));
    }
    return out;
}

}  // namespace qe2
