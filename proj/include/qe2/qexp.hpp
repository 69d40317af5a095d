#pragma once

#include <map>
#include <mutex>

#include "qe2/shiftop.hpp"

namespace qe2 {

// Quantum exponential F_|q| on C^|q| = { z : |z| in |q|^Z } ∪ {0}:
//   F(z) = prod_{k>=0} (1 + |q|^{2k} conj(z)) / (1 + |q|^{2k} z),
// and exactly -1 at the singular points z = -|q|^{-2k}. Unimodular everywhere.
// Throws std::domain_error when |z| is not on the |q|-grid (1e-9 relative).
cplx qexp_value(cplx z, const QParam& q);

// Same, with |z| = |q|^n given exactly; no grid validation.
cplx qexp_value_on_circle(std::int64_t n, double phi, const QParam& q);

// Fourier coefficients F_m(|q|^n) of the restriction of F to the circles
// |z| = |q|^n, computed by the offset trapezoid rule
//   phi_j = 2 pi (j + 1/2) / samples
// (never hits phi = pi for even samples, where circles through the singular
// points -|q|^{-2k} pass). Coefficients are real; the imaginary residue is
// checked against 1e-10 and dropped. Rows are computed lazily and cached;
// thread-safe.
class FourierCache {
public:
    // Coefficients below this are stored as exact zeros (quadrature noise).
    static constexpr double kSnapFloor = 2e-15;

    FourierCache(double qmod, int samples, int m_width);

    double qmod() const { return qmod_; }
    int samples() const { return samples_; }
    int m_width() const { return m_width_; }

    // F_m(|q|^n); |m| <= m_width.
    double coeff(std::int64_t m, std::int64_t n) const;
    // Full row for n: index k holds F_{k - m_width}.
    const std::vector<double>& row(std::int64_t n) const;
    // Largest imaginary residue seen while building rows so far.
    double max_imag_residue() const;
    // |sum_m F_m^2 - 1| for row n.
    double parseval_defect(std::int64_t n) const;

private:
    const std::vector<double>& row_locked(std::int64_t n) const;

    double qmod_;
    int samples_;
    int m_width_;
    mutable std::mutex mu_;
    mutable std::map<std::int64_t, std::vector<double>> rows_;
    mutable double max_imag_ = 0.0;
};

// Smallest M such that max over n in [n_lo, n_hi] of |F_m(|q|^n)| < eps_band
// for all |m| in {M, M+1, M+2}. Throws std::domain_error past the hard cap.
int band_cutoff(std::int64_t n_lo, std::int64_t n_hi, double eps_band, const FourierCache& cache,
                int hard_cap = 512);

// F_q(N) for a monomial normal operator N = Ph(N) |N| with |N| = |q|^{mod_form(x)}
// (diagonal) and Ph(N) a unimodular monomial term:
//   sum_{|m| <= M} Ph(N)^m F_m(|N|).
// Term count 2M+1; the m-th term's affine map is the m-th power of the phase
// term's map. Normality is validated structurally: mod_form must be invariant
// under the phase term's index map.
struct BandedQExp {
    ShiftOperator op;
    int band = 0;
    LinForm mod_form;
};

BandedQExp qexp_of_normal(const LinForm& mod_form, const MonomialTerm& phase_term, int band,
                          std::shared_ptr<const FourierCache> cache);

}  // namespace qe2
