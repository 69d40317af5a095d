#pragma once

#include <functional>

#include "qe2/qexp.hpp"

namespace qe2 {

// A point of the modulus grid C^|q|: lambda = |q|^n e^{i psi}, or 0.
struct GridScalar {
    bool zero = false;
    std::int64_t n = 0;
    double psi = 0.0;

    static GridScalar origin() { return {true, 0, 0.0}; }
    static GridScalar make(std::int64_t n, double psi) { return {false, n, psi}; }
    // Validates |value| against the |q|-grid (1e-9 relative).
    static GridScalar from_value(cplx value, const QParam& q);
    cplx value(const QParam& q) const;
};

// Operator builders. Everything is symbolic in q (coefficients are evaluated
// against a QParam at apply time); only the banded quantum-exponential
// operators carry a Fourier table.
namespace ops {

// one lattice pair (d = 2): basis e_{i,j}
ShiftOperator v();        // e_{i,j} -> e_{i-1,j}
ShiftOperator vstar();
ShiftOperator n();        // e_{i,j} -> q^i e_{i,j+1}
ShiftOperator nstar();
ShiftOperator n_inv();    // e_{i,j} -> q^{-i} e_{i,j-1}
ShiftOperator abs_n();    // e_{i,j} -> |q|^i e_{i,j}
ShiftOperator vn();       // e_{i,j} -> q^i e_{i-1,j+1}
ShiftOperator P();        // e_{i,j} -> zeta^{-j} e_{i,j}
ShiftOperator Pstar();
ShiftOperator QL();       // e_{i,j} -> |q|^j e_{i,j}

// one circle leg (d = 1): basis e_p
ShiftOperator z();        // e_p -> e_{p+1}
ShiftOperator Nhat();     // e_p -> p e_p
ShiftOperator Pprime();   // e_p -> zeta^{-p} e_p
ShiftOperator Vtilde();   // same action as P'; the beta half of the Heisenberg pair

// two circle legs (d = 2)
ShiftOperator W();        // e_k ⊗ e_l -> e_k ⊗ e_{l+k}

// L ⊗ circle (d = 3)
ShiftOperator U();        // e_{i,j} ⊗ e_p -> e_{i,j} ⊗ e_{p+j}

// L ⊗ L (d = 4): basis e_{i,j} ⊗ e_{k,l}
ShiftOperator Z();            // zeta^{-jl} diagonal
ShiftOperator swap_pairs();   // e_{i,j} ⊗ e_{k,l} -> e_{k,l} ⊗ e_{i,j}
ShiftOperator braiding();     // Z ∘ swap: zeta^{-jl} e_{k,l} ⊗ e_{i,j}
ShiftOperator Ztilde();       // zeta^{+jl} diagonal (conjugate first pair, explicit formula)
ShiftOperator Y();            // e_{i,j} ⊗ e_{k,l} -> e_{i,j} ⊗ e_{k+i+j,l}
ShiftOperator Ytilde();       // same index action on the conjugate-leg realization

// The normal operator X = n^{-1} v P ⊗ v n and its polar data.
LinForm x_mod_form();         // |X| = |q|^{k-i+1}
MonomialTerm x_phase_term();  // Ph(X): zeta^{-j} Ph(q)^{k-i+1} e_{i-1,j-1} ⊗ e_{k-1,l+1}
ShiftOperator X();
ShiftOperator abs_X();
LinForm xt_mod_form();        // |X~| = |q|^{k-i+1}
MonomialTerm xt_phase_term(); // Ph(X~): -Ph(q)^{k-i} e_{i+1,j+1} ⊗ e_{k+1,l+1}
ShiftOperator Xtilde();

// SU_q(2) generators on the i >= 0 sublattice (d = 2)
ShiftOperator alpha();    // sqrt(1-|q|^{2i}) e_{i-1,j}, indicator i >= 0
ShiftOperator gamma();    // q^i e_{i,j-1}, indicator i >= 0
ShiftOperator t_diag(std::int64_t K = 0);  // prod_{k=1..K} (1-|q|^{2k+2i}); K=0: auto tail < 1e-15

// Yetter-Drinfeld pair (d = 3)
ShiftOperator corep_V();   // e_{i,j} ⊗ e_p -> zeta^{-pj} e_{i,j} ⊗ e_p
ShiftOperator ducorep_V(); // e_p ⊗ e_{i,j} -> zeta^{pj} e_p ⊗ e_{i,j}

// canonical embeddings into B ⊠ B (d = 4) and the comultiplication closed forms
ShiftOperator j1(const ShiftOperator& op2);  // op ⊗ 1
ShiftOperator j2_v();                        // 1 ⊗ v
ShiftOperator j2_n();                        // P ⊗ n
ShiftOperator j2_gamma();                    // P* ⊗ gamma
ShiftOperator delta_v();                     // v ⊗ v
ShiftOperator delta_n();                     // n ⊗ v* + v P ⊗ n
ShiftOperator delta_su_alpha();              // alpha ⊗ alpha - q gamma* P* ⊗ gamma
ShiftOperator delta_su_gamma();              // gamma ⊗ alpha + alpha* P* ⊗ gamma

// threefold embeddings into (B ⊠ B) ⊠ B (d = 6):
// J_k(n) = P^{(k-1)} ⊗ n ⊗ 1^(3-k), J_k(v) = 1^(k-1) ⊗ v ⊗ 1^(3-k)
ShiftOperator J_of(int k, const ShiftOperator& op2, bool braided_degree_one);

// bosonisation legs (d = 3): basis e_p ⊗ e_{i,j}
ShiftOperator jz();      // z ⊗ 1
ShiftOperator jB_v();    // 1 ⊗ v
ShiftOperator jB_n();    // P' ⊗ n

// multiply by exact scalars q^k, conj(q)^k, zeta^k (stays symbolic in q)
ShiftOperator scale_q_pow(const ShiftOperator& op, std::int64_t k);
ShiftOperator scale_qbar_pow(const ShiftOperator& op, std::int64_t k);
ShiftOperator scale_zeta_pow(const ShiftOperator& op, std::int64_t k);

// tau^k = conjugation by v^k on each listed i-coordinate (exact composition)
ShiftOperator tau_conj(const ShiftOperator& op, int k, const std::vector<int>& i_legs);

}  // namespace ops

// Banded operators built from the quantum exponential.
// lambda scales X: F_q(lambda X); lambda = 0 collapses to the identity band.
ShiftOperator qexp_of_scaled(const LinForm& mod_form, const MonomialTerm& phase_term,
                             const GridScalar& lambda, int band,
                             std::shared_ptr<const FourierCache> cache);

ShiftOperator qexp_X(const GridScalar& lambda, int band, std::shared_ptr<const FourierCache> cache);
// F^lambda = F_q(lambda X) Y; F = F^1.
ShiftOperator f_lambda(const GridScalar& lambda, int band, std::shared_ptr<const FourierCache> cache);
// T'(lambda) = F_q(lambda n^{-1}vP ⊗ P ⊗ vn) Y_{13}  (d = 6)
ShiftOperator t_prime(const GridScalar& lambda, int band, std::shared_ptr<const FourierCache> cache);
// F_q(lambda n^{-1}vP ⊗ v^2 P ⊗ vn)  (d = 6), the middle factor of the exponential pentagon
ShiftOperator lemma_middle(const GridScalar& lambda, int band,
                           std::shared_ptr<const FourierCache> cache);
// F~ = F_q(X~)* Z~^2 Y~  (d = 4)
ShiftOperator f_tilde(int band, std::shared_ptr<const FourierCache> cache);
// Bosonisation multiplicative unitary (d = 6):
// W_14 W_34 F_q(n^{-1}vP ⊗ P' ⊗ vn)_{23456} W_25 W_35
ShiftOperator boson_W(int band, std::shared_ptr<const FourierCache> cache);
// The Y series element of the contraction argument (d = 4):
// sum_{r=0}^{r_max} prod_{i=1..r} (1-|q|^{2i})^{-1} (-q j1(gamma*) j2(gamma))^r (j1(v) j2(v))^{-r}
ShiftOperator y_element(const QParam& q, int r_max);

// Scalar maps on C^|q|.
struct ScalarMap {
    std::string name;
    std::function<cplx(cplx)> f;
};
ScalarMap g_theta_map(const QParam& q);        // lambda e^{-i theta log_|q| |lambda|}
ScalarMap g_minus_theta_map(const QParam& q);
ScalarMap f_alpha_map();                       // sqrt(1-|l|^2) chi(|l|<=1)
ScalarMap f_gamma_map();                       // conj(l) chi(|l|<=1)

// A catalog entry: documented operator with its leg signature and basis action.
struct NamedOperator {
    std::string name;
    std::string legs;
    std::string formula;
    ShiftOperator op;
};

using BasisAction =
    std::function<std::vector<std::pair<LatticeIndex, cplx>>(const LatticeIndex&)>;

// Build-time self-test: the operator's action on random basis vectors must
// match the documented formula. Throws std::logic_error on mismatch.
void verify_basis_action(const ShiftOperator& op, const BasisAction& f, const QParam& q,
                         int probes, std::int64_t range, std::uint64_t seed);

// The full documented catalog; every entry is self-tested against its formula.
std::vector<NamedOperator> named_catalog(const QParam& q);

}  // namespace qe2
