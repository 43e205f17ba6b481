#pragma once

/**
 * Three-term recurrence coefficients of the monic family,
 *
 *     u_{n+1}(t) = (t - beta_n) u_n(t) - alpha_n u_{n-1}(t),
 *
 * from the definitional route (differences of g/h quotients) and from each of
 * the closed-form parametrizations of the minus-one lattice.  All routes agree
 * exactly; the tests enforce it.
 */

#include <vector>

#include "m1poly/lattice.hpp"
#include "m1poly/matrix.hpp"

namespace m1poly {

class RecurrencePair {
public:
    RecurrencePair(std::vector<Scalar> alpha, std::vector<Scalar> beta);

    int order() const { return static_cast<int>(beta_.size()) - 1; }
    const Scalar& alpha(int n) const;   // n in 1..order
    const Scalar& beta(int n) const;    // n in 0..order

    const std::vector<Scalar>& alphas() const { return alpha_; }   // [0] is a placeholder 0
    const std::vector<Scalar>& betas() const { return beta_; }

    bool operator==(const RecurrencePair&) const = default;

private:
    std::vector<Scalar> alpha_;   // alpha_[0] unused (kept 0)
    std::vector<Scalar> beta_;
};

/// Definitional coefficients from built sequences (any lattice kind).
/// Requires seqs built to at least order+1 (beta_N reads h_{N+1}, g_{N+1}).
RecurrencePair coeffs_general(const LatticeSeqs& seqs, int order);

/// Closed forms on the minus-one lattice, b0 = 0 gauge.
RecurrencePair coeffs_minus1(const ParamSet& p, int order);

/// (r, s, t1, t2) parametrization, b2 != 0; a2 cancels.
RecurrencePair coeffs_rst(const Scalar& r, const Scalar& s, const Scalar& t1,
                          const Scalar& t2, const Scalar& b2, int order);

/// Continuous family over plain rationals.
RecurrencePair coeffs_continuous(const Rational& y1, const Rational& y2,
                                 const Rational& w1, const Rational& w2, int order);

/// Factorized (p, q, r, s) parametrization.
RecurrencePair coeffs_pq(const Scalar& p, const Scalar& q, const Scalar& r,
                         const Scalar& s, const Scalar& b2, int order);

/// b2 = 0 parametrization in (b1, s, t1, t2).
RecurrencePair coeffs_b2zero(const Scalar& b1, const Scalar& s, const Scalar& t1,
                             const Scalar& t2, int order);

struct PositivityReport {
    std::vector<int> nonpositive_alpha;   // n with alpha_n <= 0
    bool betas_real = true;
};

/// Requires a plain-rational pair.
PositivityReport positivity_scan(const RecurrencePair& rp);

/// Monic Jacobi matrix: superdiagonal 1, diagonal beta_k, subdiagonal alpha_{k+1}.
BandedMatrix jacobi(const RecurrencePair& rp);

} // namespace m1poly
