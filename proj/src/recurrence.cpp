#include "m1poly/recurrence.hpp"

namespace m1poly {

RecurrencePair::RecurrencePair(std::vector<Scalar> alpha, std::vector<Scalar> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (beta_.empty() || alpha_.size() != beta_.size()) {
        throw invalid_params("recurrence pair arrays must match (alpha[0] is a placeholder)");
    }
}

const Scalar& RecurrencePair::alpha(int n) const {
    if (n < 1 || n >= static_cast<int>(alpha_.size())) throw invalid_params("alpha index out of range");
    return alpha_[n];
}

const Scalar& RecurrencePair::beta(int n) const {
    if (n < 0 || n >= static_cast<int>(beta_.size())) throw invalid_params("beta index out of range");
    return beta_[n];
}

RecurrencePair coeffs_general(const LatticeSeqs& s, int order) {
    if (order < 0 || order + 1 > s.order) {
        throw invalid_params("coeffs_general needs sequences built to order+1");
    }
    std::vector<Scalar> alpha(order + 1, Scalar(0)), beta;
    beta.reserve(order + 1);
    for (int n = 0; n <= order; ++n) {
        Scalar b = s.x[n] + s.g[n + 1] / (s.h[n] - s.h[n + 1]);
        if (n >= 1) b -= s.g[n] / (s.h[n - 1] - s.h[n]);   // h_{-1} terms are zero
        beta.push_back(std::move(b));
    }
    for (int n = 1; n <= order; ++n) {
        Scalar lead = s.g[n] / (s.h[n - 1] - s.h[n]);
        Scalar inner = -lead + s.g[n + 1] / (s.h[n - 1] - s.h[n + 1]) + s.x[n] - s.x[n - 1];
        if (n >= 2) inner += s.g[n - 1] / (s.h[n - 2] - s.h[n]);
        alpha[n] = lead * inner;
    }
    return RecurrencePair(std::move(alpha), std::move(beta));
}

RecurrencePair coeffs_minus1(const ParamSet& p, int order) {
    if (p.kind.family() != LatticeFamily::minus_one) {
        throw invalid_params("coeffs_minus1 requires the minus-one lattice");
    }
    if (!p.b0.is_zero()) throw invalid_params("closed forms are stated in the b0 = 0 gauge");
    if (p.a2.is_zero()) throw invalid_params("a2 must be nonzero");

    const Scalar &a1 = p.a1, &a2 = p.a2, &b1 = p.b1, &b2 = p.b2, &d1 = p.d1, &d2 = p.d2;
    const Scalar two(2), four(4);

    auto dlo = [&](int n) { return Scalar(2 * n - 1) * a2 + two * a1; };   // (2n-1)a2 + 2a1
    auto dhi = [&](int n) { return Scalar(2 * n + 1) * a2 + two * a1; };   // (2n+1)a2 + 2a1

    std::vector<Scalar> alpha(order + 1, Scalar(0)), beta;
    beta.reserve(order + 1);

    // n = 0: the (2a1 - a2) factor cancels; only 2a1 + a2 may not vanish.
    if (dhi(0).is_zero()) throw denominator_zero(0);
    beta.push_back(-(two * d1 + d2) / dhi(0));

    for (int n = 1; n <= order; ++n) {
        Scalar ns(n);
        Scalar lo = dlo(n), hi = dhi(n);
        if (lo.is_zero() || hi.is_zero()) throw denominator_zero(n);
        if (n % 2 == 0) {
            alpha[n] = -(ns * (Scalar(n - 1) * a2 + two * a1)
                         * (ns * a2 * b2 + two * a1 * b2 - a2 * b1 + d2)
                         * (Scalar(n - 1) * a2 * b2 + a2 * b1 - d2))
                       / (a2 * lo * lo);
            beta.push_back((a2 * (two * a1 * b2 + a2 * (b2 - two * b1) - four * d1) * ns
                            - (two * d1 + d2) * (two * a1 - a2))
                           / (lo * hi));
        } else {
            Scalar w1 = a2 * b2 * ns * ns + ((b1 - b2) * a2 + two * a1 * b2 + d2) * ns
                        + two * (b1 - b2) * a1 + two * d1;
            Scalar w2 = a2 * a2 * b2 * ns * ns
                        + (-(b1 + b2) * a2 * a2 + (two * a1 * b2 - d2) * a2) * ns
                        + a2 * a2 * b1 + (two * d1 + d2 - two * a1 * b2) * a2 - two * a1 * d2;
            alpha[n] = -(w1 * w2) / (a2 * lo * lo);
            Scalar w3 = a2 * (two * a1 * b2 + a2 * (b2 - two * b1) - four * d1) * ns
                        + four * a1 * a1 * b2
                        - ((four * b1 - two * b2) * a2 + four * d1 - two * d2) * a1
                        - (two * d1 + d2) * a2;
            beta.push_back(-w3 / (lo * hi));
        }
    }
    return RecurrencePair(std::move(alpha), std::move(beta));
}

RecurrencePair coeffs_rst(const Scalar& r, const Scalar& s, const Scalar& t1,
                          const Scalar& t2, const Scalar& b2, int order) {
    if (b2.is_zero()) throw invalid_params("rst parametrization requires b2 != 0");
    const Scalar two(2), four(4);
    std::vector<Scalar> alpha(order + 1, Scalar(0)), beta;
    beta.reserve(order + 1);

    Scalar s1 = Scalar(1) + s;
    if (s1.is_zero()) throw denominator_zero(0);
    beta.push_back(-b2 * (t1 + t2) / (two * s1));

    for (int n = 1; n <= order; ++n) {
        Scalar ns(n);
        Scalar nps = ns + s, nps1 = ns + Scalar(1) + s;
        if (nps.is_zero() || nps1.is_zero()) throw denominator_zero(n);
        Scalar den_a = four * nps * nps;
        Scalar den_b = two * nps * nps1;
        if (n % 2 == 0) {
            alpha[n] = -b2 * b2 * ns * (ns + two * s) * (ns + two * s - r + t2) * (ns + r - t2) / den_a;
            beta.push_back(-b2 * ((r - s + t1) * ns + s * (t1 + t2)) / den_b);
        } else {
            Scalar f1 = ns * ns + (r + two * s + t2) * ns + (two * r - Scalar(1)) * s + r + t1;
            Scalar f2 = ns * ns + (two * s - r - t2) * ns - (two * t2 + Scalar(1)) * s + r + t1;
            alpha[n] = -b2 * b2 * f1 * f2 / den_a;
            beta.push_back(b2 * ((r - s + t1) * ns - two * s * s + (two * r + t1 - t2 - Scalar(1)) * s + r + t1)
                           / den_b);
        }
    }
    return RecurrencePair(std::move(alpha), std::move(beta));
}

RecurrencePair coeffs_continuous(const Rational& y1, const Rational& y2,
                                 const Rational& w1, const Rational& w2, int order) {
    const Rational two(2), four(4);
    std::vector<Scalar> alpha(order + 1, Scalar(0)), beta;
    beta.reserve(order + 1);

    Rational y1p1 = Rational(1) + y1;
    if (y1p1.is_zero()) throw denominator_zero(0);
    beta.push_back(Scalar((w1 * w2 - y1 * y2 - y2) / (two * y1p1)));

    Rational ycross = w1 * w2 - y1 * y2;   // even-beta slope; odd uses its negative
    for (int n = 1; n <= order; ++n) {
        Rational ns(n);
        Rational npy = ns + y1, npy1 = ns + Rational(1) + y1;
        if (npy.is_zero() || npy1.is_zero()) throw denominator_zero(n);
        Rational den_a = four * npy * npy;
        Rational den_b = two * npy * npy1;
        if (n % 2 == 0) {
            alpha[n] = Scalar(ns * (ns + two * y1) * (npy * npy + y2 * y2) / den_a);
            beta.push_back(Scalar((ycross * ns + y1 * ycross - y1 * y2) / den_b));
        } else {
            alpha[n] = Scalar((npy + w1) * (npy - w1) * (npy * npy + w2 * w2) / den_a);
            beta.push_back(Scalar((-ycross * ns - y1 * ycross - w1 * w2) / den_b));
        }
    }
    return RecurrencePair(std::move(alpha), std::move(beta));
}

RecurrencePair coeffs_pq(const Scalar& p, const Scalar& q, const Scalar& r,
                         const Scalar& s, const Scalar& b2, int order) {
    if (b2.is_zero()) throw invalid_params("pq parametrization requires b2 != 0");
    const Scalar one(1), two(2), four(4);
    std::vector<Scalar> alpha(order + 1, Scalar(0)), beta;
    beta.reserve(order + 1);

    Scalar s1 = one + s;
    if (s1.is_zero()) throw denominator_zero(0);
    Scalar t1 = p * q + s - r * (one + two * s);
    Scalar t2 = -(p + q + r + two * s);
    beta.push_back(-b2 * (t1 + t2) / (two * s1));

    Scalar pq_rs = p * q - two * r * s;
    for (int n = 1; n <= order; ++n) {
        Scalar ns(n);
        Scalar nps = ns + s, nps1 = ns + one + s;
        if (nps.is_zero() || nps1.is_zero()) throw denominator_zero(n);
        Scalar den_a = four * nps * nps;
        Scalar den_b = two * nps * nps1;
        if (n % 2 == 0) {
            alpha[n] = -b2 * b2 * ns * (ns + two * s) * (ns - p - q - two * r)
                       * (ns + p + q + two * r + two * s) / den_a;
            beta.push_back(-b2 * (pq_rs * ns - s * s * (one + two * r) + s * (p * q - p - q - two * r))
                           / den_b);
        } else {
            alpha[n] = -b2 * b2 * (ns - p) * (ns - q) * (ns + p + two * s) * (ns + q + two * s) / den_a;
            beta.push_back(b2 * (pq_rs * ns + p * q + s * s * (one - two * r) + s * (p * q + p + q))
                           / den_b);
        }
    }
    return RecurrencePair(std::move(alpha), std::move(beta));
}

RecurrencePair coeffs_b2zero(const Scalar& b1, const Scalar& s, const Scalar& t1,
                             const Scalar& t2, int order) {
    const Scalar one(1), two(2), four(4);
    std::vector<Scalar> alpha(order + 1, Scalar(0)), beta;
    beta.reserve(order + 1);

    Scalar s1 = one + s;
    if (s1.is_zero()) throw denominator_zero(0);
    beta.push_back(-(t1 + t2) / (two * s1));

    for (int n = 1; n <= order; ++n) {
        Scalar ns(n);
        Scalar nps = ns + s, nps1 = ns + one + s;
        if (nps.is_zero() || nps1.is_zero()) throw denominator_zero(n);
        Scalar den_a = four * nps * nps;
        Scalar den_b = two * nps * nps1;
        if (n % 2 == 0) {
            alpha[n] = (b1 - t2) * (b1 - t2) * ns * (ns + two * s) / den_a;
            beta.push_back(-((b1 + t1) * ns + s * (t1 + t2)) / den_b);
        } else {
            alpha[n] = ((b1 + t2) * ns + two * b1 * s + b1 + t1)
                       * ((b1 + t2) * ns + two * s * t2 - b1 - t1) / den_a;
            beta.push_back(((b1 + t1) * (ns + one) + s * (two * b1 + t1 - t2)) / den_b);
        }
    }
    return RecurrencePair(std::move(alpha), std::move(beta));
}

PositivityReport positivity_scan(const RecurrencePair& rp) {
    PositivityReport rep;
    for (int n = 0; n <= rp.order(); ++n) {
        if (!rp.beta(n).is_real()) throw invalid_params("positivity scan requires a plain-rational pair");
    }
    for (int n = 1; n <= rp.order(); ++n) {
        const Scalar& a = rp.alpha(n);
        if (!a.is_real()) throw invalid_params("positivity scan requires a plain-rational pair");
        if (a.re().sign() <= 0) rep.nonpositive_alpha.push_back(n);
    }
    rep.betas_real = true;
    return rep;
}

BandedMatrix jacobi(const RecurrencePair& rp) {
    int dim = rp.order() + 1;
    int bw = dim > 1 ? 1 : 0;
    BandedMatrix L(dim, bw, bw);
    for (int k = 0; k < dim; ++k) {
        L.set(k, k, rp.beta(k));
        if (k + 1 < dim) {
            L.set(k, k + 1, Scalar(1));
            L.set(k + 1, k, rp.alpha(k + 1));
        }
    }
    return L;
}

} // namespace m1poly
