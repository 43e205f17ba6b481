#pragma once

/**
 * Lattice sequences x_k, h_k, e_k, g_k for the three kinds of lattice:
 *
 *   minus-one : solutions of s_{k+3} = -(s_{k+2} - s_{k+1}) + s_k, spanned by
 *               {1, (-1)^k, k(-1)^k}
 *   general-q : characteristic roots 1, q, q^{-1} (q not 0, 1 or -1)
 *   q-one     : triple root 1, spanned by {1, k, k^2}
 *
 * The seven parameters (a1, a2, b0, b1, b2, d1, d2) fix
 *   h_k (eigenvalues, a0 = 0), x_k (nodes), e_k,
 * and g_k = x_{k-1}(h_k - h_0) + e_k with g_0 = 0.  The constant term of e is
 * pinned so that e_0 = 0.
 */

#include <vector>

#include "m1poly/scalar.hpp"

namespace m1poly {

enum class LatticeFamily { minus_one, general_q, q_one };

class LatticeKind {
public:
    static LatticeKind minus_one() { return LatticeKind(LatticeFamily::minus_one, Scalar(-1)); }
    static LatticeKind q_one() { return LatticeKind(LatticeFamily::q_one, Scalar(1)); }
    static LatticeKind general(const Scalar& q) {
        if (q.is_zero() || q == Scalar(1) || q == Scalar(-1)) {
            throw invalid_params("general-q lattice requires q not in {0, 1, -1}");
        }
        return LatticeKind(LatticeFamily::general_q, q);
    }

    LatticeFamily family() const { return family_; }
    const Scalar& q() const { return q_; }

    /// z = 1 + q + q^{-1}: -1 for the minus-one lattice, 3 for q = 1.
    Scalar char_sum() const {
        switch (family_) {
            case LatticeFamily::minus_one: return Scalar(-1);
            case LatticeFamily::q_one: return Scalar(3);
            default: return Scalar(1) + q_ + Scalar(1) / q_;
        }
    }

private:
    LatticeKind(LatticeFamily f, Scalar q) : family_(f), q_(std::move(q)) {}
    LatticeFamily family_;
    Scalar q_;
};

struct ParamSet {
    Scalar a1, a2, b0, b1, b2, d1, d2;
    LatticeKind kind = LatticeKind::minus_one();
};

struct LatticeSeqs {
    std::vector<Scalar> x, h, e, g;   // indices 0..order
    int order = 0;
    std::vector<int> zero_g;          // k >= 1 with g_k = 0 (degeneracy warning)

    bool degenerate() const { return !zero_g.empty(); }
};

struct BasicSolutions {
    std::vector<Scalar> p1, p2, p3;   // initial rows (1,0,0), (0,1,0), (0,0,1)
};

/// The three basic solutions of s_{k+3} = z(s_{k+2} - s_{k+1}) + s_k up to
/// index `order` (order >= 3).  p3 is p1 shifted left by one.
BasicSolutions basic_solutions(const Scalar& z, int order);

/// Builds x, h, e, g for 0..order and checks h_j != h_k pairwise.
/// Throws invalid_params (a2 = 0 under minus-one) or eigenvalue_collision.
LatticeSeqs build_lattice(const ParamSet& p, int order);

/// Closed form for g_k on the minus-one lattice in the b0 = 0 gauge:
///   k even: g_k = -k((k-1) a2 b2 - d2 + a2 b1)
///   k odd : g_k = -(a2 b2 k^2 + (d2 + (b1-b2) a2 + 2 a1 b2) k
///                  + 2 (b1-b2) a1 + 2 d1)
Scalar g_closed_form_minus1(const ParamSet& p, int k);

} // namespace m1poly
