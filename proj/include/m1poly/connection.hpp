#pragma once

/**
 * The connection matrix C of the monic eigenpolynomial family: row n holds the
 * coefficients of u_n over the Newtonian basis v_k(t) = (t-x_0)...(t-x_{k-1}),
 *
 *     c_{n,k} = prod_{j=k}^{n-1} g_{j+1} / (h_n - h_j),      c_{n,n} = 1,
 *
 * together with its inverse, the generalized moments (0-th column of C^-1),
 * and the matrix forms of multiplication by t (X+F) and of the generalized
 * difference operator (H+SG).
 */

#include <vector>

#include "m1poly/lattice.hpp"
#include "m1poly/matrix.hpp"

namespace m1poly {

ConnectionMatrix build_C(const LatticeSeqs& seqs, int order);

/// C^-1, entries c^_{n,k} = prod_{j=k+1}^{n} g_j / (h_k - h_j).
ConnectionMatrix build_C_inverse(const LatticeSeqs& seqs, int order);

/// m_n = prod_{k=1}^{n} g_k / (h_0 - h_k); m_0 = 1.
std::vector<Scalar> moments(const LatticeSeqs& seqs, int order);

struct OperatorMatrices {
    BandedMatrix XF;    // multiplication by t: diag x_k, superdiagonal 1
    BandedMatrix HSG;   // difference operator: diag h_k, subdiagonal g_{k+1}
};
OperatorMatrices operator_matrices(const LatticeSeqs& seqs, int order);

/// Polynomial in the Newtonian basis; coeffs[k] multiplies v_k.
struct NewtonPoly {
    std::vector<Scalar> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    static NewtonPoly basis(int k);            // v_k
    static NewtonPoly from_row(const ConnectionMatrix& c, int n);   // u_n
};

/// D v_k = h_k v_k + g_k v_{k-1}.  Requires deg(p) <= seqs.order.
NewtonPoly apply_D(const LatticeSeqs& seqs, const NewtonPoly& p);

/// Exact value of sum coeffs[k] v_k(t); nested evaluation over the nodes.
Scalar eval_newton(const LatticeSeqs& seqs, const NewtonPoly& p, const Scalar& t);

/// Monomial coefficients, low-to-high.  Degree and monicity preserved.
std::vector<Scalar> to_monomial(const LatticeSeqs& seqs, const NewtonPoly& p);

} // namespace m1poly
