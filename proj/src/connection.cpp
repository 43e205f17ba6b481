#include "m1poly/connection.hpp"

namespace m1poly {

namespace {

void require_order(const LatticeSeqs& seqs, int order) {
    if (order < 0 || order > seqs.order) {
        throw invalid_params("requested order exceeds the built lattice sequences");
    }
}

} // namespace

ConnectionMatrix build_C(const LatticeSeqs& seqs, int order) {
    require_order(seqs, order);
    ConnectionMatrix c(order);
    for (int n = 1; n <= order; ++n) {
        // right-to-left: c[n][k] = c[n][k+1] * g_{k+1} / (h_n - h_k)
        Scalar acc(1);
        for (int k = n - 1; k >= 0; --k) {
            acc = acc * seqs.g[k + 1] / (seqs.h[n] - seqs.h[k]);
            c.set(n, k, acc);
        }
    }
    return c;
}

ConnectionMatrix build_C_inverse(const LatticeSeqs& seqs, int order) {
    require_order(seqs, order);
    ConnectionMatrix c(order);
    // columnwise downward: c^[n][k] = c^[n-1][k] * g_n / (h_k - h_n)
    for (int k = 0; k < order; ++k) {
        Scalar acc(1);
        for (int n = k + 1; n <= order; ++n) {
            acc = acc * seqs.g[n] / (seqs.h[k] - seqs.h[n]);
            c.set(n, k, acc);
        }
    }
    return c;
}

std::vector<Scalar> moments(const LatticeSeqs& seqs, int order) {
    require_order(seqs, order);
    std::vector<Scalar> m{Scalar(1)};
    m.reserve(order + 1);
    for (int n = 1; n <= order; ++n) {
        m.push_back(m.back() * seqs.g[n] / (seqs.h[0] - seqs.h[n]));
    }
    return m;
}

OperatorMatrices operator_matrices(const LatticeSeqs& seqs, int order) {
    require_order(seqs, order);
    int dim = order + 1;
    BandedMatrix xf(dim, 0, dim > 1 ? 1 : 0);
    BandedMatrix hsg(dim, dim > 1 ? 1 : 0, 0);
    for (int k = 0; k < dim; ++k) {
        xf.set(k, k, seqs.x[k]);
        hsg.set(k, k, seqs.h[k]);
        if (k + 1 < dim) {
            xf.set(k, k + 1, Scalar(1));
            hsg.set(k + 1, k, seqs.g[k + 1]);
        }
    }
    return {std::move(xf), std::move(hsg)};
}

NewtonPoly NewtonPoly::basis(int k) {
    NewtonPoly p;
    p.coeffs.assign(k + 1, Scalar(0));
    p.coeffs[k] = Scalar(1);
    return p;
}

NewtonPoly NewtonPoly::from_row(const ConnectionMatrix& c, int n) {
    NewtonPoly p;
    p.coeffs = c.row(n);
    return p;
}

NewtonPoly apply_D(const LatticeSeqs& seqs, const NewtonPoly& p) {
    int deg = p.degree();
    if (deg > seqs.order) throw degree_overflow("polynomial degree exceeds lattice order");
    NewtonPoly r;
    r.coeffs.assign(deg + 1, Scalar(0));
    for (int k = 0; k <= deg; ++k) {
        Scalar v = p.coeffs[k] * seqs.h[k];
        if (k + 1 <= deg) v += p.coeffs[k + 1] * seqs.g[k + 1];
        r.coeffs[k] = std::move(v);
    }
    return r;
}

Scalar eval_newton(const LatticeSeqs& seqs, const NewtonPoly& p, const Scalar& t) {
    int deg = p.degree();
    if (deg < 0) return Scalar(0);
    if (deg > seqs.order + 1) throw degree_overflow("polynomial degree exceeds lattice order");
    Scalar acc = p.coeffs[deg];
    for (int k = deg - 1; k >= 0; --k) {
        acc = p.coeffs[k] + (t - seqs.x[k]) * acc;
    }
    return acc;
}

std::vector<Scalar> to_monomial(const LatticeSeqs& seqs, const NewtonPoly& p) {
    int deg = p.degree();
    if (deg > seqs.order + 1) throw degree_overflow("polynomial degree exceeds lattice order");
    std::vector<Scalar> result(std::max(deg + 1, 1), Scalar(0));
    std::vector<Scalar> vk{Scalar(1)};   // v_0
    for (int k = 0; k <= deg; ++k) {
        for (std::size_t j = 0; j < vk.size(); ++j) result[j] += p.coeffs[k] * vk[j];
        if (k < deg) {
            // v_{k+1} = (t - x_k) v_k
            std::vector<Scalar> next(vk.size() + 1, Scalar(0));
            for (std::size_t j = 0; j < vk.size(); ++j) {
                next[j + 1] += vk[j];
                next[j] -= seqs.x[k] * vk[j];
            }
            vk = std::move(next);
        }
    }
    return result;
}

} // namespace m1poly
