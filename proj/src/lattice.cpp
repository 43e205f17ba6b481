#include "m1poly/lattice.hpp"

namespace m1poly {

BasicSolutions basic_solutions(const Scalar& z, int order) {
    if (order < 3) throw invalid_params("basic_solutions requires order >= 3");
    BasicSolutions bs;
    auto run = [&](long s0, long s1, long s2) {
        std::vector<Scalar> s{Scalar(s0), Scalar(s1), Scalar(s2)};
        s.reserve(order + 1);
        for (int k = 0; k + 3 <= order; ++k) {
            s.push_back(z * (s[k + 2] - s[k + 1]) + s[k]);
        }
        return s;
    };
    bs.p1 = run(1, 0, 0);
    bs.p2 = run(0, 1, 0);
    bs.p3 = run(0, 0, 1);
    return bs;
}

LatticeSeqs build_lattice(const ParamSet& p, int order) {
    if (order < 1) throw invalid_params("build_lattice requires order >= 1");
    if (p.kind.family() == LatticeFamily::minus_one && p.a2.is_zero()) {
        throw invalid_params("minus-one lattice requires a2 != 0");
    }

    LatticeSeqs s;
    s.order = order;
    s.x.reserve(order + 1);
    s.h.reserve(order + 1);
    s.e.reserve(order + 1);

    switch (p.kind.family()) {
        case LatticeFamily::minus_one: {
            Scalar sign(1);
            for (int k = 0; k <= order; ++k) {
                Scalar ks(k);
                s.x.push_back(p.b0 + sign * (p.b1 + p.b2 * ks));
                s.h.push_back(sign * (p.a1 + p.a2 * ks));
                s.e.push_back(-p.d1 + sign * (p.d1 + p.d2 * ks));
                sign = -sign;
            }
            break;
        }
        case LatticeFamily::general_q: {
            const Scalar& q = p.kind.q();
            Scalar d0 = -p.d1 - p.d2;     // e_0 = 0
            Scalar qk(1), qmk(1);
            for (int k = 0; k <= order; ++k) {
                s.x.push_back(p.b0 + p.b1 * qk + p.b2 * qmk);
                s.h.push_back(p.a1 * qk + p.a2 * qmk);
                s.e.push_back(d0 + p.d1 * qk + p.d2 * qmk);
                qk *= q;
                qmk /= q;
            }
            break;
        }
        case LatticeFamily::q_one: {
            for (int k = 0; k <= order; ++k) {
                Scalar ks(k), k2(static_cast<long>(k) * k);
                s.x.push_back(p.b0 + p.b1 * ks + p.b2 * k2);
                s.h.push_back(p.a1 * ks + p.a2 * k2);
                s.e.push_back(p.d1 * ks + p.d2 * k2);
            }
            break;
        }
    }

    for (int j = 0; j <= order; ++j) {
        for (int k = j + 1; k <= order; ++k) {
            if (s.h[j] == s.h[k]) throw eigenvalue_collision(j, k);
        }
    }

    s.g.assign(1, Scalar(0));
    for (int k = 1; k <= order; ++k) {
        Scalar gk = s.x[k - 1] * (s.h[k] - s.h[0]) + s.e[k];
        if (gk.is_zero()) s.zero_g.push_back(k);
        s.g.push_back(std::move(gk));
    }
    return s;
}

Scalar g_closed_form_minus1(const ParamSet& p, int k) {
    if (p.kind.family() != LatticeFamily::minus_one) {
        throw invalid_params("g closed form is for the minus-one lattice");
    }
    if (!p.b0.is_zero()) {
        throw invalid_params("g closed form is stated in the b0 = 0 gauge");
    }
    Scalar ks(k);
    if (k % 2 == 0) {
        return -ks * ((ks - Scalar(1)) * p.a2 * p.b2 - p.d2 + p.a2 * p.b1);
    }
    return -(p.a2 * p.b2 * ks * ks
             + (p.d2 + (p.b1 - p.b2) * p.a2 + Scalar(2) * p.a1 * p.b2) * ks
             + Scalar(2) * (p.b1 - p.b2) * p.a1 + Scalar(2) * p.d1);
}

} // namespace m1poly
