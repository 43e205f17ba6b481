#include "m1poly/presets.hpp"

namespace m1poly {

namespace {

const Rational half(1, 2);
const Rational quarter(1, 4);

Scalar need(const std::map<std::string, Scalar>& args, const std::string& key,
            const std::string& preset) {
    auto it = args.find(key);
    if (it == args.end()) {
        throw invalid_params("preset '" + preset + "' requires argument '" + key + "'");
    }
    return it->second;
}

void check_args(const std::map<std::string, Scalar>& args, std::vector<std::string> expect,
                const std::string& preset) {
    for (const auto& [k, v] : args) {
        bool found = false;
        for (const auto& e : expect) found = found || e == k;
        if (!found) throw invalid_params("preset '" + preset + "' does not take argument '" + k + "'");
    }
}

} // namespace

const std::vector<PresetInfo>& preset_catalog() {
    static const std::vector<PresetInfo> catalog = {
        {"bannai-ito", {"alpha", "beta", "gamma", "delta"}, "Bannai-Ito polynomials", false},
        {"big-q-jacobi-limit", {"alpha", "beta", "c"}, "limit of the big q-Jacobi polynomials", false},
        {"little-q-jacobi-limit", {"alpha", "beta"}, "limit of the little q-Jacobi polynomials", false},
        {"chebyshev-like", {"a2", "sign"}, "Chebyshev-related family (partial sums of monic T_k)", false},
        {"zero-beta", {}, "family with alpha_n = -n^2/4, beta_n = 0", false},
        {"complementary-bi", {"r1", "r2", "rho1", "rho2"}, "complementary Bannai-Ito polynomials", true},
        {"complementary-bi-alt", {"r1", "r2", "rho1", "rho2"},
         "complementary Bannai-Ito polynomials (alternate substitution)", true},
        {"complementary-bi-tilde", {"r1", "r2", "rho1", "rho2"},
         "normalized complementary Bannai-Ito polynomials (dual-shift gauge)", true},
        {"continuous-bi", {"alpha", "beta", "gamma", "delta"}, "continuous Bannai-Ito polynomials", false},
    };
    return catalog;
}

Preset make_preset(const std::string& name, const std::map<std::string, Scalar>& args) {
    Preset out;
    out.name = name;
    ParamSet& p = out.params;
    p.kind = LatticeKind::minus_one();
    p.b0 = Scalar(0);

    if (name == "bannai-ito") {
        check_args(args, {"alpha", "beta", "gamma", "delta"}, name);
        Scalar al = need(args, "alpha", name), be = need(args, "beta", name);
        Scalar ga = need(args, "gamma", name), de = need(args, "delta", name);
        p.a2 = Scalar(1);
        p.b2 = Scalar(1);
        p.a1 = al + be + ga + de + Scalar(Rational(3, 2));
        p.b1 = Scalar(1) + Scalar(2) * be;
        p.d1 = Scalar(2) * ga * de - Scalar(2) * al * be - be + ga + de + Scalar(half);
        p.d2 = Scalar(-1) - Scalar(2) * al;
        return out;
    }
    if (name == "big-q-jacobi-limit") {
        check_args(args, {"alpha", "beta", "c"}, name);
        Scalar al = need(args, "alpha", name), be = need(args, "beta", name), c = need(args, "c", name);
        if (c == Scalar(-1)) throw invalid_params("big-q-jacobi-limit: c = -1 leaves a2 undefined");
        Scalar onec = Scalar(1) + c;
        p.b1 = c;
        p.b2 = Scalar(0);
        p.a1 = (Scalar(1) + al + be) / (Scalar(2) * onec);
        p.a2 = Scalar(1) / onec;
        p.d1 = p.a1 - (Scalar(1) + al) * Scalar(half);
        p.d2 = Scalar(1) / onec;
        return out;
    }
    if (name == "little-q-jacobi-limit") {
        check_args(args, {"alpha", "beta"}, name);
        Scalar al = need(args, "alpha", name), be = need(args, "beta", name);
        p.b1 = Scalar(0);
        p.b2 = Scalar(0);
        p.a1 = (Scalar(1) + al + be) * Scalar(half);
        p.a2 = Scalar(1);
        p.d1 = al * Scalar(half);
        p.d2 = Scalar(1);
        return out;
    }
    if (name == "chebyshev-like") {
        check_args(args, {"a2", "sign"}, name);
        Scalar a2 = need(args, "a2", name), sign = need(args, "sign", name);
        if (a2.is_zero()) throw invalid_params("chebyshev-like: a2 must be nonzero");
        if (sign != Scalar(1) && sign != Scalar(-1)) {
            throw invalid_params("chebyshev-like: sign must be +1 or -1");
        }
        p.a2 = a2;
        p.a1 = a2 * Scalar(half);
        p.b1 = Scalar(0);
        p.b2 = Scalar(0);
        p.d1 = Scalar(0);
        p.d2 = sign * a2;
        return out;
    }
    if (name == "zero-beta") {
        check_args(args, {}, name);
        p.a1 = Scalar(half);
        p.a2 = Scalar(1);
        p.b1 = Scalar(half);
        p.b2 = Scalar(1);
        p.d1 = Scalar(quarter);
        p.d2 = Scalar(Rational(-1, 2));
        return out;
    }
    if (name == "complementary-bi" || name == "complementary-bi-alt" || name == "complementary-bi-tilde") {
        check_args(args, {"r1", "r2", "rho1", "rho2"}, name);
        Scalar r1 = need(args, "r1", name), r2 = need(args, "r2", name);
        Scalar rho1 = need(args, "rho1", name), rho2 = need(args, "rho2", name);
        p.a2 = Scalar(1);
        p.b2 = Scalar(1);
        p.b0 = Scalar(Rational(-1, 2));
        p.a1 = rho1 + rho2 - r1 - r2 + Scalar(half);
        if (name == "complementary-bi") {
            p.b1 = Scalar(-2) * r2 - Scalar(half);
            p.d1 = (Scalar(1) - Scalar(2) * r1) * rho1 + (Scalar(2) * r2 + Scalar(2)) * rho2
                   - Scalar(2) * r1 + Scalar(1);
            p.d2 = Scalar(-2) * rho2;
            out.shift = p.b0 + p.b1;
        } else if (name == "complementary-bi-alt") {
            p.b1 = Scalar(2) * rho1 + Scalar(half);
            p.d1 = Scalar(2) * r1 * r2 + (Scalar(1) - Scalar(2) * rho1) * rho2 - r1 + Scalar(half);
            p.d2 = Scalar(-2) * rho2;
            out.shift = p.b0 + p.b1;   // = 2 rho1
        } else {
            p.b1 = Scalar(2) * rho2 + Scalar(half);
            p.d1 = Scalar(2) * r1 * r2 - Scalar(2) * rho1 * rho2 - r1 - r2 + rho1 + Scalar(half);
            p.d2 = Scalar(-2) * rho1;
            out.shift = -p.d2 / p.a2;  // = 2 rho1
        }
        return out;
    }
    if (name == "continuous-bi") {
        check_args(args, {"alpha", "beta", "gamma", "delta"}, name);
        Scalar al = need(args, "alpha", name), be = need(args, "beta", name);
        Scalar ga = need(args, "gamma", name), de = need(args, "delta", name);
        // (y1, y2, w1, w2) for the continuous family, realized as an exact
        // Q(i) parameter set with b2 = i.
        Scalar Y1 = Scalar(1) + Scalar(2) * (al + ga);
        Scalar Y2 = Scalar(2) * (be + de);
        Scalar W1 = Scalar(2) * (ga - al);
        Scalar W2 = Scalar(2) * (de - be);
        Scalar y = Y1 + Scalar::i() * Y2;
        Scalar w = W1 + Scalar::i() * W2;
        Scalar ybar = y.conjugate();
        Scalar s = Y1;
        Scalar r = (y - w) * Scalar(half);
        Scalar T2 = -(y + w) * Scalar(half);
        Scalar T1 = (ybar + w) * Scalar(half) - (Y1 * Y2 - W1 * W2) * Scalar::i();
        p.a2 = Scalar(1);
        p.b2 = Scalar::i();
        p.a1 = (s + Scalar(half)) * p.a2;
        p.b1 = (r + Scalar(half)) * p.b2;
        p.d1 = (T1 * Scalar(half) + Scalar(quarter)) * p.a2 * p.b2;
        p.d2 = (T2 - Scalar(half)) * p.a2 * p.b2;
        return out;
    }
    throw invalid_params("unknown preset '" + name + "'");
}

} // namespace m1poly
