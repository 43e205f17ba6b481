#include <doctest.h>

#include "helpers.hpp"
#include "m1poly/presets.hpp"
#include "m1poly/recurrence.hpp"

using namespace m1poly;
using m1poly::test::Q;

namespace {

RecurrencePair general_from_params(const ParamSet& p, int order) {
    auto s = build_lattice(p, order + 1);
    return coeffs_general(s, order);
}

ParamSet rst_to_raw(const Scalar& r, const Scalar& s, const Scalar& t1, const Scalar& t2,
                    const Scalar& b2, const Scalar& a2) {
    ParamSet p;
    p.kind = LatticeKind::minus_one();
    p.b0 = Scalar(0);
    p.a2 = a2;
    p.b2 = b2;
    p.a1 = (s + Q(1, 2)) * a2;
    p.b1 = (r + Q(1, 2)) * b2;
    p.d1 = (t1 * Q(1, 2) + Q(1, 4)) * a2 * b2;
    p.d2 = (t2 - Q(1, 2)) * a2 * b2;
    return p;
}

} // namespace

TEST_CASE("chebyshev-like coefficients") {
    auto pre = make_preset("chebyshev-like", {{"a2", Q(1)}, {"sign", Q(1)}});
    auto rp = coeffs_minus1(pre.params, 10);
    CHECK(rp.beta(0) == Q(-1, 2));
    for (int n = 1; n <= 10; ++n) {
        CHECK(rp.alpha(n) == Q(1, 4));
        CHECK(rp.beta(n) == Q(0));
    }
    auto gen = general_from_params(pre.params, 10);
    CHECK(rp == gen);

    auto pre_minus = make_preset("chebyshev-like", {{"a2", Q(1)}, {"sign", Q(-1)}});
    auto rpm = coeffs_minus1(pre_minus.params, 6);
    CHECK(rpm.beta(0) == Q(1, 2));
}

TEST_CASE("zero-beta coefficients: alpha_n = -n^2/4") {
    auto pre = make_preset("zero-beta", {});
    auto rp = coeffs_minus1(pre.params, 12);
    for (int n = 1; n <= 12; ++n) {
        CHECK(rp.alpha(n) == Q(-(long)n * n, 4));
        CHECK(rp.beta(n) == Q(0));
    }
    CHECK(rp.beta(0) == Q(0));
    CHECK(rp == general_from_params(pre.params, 12));
}

TEST_CASE("beta_0 from the general formula (h_{-1} terms dropped)") {
    m1poly::test::RationalGen gen(41);
    for (int t = 0; t < 8; ++t) {
        ParamSet p;
        p.a1 = gen.scalar(); p.a2 = gen.nonzero_scalar(); p.b0 = gen.scalar();
        p.b1 = gen.scalar(); p.b2 = gen.scalar(); p.d1 = gen.scalar(); p.d2 = gen.scalar();
        p.kind = LatticeKind::minus_one();
        LatticeSeqs s;
        try {
            s = build_lattice(p, 4);
        } catch (const eigenvalue_collision&) {
            continue;
        }
        auto rp = coeffs_general(s, 3);
        CHECK(rp.beta(0) == s.x[0] + s.g[1] / (s.h[0] - s.h[1]));
    }
}

TEST_CASE("closed minus-one forms match the definitional route on random draws") {
    m1poly::test::RationalGen gen(42);
    int checked = 0;
    while (checked < 20) {
        ParamSet p;
        p.a1 = gen.scalar(); p.a2 = gen.nonzero_scalar(); p.b0 = Scalar(0);
        p.b1 = gen.scalar(); p.b2 = gen.scalar(); p.d1 = gen.scalar(); p.d2 = gen.scalar();
        p.kind = LatticeKind::minus_one();
        try {
            auto closed = coeffs_minus1(p, 16);
            auto defn = general_from_params(p, 16);
            CHECK(closed == defn);
            ++checked;
        } catch (const eigenvalue_collision&) {
        } catch (const denominator_zero&) {
        }
    }
}

TEST_CASE("bannai-ito sample parameters") {
    auto pre = make_preset("bannai-ito",
                           {{"alpha", Q(1)}, {"beta", Q(1, 2)}, {"gamma", Q(1, 3)}, {"delta", Q(1, 4)}});
    auto rp = coeffs_minus1(pre.params, 16);
    auto defn = general_from_params(pre.params, 16);
    CHECK(rp == defn);
    for (int n = 1; n <= 16; ++n) CHECK(rp.alpha(n).is_real());
}

TEST_CASE("little-q-jacobi limit equals the big-q-jacobi limit at c = 0") {
    // argument swap: little(alpha, beta) == big(beta, alpha, c=0), and the
    // diagonal instance little(a, a) == big(a, a, 0)
    m1poly::test::RationalGen gen(43);
    for (int t = 0; t < 6; ++t) {
        Scalar al = gen.scalar(), be = gen.scalar();
        try {
            auto little = make_preset("little-q-jacobi-limit", {{"alpha", al}, {"beta", be}});
            auto big = make_preset("big-q-jacobi-limit", {{"alpha", be}, {"beta", al}, {"c", Q(0)}});
            auto rl = coeffs_minus1(little.params, 10);
            auto rb = coeffs_minus1(big.params, 10);
            CHECK(rl == rb);
        } catch (const denominator_zero&) {
        } catch (const eigenvalue_collision&) {
        }
    }
    auto little = make_preset("little-q-jacobi-limit", {{"alpha", Q(1, 3)}, {"beta", Q(1, 3)}});
    auto big = make_preset("big-q-jacobi-limit", {{"alpha", Q(1, 3)}, {"beta", Q(1, 3)}, {"c", Q(0)}});
    CHECK(coeffs_minus1(little.params, 8) == coeffs_minus1(big.params, 8));
}

TEST_CASE("rst parametrization") {
    // a2 cancels
    for (auto a2 : {Q(1), Q(7, 3)}) {
        auto raw = rst_to_raw(Q(2, 3), Q(1, 5), Q(-1, 2), Q(3), Q(2), a2);
        auto via_raw = coeffs_minus1(raw, 12);
        auto direct = coeffs_rst(Q(2, 3), Q(1, 5), Q(-1, 2), Q(3), Q(2), 12);
        CHECK(via_raw == direct);
    }

    // even-n factorization spot check at n = 2
    {
        Scalar r = Q(1, 3), s = Q(1, 7), t1 = Q(2), t2 = Q(-1, 2), b2 = Q(3);
        auto rp = coeffs_rst(r, s, t1, t2, b2, 4);
        Scalar n(2);
        Scalar expect = -b2 * b2 * n * (n + Scalar(2) * s) * (n + Scalar(2) * s - r + t2)
                        * (n + r - t2) / (Scalar(4) * (n + s) * (n + s));
        CHECK(rp.alpha(2) == expect);
    }

    // scaling b2 -> c*b2 scales alpha by c^2 and beta by c
    {
        Scalar c = Q(5, 2);
        auto base = coeffs_rst(Q(1, 3), Q(1, 7), Q(2), Q(-1, 2), Q(1), 10);
        auto scaled = coeffs_rst(Q(1, 3), Q(1, 7), Q(2), Q(-1, 2), c, 10);
        for (int n = 1; n <= 10; ++n) CHECK(scaled.alpha(n) == c * c * base.alpha(n));
        for (int n = 0; n <= 10; ++n) CHECK(scaled.beta(n) == c * base.beta(n));
    }

    // s = 0 works (the n = 0 entry uses the cancelled form)
    auto smoke = coeffs_rst(Q(0), Q(0), Q(0), Q(0), Q(1), 4);
    CHECK(smoke.order() == 4);

    CHECK_THROWS_AS(coeffs_rst(Q(0), Q(-3), Q(0), Q(0), Q(1), 8), denominator_zero);
    CHECK_THROWS_AS(coeffs_rst(Q(0), Q(0), Q(0), Q(0), Q(0), 4), invalid_params);
}

TEST_CASE("pq parametrization") {
    m1poly::test::RationalGen gen(44);
    for (int t = 0; t < 6; ++t) {
        Scalar p = gen.scalar(), q = gen.scalar(), r = gen.scalar(), s = gen.scalar();
        Scalar b2 = gen.nonzero_scalar();
        Scalar t1 = p * q + s - r * (Scalar(1) + Scalar(2) * s);
        Scalar t2 = -(p + q + r + Scalar(2) * s);
        try {
            auto via_rst = coeffs_rst(r, s, t1, t2, b2, 12);
            auto direct = coeffs_pq(p, q, r, s, b2, 12);
            CHECK(via_rst == direct);
        } catch (const denominator_zero&) {
        }
    }

    // odd n = p with p a positive odd integer kills alpha_p
    auto rp = coeffs_pq(Q(3), Q(1, 2), Q(1, 5), Q(1, 7), Q(1), 8);
    CHECK(rp.alpha(3) == Q(0));

    // even-n factorized form at n = 2
    {
        Scalar p = Q(1, 2), q = Q(1, 3), r = Q(1, 5), s = Q(1, 7), b2 = Q(2);
        auto rp2 = coeffs_pq(p, q, r, s, b2, 4);
        Scalar n(2);
        Scalar expect = -b2 * b2 * n * (n + Scalar(2) * s) * (n - p - q - Scalar(2) * r)
                        * (n + p + q + Scalar(2) * r + Scalar(2) * s)
                        / (Scalar(4) * (n + s) * (n + s));
        CHECK(rp2.alpha(2) == expect);
    }
}

TEST_CASE("b2 = 0 parametrization and the worked examples") {
    // example: b1 = 0, t1 = 2s, t2 = 1
    {
        Scalar s = Q(2, 3);
        auto rp = coeffs_b2zero(Q(0), s, Scalar(2) * s, Q(1), 9);
        for (int n = 1; n <= 9; ++n) {
            Scalar ns(n);
            CHECK(rp.alpha(n) == ns * (ns + Scalar(2) * s) / (Scalar(4) * (ns + s) * (ns + s)));
            Scalar mag = s * (Scalar(2) * ns + Scalar(2) * s + Scalar(1))
                         / (Scalar(2) * (ns + s) * (ns + Scalar(1) + s));
            CHECK(rp.beta(n) == (n % 2 == 1 ? mag : -mag));
        }
        // putting s = 0 recovers the chebyshev-like coefficients
        auto rp0 = coeffs_b2zero(Q(0), Q(0), Q(0), Q(1), 9);
        CHECK(rp0.beta(0) == Q(-1, 2));
        for (int n = 1; n <= 9; ++n) {
            CHECK(rp0.alpha(n) == Q(1, 4));
            CHECK(rp0.beta(n) == Q(0));
        }
    }
    // example: s = 0, t2 = -b1
    {
        Scalar b1 = Q(3, 2), t1 = Q(1, 3);
        auto rp = coeffs_b2zero(b1, Q(0), t1, -b1, 9);
        for (int n = 2; n <= 9; n += 2) {
            CHECK(rp.alpha(n) == b1 * b1);
            CHECK(rp.beta(n) == -(b1 + t1) / Scalar(2 * (n + 1)));
        }
        for (int n = 1; n <= 9; n += 2) {
            CHECK(rp.alpha(n) == -(b1 + t1) * (b1 + t1) / Scalar(4 * n * n));
            CHECK(rp.beta(n) == (b1 + t1) / Scalar(2 * n));
        }
    }
    // example: b1 = 0, t2 = 1, s = 0, t1 = 1/2
    {
        auto rp = coeffs_b2zero(Q(0), Q(0), Q(1, 2), Q(1), 9);
        for (int n = 2; n <= 9; n += 2) {
            CHECK(rp.alpha(n) == Q(1, 4));
            CHECK(rp.beta(n) == Q(-1, 2 * (n + 1)));
        }
        for (int n = 1; n <= 9; n += 2) {
            CHECK(rp.alpha(n) == Q((long)n * n - 1, 4 * (long)n * n));
            CHECK(rp.beta(n) == Q(1, 2 * n));
        }
    }
    // matches coeffs_minus1 under the substitution, any a2
    m1poly::test::RationalGen gen(45);
    for (int t = 0; t < 6; ++t) {
        Scalar b1 = gen.scalar(), s = gen.scalar(), t1 = gen.scalar(), t2 = gen.scalar();
        Scalar a2 = gen.nonzero_scalar();
        ParamSet p;
        p.kind = LatticeKind::minus_one();
        p.b0 = Q(0);
        p.b1 = b1;
        p.b2 = Q(0);
        p.a2 = a2;
        p.a1 = (s + Q(1, 2)) * a2;
        p.d1 = t1 * a2 * Q(1, 2);
        p.d2 = t2 * a2;
        try {
            CHECK(coeffs_b2zero(b1, s, t1, t2, 10) == coeffs_minus1(p, 10));
        } catch (const denominator_zero&) {
        }
    }
}

TEST_CASE("continuous family") {
    // y1 = w1 = 0: alpha even (n^2+y2^2)/4, odd (n^2+w2^2)/4; beta_0 = -y2/2
    {
        Rational y2(3, 2), w2(2);
        auto rp = coeffs_continuous(Rational(0), y2, Rational(0), w2, 8);
        CHECK(rp.beta(0) == Scalar(-y2 / Rational(2)));
        for (int n = 1; n <= 8; ++n) {
            Rational n2((long)n * n);
            Rational expect = n % 2 == 0 ? (n2 + y2 * y2) / Rational(4) : (n2 + w2 * w2) / Rational(4);
            CHECK(rp.alpha(n) == Scalar(expect));
            if (n >= 1) CHECK(rp.beta(n) == Q(0));
        }
    }
    // y = w = 0: alpha = n^2/4
    {
        auto rp = coeffs_continuous(Rational(0), Rational(0), Rational(0), Rational(0), 8);
        for (int n = 1; n <= 8; ++n) {
            CHECK(rp.alpha(n) == Q((long)n * n, 4));
            CHECK(rp.beta(n) == Q(0));
        }
    }
    // y2 = w2 = 0: all beta vanish
    {
        auto rp = coeffs_continuous(Rational(1, 3), Rational(0), Rational(2, 5), Rational(0), 8);
        for (int n = 0; n <= 8; ++n) CHECK(rp.beta(n) == Q(0));
    }

    // equals coeffs_rst over Q(i) with b2 = i under the stated substitution
    m1poly::test::RationalGen gen(46);
    for (int t = 0; t < 6; ++t) {
        Rational y1 = gen.rational(), y2 = gen.rational(), w1 = gen.rational(), w2 = gen.rational();
        Scalar y(y1, y2), w(w1, w2);
        Scalar i = Scalar::i();
        Scalar s(y1);
        Scalar r = (y - w) * Q(1, 2);
        Scalar t2 = -(y + w) * Q(1, 2);
        Scalar t1 = (y.conjugate() + w) * Q(1, 2) - Scalar(y1 * y2 - w1 * w2) * i;
        try {
            auto direct = coeffs_continuous(y1, y2, w1, w2, 10);
            auto via_rst = coeffs_rst(r, s, t1, t2, i, 10);
            CHECK(direct == via_rst);
        } catch (const denominator_zero&) {
        }
    }
}

TEST_CASE("continuous Bannai-Ito preset reproduces the continuous family") {
    // preset realizes (y1,y2,w1,w2) as a Q(i) parameter set; its definitional
    // coefficients must be the real continuous ones
    Scalar al = Q(1, 4), be = Q(1, 8), ga = Q(1, 3), de = Q(0);
    auto pre = make_preset("continuous-bi",
                           {{"alpha", al}, {"beta", be}, {"gamma", ga}, {"delta", de}});
    auto s = build_lattice(pre.params, 11);
    auto via_lattice = coeffs_general(s, 10);
    Rational y1 = (Q(1) + Scalar(2) * (al + ga)).real_value();
    Rational y2 = (Scalar(2) * (be + de)).real_value();
    Rational w1 = (Scalar(2) * (ga - al)).real_value();
    Rational w2 = (Scalar(2) * (de - be)).real_value();
    auto direct = coeffs_continuous(y1, y2, w1, w2, 10);
    CHECK(via_lattice == direct);
}

TEST_CASE("positivity scan") {
    auto ok = coeffs_continuous(Rational(1, 2), Rational(1), Rational(1, 4), Rational(2), 32);
    auto rep = positivity_scan(ok);
    CHECK(rep.nonpositive_alpha.empty());
    CHECK(rep.betas_real);

    auto zb = coeffs_minus1(make_preset("zero-beta", {}).params, 12);
    auto rep2 = positivity_scan(zb);
    CHECK(rep2.nonpositive_alpha.size() == 12);

    auto pos = coeffs_continuous(Rational(0), Rational(0), Rational(0), Rational(0), 12);
    CHECK(positivity_scan(pos).nonpositive_alpha.empty());
}

TEST_CASE("jacobi matrix layout") {
    auto pre = make_preset("chebyshev-like", {{"a2", Q(1)}, {"sign", Q(1)}});
    auto rp = coeffs_minus1(pre.params, 4);
    auto L = jacobi(rp);
    CHECK(L.dim() == 5);
    CHECK(L.at(0, 0) == Q(-1, 2));
    for (int k = 1; k <= 4; ++k) CHECK(L.at(k, k) == Q(0));
    for (int k = 0; k < 4; ++k) {
        CHECK(L.at(k, k + 1) == Q(1));
        CHECK(L.at(k + 1, k) == Q(1, 4));
    }

    // N = 0 edge: a 1x1 matrix holding beta_0
    RecurrencePair tiny({Q(0)}, {Q(7, 2)});
    auto L0 = jacobi(tiny);
    CHECK(L0.dim() == 1);
    CHECK(L0.at(0, 0) == Q(7, 2));

    // zero-beta: subdiagonal -1/4, -1, -9/4, -4
    auto zb = coeffs_minus1(make_preset("zero-beta", {}).params, 4);
    auto Lz = jacobi(zb);
    CHECK(Lz.at(1, 0) == Q(-1, 4));
    CHECK(Lz.at(2, 1) == Q(-1));
    CHECK(Lz.at(3, 2) == Q(-9, 4));
    CHECK(Lz.at(4, 3) == Q(-4));
}

TEST_CASE("translation: b0 shift with matching d adjustments moves beta by c") {
    m1poly::test::RationalGen gen(47);
    int checked = 0;
    while (checked < 8) {
        ParamSet p;
        p.a1 = gen.scalar(); p.a2 = gen.nonzero_scalar(); p.b0 = Scalar(0);
        p.b1 = gen.scalar(); p.b2 = gen.scalar(); p.d1 = gen.scalar(); p.d2 = gen.scalar();
        p.kind = LatticeKind::minus_one();
        Scalar c = gen.nonzero_scalar();
        ParamSet q = p;
        q.b0 = c;
        q.d1 = p.d1 - c * p.a1;
        q.d2 = p.d2 - c * p.a2;
        try {
            auto rp = general_from_params(p, 10);
            auto rq = general_from_params(q, 10);
            ++checked;
            for (int n = 1; n <= 10; ++n) CHECK(rq.alpha(n) == rp.alpha(n));
            for (int n = 0; n <= 10; ++n) CHECK(rq.beta(n) == rp.beta(n) + c);
        } catch (const eigenvalue_collision&) {
        }
    }
}

TEST_CASE("denominator-zero diagnostics carry the failing index") {
    // (2n-1)a2 + 2a1 = 0 at n = 3 when a1 = -5/2, a2 = 1
    ParamSet p;
    p.kind = LatticeKind::minus_one();
    p.a1 = Q(-5, 2); p.a2 = Q(1); p.b0 = Q(0);
    p.b1 = Q(1, 3); p.b2 = Q(1); p.d1 = Q(1); p.d2 = Q(2);
    try {
        coeffs_minus1(p, 8);
        CHECK(false);
    } catch (const denominator_zero& e) {
        CHECK(e.index == 3);
    }
}
