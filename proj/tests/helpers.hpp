#pragma once

#include <random>

#include "m1poly/scalar.hpp"

namespace m1poly::test {

inline Scalar Q(long n, long d = 1) { return Scalar(Rational(n, d)); }

/// Deterministic small random rationals for property tests.
class RationalGen {
public:
    explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

    Rational rational(long lo = -9, long hi = 9, long max_den = 7) {
        std::uniform_int_distribution<long> num(lo, hi), den(1, max_den);
        return Rational(num(rng_), den(rng_));
    }

    Rational nonzero_rational(long lo = -9, long hi = 9, long max_den = 7) {
        for (;;) {
            Rational r = rational(lo, hi, max_den);
            if (!r.is_zero()) return r;
        }
    }

    Scalar scalar() { return Scalar(rational()); }
    Scalar nonzero_scalar() { return Scalar(nonzero_rational()); }
    Scalar gaussian() { return Scalar(rational(), rational()); }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace m1poly::test
