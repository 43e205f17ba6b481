#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace m1poly {

/// Base class for every library error.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
};

class parse_error : public error {
public:
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

class invalid_params : public error {
public:
    using error::error;
};

/// h_j == h_k for j != k; downstream divisions h_n - h_j would blow up.
class eigenvalue_collision : public error {
public:
    int first, second;
    eigenvalue_collision(int j, int k)
        : error("eigenvalue collision: h[" + std::to_string(j) + "] == h[" + std::to_string(k) + "]"),
          first(j), second(k) {}
};

/// A closed-form denominator vanished at the named index.
class denominator_zero : public error {
public:
    int index;
    explicit denominator_zero(int n)
        : error("closed-form denominator vanishes at index " + std::to_string(n)), index(n) {}
};

/// z_k = 0 during the shifted LU recursion: the shift is an eigenvalue of a
/// leading principal submatrix.
class factorization_breakdown : public error {
public:
    int index;
    explicit factorization_breakdown(int k)
        : error("factorization breakdown at k=" + std::to_string(k)), index(k) {}
};

/// The polynomial family handed to the recurrence extractor does not satisfy
/// a three-term recurrence.
class residual_nonzero : public error {
public:
    int index;
    explicit residual_nonzero(int n)
        : error("three-term residual nonzero at n=" + std::to_string(n)), index(n) {}
};

class node_collision : public error {
public:
    int first, second;
    node_collision(int j, int k)
        : error("node collision: x[" + std::to_string(j) + "] == x[" + std::to_string(k) + "]"),
          first(j), second(k) {}
};

class insufficient_samples : public error {
public:
    using error::error;
};

class degree_overflow : public error {
public:
    using error::error;
};

} // namespace m1poly
