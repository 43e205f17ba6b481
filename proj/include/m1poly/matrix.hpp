#pragma once

/**
 * Order-N truncations of infinite banded matrices, with an explicit window of
 * rows guaranteed unaffected by the truncation.
 *
 * Storage is by diagonal: diagonal d (entry (i, i+d)) for -lower <= d <= upper.
 * Row i of a product A*B needs rows of B up to i + A.upper; the product
 * therefore marks rows exact only while those source rows both exist and are
 * themselves exact.  Every identity check restricts to the exact window.
 */

#include <vector>

#include "m1poly/scalar.hpp"

namespace m1poly {

class BandedMatrix {
public:
    BandedMatrix(int dim, int lower_bw, int upper_bw);

    static BandedMatrix identity(int dim);
    static BandedMatrix diagonal(const std::vector<Scalar>& d);

    int dim() const { return dim_; }
    int lower_bandwidth() const { return lower_; }
    int upper_bandwidth() const { return upper_; }

    int exact_rows() const { return exact_rows_; }
    void set_exact_rows(int rows);

    /// Zero outside the band.
    const Scalar& at(int row, int col) const;
    /// Throws invalid_params outside the band.
    void set(int row, int col, Scalar v);

    bool in_band(int row, int col) const {
        int d = col - row;
        return row >= 0 && col >= 0 && row < dim_ && col < dim_ && d >= -lower_ && d <= upper_;
    }

    friend BandedMatrix operator+(const BandedMatrix& a, const BandedMatrix& b);
    friend BandedMatrix operator-(const BandedMatrix& a, const BandedMatrix& b);
    friend BandedMatrix operator*(const Scalar& c, const BandedMatrix& a);

private:
    int dim_, lower_, upper_, exact_rows_;
    std::vector<std::vector<Scalar>> diags_;   // diags_[d + lower_], indexed by min(row, col)
};

/// Band-aware product with the truncation-window rule.
BandedMatrix band_product(const BandedMatrix& a, const BandedMatrix& b);

/// A*B + B*A.
BandedMatrix anticommutator(const BandedMatrix& a, const BandedMatrix& b);

/// Entrywise equality on rows [0, rows); all columns.
bool equal_on_rows(const BandedMatrix& a, const BandedMatrix& b, int rows);

/// Unit lower-triangular connection matrix, stored as dense rows.
class ConnectionMatrix {
public:
    explicit ConnectionMatrix(int order);   // rows 0..order, c[n][n] = 1

    int order() const { return static_cast<int>(rows_.size()) - 1; }
    int dim() const { return static_cast<int>(rows_.size()); }

    const Scalar& at(int n, int k) const;   // zero for k > n
    void set(int n, int k, Scalar v);

    const std::vector<Scalar>& row(int n) const { return rows_[n]; }

    BandedMatrix to_banded() const;

private:
    std::vector<std::vector<Scalar>> rows_;
};

} // namespace m1poly
