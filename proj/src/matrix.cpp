#include "m1poly/matrix.hpp"

#include <algorithm>

namespace m1poly {

namespace {
const Scalar kZero{};
}

BandedMatrix::BandedMatrix(int dim, int lower_bw, int upper_bw)
    : dim_(dim), lower_(lower_bw), upper_(upper_bw), exact_rows_(dim) {
    if (dim < 1) throw invalid_params("matrix dimension must be positive");
    if (lower_ < 0 || upper_ < 0 || lower_ >= dim || upper_ >= dim) {
        throw invalid_params("bandwidths out of range");
    }
    diags_.resize(lower_ + upper_ + 1);
    for (int d = -lower_; d <= upper_; ++d) {
        diags_[d + lower_].assign(dim_ - std::abs(d), Scalar(0));
    }
}

BandedMatrix BandedMatrix::identity(int dim) {
    BandedMatrix m(dim, 0, 0);
    for (int i = 0; i < dim; ++i) m.set(i, i, Scalar(1));
    return m;
}

BandedMatrix BandedMatrix::diagonal(const std::vector<Scalar>& d) {
    BandedMatrix m(static_cast<int>(d.size()), 0, 0);
    for (int i = 0; i < m.dim(); ++i) m.set(i, i, d[i]);
    return m;
}

void BandedMatrix::set_exact_rows(int rows) {
    exact_rows_ = std::clamp(rows, 0, dim_);
}

const Scalar& BandedMatrix::at(int row, int col) const {
    if (row < 0 || col < 0 || row >= dim_ || col >= dim_) {
        throw invalid_params("matrix index out of range");
    }
    int d = col - row;
    if (d < -lower_ || d > upper_) return kZero;
    return diags_[d + lower_][std::min(row, col)];
}

void BandedMatrix::set(int row, int col, Scalar v) {
    if (!in_band(row, col)) throw invalid_params("entry outside declared band");
    diags_[col - row + lower_][std::min(row, col)] = std::move(v);
}

BandedMatrix operator+(const BandedMatrix& a, const BandedMatrix& b) {
    if (a.dim_ != b.dim_) throw invalid_params("dimension mismatch");
    BandedMatrix r(a.dim_, std::max(a.lower_, b.lower_), std::max(a.upper_, b.upper_));
    for (int i = 0; i < r.dim_; ++i) {
        int lo = std::max(0, i - r.lower_), hi = std::min(r.dim_ - 1, i + r.upper_);
        for (int j = lo; j <= hi; ++j) r.set(i, j, a.at(i, j) + b.at(i, j));
    }
    r.set_exact_rows(std::min(a.exact_rows_, b.exact_rows_));
    return r;
}

BandedMatrix operator-(const BandedMatrix& a, const BandedMatrix& b) {
    if (a.dim_ != b.dim_) throw invalid_params("dimension mismatch");
    BandedMatrix r(a.dim_, std::max(a.lower_, b.lower_), std::max(a.upper_, b.upper_));
    for (int i = 0; i < r.dim_; ++i) {
        int lo = std::max(0, i - r.lower_), hi = std::min(r.dim_ - 1, i + r.upper_);
        for (int j = lo; j <= hi; ++j) r.set(i, j, a.at(i, j) - b.at(i, j));
    }
    r.set_exact_rows(std::min(a.exact_rows_, b.exact_rows_));
    return r;
}

BandedMatrix operator*(const Scalar& c, const BandedMatrix& a) {
    BandedMatrix r(a.dim_, a.lower_, a.upper_);
    for (int i = 0; i < r.dim_; ++i) {
        int lo = std::max(0, i - r.lower_), hi = std::min(r.dim_ - 1, i + r.upper_);
        for (int j = lo; j <= hi; ++j) r.set(i, j, c * a.at(i, j));
    }
    r.set_exact_rows(a.exact_rows_);
    return r;
}

BandedMatrix band_product(const BandedMatrix& a, const BandedMatrix& b) {
    if (a.dim() != b.dim()) throw invalid_params("dimension mismatch");
    int dim = a.dim();
    int lower = std::min(dim - 1, a.lower_bandwidth() + b.lower_bandwidth());
    int upper = std::min(dim - 1, a.upper_bandwidth() + b.upper_bandwidth());
    BandedMatrix r(dim, lower, upper);
    for (int i = 0; i < dim; ++i) {
        int klo = std::max(0, i - a.lower_bandwidth());
        int khi = std::min(dim - 1, i + a.upper_bandwidth());
        int jlo = std::max(0, i - lower), jhi = std::min(dim - 1, i + upper);
        for (int j = jlo; j <= jhi; ++j) {
            Scalar sum(0);
            int lo = std::max(klo, j - b.upper_bandwidth());
            int hi = std::min(khi, j + b.lower_bandwidth());
            for (int k = lo; k <= hi; ++k) sum += a.at(i, k) * b.at(k, j);
            if (!sum.is_zero()) r.set(i, j, std::move(sum));
        }
    }
    // Row i of the result reads rows of b up to i + a.upper; those must exist
    // within the truncation and be exact themselves.
    int window = std::min({a.exact_rows(), b.exact_rows() - a.upper_bandwidth(),
                           dim - a.upper_bandwidth()});
    r.set_exact_rows(window);
    return r;
}

BandedMatrix anticommutator(const BandedMatrix& a, const BandedMatrix& b) {
    return band_product(a, b) + band_product(b, a);
}

bool equal_on_rows(const BandedMatrix& a, const BandedMatrix& b, int rows) {
    if (a.dim() != b.dim()) return false;
    rows = std::min(rows, a.dim());
    for (int i = 0; i < rows; ++i) {
        int lo = std::max(0, i - std::max(a.lower_bandwidth(), b.lower_bandwidth()));
        int hi = std::min(a.dim() - 1, i + std::max(a.upper_bandwidth(), b.upper_bandwidth()));
        for (int j = lo; j <= hi; ++j) {
            if (a.at(i, j) != b.at(i, j)) return false;
        }
    }
    return true;
}

ConnectionMatrix::ConnectionMatrix(int order) {
    if (order < 0) throw invalid_params("connection matrix order must be nonnegative");
    rows_.resize(order + 1);
    for (int n = 0; n <= order; ++n) {
        rows_[n].assign(n + 1, Scalar(0));
        rows_[n][n] = Scalar(1);
    }
}

const Scalar& ConnectionMatrix::at(int n, int k) const {
    if (n < 0 || n >= dim() || k < 0 || k >= dim()) throw invalid_params("index out of range");
    if (k > n) return kZero;
    return rows_[n][k];
}

void ConnectionMatrix::set(int n, int k, Scalar v) {
    if (n < 0 || n >= dim() || k < 0 || k > n) throw invalid_params("index out of range");
    rows_[n][k] = std::move(v);
}

BandedMatrix ConnectionMatrix::to_banded() const {
    BandedMatrix m(dim(), dim() - 1, 0);
    for (int n = 0; n < dim(); ++n) {
        for (int k = 0; k <= n; ++k) m.set(n, k, rows_[n][k]);
    }
    return m;
}

} // namespace m1poly
