#pragma once

#include "qcoinv/laurent.hpp"

#include <optional>
#include <vector>

namespace qcoinv {

/// Sparse vector over Laurent: (column, value) pairs sorted by column, no zeros.
using SparseVec = std::vector<std::pair<int, Laurent>>;

SparseVec sparse_from_dense(const std::vector<Laurent>& v);
std::vector<Laurent> sparse_to_dense(const SparseVec& v, int n);

/// Matrix over Q[q,q^-1], stored as sparse rows.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(int nrows, int ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows) {}

    static LaurentMatrix from_dense(const std::vector<std::vector<Laurent>>& grid);
    static LaurentMatrix identity(int n);

    int rows() const { return nrows_; }
    int cols() const { return ncols_; }

    const SparseVec& row(int r) const { return rows_[r]; }
    Laurent at(int r, int c) const;

    /// Accumulates v into entry (r, c).
    void add(int r, int c, const Laurent& v);
    void set_row(int r, SparseVec v) { rows_[r] = std::move(v); }

    /// Appends a row (grows the matrix).
    void append_row(SparseVec v);

    bool is_zero() const;
    size_t nonzero_count() const;

    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
    }

private:
    int nrows_ = 0;
    int ncols_ = 0;
    std::vector<SparseVec> rows_;
};

LaurentMatrix matmul(const LaurentMatrix& a, const LaurentMatrix& b);

/// Rank over the fraction field Q(q).
int rank(const LaurentMatrix& m);

/// Rank over Q after exact evaluation at q = lambda (lambda != 0).
int rank_at(const LaurentMatrix& m, const Rational& lambda);

/// Entrywise evaluation at q = lambda (lambda != 0).
LaurentMatrix specialize_matrix(const LaurentMatrix& m, const Rational& lambda);

/// Basis of the right null space over Q(q), scaled to Laurent entries with no
/// common factor; each vector has lowest q-power at exponent 0 and the leading
/// coefficient of its first nonzero entry positive. Size = cols - rank.
std::vector<std::vector<Laurent>> kernel_basis(const LaurentMatrix& m);

/// Dimension of span of the given vectors (rank of the matrix they form).
int span_rank(const std::vector<std::vector<Laurent>>& vectors, int ncols);

/// True iff v lies in the span of the given vectors over Q(q).
bool in_span(const std::vector<std::vector<Laurent>>& vectors, const std::vector<Laurent>& v,
             int ncols);

/// M * v for a dense vector.
std::vector<Laurent> mat_vec(const LaurentMatrix& m, const std::vector<Laurent>& v);

}  // namespace qcoinv
