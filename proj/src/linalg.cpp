#include "qcoinv/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qcoinv {

SparseVec sparse_from_dense(const std::vector<Laurent>& v) {
    SparseVec out;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (!v[i].is_zero())
            out.emplace_back(i, v[i]);
    return out;
}

std::vector<Laurent> sparse_to_dense(const SparseVec& v, int n) {
    std::vector<Laurent> out(n);
    for (const auto& [c, val] : v)
        out[c] = val;
    return out;
}

LaurentMatrix LaurentMatrix::from_dense(const std::vector<std::vector<Laurent>>& grid) {
    LaurentMatrix m(static_cast<int>(grid.size()),
                    grid.empty() ? 0 : static_cast<int>(grid[0].size()));
    for (int r = 0; r < m.nrows_; ++r) {
        if (static_cast<int>(grid[r].size()) != m.ncols_)
            throw std::invalid_argument("LaurentMatrix: ragged rows");
        m.rows_[r] = sparse_from_dense(grid[r]);
    }
    return m;
}

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.rows_[i].emplace_back(i, Laurent::one());
    return m;
}

Laurent LaurentMatrix::at(int r, int c) const {
    const SparseVec& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& t, int x) { return t.first < x; });
    if (it != row.end() && it->first == c)
        return it->second;
    return Laurent();
}

void LaurentMatrix::add(int r, int c, const Laurent& v) {
    if (v.is_zero())
        return;
    SparseVec& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& t, int x) { return t.first < x; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero())
            row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

void LaurentMatrix::append_row(SparseVec v) {
    rows_.push_back(std::move(v));
    ++nrows_;
}

bool LaurentMatrix::is_zero() const {
    for (const auto& r : rows_)
        if (!r.empty())
            return false;
    return true;
}

size_t LaurentMatrix::nonzero_count() const {
    size_t n = 0;
    for (const auto& r : rows_)
        n += r.size();
    return n;
}

LaurentMatrix matmul(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: dimension mismatch");
    LaurentMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        std::map<int, Laurent> acc;
        for (const auto& [k, av] : a.row(r))
            for (const auto& [c, bv] : b.row(k)) {
                auto& slot = acc[c];
                slot += av * bv;
            }
        SparseVec row;
        for (auto& [c, v] : acc)
            if (!v.is_zero())
                row.emplace_back(c, std::move(v));
        out.set_row(r, std::move(row));
    }
    return out;
}

namespace {

// Row operations for the fraction-free echelon.

void strip_row(SparseVec& row) {
    if (row.empty())
        return;
    Rational content;
    int minexp = row[0].second.min_exp();
    for (const auto& [c, v] : row) {
        content = rational_gcd(content, v.content());
        minexp = std::min(minexp, v.min_exp());
    }
    // Common polynomial factor beyond the q-power unit.
    Laurent pgcd;
    for (const auto& [c, v] : row) {
        pgcd = Laurent::gcd(pgcd, v);
        if (pgcd.term_count() == 1)
            break;  // a bare unit, nothing further to strip
    }
    if (row[0].second.leading_coeff().sign() < 0)
        content = -content;
    Laurent unit = Laurent::term(content, minexp);  // sign, content, q-shift in one factor
    bool poly_strip = pgcd.term_count() > 1;
    for (auto& [c, v] : row) {
        v = v.div_exact(unit);
        if (poly_strip)
            v = v.div_exact(pgcd);
    }
}

// dst <- pivval * dst - dstval * pivrow, then strip. dstval is dst's entry at the pivot column.
void eliminate(SparseVec& dst, const Laurent& dstval, const SparseVec& pivrow,
               const Laurent& pivval) {
    SparseVec out;
    out.reserve(dst.size() + pivrow.size());
    auto i = dst.begin();
    auto j = pivrow.begin();
    while (i != dst.end() && j != pivrow.end()) {
        if (i->first < j->first) {
            out.emplace_back(i->first, pivval * i->second);
            ++i;
        } else if (j->first < i->first) {
            out.emplace_back(j->first, -(dstval * j->second));
            ++j;
        } else {
            Laurent v = pivval * i->second - dstval * j->second;
            if (!v.is_zero())
                out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i != dst.end(); ++i)
        out.emplace_back(i->first, pivval * i->second);
    for (; j != pivrow.end(); ++j)
        out.emplace_back(j->first, -(dstval * j->second));
    strip_row(out);
    dst = std::move(out);
}

struct Echelon {
    // Pivot rows in pivot-column order; row[k] has leading column pivot_cols[k].
    std::vector<SparseVec> rows;
    std::vector<int> pivot_cols;
};

// Fraction-free row echelon with content stripping per pivot row.
// Pivot choice per column: entry with the fewest Laurent terms, ties broken by
// lowest exponent spread, then by fewest row nonzeros, then by insertion order.
// Rows are unit-normalized, so scalar multiples collapse under deduplication.
Echelon echelonize(const LaurentMatrix& m) {
    std::map<int, std::vector<SparseVec>> buckets;  // leading column -> rows
    for (int r = 0; r < m.rows(); ++r) {
        SparseVec row = m.row(r);
        if (row.empty())
            continue;
        strip_row(row);
        buckets[row[0].first].push_back(std::move(row));
    }
    Echelon ech;
    while (!buckets.empty()) {
        auto it = buckets.begin();
        int col = it->first;
        std::vector<SparseVec> rows = std::move(it->second);
        buckets.erase(it);
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        size_t best = 0;
        for (size_t k = 1; k < rows.size(); ++k) {
            const Laurent& a = rows[k][0].second;
            const Laurent& b = rows[best][0].second;
            auto key = [&](const Laurent& v, const SparseVec& row) {
                return std::tuple<size_t, int, size_t>(v.term_count(), v.exp_spread(), row.size());
            };
            if (key(a, rows[k]) < key(b, rows[best]))
                best = k;
        }
        SparseVec piv = std::move(rows[best]);
        const Laurent pv = piv[0].second;
        for (size_t k = 0; k < rows.size(); ++k) {
            if (k == best)
                continue;
            SparseVec& row = rows[k];
            eliminate(row, row[0].second, piv, pv);
            if (!row.empty())
                buckets[row[0].first].push_back(std::move(row));
        }
        ech.pivot_cols.push_back(col);
        ech.rows.push_back(std::move(piv));
    }
    return ech;
}

Laurent entry_at(const SparseVec& row, int c) {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& t, int x) { return t.first < x; });
    if (it != row.end() && it->first == c)
        return it->second;
    return Laurent();
}

// Back-eliminate so each pivot row is supported on its pivot column and free columns only.
void back_eliminate(Echelon& ech) {
    for (int k = static_cast<int>(ech.rows.size()) - 1; k >= 0; --k) {
        for (int j = k - 1; j >= 0; --j) {
            Laurent v = entry_at(ech.rows[j], ech.pivot_cols[k]);
            if (!v.is_zero())
                eliminate(ech.rows[j], v, ech.rows[k], ech.rows[k][0].second);
        }
    }
}

}  // namespace

int rank(const LaurentMatrix& m) {
    return static_cast<int>(echelonize(m).rows.size());
}

LaurentMatrix specialize_matrix(const LaurentMatrix& m, const Rational& lambda) {
    LaurentMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        SparseVec row;
        for (const auto& [c, v] : m.row(r)) {
            Rational x = v.eval_at(lambda);
            if (!x.is_zero())
                row.emplace_back(c, Laurent(std::move(x)));
        }
        out.set_row(r, std::move(row));
    }
    return out;
}

int rank_at(const LaurentMatrix& m, const Rational& lambda) {
    return rank(specialize_matrix(m, lambda));
}

std::vector<std::vector<Laurent>> kernel_basis(const LaurentMatrix& m) {
    Echelon ech = echelonize(m);
    back_eliminate(ech);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : ech.pivot_cols)
        is_pivot[c] = true;

    std::vector<std::vector<Laurent>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        // x_f = L, x_{pivot k} = -row_k[f] * L / pivot_k, L = lcm of involved pivots.
        Laurent L = Laurent::one();
        for (size_t k = 0; k < ech.rows.size(); ++k) {
            if (!entry_at(ech.rows[k], f).is_zero())
                L = Laurent::lcm(L, ech.rows[k][0].second);
        }
        std::vector<Laurent> v(m.cols());
        v[f] = L;
        for (size_t k = 0; k < ech.rows.size(); ++k) {
            Laurent a = entry_at(ech.rows[k], f);
            if (a.is_zero())
                continue;
            v[ech.pivot_cols[k]] = -(a * L.div_exact(ech.rows[k][0].second));
        }
        // Normalize: strip content, lowest q-power to exponent 0, first nonzero
        // entry's leading coefficient positive.
        SparseVec sv = sparse_from_dense(v);
        strip_row(sv);
        basis.push_back(sparse_to_dense(sv, m.cols()));
    }
    return basis;
}

int span_rank(const std::vector<std::vector<Laurent>>& vectors, int ncols) {
    LaurentMatrix m(0, ncols);
    for (const auto& v : vectors)
        m.append_row(sparse_from_dense(v));
    return rank(m);
}

bool in_span(const std::vector<std::vector<Laurent>>& vectors, const std::vector<Laurent>& v,
             int ncols) {
    int base = span_rank(vectors, ncols);
    LaurentMatrix m(0, ncols);
    for (const auto& w : vectors)
        m.append_row(sparse_from_dense(w));
    m.append_row(sparse_from_dense(v));
    return rank(m) == base;
}

std::vector<Laurent> mat_vec(const LaurentMatrix& m, const std::vector<Laurent>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Laurent> out(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, val] : m.row(r))
            out[r] += val * v[c];
    return out;
}

}  // namespace qcoinv
