#include "cpmackey/integer_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace mackey {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw PreconditionError("IntegerMatrix: entry count does not match dimensions");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::fromRows(std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntegerMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw PreconditionError("IntegerMatrix::fromRows: ragged rows");
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntegerMatrix IntegerMatrix::fromColumns(std::size_t rows, const std::vector<std::vector<Integer>>& cols) {
    IntegerMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw PreconditionError("IntegerMatrix::fromColumns: bad column length");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

bool IntegerMatrix::isZero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw PreconditionError("IntegerMatrix: product dimension mismatch");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw PreconditionError("IntegerMatrix: sum dimension mismatch");
    IntegerMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& rhs) const {
    return *this + (-rhs);
}

IntegerMatrix IntegerMatrix::operator-() const {
    IntegerMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
}

IntegerMatrix IntegerMatrix::scaled(const Integer& c) const {
    IntegerMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = c * entries_[i];
    return out;
}

IntegerMatrix IntegerMatrix::power(unsigned exponent) const {
    if (rows_ != cols_) throw PreconditionError("IntegerMatrix::power: matrix not square");
    IntegerMatrix out = identity(rows_);
    for (unsigned k = 0; k < exponent; ++k) out = out * (*this);
    return out;
}

std::vector<Integer> IntegerMatrix::applyTo(const std::vector<Integer>& v) const {
    if (v.size() != cols_) throw PreconditionError("IntegerMatrix::applyTo: vector length mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<Integer> IntegerMatrix::column(std::size_t j) const {
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

IntegerMatrix IntegerMatrix::selectColumns(const std::vector<std::size_t>& idx) const {
    IntegerMatrix out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
    return out;
}

IntegerMatrix IntegerMatrix::selectRows(const std::vector<std::size_t>& idx) const {
    IntegerMatrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(idx[i], j);
    return out;
}

IntegerMatrix IntegerMatrix::hconcat(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows()) throw PreconditionError("hconcat: row count mismatch");
    IntegerMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

IntegerMatrix IntegerMatrix::vconcat(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.cols()) throw PreconditionError("vconcat: column count mismatch");
    IntegerMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

IntegerMatrix IntegerMatrix::blockDiagonal(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

IntegerMatrix IntegerMatrix::kronecker(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Integer& v = a.at(ia, ja);
            if (v == 0) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out.at(ia * b.rows() + ib, ja * b.cols() + jb) = v * b.at(ib, jb);
        }
    return out;
}

std::string IntegerMatrix::toString() const {
    if (entries_.empty()) return "[]";
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i > 0) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

namespace {

// Quotient q minimizing |a - q*b|; b nonzero.
Integer nearestQuotient(const Integer& a, const Integer& b) {
    Integer q = a / b;
    Integer r = a - q * b;
    if (r != 0 && 2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

struct SnfWorkspace {
    IntegerMatrix A, U, Uinv, V, Vinv;

    void swapRows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A.at(i, j), A.at(k, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U.at(i, j), U.at(k, j));
        for (std::size_t r = 0; r < Uinv.rows(); ++r) std::swap(Uinv.at(r, i), Uinv.at(r, k));
    }
    void swapCols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < A.rows(); ++i) std::swap(A.at(i, j), A.at(i, k));
        for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V.at(i, j), V.at(i, k));
        for (std::size_t c = 0; c < Vinv.cols(); ++c) std::swap(Vinv.at(j, c), Vinv.at(k, c));
    }
    // row dst += c * row src
    void addRow(std::size_t dst, std::size_t src, const Integer& c) {
        for (std::size_t j = 0; j < A.cols(); ++j) A.at(dst, j) += c * A.at(src, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(dst, j) += c * U.at(src, j);
        for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv.at(r, src) -= c * Uinv.at(r, dst);
    }
    // col dst += c * col src
    void addCol(std::size_t dst, std::size_t src, const Integer& c) {
        for (std::size_t i = 0; i < A.rows(); ++i) A.at(i, dst) += c * A.at(i, src);
        for (std::size_t i = 0; i < V.rows(); ++i) V.at(i, dst) += c * V.at(i, src);
        for (std::size_t c2 = 0; c2 < Vinv.cols(); ++c2) Vinv.at(src, c2) -= c * Vinv.at(dst, c2);
    }
    void negateRow(std::size_t i) {
        for (std::size_t j = 0; j < A.cols(); ++j) A.at(i, j) = -A.at(i, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(i, j) = -U.at(i, j);
        for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv.at(r, i) = -Uinv.at(r, i);
    }
};

}  // namespace

SmithTransforms smithTransforms(const IntegerMatrix& input) {
    const std::size_t m = input.rows(), n = input.cols();
    SnfWorkspace w{input, IntegerMatrix::identity(m), IntegerMatrix::identity(m),
                   IntegerMatrix::identity(n), IntegerMatrix::identity(n)};
    const std::size_t lim = std::min(m, n);
    std::size_t t = 0;

    while (t < lim) {
        // Pivot: nonzero entry of minimal absolute value; ties broken by
        // lowest row, then lowest column index.
        bool found = false;
        std::size_t pi = t, pj = t;
        Integer best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Integer& v = w.A.at(i, j);
                if (v == 0) continue;
                Integer a = abs(v);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        w.swapRows(t, pi);
        w.swapCols(t, pj);

        for (;;) {
            // Clear column t and row t; a nonzero remainder becomes the new
            // (strictly smaller) pivot, so this terminates.
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.A.at(i, t) == 0) continue;
                Integer q = nearestQuotient(w.A.at(i, t), w.A.at(t, t));
                if (q != 0) w.addRow(i, t, -q);
                if (w.A.at(i, t) != 0) {
                    w.swapRows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.A.at(t, j) == 0) continue;
                Integer q = nearestQuotient(w.A.at(t, j), w.A.at(t, t));
                if (q != 0) w.addCol(j, t, -q);
                if (w.A.at(t, j) != 0) {
                    w.swapCols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Divisibility: fold a non-multiple of the pivot into row t and
            // keep reducing; the pivot shrinks to a divisor of the block.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (w.A.at(i, j) % w.A.at(t, t) != 0) {
                        w.addRow(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }

        if (w.A.at(t, t) < 0) w.negateRow(t);
        ++t;
    }

    SmithTransforms out{std::move(w.U), std::move(w.A), std::move(w.V),
                        std::move(w.Uinv), std::move(w.Vinv), 0};
    for (std::size_t i = 0; i < lim; ++i)
        if (out.D.at(i, i) != 0) ++out.rank;
    return out;
}

SmithDecomposition smithNormalForm(const IntegerMatrix& m) {
    SmithTransforms t = smithTransforms(m);
    return SmithDecomposition{std::move(t.U), std::move(t.D), std::move(t.V)};
}

IntegerMatrix nullspaceBasis(const IntegerMatrix& m) {
    SmithTransforms t = smithTransforms(m);
    std::vector<std::size_t> idx;
    for (std::size_t j = t.rank; j < m.cols(); ++j) idx.push_back(j);
    return t.V.selectColumns(idx);
}

ColumnSolver::ColumnSolver(const IntegerMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), snf_(smithTransforms(m)) {}

std::optional<std::vector<Integer>> ColumnSolver::solve(const std::vector<Integer>& b) const {
    if (b.size() != rows_) throw PreconditionError("ColumnSolver: right-hand side length mismatch");
    std::vector<Integer> c = snf_.U.applyTo(b);
    std::vector<Integer> y(cols_);
    const std::size_t lim = std::min(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i < lim && snf_.D.at(i, i) != 0) {
            const Integer& d = snf_.D.at(i, i);
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return snf_.V.applyTo(y);
}

std::optional<IntegerMatrix> ColumnSolver::solveMatrix(const IntegerMatrix& rhs) const {
    if (rhs.rows() != rows_) throw PreconditionError("ColumnSolver: right-hand side row mismatch");
    IntegerMatrix out(cols_, rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        auto x = solve(rhs.column(j));
        if (!x) return std::nullopt;
        for (std::size_t i = 0; i < cols_; ++i) out.at(i, j) = (*x)[i];
    }
    return out;
}

std::optional<std::vector<Integer>> solveColumn(const IntegerMatrix& relations,
                                                const std::vector<Integer>& b) {
    return ColumnSolver(relations).solve(b);
}

}  // namespace mackey
