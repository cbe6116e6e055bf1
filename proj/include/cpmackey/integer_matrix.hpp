#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cpmackey/errors.hpp"

namespace mackey {

using Integer = boost::multiprecision::cpp_int;

/// Dense integer matrix in row-major order. All arithmetic is exact.
/// Matrices with zero rows or zero columns are first-class values.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    static IntegerMatrix identity(std::size_t n);
    /// Row-major construction from literals; convenient in tests and fixtures.
    static IntegerMatrix fromRows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntegerMatrix fromColumns(std::size_t rows, const std::vector<std::vector<Integer>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Integer& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Integer& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool operator==(const IntegerMatrix&) const = default;

    bool isZero() const;
    IntegerMatrix transpose() const;
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    IntegerMatrix operator+(const IntegerMatrix& rhs) const;
    IntegerMatrix operator-(const IntegerMatrix& rhs) const;
    IntegerMatrix operator-() const;
    IntegerMatrix scaled(const Integer& c) const;
    /// Matrix power of a square matrix; exponent 0 gives the identity.
    IntegerMatrix power(unsigned exponent) const;

    std::vector<Integer> applyTo(const std::vector<Integer>& v) const;
    std::vector<Integer> column(std::size_t j) const;
    IntegerMatrix selectColumns(const std::vector<std::size_t>& idx) const;
    IntegerMatrix selectRows(const std::vector<std::size_t>& idx) const;

    static IntegerMatrix hconcat(const IntegerMatrix& a, const IntegerMatrix& b);
    static IntegerMatrix vconcat(const IntegerMatrix& a, const IntegerMatrix& b);
    static IntegerMatrix blockDiagonal(const IntegerMatrix& a, const IntegerMatrix& b);
    static IntegerMatrix kronecker(const IntegerMatrix& a, const IntegerMatrix& b);

    /// "[1 2; 3 4]"; a matrix without entries renders as "[]".
    std::string toString() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> entries_;
};

/// U * input * V = D with U, V unimodular and D diagonal with nonnegative
/// entries, each dividing the next among the nonzero ones.
struct SmithDecomposition {
    IntegerMatrix U, D, V;
};

/// Smith decomposition extended with the inverse transforms, which several
/// constructions (solving, nullspaces, minimal presentations) need.
struct SmithTransforms {
    IntegerMatrix U, D, V, Uinv, Vinv;
    std::size_t rank = 0;  // number of nonzero diagonal entries
};

SmithTransforms smithTransforms(const IntegerMatrix& m);
SmithDecomposition smithNormalForm(const IntegerMatrix& m);

/// Basis of the lattice { x : m * x = 0 }, returned as matrix columns.
IntegerMatrix nullspaceBasis(const IntegerMatrix& m);

/// Repeated exact solves of m * x = b against a fixed matrix m.
class ColumnSolver {
public:
    explicit ColumnSolver(const IntegerMatrix& m);
    std::optional<std::vector<Integer>> solve(const std::vector<Integer>& b) const;
    bool contains(const std::vector<Integer>& b) const { return solve(b).has_value(); }
    /// Column-wise solve: returns X with m * X = rhs when every column is solvable.
    std::optional<IntegerMatrix> solveMatrix(const IntegerMatrix& rhs) const;

private:
    std::size_t rows_, cols_;
    SmithTransforms snf_;
};

/// Solves relations * x = b over the integers; absent when no integer solution exists.
std::optional<std::vector<Integer>> solveColumn(const IntegerMatrix& relations,
                                                const std::vector<Integer>& b);

}  // namespace mackey
