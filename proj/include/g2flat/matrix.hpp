#pragma once

#include "g2flat/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace g2flat {

using Vec = std::vector<Rat>;

/// Dense matrix over exact rationals, row-major. All elimination routines in
/// this header are exact; no floating point anywhere.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<Vec>& rows);
    static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat&) const = default;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Rat& s) const;

    Mat transposed() const;
    bool is_zero() const;
    bool is_symmetric() const;

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_row(std::size_t i, const Vec& v);

    void swap_rows(std::size_t i, std::size_t j);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

Vec operator*(const Mat& m, const Vec& x);
Mat commutator(const Mat& a, const Mat& b);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& s, const Vec& a);
bool vec_is_zero(const Vec& a);
Rat dot(const Vec& a, const Vec& b);

/// Row-major flattening of a square matrix, for treating spaces of matrices
/// as coordinate spaces.
Vec flatten(const Mat& m);
Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols);

std::size_t rank(const Mat& m);

/// Reduced row echelon form with zero rows dropped; pivot entries are 1 and
/// pivot columns are otherwise zero. Canonical for the row span.
Mat rref(const Mat& m);

/// Rows form an rref basis of { x : m x = 0 }.
Mat kernel_basis(const Mat& m);

/// One solution of m x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

std::optional<Mat> inverse(const Mat& m);

Rat det(const Mat& m);

struct Signature {
    std::size_t plus = 0, minus = 0, zero = 0;
    bool operator==(const Signature&) const = default;
};

/// Sylvester signature of a symmetric matrix by exact symmetric congruence.
/// Pivot strategy: first nonzero diagonal entry; if the remaining diagonal is
/// zero, a nonzero off-diagonal pair (i,j) is turned into a diagonal entry by
/// the substitution x_i <- x_i + x_j. Throws std::invalid_argument if the
/// input is not symmetric.
Signature signature(const Mat& sym);

}  // namespace g2flat
