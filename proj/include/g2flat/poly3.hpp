#pragma once

#include "g2flat/matrix.hpp"

#include <array>
#include <string>
#include <vector>

namespace g2flat {

/// Polynomial in three variables (a, b, c) of total degree <= 3, dense over
/// the 20 monomials a^i b^j c^k with i+j+k <= 3. Products that would exceed
/// degree 3 throw; this type exists to expand 3x3 minors of matrix pencils
/// with entries of degree <= 1, which stay inside the bound.
class HomCubicPoly3 {
public:
    HomCubicPoly3() = default;

    static HomCubicPoly3 constant(const Rat& c);
    static HomCubicPoly3 variable(std::size_t which);  // 0 -> a, 1 -> b, 2 -> c
    /// c0 + c1*a + c2*b + c3*c
    static HomCubicPoly3 linear(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3);

    /// Coefficient of a^i b^j c^k; i+j+k <= 3 required.
    const Rat& coeff(unsigned i, unsigned j, unsigned k) const;
    Rat& coeff(unsigned i, unsigned j, unsigned k);

    bool is_zero() const;
    /// Total degree; 0 for the zero polynomial by convention here.
    unsigned degree() const;
    bool is_homogeneous(unsigned d) const;

    HomCubicPoly3 operator+(const HomCubicPoly3& o) const;
    HomCubicPoly3 operator-(const HomCubicPoly3& o) const;
    HomCubicPoly3 operator-() const;
    HomCubicPoly3 operator*(const HomCubicPoly3& o) const;  // throws on degree overflow
    HomCubicPoly3 operator*(const Rat& s) const;
    bool operator==(const HomCubicPoly3&) const = default;

    Rat eval(const Rat& a, const Rat& b, const Rat& c) const;
    /// Substitute one variable by a rational constant.
    HomCubicPoly3 substitute(std::size_t which, const Rat& value) const;

    std::string str() const;  // e.g. "4*a^2*b - c^3"

    /// All (i,j,k) with i+j+k = d, lexicographic; the evaluation points
    /// {(i,j,k)} of monomials_of_degree(3) form a determining set for
    /// homogeneous cubics, and the union over d <= 3 for the whole space.
    static std::vector<std::array<unsigned, 3>> monomials_of_degree(unsigned d);
    static std::vector<std::array<unsigned, 3>> monomials_up_to_degree(unsigned d);

private:
    static std::size_t index(unsigned i, unsigned j, unsigned k);
    std::array<Rat, 20> c_{};
};

/// Matrix with polynomial entries (a matrix pencil once entries are linear).
class PolyMat {
public:
    PolyMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    /// a*M1 + b*M2 + c*M3 as a symbolic matrix.
    static PolyMat pencil(const Mat& m1, const Mat& m2, const Mat& m3);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    HomCubicPoly3& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const HomCubicPoly3& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Mat eval(const Rat& a, const Rat& b, const Rat& c) const;
    unsigned max_degree() const;

private:
    std::size_t rows_, cols_;
    std::vector<HomCubicPoly3> a_;
};

/// All k x k minors of m (k in {2,3}), fully expanded; row and column index
/// sets are enumerated lexicographically, minors listed in that order.
/// Throws on entries too deep for the degree-3 bound.
std::vector<HomCubicPoly3> minors(const PolyMat& m, std::size_t k);

}  // namespace g2flat
