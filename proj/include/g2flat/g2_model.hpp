#pragma once

#include <cstddef>
#include <optional>

#include "g2flat/lie_algebra.hpp"
#include "g2flat/matrix.hpp"
#include "g2flat/subspace.hpp"

namespace g2flat {

inline constexpr std::size_t g2_param_count = 14;
inline constexpr std::size_t m_param_count = 6;

/// 7x7 matrix of the 14-parameter split exceptional family; u.size() == 14.
/// The family is closed under commutator; see structure_constants_of_g2.
Mat g2_to_matrix(const Vec& u);

/// Strictly lower-triangular 6-parameter subfamily: the first six parameters
/// of g2_to_matrix with the rest zero. u.size() == 6.
Mat m_to_matrix(const Vec& u);

/// Spans of the generator matrices inside gl(7), flattened row-major to R^49.
Subspace g2_span();
Subspace m_span();

/// Coordinates of x in the generator basis, when x lies in the span.
std::optional<Vec> membership_in_g2(const Mat& x);
std::optional<Vec> membership_in_m(const Mat& x);

/// Structure constants of the 14-dim family in the basis G1..G14.
/// Throws std::logic_error naming the offending pair if some commutator
/// escapes the span.
LieAlgebra structure_constants_of_g2();

/// Structure constants of the 6-dim triangular subfamily, basis M1..M6.
LieAlgebra m_structure();

/// The invariant symmetric bilinear form S (unique up to scale: the solution
/// space of G^T S + S G = 0 over all generators is asserted 1-dimensional),
/// scaled to coprime integers and signed so that the signature is (4,3).
Mat invariant_bilinear_form();

/// Alternating trilinear form on R^7, stored as the 35 coefficients on
/// basis triples i<j<k in lexicographic order.
struct ThreeForm {
    Vec coeffs;  // size 35

    static std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k);
    static ThreeForm from_coords(const Vec& c35);
    /// e^i ^ e^j ^ e^k for i<j<k.
    static ThreeForm basis_form(std::size_t i, std::size_t j, std::size_t k);

    /// Signed coefficient for arbitrary index order; 0 on repeats.
    Rat value(std::size_t i, std::size_t j, std::size_t k) const;
    Rat eval(const Vec& a, const Vec& b, const Vec& c) const;
    bool operator==(const ThreeForm&) const = default;
};

/// Solution space of the infinitesimal invariance condition
///   phi(Gx,y,z) + phi(x,Gy,z) + phi(x,y,Gz) = 0  for all 14 generators,
/// inside the 35-dim space of three-forms. Asserted 1-dimensional.
Subspace invariant_three_forms();

/// The canonical representative: coprime integer coefficients, first nonzero
/// coefficient (lexicographic triple order) positive.
ThreeForm invariant_three_form();

/// Lie-algebra stabilizer of phi in gl(7): all X with
/// phi(Xx,y,z) + phi(x,Xy,z) + phi(x,y,Xz) = 0, as a subspace of R^49.
Subspace stabilizer_in_gl(const ThreeForm& phi);

}  // namespace g2flat
