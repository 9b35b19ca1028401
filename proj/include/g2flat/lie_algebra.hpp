#pragma once

#include "g2flat/subspace.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace g2flat {

/// Lie algebra given by structure constants on a fixed basis. Only the pairs
/// i < j are stored, so antisymmetry holds by construction; the Jacobi
/// identity is a property to be checked (jacobi_defect), not an input
/// guarantee — fuzzed tables go through the same type.
class LieAlgebra {
public:
    LieAlgebra(std::size_t dim, std::vector<std::string> labels);
    explicit LieAlgebra(std::size_t dim);

    std::size_t dim() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Sets [e_i, e_j] = value for i < j (throws otherwise).
    void set_bracket(std::size_t i, std::size_t j, const Vec& value);
    /// [e_i, e_j] for any i, j, with the sign handled.
    Vec basis_bracket(std::size_t i, std::size_t j) const;
    Vec bracket(const Vec& x, const Vec& y) const;

    bool is_abelian() const;
    bool operator==(const LieAlgebra&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Vec> c_;  // c_[pair_index(i,j)] = [e_i, e_j], i < j
    std::size_t pair_index(std::size_t i, std::size_t j) const;
};

/// Max over basis triples of the max-abs coordinate of
/// [[x,y],z] + [[y,z],x] + [[z,x],y]; zero iff the table is a Lie algebra.
Rat jacobi_defect(const LieAlgebra& l);
/// A triple with nonzero Jacobi residual, if any.
std::optional<std::array<std::size_t, 3>> jacobi_witness(const LieAlgebra& l);

Mat ad_matrix(const LieAlgebra& l, const Vec& x);

Subspace center(const LieAlgebra& l);
Subspace derived_algebra(const LieAlgebra& l);

/// C^1 = L, C^[k+1] = [L, C^k], listed until the series stabilizes; for a
/// nilpotent algebra the last entry is the zero subspace, otherwise the
/// nonzero ideal the series is stuck at.
std::vector<Subspace> lower_central_series(const LieAlgebra& l);

/// Largest k with C^k != 0; nullopt when the series does not reach zero
/// ("not nilpotent" is a result, not an error).
std::optional<std::size_t> nilpotency_class(const LieAlgebra& l);

/// B(x,y) = tr(ad x . ad y) on the basis.
Mat killing_form(const LieAlgebra& l);

/// Coordinates for symmetric n x n matrices: entries (p,q), p <= q, ordered
/// lexicographically; dimension n(n+1)/2.
Vec sym_to_coords(const Mat& s);
Mat coords_to_sym(const Vec& v, std::size_t n);

/// Solution space of <[x,y],z> + <y,[x,z]> = 0 over all basis triples,
/// inside the n(n+1)/2-dimensional space of symmetric forms.
Subspace invariant_symmetric_forms(const LieAlgebra& l);

/// Lie algebra with a validated invariant scalar product. Construction
/// checks symmetry, exact Jacobi, exact invariance, and nondegeneracy, and
/// throws std::invalid_argument naming the failing triple/pair otherwise.
class MetricLieAlgebra {
public:
    MetricLieAlgebra(LieAlgebra algebra, Mat form);

    const LieAlgebra& algebra() const { return algebra_; }
    const Mat& form() const { return form_; }
    std::size_t dim() const { return algebra_.dim(); }
    Vec bracket(const Vec& x, const Vec& y) const { return algebra_.bracket(x, y); }
    Rat inner(const Vec& x, const Vec& y) const;
    Signature form_signature() const { return signature(form_); }

    /// Same algebra, form negated; swaps (p,q) and preserves invariance.
    MetricLieAlgebra flipped() const { return MetricLieAlgebra(algebra_, -form_); }

    bool operator==(const MetricLieAlgebra&) const = default;

private:
    LieAlgebra algebra_;
    Mat form_;
};

/// The totally isotropic ideal center ∩ derived; its vanishing characterizes
/// abelian metric algebras. Isotropy and the ideal property are re-verified
/// and a violation throws std::logic_error (cannot happen for validated
/// inputs — this guards the construction itself).
Subspace isotropic_ideal_j(const MetricLieAlgebra& m);

Subspace orthogonal_complement(const MetricLieAlgebra& m, const Subspace& s);

/// Splitting jstar ⊕ w ⊕ j with j, jstar isotropic and dually paired, w
/// orthogonal to both and nondegenerate. Besides the canonical subspaces it
/// carries the distinguished bases the deterministic construction produced;
/// with respect to those, pairing(jstar_i, j_k) is exactly the identity.
struct WittDecomposition {
    Subspace jstar, w, j;
    Mat jstar_basis, w_basis, j_basis;  // rows are basis vectors
    Mat pairing;                        // identity after normalization
};

WittDecomposition witt_decomposition(const MetricLieAlgebra& m);

/// Block sums: brackets vanish across summands, form is block-diagonal,
/// signature adds. Duplicate labels from the right summand get a suffix.
MetricLieAlgebra orthogonal_direct_sum(const MetricLieAlgebra& m1, const MetricLieAlgebra& m2);

}  // namespace g2flat
