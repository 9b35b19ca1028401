#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2flat/lie_algebra.hpp"
#include "g2flat/rank_obstruction.hpp"

namespace g2flat {

/// Curvature of the bi-invariant connection: R(x,y)z = (1/4) [[x,y],z].
Vec curvature(const MetricLieAlgebra& m, const Vec& x, const Vec& y, const Vec& z);

/// Ricci tensor Ric(y,z) = tr(x -> R(x,y)z), computed entrywise from nested
/// brackets (independently of the Killing form; they agree up to the factor
/// 1/4, which geometry_report checks).
Mat ricci(const MetricLieAlgebra& m);

/// Span of the bracket operators of the derived algebra inside gl(n): the
/// holonomy algebra of the bi-invariant connection. Closed under commutators
/// since [ad u, ad v] = ad [u,v].
Subspace holonomy_algebra(const MetricLieAlgebra& m);

struct GeometryReport {
    Mat ricci;
    bool ricci_is_quarter_killing = false;
    bool ricci_flat = false;
    std::size_t holonomy_dim = 0;
    bool curvature_vanishes = false;  // checked on all basis triples
    bool flat = false;                // holonomy_dim == 0, cross-checked against curvature
};

GeometryReport geometry_report(const MetricLieAlgebra& m);

/// True iff the algebra admits a nondegenerate invariant symmetric bilinear
/// form. Decided exactly: a nonzero value of the determinant polynomial on
/// the solution space is a witness; exhaustion of a determining grid proves
/// the determinant vanishes identically. Throws std::logic_error if the
/// solution space is too large to scan (never the case in dimension <= 4
/// for non-abelian algebras).
bool admits_nondegenerate_invariant_form(const LieAlgebra& l);

struct LowDimReport {
    std::size_t dim = 0;
    bool exhaustive = false;
    std::size_t structures_examined = 0;
    std::size_t jacobi_passed = 0;
    std::size_t nilpotent = 0;
    std::size_t nonabelian_nilpotent = 0;
    std::size_t with_nondegenerate_form = 0;
    std::size_t nonabelian_survivors = 0;  // nonabelian + nilpotent + nondeg form
    std::vector<Vec> survivor_witnesses;   // flattened structure constants
    bool ok() const { return nonabelian_survivors == 0; }
};

/// In dimension 3 (exhaustive over structure constants in {-1,0,1}) and
/// dimension 4 (seeded sparse random brackets with entries in [-2,2]): every
/// nilpotent algebra carrying a nondegenerate invariant symmetric form is
/// abelian. For dim == 3 the sampling arguments are ignored.
LowDimReport verify_lowdim_abelian_lemma(std::size_t dim, std::size_t samples,
                                         std::uint64_t seed);

struct CaseOutcome {
    std::string name;
    ObstructionConclusion conclusion = ObstructionConclusion::Inconclusive;
    std::size_t holonomy_dim = 0;
    bool flat = false;
    std::optional<std::size_t> nilpotency_class_computed;
};

struct TheoremVerdict {
    std::vector<CaseOutcome> cases;
    std::size_t obstructed = 0;
    std::size_t survivors = 0;
    std::string conclusion;  // "flat torus" exactly when the lone survivor is abelian and flat
    std::vector<std::string> notes;
    bool ok() const { return conclusion == "flat torus"; }
};

/// Runs the obstruction over the full 7-dimensional candidate list and the
/// geometry of each case; the verdict is "flat torus" exactly when the five
/// non-abelian candidates are ruled out and the abelian survivor is flat.
TheoremVerdict verify_main_theorem();

}  // namespace g2flat
