#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "g2flat/g2_model.hpp"
#include "g2flat/lie_algebra.hpp"
#include "g2flat/matrix.hpp"
#include "g2flat/poly3.hpp"
#include "g2flat/subspace.hpp"

namespace g2flat {

/// Rank classification of the triangular 6-parameter family: the elements of
/// rank <= 2 are exactly the zero element, family A (parameters u3,u5,u6 with
/// u3*u5 = 0) and family B (parameters u2,u4,u6, both u2,u4 nonzero, with the
/// closure identities u3*u4 = 4*u2^2 and 2*u2*u5 = -u4^2 determining u3,u5).

enum class RankClassKind { Zero, FamilyA, FamilyB, RankAbove2 };

struct RankClass {
    RankClassKind kind;
    Vec params;  // (u3,u5,u6) for FamilyA, (u2,u4,u6) for FamilyB, else empty
    bool operator==(const RankClass&) const = default;
};

/// The 6-parameter vector (0,0,u3,0,u5,u6); requires u3*u5 == 0 so that the
/// matrix has rank <= 2.
Vec familyA_params(const Rat& u3, const Rat& u5, const Rat& u6);

/// The 6-parameter vector (0, u2, 4u2^2/u4, u4, -u4^2/(2u2), u6);
/// requires u2 != 0 and u4 != 0.
Vec familyB_params(const Rat& u2, const Rat& u4, const Rat& u6);

/// Syntactic classification from the parameter identities alone (no rank
/// computation); verify_rank2_classification confirms it against exact ranks.
RankClass classify_rank2(const Vec& u);

struct SweepReport {
    std::int64_t bound = 0;
    std::size_t total = 0;
    std::size_t tag_zero = 0, tag_family_a = 0, tag_family_b = 0, tag_above = 0;
    std::size_t mismatches = 0;
    std::vector<Vec> witnesses;  // first few parameter vectors violating a check
    bool ok() const { return mismatches == 0; }
};

/// Exhaustive cross-check on the integer grid [-bound, bound]^6:
/// tag != RankAbove2  <=>  rank <= 2;  tag == Zero <=> rank == 0 <=> u == 0;
/// tag == FamilyB  =>  rank == 2 exactly.
SweepReport verify_rank2_classification(std::int64_t bound);

struct LocusReport {
    std::size_t minors_total = 0, minors_nonzero = 0;
    bool factor_match = false;     // nonzero 3x3 minors are +-a^2 b, +-a b^2, +-a b c
    bool witness_present = false;  // some minor vanishes exactly on {a b = 0}
    std::size_t grid_points = 0, grid_mismatches = 0;
    bool ok() const { return factor_match && witness_present && grid_mismatches == 0; }
};

/// The A-block with free parameters (a,b,c) = (u3,u5,u6) has rank <= 2
/// exactly on {u3 = 0} union {u5 = 0}: every 3x3 minor carries the factor
/// u3*u5, and one minor is u3^2*u5 up to sign. Cross-checked on a grid.
LocusReport familyA_rank_locus(std::int64_t bound);

struct PairReport {
    bool identity_holds = false;       // u2*v4 - u4*v2 == 0
    bool pencil_all_rank_le2 = false;  // every 3x3 minor of s*B1 + t*B2 vanishes
    bool difference_is_vertical = false;  // v4*B1 - u4*B2 has only the u6 slot
    bool consistent() const { return identity_holds == pencil_all_rank_le2; }
};

/// Two family-B elements (given as parameter triples (u2,u4,u6)) span an
/// all-rank-<=2 pencil exactly when u2*v4 - u4*v2 = 0, in which case their
/// difference (suitably scaled) is a pure-u6 family-A element.
PairReport familyB_pair_identity(const Vec& t1, const Vec& t2);

struct Refutation {
    bool refuted = false;
    Vec witness;                // parameter 6-vector with verified rank >= 3
    std::size_t witness_rank = 0;
    std::string path;           // which branch of the case analysis fired
};

/// Constructive proof that a 3-dimensional subspace of the 6-parameter space
/// contains an element of rank >= 3. `basis` rows span the subspace (must be
/// 3-dimensional). Every returned witness has its rank recomputed exactly;
/// a rank <= 2 witness would throw std::logic_error.
Refutation refute_rank2_3d_subspace(const Mat& basis);

struct SearchReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t spans_sampled = 0;        // 3-dim spans of sampled family elements
    std::size_t spans_refuted = 0;
    std::size_t bracket_closed_spans = 0;  // spans closed under the bracket
    std::size_t pairs_checked = 0;
    std::size_t closing_pairs = 0;         // pencils confirmed all-rank <= 2
    std::size_t pair_identity_failures = 0;
    std::size_t refutation_failures = 0;
    std::vector<Vec> counterexample;  // rows of a surviving span (expected empty)
    bool ok() const { return refutation_failures == 0 && pair_identity_failures == 0; }
};

/// Randomized hunt for a 3-dimensional all-rank-<=2 subspace spanned by
/// family elements (none should exist): every sampled span is refuted
/// constructively, and sampled family-B pairs are checked against the pair
/// identity. Deterministic for a fixed seed; trial t uses a stream derived
/// from (seed, t).
SearchReport random_search_rank2_subalgebra(std::size_t trials, std::uint64_t seed);

struct RankCertificate {
    std::size_t minor_identities_checked = 0;  // vanishing polynomial identities
    bool all_zero = false;
    std::size_t grid_min_rank = 0, grid_max_rank = 0;
    std::size_t grid_points = 0;
    std::size_t degenerate_points = 0;  // grid points where the claimed spanners collapse
    bool image_ok = false;
    bool ok() const {
        return all_zero && grid_min_rank == 2 && grid_max_rank == 2 && image_ok;
    }
};

/// Image claim, span form: im(Q) = span{fixed, Q * v : v in moving} with two
/// spanners in total. Checked symbolically (minors of the augmented matrix)
/// and as exact subspace equality at grid points where the spanners stay
/// 2-dimensional.
struct SpanImage {
    std::optional<Vec> fixed;
    std::vector<Vec> moving;
};

/// Image claim, orthogonal form: for the symbolic element x = a*p1+b*p2+c*p3,
/// im(ad x) = x^perp \cap j with respect to `gram`. Checked symbolically
/// (columns lie in j, and <x, column> vanishes identically) and as exact
/// subspace equality at every grid point.
struct OrthImage {
    Mat gram;
    Mat probes;  // 3 rows
    Subspace j;
};

using ImageClaim = std::variant<SpanImage, OrthImage>;

/// Certifies that every nonzero combination a*P1 + b*P2 + c*P3 of the three
/// pencil matrices has rank exactly two, with the stated image: all 3x3
/// minors vanish identically (rank <= 2 everywhere), the rank equals 2 at
/// every point of the punctured grid [-bound,bound]^3 \ {0}, and the image
/// claim holds.
RankCertificate constant_rank_two_certificate(const std::vector<Mat>& pencil,
                                              const ImageClaim& image,
                                              std::int64_t grid_bound);

struct TwoStepReport {
    bool derived_equals_j = false;
    bool center_is_w_plus_j = false;
    RankCertificate certificate;
    bool ok() const { return derived_equals_j && center_is_w_plus_j && certificate.ok(); }
};

/// For a two-step (class 2) metric algebra: the derived algebra equals the
/// isotropic ideal j, the center is w + j, and every nonzero element x of the
/// dual block j* has rank-2 bracket operator with image x^perp \cap j.
TwoStepReport two_step_lemma_check(const MetricLieAlgebra& m);

enum class ObstructionConclusion { NotEmbeddable, AbelianNoObstruction, Inconclusive };

struct ObstructionReport {
    std::string algebra_name;
    std::size_t ad_image_dim = 0;   // dimension of the span of the pencil in gl(7)
    std::string tested_subspace;    // description of the pencil
    RankCertificate certificate;
    ObstructionConclusion conclusion = ObstructionConclusion::Inconclusive;
    std::string notes;
};

std::string to_string(ObstructionConclusion c);

/// Dispatches on the structure of the candidate (class, Witt block sizes,
/// shape of the bracket-operator span), certifies the relevant constant-rank
/// pencil, and concludes: a 3-dimensional space of rank-2 operators cannot
/// sit inside the triangular family, which contains no 3-dimensional
/// all-rank-<=2 subspace. The conjugation of the operators into the
/// triangular family is the one assumed (geometric) step; all rank statements
/// are verified exactly.
ObstructionReport embedding_obstruction(const MetricLieAlgebra& m, const std::string& name);

}  // namespace g2flat
