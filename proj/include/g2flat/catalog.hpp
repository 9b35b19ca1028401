#pragma once

#include "g2flat/lie_algebra.hpp"

namespace g2flat {

/// The three indecomposable non-abelian nilpotent metric algebras of
/// dimension < 8 (taken as given), plus abelian blocks. Ordered bases as
/// listed in each constructor; only the stated brackets are nonzero.

/// dim 7, basis (a1,a2,w1,w2,w3,z1,z2); eps in {+1,-1}.
/// [a1,a2]=w1, [a1,w1]=w2, [a1,w2]=-eps w3, [a1,w3]=-z2, [a2,w3]=z1,
/// [w1,w2]=eps z1; <a_i,z_j> = delta, <w1,w3> = 1, <w2,w2> = eps.
MetricLieAlgebra make_nI(int eps);

/// dim 6, basis (a1,a2,a3,z1,z2,z3); [a1,a2]=z3, [a2,a3]=z1, [a3,a1]=z2;
/// <a_i,z_j> = delta. Split signature (3,3).
MetricLieAlgebra make_nII();

/// dim 5, basis (a1,a2,w,z1,z2); [a1,a2]=w, [a1,w]=-eps z2, [a2,w]=eps z1;
/// <a_i,z_j> = delta, <w,w> = eps.
MetricLieAlgebra make_nIII(int eps);

/// Zero brackets, diagonal form with p entries +1 then q entries -1.
MetricLieAlgebra make_abelian(std::size_t p, std::size_t q);

struct CatalogEntry {
    std::string name;
    int epsilon;                        // 0 when not applicable
    std::pair<std::size_t, std::size_t> padding;  // abelian summand signature before normalization
    MetricLieAlgebra value;
    std::string disposed_by;  // which obstruction rules the case out ("" = survivor)
};

/// The complete 7-dimensional case list with every entry normalized to
/// signature (4,3): nI(+1), nI(-1), nII + R^1, nIII(+1) + R^2, nIII(-1) + R^2,
/// abelian R^7. Six entries.
std::vector<CatalogEntry> seven_dim_candidates();

}  // namespace g2flat
