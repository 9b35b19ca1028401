#include "doctest.h"

#include "g2flat/catalog.hpp"
#include "g2flat/lie_algebra.hpp"
#include "g2flat/rng.hpp"

using namespace g2flat;

namespace {

Vec e(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

// 2-dim solvable algebra [e1,e2] = e2: the standard non-nilpotent control.
LieAlgebra solvable2() {
    LieAlgebra l(2);
    l.set_bracket(0, 1, e(2, 1));
    return l;
}

}  // namespace

TEST_CASE("bracket evaluation") {
    auto nII = make_nII();
    CHECK(nII.bracket(e(6, 0), e(6, 1)) == e(6, 5));   // [a1,a2] = z3
    CHECK(nII.bracket(e(6, 1), e(6, 0)) == vec_scale(-1, e(6, 5)));
    Vec x = {Rat(1), Rat(2), Rat(-1), Rat(0), Rat(3), Rat(1)};
    CHECK(vec_is_zero(nII.bracket(x, x)));
    auto nI = make_nI(1);
    CHECK(nI.bracket(e(7, 2), e(7, 3)) == e(7, 5));    // [w1,w2] = z1 for eps = +1
    CHECK(make_nI(-1).bracket(e(7, 2), e(7, 3)) == vec_scale(-1, e(7, 5)));
}

TEST_CASE("jacobi defect and witness") {
    CHECK(jacobi_defect(make_abelian(4, 3).algebra()) == Rat(0));
    CHECK(jacobi_defect(make_nI(1).algebra()) == Rat(0));
    CHECK(jacobi_defect(make_nI(-1).algebra()) == Rat(0));
    CHECK(!jacobi_witness(make_nIII(-1).algebra()).has_value());

    // perturb: add [a1,z1] = z2 on top of the 6-dim double-layer table
    LieAlgebra bad(6, {"a1", "a2", "a3", "z1", "z2", "z3"});
    bad.set_bracket(0, 1, e(6, 5));
    bad.set_bracket(1, 2, e(6, 3));
    bad.set_bracket(0, 2, vec_scale(-1, e(6, 4)));
    bad.set_bracket(0, 3, e(6, 4));  // [a1,z1] = z2 breaks Jacobi
    CHECK(jacobi_defect(bad) > 0);
    auto w = jacobi_witness(bad);
    REQUIRE(w.has_value());
    // witness involves z1 = index 3 bracketing against the a-block
    CHECK((*w)[2] >= 2);
}

TEST_CASE("ad matrices") {
    auto nII = make_nII();
    CHECK(ad_matrix(nII.algebra(), e(6, 3)).is_zero());  // z1 central
    CHECK(rank(ad_matrix(nII.algebra(), e(6, 0))) == 2);
    auto nIII = make_nIII(1);
    Mat ad_a1 = ad_matrix(nIII.algebra(), e(5, 0));
    CHECK(ad_a1 * e(5, 1) == e(5, 2));                    // a2 -> w
    CHECK(ad_a1 * e(5, 2) == vec_scale(-1, e(5, 4)));     // w -> -z2
    CHECK(vec_is_zero(ad_a1 * e(5, 0)));
    // linearity
    Vec x = vec_add(e(5, 0), vec_scale(3, e(5, 1)));
    CHECK(ad_matrix(nIII.algebra(), x) ==
          ad_a1 + ad_matrix(nIII.algebra(), e(5, 1)) * Rat(3));
}

TEST_CASE("center, derived algebra, series, class") {
    auto ab = make_abelian(4, 3);
    CHECK(center(ab.algebra()) == Subspace::full(7));
    CHECK(derived_algebra(ab.algebra()).dim() == 0);
    CHECK(nilpotency_class(ab.algebra()) == 1);

    auto nII = make_nII();
    Subspace zspan = Subspace::span(6, {e(6, 3), e(6, 4), e(6, 5)});
    CHECK(center(nII.algebra()) == zspan);
    CHECK(derived_algebra(nII.algebra()) == zspan);
    CHECK(nilpotency_class(nII.algebra()) == 2);

    auto nIII = make_nIII(1);
    auto series = lower_central_series(nIII.algebra());
    std::vector<std::size_t> dims;
    for (const auto& s : series) dims.push_back(s.dim());
    CHECK(dims == std::vector<std::size_t>{5, 3, 2, 0});
    CHECK(nilpotency_class(nIII.algebra()) == 3);

    // the 7-dim three-layer algebra: iterated a1-brackets stretch the series
    // to five nonzero terms; the computed class is 5 and is pinned here
    auto nI = make_nI(1);
    auto seriesI = lower_central_series(nI.algebra());
    dims.clear();
    for (const auto& s : seriesI) dims.push_back(s.dim());
    CHECK(dims == std::vector<std::size_t>{7, 5, 4, 3, 2, 0});
    CHECK(nilpotency_class(nI.algebra()) == 5);

    CHECK(!nilpotency_class(solvable2()).has_value());
}

TEST_CASE("killing form") {
    CHECK(killing_form(make_abelian(3, 3).algebra()).is_zero());
    CHECK(killing_form(make_nI(1).algebra()).is_zero());
    Mat b = killing_form(solvable2());
    CHECK(b(0, 0) == Rat(1));
    CHECK(b(0, 1) == Rat(0));
    CHECK(b(1, 1) == Rat(0));
}

TEST_CASE("invariant symmetric forms") {
    auto ab3 = make_abelian(2, 1);
    CHECK(invariant_symmetric_forms(ab3.algebra()).dim() == 6);

    auto nII = make_nII();
    Subspace forms = invariant_symmetric_forms(nII.algebra());
    CHECK(forms.contains(sym_to_coords(nII.form())));

    // Heisenberg: every invariant form kills the center, so none is
    // nondegenerate
    LieAlgebra heis(3, {"x", "y", "z"});
    heis.set_bracket(0, 1, e(3, 2));
    Subspace hforms = invariant_symmetric_forms(heis);
    CHECK(hforms.dim() == 3);
    for (std::size_t r = 0; r < hforms.dim(); ++r) {
        Mat f = coords_to_sym(hforms.basis().row(r), 3);
        for (std::size_t t = 0; t < 3; ++t) {
            CHECK(f(2, t) == Rat(0));
            CHECK(f(t, 2) == Rat(0));
        }
    }
}

TEST_CASE("metric validation rejects bad input") {
    // invariance failure: nII brackets with an identity metric
    CHECK_THROWS_WITH_AS(MetricLieAlgebra(make_nII().algebra(), Mat::identity(6)),
                         doctest::Contains("invariance fails"), std::invalid_argument);
    // degenerate form on an abelian algebra
    CHECK_THROWS_WITH_AS(MetricLieAlgebra(LieAlgebra(3), Mat(3, 3)),
                         doctest::Contains("degenerate"), std::invalid_argument);
    // Jacobi failure: the cyclic sum at (e1,e2,e3) comes out to -e2
    LieAlgebra bad(3);
    bad.set_bracket(0, 1, e(3, 2));
    bad.set_bracket(0, 2, e(3, 1));
    bad.set_bracket(1, 2, e(3, 2));
    CHECK_THROWS_WITH_AS(MetricLieAlgebra(bad, Mat::identity(3)),
                         doctest::Contains("Jacobi"), std::invalid_argument);
    // non-symmetric form
    Mat ns = Mat::identity(3);
    ns(0, 1) = 1;
    CHECK_THROWS_AS(MetricLieAlgebra(LieAlgebra(3), ns), std::invalid_argument);
}

TEST_CASE("isotropic ideal and orthogonal complements") {
    CHECK(isotropic_ideal_j(make_abelian(4, 3)).dim() == 0);

    auto nI = make_nI(1);
    CHECK(isotropic_ideal_j(nI) == Subspace::span(7, {e(7, 5), e(7, 6)}));
    Subspace jperp = orthogonal_complement(nI, isotropic_ideal_j(nI));
    CHECK(jperp == Subspace::span(7, {e(7, 2), e(7, 3), e(7, 4), e(7, 5), e(7, 6)}));
    CHECK(jperp.contains(derived_algebra(nI.algebra())));
    CHECK(jperp.contains(center(nI.algebra())));

    auto nII = make_nII();
    Subspace j2 = isotropic_ideal_j(nII);
    CHECK(j2 == Subspace::span(6, {e(6, 3), e(6, 4), e(6, 5)}));
    CHECK(orthogonal_complement(nII, j2) == j2);

    CHECK(orthogonal_complement(nII, Subspace::zero(6)) == Subspace::full(6));
    // dim complement = dim - dim S for the nondegenerate form
    CHECK(orthogonal_complement(nII, Subspace::span(6, {e(6, 0), e(6, 3)})).dim() == 4);
}

TEST_CASE("abelian iff trivial isotropic ideal, across the catalog") {
    std::vector<MetricLieAlgebra> all = {make_nI(1),  make_nI(-1),     make_nII(),
                                         make_nIII(1), make_nIII(-1),  make_abelian(4, 3),
                                         make_abelian(1, 1)};
    for (const auto& m : all)
        CHECK(m.algebra().is_abelian() == (isotropic_ideal_j(m).dim() == 0));
}

TEST_CASE("witt decomposition") {
    auto nI = make_nI(1);
    auto wd = witt_decomposition(nI);
    CHECK(wd.j == Subspace::span(7, {e(7, 5), e(7, 6)}));
    CHECK(wd.jstar == Subspace::span(7, {e(7, 0), e(7, 1)}));
    CHECK(wd.w == Subspace::span(7, {e(7, 2), e(7, 3), e(7, 4)}));
    CHECK(wd.pairing == Mat::identity(2));
    CHECK(wd.w.dim() == 3);

    auto nII = make_nII();
    CHECK(witt_decomposition(nII).w.dim() == 0);

    auto nIII = make_nIII(1);
    auto wd3 = witt_decomposition(nIII);
    CHECK(wd3.w.dim() == 1);
    Mat gram(1, 1);
    gram(0, 0) = nIII.inner(wd3.w_basis.row(0), wd3.w_basis.row(0));
    CHECK(signature(gram) == Signature{1, 0, 0});

    // structural invariants on all catalog entries
    for (const auto& m :
         {make_nI(1), make_nI(-1), make_nII(), make_nIII(1), make_nIII(-1)}) {
        auto d = witt_decomposition(m);
        CHECK(sum(sum(d.jstar, d.w), d.j) == Subspace::full(m.dim()));
        CHECK(d.jstar.dim() == d.j.dim());
        CHECK(intersect(d.jstar, d.j).dim() == 0);
    }
}

TEST_CASE("orthogonal direct sums") {
    auto s1 = orthogonal_direct_sum(make_nII(), make_abelian(0, 1));
    CHECK(s1.dim() == 7);
    CHECK(s1.form_signature() == Signature{3, 4, 0});
    CHECK(nilpotency_class(s1.algebra()) == 2);

    auto s2 = orthogonal_direct_sum(make_nIII(1), make_abelian(1, 1));
    CHECK(s2.dim() == 7);
    CHECK(s2.form_signature() == Signature{4, 3, 0});

    auto s3 = orthogonal_direct_sum(make_abelian(1, 0), make_abelian(1, 1));
    CHECK(s3.algebra().is_abelian());
    // cross brackets vanish
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 6; j < 7; ++j) CHECK(vec_is_zero(s1.bracket(e(7, i), e(7, j))));
    // duplicate labels get uniquified
    auto s4 = orthogonal_direct_sum(make_abelian(1, 0), make_abelian(1, 0));
    CHECK(s4.algebra().labels()[0] != s4.algebra().labels()[1]);
}

TEST_CASE("catalog integrity") {
    CHECK(make_nI(1).form_signature() == Signature{4, 3, 0});
    CHECK(make_nI(-1).form_signature() == Signature{3, 4, 0});
    CHECK(make_nII().form_signature() == Signature{3, 3, 0});
    CHECK(make_nIII(1).form_signature() == Signature{3, 2, 0});
    CHECK(make_nIII(-1).form_signature() == Signature{2, 3, 0});
    CHECK(make_abelian(4, 3).form_signature() == Signature{4, 3, 0});
    CHECK_THROWS_AS(make_nI(0), std::invalid_argument);
    CHECK_THROWS_AS(make_abelian(0, 0), std::invalid_argument);

    // (dim j, dim w) per entry
    auto dims = [](const MetricLieAlgebra& m) {
        auto d = witt_decomposition(m);
        return std::pair<std::size_t, std::size_t>{d.j.dim(), d.w.dim()};
    };
    CHECK(dims(make_nI(1)) == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(dims(make_nII()) == std::pair<std::size_t, std::size_t>{3, 0});
    CHECK(dims(make_nIII(-1)) == std::pair<std::size_t, std::size_t>{2, 1});
}

TEST_CASE("seven-dimensional candidate list") {
    auto cands = seven_dim_candidates();
    REQUIRE(cands.size() == 6);
    std::size_t abelian_count = 0;
    for (const auto& c : cands) {
        CHECK(c.value.dim() == 7);
        CHECK(c.value.form_signature() == Signature{4, 3, 0});
        if (c.value.algebra().is_abelian()) {
            ++abelian_count;
            CHECK(c.disposed_by.empty());
        } else {
            CHECK(!c.disposed_by.empty());
        }
    }
    CHECK(abelian_count == 1);
    // the two-step entry
    CHECK(nilpotency_class(cands[2].value.algebra()) == 2);
}
