#include "g2flat/catalog.hpp"

#include <stdexcept>

namespace g2flat {

namespace {

Vec unit(std::size_t n, std::size_t i, const Rat& c = 1) {
    Vec v(n);
    v[i] = c;
    return v;
}

void check_eps(int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("epsilon must be +1 or -1");
}

}  // namespace

MetricLieAlgebra make_nI(int eps) {
    check_eps(eps);
    // basis indices: a1 0, a2 1, w1 2, w2 3, w3 4, z1 5, z2 6
    LieAlgebra l(7, {"a1", "a2", "w1", "w2", "w3", "z1", "z2"});
    l.set_bracket(0, 1, unit(7, 2));            // [a1,a2] = w1
    l.set_bracket(0, 2, unit(7, 3));            // [a1,w1] = w2
    l.set_bracket(0, 3, unit(7, 4, -eps));      // [a1,w2] = -eps w3
    l.set_bracket(0, 4, unit(7, 6, -1));        // [a1,w3] = -z2
    l.set_bracket(1, 4, unit(7, 5));            // [a2,w3] = z1
    l.set_bracket(2, 3, unit(7, 5, eps));       // [w1,w2] = eps z1
    Mat f(7, 7);
    f(0, 5) = f(5, 0) = 1;  // <a1,z1>
    f(1, 6) = f(6, 1) = 1;  // <a2,z2>
    f(2, 4) = f(4, 2) = 1;  // <w1,w3>
    f(3, 3) = eps;          // <w2,w2>
    return MetricLieAlgebra(std::move(l), std::move(f));
}

MetricLieAlgebra make_nII() {
    // a1 0, a2 1, a3 2, z1 3, z2 4, z3 5
    LieAlgebra l(6, {"a1", "a2", "a3", "z1", "z2", "z3"});
    l.set_bracket(0, 1, unit(6, 5));       // [a1,a2] = z3
    l.set_bracket(1, 2, unit(6, 3));       // [a2,a3] = z1
    l.set_bracket(0, 2, unit(6, 4, -1));   // [a1,a3] = -z2, i.e. [a3,a1] = z2
    Mat f(6, 6);
    for (std::size_t i = 0; i < 3; ++i) f(i, 3 + i) = f(3 + i, i) = 1;
    return MetricLieAlgebra(std::move(l), std::move(f));
}

MetricLieAlgebra make_nIII(int eps) {
    check_eps(eps);
    // a1 0, a2 1, w 2, z1 3, z2 4
    LieAlgebra l(5, {"a1", "a2", "w", "z1", "z2"});
    l.set_bracket(0, 1, unit(5, 2));           // [a1,a2] = w
    l.set_bracket(0, 2, unit(5, 4, -eps));     // [a1,w] = -eps z2
    l.set_bracket(1, 2, unit(5, 3, eps));      // [a2,w] = eps z1
    Mat f(5, 5);
    f(0, 3) = f(3, 0) = 1;
    f(1, 4) = f(4, 1) = 1;
    f(2, 2) = eps;
    return MetricLieAlgebra(std::move(l), std::move(f));
}

MetricLieAlgebra make_abelian(std::size_t p, std::size_t q) {
    if (p + q == 0) throw std::invalid_argument("make_abelian: need p + q >= 1");
    const std::size_t n = p + q;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
    LieAlgebra l(n, labels);
    Mat f(n, n);
    for (std::size_t i = 0; i < n; ++i) f(i, i) = i < p ? 1 : -1;
    return MetricLieAlgebra(std::move(l), std::move(f));
}

std::vector<CatalogEntry> seven_dim_candidates() {
    auto normalize = [](MetricLieAlgebra m) {
        // global sign flip if needed so the signature is exactly (4,3)
        Signature s = m.form_signature();
        if (s.plus == 4 && s.minus == 3) return m;
        MetricLieAlgebra f = m.flipped();
        if (f.form_signature() == Signature{4, 3, 0}) return f;
        throw std::logic_error("seven_dim_candidates: entry cannot reach signature (4,3)");
    };
    std::vector<CatalogEntry> out;
    out.push_back({"nI(+1)", 1, {0, 0}, normalize(make_nI(1)),
                   "constant-rank-two test space ad(w-block)"});
    out.push_back({"nI(-1)", -1, {0, 0}, normalize(make_nI(-1)),
                   "constant-rank-two test space ad(w-block)"});
    out.push_back({"nII+R1", 0, {0, 1},
                   normalize(orthogonal_direct_sum(make_nII(), make_abelian(0, 1))),
                   "two-step rank-two test space ad(jstar)"});
    out.push_back({"nIII(+1)+R2", 1, {1, 1},
                   normalize(orthogonal_direct_sum(make_nIII(1), make_abelian(1, 1))),
                   "constant-rank-two test space ad(n)"});
    out.push_back({"nIII(-1)+R2", -1, {2, 0},
                   normalize(orthogonal_direct_sum(make_nIII(-1), make_abelian(2, 0))),
                   "constant-rank-two test space ad(n)"});
    out.push_back({"abelian", 0, {4, 3}, make_abelian(4, 3), ""});
    return out;
}

}  // namespace g2flat
