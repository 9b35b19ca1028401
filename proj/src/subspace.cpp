#include "g2flat/subspace.hpp"

#include <stdexcept>

namespace g2flat {

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, Mat(0, ambient)); }

Subspace Subspace::full(std::size_t ambient) { return Subspace(ambient, Mat::identity(ambient)); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient) throw std::invalid_argument("Subspace::span: vector length != ambient");
    if (vectors.empty()) return zero(ambient);
    return Subspace(ambient, rref(Mat::from_rows(ambient, vectors)));
}

Subspace Subspace::span_rows(const Mat& rows) { return Subspace(rows.cols(), rref(rows)); }

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: length mismatch");
    // reduce v against the rref basis
    Vec w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t c = 0;
        while (c < ambient_ && basis_(i, c).is_zero()) ++c;
        if (c == ambient_) continue;
        if (!w[c].is_zero()) {
            const Rat f = w[c];
            for (std::size_t j = c; j < ambient_; ++j) w[j] -= f * basis_(i, j);
        }
    }
    return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace sum(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < s.basis().rows(); ++i) rows.push_back(s.basis().row(i));
    for (std::size_t i = 0; i < t.basis().rows(); ++i) rows.push_back(t.basis().row(i));
    return Subspace::span(s.ambient_dim(), rows);
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
    const std::size_t n = s.ambient_dim();
    const std::size_t ds = s.dim(), dt = t.dim();
    if (ds == 0 || dt == 0) return Subspace::zero(n);
    // x in S cap T  <=>  x = a S = b T; solve a S - b T = 0 over (a, b).
    Mat sys(n, ds + dt);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < ds; ++i) sys(j, i) = s.basis()(i, j);
        for (std::size_t i = 0; i < dt; ++i) sys(j, ds + i) = -t.basis()(i, j);
    }
    Mat ker = kernel_basis(sys);
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Vec x(n);
        for (std::size_t i = 0; i < ds; ++i)
            if (!ker(r, i).is_zero())
                for (std::size_t j = 0; j < n; ++j) x[j] += ker(r, i) * s.basis()(i, j);
        gens.push_back(std::move(x));
    }
    return Subspace::span(n, gens);
}

}  // namespace g2flat
