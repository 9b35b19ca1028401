#include "g2flat/lie_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g2flat {

namespace {

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : n_(dim), labels_(std::move(labels)), c_(dim * (dim ? dim - 1 : 0) / 2, Vec(dim)) {
    if (labels_.size() != n_) throw std::invalid_argument("LieAlgebra: labels/dim mismatch");
}

LieAlgebra::LieAlgebra(std::size_t dim) : LieAlgebra(dim, [dim] {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < dim; ++i) l.push_back("e" + std::to_string(i + 1));
    return l;
}()) {}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
    // i < j
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& value) {
    if (i >= j || j >= n_) throw std::invalid_argument("set_bracket: need i < j < dim");
    if (value.size() != n_) throw std::invalid_argument("set_bracket: length mismatch");
    c_[pair_index(i, j)] = value;
}

Vec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    if (i == j) return Vec(n_);
    if (i < j) return c_[pair_index(i, j)];
    return vec_scale(-1, c_[pair_index(j, i)]);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != n_ || y.size() != n_) throw std::invalid_argument("bracket: length mismatch");
    Vec out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero() || i == j) continue;
            const Vec& b = basis_bracket(i, j);
            const Rat f = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k)
                if (!b[k].is_zero()) out[k] += f * b[k];
        }
    }
    return out;
}

bool LieAlgebra::is_abelian() const {
    for (const auto& v : c_)
        if (!vec_is_zero(v)) return false;
    return true;
}

namespace {

Vec jacobiator(const LieAlgebra& l, std::size_t i, std::size_t j, std::size_t k) {
    Vec r = l.bracket(l.basis_bracket(i, j), [&] {
        Vec e(l.dim());
        e[k] = 1;
        return e;
    }());
    {
        Vec e(l.dim());
        e[i] = 1;
        r = vec_add(r, l.bracket(l.basis_bracket(j, k), e));
    }
    {
        Vec e(l.dim());
        e[j] = 1;
        r = vec_add(r, l.bracket(l.basis_bracket(k, i), e));
    }
    return r;
}

}  // namespace

Rat jacobi_defect(const LieAlgebra& l) {
    Rat worst = 0;
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (const Rat& x : jacobiator(l, i, j, k))
                    if (rat_abs(x) > worst) worst = rat_abs(x);
    return worst;
}

std::optional<std::array<std::size_t, 3>> jacobi_witness(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (!vec_is_zero(jacobiator(l, i, j, k))) return std::array<std::size_t, 3>{i, j, k};
    return std::nullopt;
}

Mat ad_matrix(const LieAlgebra& l, const Vec& x) {
    const std::size_t n = l.dim();
    Mat m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec e(n);
        e[j] = 1;
        Vec col = l.bracket(x, e);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return m;
}

Subspace center(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    // x central iff sum_i x_i [e_i, e_j] = 0 for all j
    Mat sys(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            Vec b = l.basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) sys(j * n + k, i) = b[k];
        }
    return Subspace::span_rows(kernel_basis(sys));
}

Subspace derived_algebra(const LieAlgebra& l) {
    std::vector<Vec> gens;
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) gens.push_back(l.basis_bracket(i, j));
    return Subspace::span(n, gens);
}

std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    std::vector<Subspace> series = {Subspace::full(n)};
    while (true) {
        const Subspace& cur = series.back();
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < n; ++i) {
            Vec e(n);
            e[i] = 1;
            for (std::size_t r = 0; r < cur.basis().rows(); ++r)
                gens.push_back(l.bracket(e, cur.basis().row(r)));
        }
        Subspace next = Subspace::span(n, gens);
        if (next == cur) break;  // stabilized without reaching zero
        series.push_back(next);
        if (next.dim() == 0) break;
    }
    return series;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& l) {
    auto series = lower_central_series(l);
    if (series.back().dim() != 0) return std::nullopt;
    return series.size() - 1;  // C^1..C^{k} nonzero, C^{k+1} = 0 -> class k
}

Mat killing_form(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    std::vector<Mat> ads;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n);
        e[i] = 1;
        ads.push_back(ad_matrix(l, e));
    }
    Mat b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rat tr = 0;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) tr += ads[i](p, q) * ads[j](q, p);
            b(i, j) = tr;
            b(j, i) = tr;
        }
    return b;
}

Vec sym_to_coords(const Mat& s) {
    if (s.rows() != s.cols() || !s.is_symmetric())
        throw std::invalid_argument("sym_to_coords: not symmetric");
    const std::size_t n = s.rows();
    Vec v(n * (n + 1) / 2);
    std::size_t t = 0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q) v[t++] = s(p, q);
    return v;
}

Mat coords_to_sym(const Vec& v, std::size_t n) {
    if (v.size() != n * (n + 1) / 2) throw std::invalid_argument("coords_to_sym: length mismatch");
    Mat s(n, n);
    std::size_t t = 0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q) {
            s(p, q) = v[t];
            s(q, p) = v[t];
            ++t;
        }
    return s;
}

namespace {

std::size_t sym_index(std::size_t p, std::size_t q, std::size_t n) {
    if (p > q) std::swap(p, q);
    return p * n - p * (p - 1) / 2 + (q - p);
}

}  // namespace

Subspace invariant_symmetric_forms(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    const std::size_t nsym = n * (n + 1) / 2;
    // <[e_i,e_j], e_k> + <e_j, [e_i,e_k]> = 0:
    //   sum_t c_ij^t S_{tk} + sum_t c_ik^t S_{jt} = 0
    Mat sys(n * n * n, nsym);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec cij = l.basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec cik = l.basis_bracket(i, k);
                const std::size_t row = (i * n + j) * n + k;
                for (std::size_t t = 0; t < n; ++t) {
                    if (!cij[t].is_zero()) sys(row, sym_index(t, k, n)) += cij[t];
                    if (!cik[t].is_zero()) sys(row, sym_index(j, t, n)) += cik[t];
                }
            }
        }
    return Subspace::span_rows(kernel_basis(sys));
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra, Mat form)
    : algebra_(std::move(algebra)), form_(std::move(form)) {
    const std::size_t n = algebra_.dim();
    if (form_.rows() != n || form_.cols() != n)
        throw std::invalid_argument("MetricLieAlgebra: form shape mismatch");
    if (!form_.is_symmetric()) throw std::invalid_argument("MetricLieAlgebra: form not symmetric");
    if (auto w = jacobi_witness(algebra_)) {
        std::ostringstream os;
        os << "MetricLieAlgebra: Jacobi identity fails at triple (" << algebra_.labels()[(*w)[0]]
           << ", " << algebra_.labels()[(*w)[1]] << ", " << algebra_.labels()[(*w)[2]] << ")";
        throw std::invalid_argument(os.str());
    }
    // invariance <[x,y],z> + <y,[x,z]> = 0 on basis triples
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec cij = algebra_.basis_bracket(i, j);
                Vec cik = algebra_.basis_bracket(i, k);
                Rat r = 0;
                for (std::size_t t = 0; t < n; ++t) r += cij[t] * form_(t, k) + cik[t] * form_(j, t);
                if (!r.is_zero()) {
                    std::ostringstream os;
                    os << "MetricLieAlgebra: invariance fails at triple (" << algebra_.labels()[i]
                       << ", " << algebra_.labels()[j] << ", " << algebra_.labels()[k]
                       << "), residual " << rat_str(r);
                    throw std::invalid_argument(os.str());
                }
            }
    if (rank(form_) != n) throw std::invalid_argument("MetricLieAlgebra: form is degenerate");
}

Rat MetricLieAlgebra::inner(const Vec& x, const Vec& y) const { return dot(x, form_ * y); }

Subspace isotropic_ideal_j(const MetricLieAlgebra& m) {
    Subspace j = intersect(center(m.algebra()), derived_algebra(m.algebra()));
    // guard the theorem-level properties (cannot fail for validated input)
    for (std::size_t r = 0; r < j.basis().rows(); ++r)
        for (std::size_t s = 0; s < j.basis().rows(); ++s)
            if (!m.inner(j.basis().row(r), j.basis().row(s)).is_zero())
                throw std::logic_error("isotropic_ideal_j: not totally isotropic");
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n);
        e[i] = 1;
        for (std::size_t r = 0; r < j.basis().rows(); ++r)
            if (!j.contains(m.bracket(e, j.basis().row(r))))
                throw std::logic_error("isotropic_ideal_j: not an ideal");
    }
    return j;
}

Subspace orthogonal_complement(const MetricLieAlgebra& m, const Subspace& s) {
    const std::size_t n = m.dim();
    if (s.ambient_dim() != n) throw std::invalid_argument("orthogonal_complement: ambient mismatch");
    if (s.dim() == 0) return Subspace::full(n);
    Mat sys(s.dim(), n);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Vec fs = m.form() * s.basis().row(r);
        for (std::size_t t = 0; t < n; ++t) sys(r, t) = fs[t];
    }
    return Subspace::span_rows(kernel_basis(sys));
}

WittDecomposition witt_decomposition(const MetricLieAlgebra& m) {
    const std::size_t n = m.dim();
    Subspace j = isotropic_ideal_j(m);
    const std::size_t d = j.dim();
    Subspace jperp = orthogonal_complement(m, j);

    // w: greedy complement of j inside jperp, taking jperp's canonical basis
    // rows in ascending order
    std::vector<Vec> wrows;
    Subspace grown = j;
    for (std::size_t r = 0; r < jperp.basis().rows(); ++r) {
        Vec v = jperp.basis().row(r);
        if (!grown.contains(v)) {
            wrows.push_back(v);
            grown = sum(grown, Subspace::span(n, {v}));
        }
    }
    Mat w_basis = Mat::from_rows(n, wrows);

    // jstar: coordinate vectors picked greedily so the pairing with j's basis
    // has full rank, then corrected to a dual isotropic complement
    std::vector<Vec> picks;
    {
        std::vector<Vec> prows;
        for (std::size_t t = 0; t < n && picks.size() < d; ++t) {
            Vec pr(d);
            Vec e(n);
            e[t] = 1;
            for (std::size_t s = 0; s < d; ++s) pr[s] = m.inner(e, j.basis().row(s));
            std::vector<Vec> cand = prows;
            cand.push_back(pr);
            if (rank(Mat::from_rows(d, cand)) > prows.size()) {
                prows.push_back(pr);
                picks.push_back(e);
            }
        }
        if (picks.size() != d) throw std::logic_error("witt_decomposition: pairing rank deficit");
    }
    Mat p(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) p(r, s) = m.inner(picks[r], j.basis().row(s));
    auto pinv = inverse(p);
    if (!pinv) throw std::logic_error("witt_decomposition: pairing not invertible");
    std::vector<Vec> duals(d, Vec(n));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s)
            duals[r] = vec_add(duals[r], vec_scale((*pinv)(r, s), picks[s]));

    // remove w-components (w is orthogonal to j, so the dual pairing survives)
    if (w_basis.rows() > 0) {
        const std::size_t dw = w_basis.rows();
        Mat gram(dw, dw);
        for (std::size_t i = 0; i < dw; ++i)
            for (std::size_t k = 0; k < dw; ++k) gram(i, k) = m.inner(w_basis.row(i), w_basis.row(k));
        auto ginv = inverse(gram);
        if (!ginv) throw std::logic_error("witt_decomposition: degenerate w block");
        for (std::size_t r = 0; r < d; ++r) {
            Vec rhs(dw);
            for (std::size_t i = 0; i < dw; ++i) rhs[i] = m.inner(duals[r], w_basis.row(i));
            Vec kappa = *ginv * rhs;
            for (std::size_t i = 0; i < dw; ++i)
                duals[r] = vec_sub(duals[r], vec_scale(kappa[i], w_basis.row(i)));
        }
    }

    // isotropic correction a_r -= 1/2 sum_s <a_r, a_s> z_s
    {
        std::vector<Vec> corrected = duals;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t s = 0; s < d; ++s) {
                Rat g = m.inner(duals[r], duals[s]) / 2;
                if (!g.is_zero())
                    corrected[r] = vec_sub(corrected[r], vec_scale(g, j.basis().row(s)));
            }
        duals = corrected;
    }

    WittDecomposition out{
        Subspace::span(n, duals),
        Subspace::span_rows(w_basis),
        j,
        Mat::from_rows(n, duals),
        w_basis,
        j.basis(),
        Mat(d, d),
    };
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) out.pairing(r, s) = m.inner(duals[r], j.basis().row(s));

    // invariants of the decomposition; violations are construction bugs
    if (out.pairing != Mat::identity(d)) throw std::logic_error("witt: pairing not identity");
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s)
            if (!m.inner(duals[r], duals[s]).is_zero())
                throw std::logic_error("witt: jstar not isotropic");
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t i = 0; i < w_basis.rows(); ++i)
            if (!m.inner(duals[r], w_basis.row(i)).is_zero())
                throw std::logic_error("witt: jstar not orthogonal to w");
    if (sum(sum(out.jstar, out.w), out.j).dim() != n) throw std::logic_error("witt: not a direct sum");
    if (w_basis.rows() > 0) {
        Mat gram(w_basis.rows(), w_basis.rows());
        for (std::size_t i = 0; i < w_basis.rows(); ++i)
            for (std::size_t k = 0; k < w_basis.rows(); ++k)
                gram(i, k) = m.inner(w_basis.row(i), w_basis.row(k));
        Signature sw = signature(gram), sf = m.form_signature();
        if (sw.plus != sf.plus - d || sw.minus != sf.minus - d || sw.zero != 0)
            throw std::logic_error("witt: wrong signature on w");
    }
    return out;
}

MetricLieAlgebra orthogonal_direct_sum(const MetricLieAlgebra& m1, const MetricLieAlgebra& m2) {
    const std::size_t n1 = m1.dim(), n2 = m2.dim(), n = n1 + n2;
    std::vector<std::string> labels = m1.algebra().labels();
    for (auto l : m2.algebra().labels()) {
        while (std::find(labels.begin(), labels.end(), l) != labels.end()) l += "'";
        labels.push_back(l);
    }
    LieAlgebra alg(n, labels);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = i + 1; j < n1; ++j) {
            Vec b = m1.algebra().basis_bracket(i, j), ext(n);
            for (std::size_t k = 0; k < n1; ++k) ext[k] = b[k];
            alg.set_bracket(i, j, ext);
        }
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = i + 1; j < n2; ++j) {
            Vec b = m2.algebra().basis_bracket(i, j), ext(n);
            for (std::size_t k = 0; k < n2; ++k) ext[n1 + k] = b[k];
            alg.set_bracket(n1 + i, n1 + j, ext);
        }
    Mat form(n, n);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) form(i, j) = m1.form()(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) form(n1 + i, n1 + j) = m2.form()(i, j);
    return MetricLieAlgebra(std::move(alg), std::move(form));
}

}  // namespace g2flat
