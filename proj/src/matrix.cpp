#include "g2flat/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace g2flat {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows: need at least one row");
    return from_rows(rows.front().size(), rows);
}

Mat Mat::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+: shape mismatch");
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat-: shape mismatch");
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Mat Mat::operator-() const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = (*this)(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& bkj = o(k, j);
                if (!bkj.is_zero()) r(i, j) += aik * bkj;
            }
        }
    return r;
}

Mat Mat::operator*(const Rat& s) const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

Mat Mat::transposed() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Vec Mat::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Mat::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

Vec operator*(const Mat& m, const Vec& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("Mat*Vec: length mismatch");
    Vec y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !x[j].is_zero()) y[i] += m(i, j) * x[j];
    return y;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rat& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vec flatten(const Mat& m) {
    Vec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
}

Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("unflatten: length mismatch");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
    return m;
}

namespace {

// Forward elimination in place; returns pivot (row, col) pairs.
std::vector<std::pair<std::size_t, std::size_t>> eliminate(Mat& m) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) m.swap_rows(p, r);
        const Rat inv_pivot = Rat(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv_pivot;
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            const Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Mat& m) {
    Mat w = m;
    return eliminate(w).size();
}

Mat rref(const Mat& m) {
    Mat w = m;
    auto pivots = eliminate(w);
    // back substitution
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [r, c] = *it;
        for (std::size_t i = 0; i < r; ++i) {
            if (w(i, c).is_zero()) continue;
            const Rat f = w(i, c);
            for (std::size_t j = c; j < w.cols(); ++j) w(i, j) -= f * w(r, j);
        }
    }
    Mat out(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = w(i, j);
    return out;
}

Mat kernel_basis(const Mat& m) {
    Mat r = rref(m);
    std::vector<std::size_t> pivot_col(r.rows());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t c = 0;
        while (c < r.cols() && r(i, c).is_zero()) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.rows(); ++i) v[pivot_col[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Mat(0, m.cols());
    return rref(Mat::from_rows(m.cols(), basis));
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: length mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Mat r = rref(aug);
    Vec x(m.cols());
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t c = 0;
        while (c < r.cols() && r(i, c).is_zero()) ++c;
        if (c == m.cols()) return std::nullopt;  // 0 = 1 row
        x[c] = r(i, m.cols());
    }
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Mat r = rref(aug);
    if (r.rows() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (r(i, j) != (i == j ? Rat(1) : Rat(0))) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

Rat det(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    Mat w = m;
    Rat d = 1;
    for (std::size_t c = 0; c < w.cols(); ++c) {
        std::size_t p = c;
        while (p < w.rows() && w(p, c).is_zero()) ++p;
        if (p == w.rows()) return 0;
        if (p != c) {
            w.swap_rows(p, c);
            d = -d;
        }
        d *= w(c, c);
        const Rat inv_pivot = Rat(1) / w(c, c);
        for (std::size_t i = c + 1; i < w.rows(); ++i) {
            if (w(i, c).is_zero()) continue;
            const Rat f = w(i, c) * inv_pivot;
            for (std::size_t j = c; j < w.cols(); ++j) w(i, j) -= f * w(c, j);
        }
    }
    return d;
}

Signature signature(const Mat& sym) {
    if (!sym.is_symmetric()) throw std::invalid_argument("signature: matrix not symmetric");
    Mat w = sym;
    const std::size_t n = w.rows();
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        // first nonzero diagonal entry at or after k
        std::size_t p = k;
        while (p < n && w(p, p).is_zero()) ++p;
        if (p == n) {
            // all remaining diagonal zero: look for an off-diagonal entry
            std::size_t oi = n, oj = n;
            for (std::size_t i = k; i < n && oi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!w(i, j).is_zero()) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi == n) {
                sig.zero += n - k;
                break;
            }
            // x_oi <- x_oi + x_oj creates diagonal entry 2*w(oi,oj)
            for (std::size_t t = 0; t < n; ++t) w(oi, t) += w(oj, t);
            for (std::size_t t = 0; t < n; ++t) w(t, oi) += w(t, oj);
            p = oi;
        }
        if (p != k) {
            w.swap_rows(p, k);
            for (std::size_t t = 0; t < n; ++t) std::swap(w(t, p), w(t, k));
        }
        const Rat d = w(k, k);
        if (d > 0)
            ++sig.plus;
        else
            ++sig.minus;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w(i, k).is_zero()) continue;
            const Rat f = w(i, k) / d;
            for (std::size_t t = 0; t < n; ++t) w(i, t) -= f * w(k, t);
            for (std::size_t t = 0; t < n; ++t) w(t, i) -= f * w(t, k);
        }
    }
    return sig;
}

}  // namespace g2flat
