#include "g2flat/poly3.hpp"

#include <sstream>
#include <stdexcept>

namespace g2flat {

std::size_t HomCubicPoly3::index(unsigned i, unsigned j, unsigned k) {
    if (i + j + k > 3) throw std::invalid_argument("HomCubicPoly3: degree overflow");
    // monomials ordered by total degree, then lexicographically in (i,j,k)
    static const auto table = [] {
        std::array<std::array<unsigned, 3>, 20> t{};
        std::size_t n = 0;
        for (unsigned d = 0; d <= 3; ++d)
            for (unsigned a = d; a + 1 > 0; --a)
                for (unsigned b = d - a; b + 1 > 0; --b) t[n++] = {a, b, d - a - b};
        return t;
    }();
    for (std::size_t t = 0; t < 20; ++t)
        if (table[t][0] == i && table[t][1] == j && table[t][2] == k) return t;
    throw std::logic_error("HomCubicPoly3: bad monomial index");
}

HomCubicPoly3 HomCubicPoly3::constant(const Rat& c) {
    HomCubicPoly3 p;
    p.coeff(0, 0, 0) = c;
    return p;
}

HomCubicPoly3 HomCubicPoly3::variable(std::size_t which) {
    HomCubicPoly3 p;
    if (which > 2) throw std::invalid_argument("HomCubicPoly3::variable: index > 2");
    p.coeff(which == 0 ? 1 : 0, which == 1 ? 1 : 0, which == 2 ? 1 : 0) = 1;
    return p;
}

HomCubicPoly3 HomCubicPoly3::linear(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3) {
    HomCubicPoly3 p;
    p.coeff(0, 0, 0) = c0;
    p.coeff(1, 0, 0) = c1;
    p.coeff(0, 1, 0) = c2;
    p.coeff(0, 0, 1) = c3;
    return p;
}

const Rat& HomCubicPoly3::coeff(unsigned i, unsigned j, unsigned k) const { return c_[index(i, j, k)]; }
Rat& HomCubicPoly3::coeff(unsigned i, unsigned j, unsigned k) { return c_[index(i, j, k)]; }

bool HomCubicPoly3::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

unsigned HomCubicPoly3::degree() const {
    unsigned d = 0;
    for (const auto& m : monomials_up_to_degree(3))
        if (!coeff(m[0], m[1], m[2]).is_zero()) d = std::max(d, m[0] + m[1] + m[2]);
    return d;
}

bool HomCubicPoly3::is_homogeneous(unsigned d) const {
    for (const auto& m : monomials_up_to_degree(3))
        if (!coeff(m[0], m[1], m[2]).is_zero() && m[0] + m[1] + m[2] != d) return false;
    return true;
}

HomCubicPoly3 HomCubicPoly3::operator+(const HomCubicPoly3& o) const {
    HomCubicPoly3 r;
    for (std::size_t t = 0; t < 20; ++t) r.c_[t] = c_[t] + o.c_[t];
    return r;
}

HomCubicPoly3 HomCubicPoly3::operator-(const HomCubicPoly3& o) const {
    HomCubicPoly3 r;
    for (std::size_t t = 0; t < 20; ++t) r.c_[t] = c_[t] - o.c_[t];
    return r;
}

HomCubicPoly3 HomCubicPoly3::operator-() const {
    HomCubicPoly3 r;
    for (std::size_t t = 0; t < 20; ++t) r.c_[t] = -c_[t];
    return r;
}

HomCubicPoly3 HomCubicPoly3::operator*(const HomCubicPoly3& o) const {
    HomCubicPoly3 r;
    for (const auto& m : monomials_up_to_degree(3)) {
        const Rat& x = coeff(m[0], m[1], m[2]);
        if (x.is_zero()) continue;
        for (const auto& n : monomials_up_to_degree(3)) {
            const Rat& y = o.coeff(n[0], n[1], n[2]);
            if (y.is_zero()) continue;
            if (m[0] + n[0] + m[1] + n[1] + m[2] + n[2] > 3)
                throw std::invalid_argument("HomCubicPoly3: product exceeds degree 3");
            r.coeff(m[0] + n[0], m[1] + n[1], m[2] + n[2]) += x * y;
        }
    }
    return r;
}

HomCubicPoly3 HomCubicPoly3::operator*(const Rat& s) const {
    HomCubicPoly3 r;
    for (std::size_t t = 0; t < 20; ++t) r.c_[t] = c_[t] * s;
    return r;
}

Rat HomCubicPoly3::eval(const Rat& a, const Rat& b, const Rat& c) const {
    Rat s = 0;
    auto pw = [](const Rat& x, unsigned e) {
        Rat r = 1;
        for (unsigned t = 0; t < e; ++t) r *= x;
        return r;
    };
    for (const auto& m : monomials_up_to_degree(3)) {
        const Rat& x = coeff(m[0], m[1], m[2]);
        if (!x.is_zero()) s += x * pw(a, m[0]) * pw(b, m[1]) * pw(c, m[2]);
    }
    return s;
}

HomCubicPoly3 HomCubicPoly3::substitute(std::size_t which, const Rat& value) const {
    HomCubicPoly3 r;
    auto pw = [](const Rat& x, unsigned e) {
        Rat r = 1;
        for (unsigned t = 0; t < e; ++t) r *= x;
        return r;
    };
    for (const auto& m : monomials_up_to_degree(3)) {
        const Rat& x = coeff(m[0], m[1], m[2]);
        if (x.is_zero()) continue;
        std::array<unsigned, 3> n = m;
        const unsigned e = n[which];
        n[which] = 0;
        r.coeff(n[0], n[1], n[2]) += x * pw(value, e);
    }
    return r;
}

std::string HomCubicPoly3::str() const {
    static const char* names[3] = {"a", "b", "c"};
    std::ostringstream os;
    bool first = true;
    for (const auto& m : monomials_up_to_degree(3)) {
        const Rat& x = coeff(m[0], m[1], m[2]);
        if (x.is_zero()) continue;
        const bool neg = x < 0;
        const Rat mag = neg ? Rat(-x) : x;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const bool is_const = m[0] + m[1] + m[2] == 0;
        if (mag != 1 || is_const) os << rat_str(mag);
        bool star = mag != 1 || is_const;
        for (std::size_t v = 0; v < 3; ++v) {
            if (m[v] == 0) continue;
            if (star) os << "*";
            os << names[v];
            if (m[v] > 1) os << "^" << m[v];
            star = true;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::vector<std::array<unsigned, 3>> HomCubicPoly3::monomials_of_degree(unsigned d) {
    std::vector<std::array<unsigned, 3>> out;
    for (unsigned a = d; a + 1 > 0; --a)
        for (unsigned b = d - a; b + 1 > 0; --b) out.push_back({a, b, d - a - b});
    return out;
}

std::vector<std::array<unsigned, 3>> HomCubicPoly3::monomials_up_to_degree(unsigned d) {
    std::vector<std::array<unsigned, 3>> out;
    for (unsigned t = 0; t <= d; ++t)
        for (const auto& m : monomials_of_degree(t)) out.push_back(m);
    return out;
}

PolyMat PolyMat::pencil(const Mat& m1, const Mat& m2, const Mat& m3) {
    if (m1.rows() != m2.rows() || m1.cols() != m2.cols() || m1.rows() != m3.rows() ||
        m1.cols() != m3.cols())
        throw std::invalid_argument("PolyMat::pencil: shape mismatch");
    PolyMat p(m1.rows(), m1.cols());
    for (std::size_t i = 0; i < m1.rows(); ++i)
        for (std::size_t j = 0; j < m1.cols(); ++j)
            p(i, j) = HomCubicPoly3::linear(0, m1(i, j), m2(i, j), m3(i, j));
    return p;
}

Mat PolyMat::eval(const Rat& a, const Rat& b, const Rat& c) const {
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(a, b, c);
    return m;
}

unsigned PolyMat::max_degree() const {
    unsigned d = 0;
    for (const auto& p : a_) d = std::max(d, p.degree());
    return d;
}

namespace {

void choose(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

HomCubicPoly3 det_poly(const PolyMat& m, const std::vector<std::size_t>& r,
                       const std::vector<std::size_t>& c) {
    if (r.size() == 2)
        return m(r[0], c[0]) * m(r[1], c[1]) - m(r[0], c[1]) * m(r[1], c[0]);
    // Laplace along the first row, 3x3
    HomCubicPoly3 d;
    for (std::size_t t = 0; t < 3; ++t) {
        HomCubicPoly3 sub = m(r[1], c[(t + 1) % 3]) * m(r[2], c[(t + 2) % 3]) -
                            m(r[1], c[(t + 2) % 3]) * m(r[2], c[(t + 1) % 3]);
        d = d + m(r[0], c[t]) * sub;
    }
    return d;
}

}  // namespace

std::vector<HomCubicPoly3> minors(const PolyMat& m, std::size_t k) {
    if (k != 2 && k != 3) throw std::invalid_argument("minors: k must be 2 or 3");
    if (m.rows() < k || m.cols() < k) return {};
    std::vector<std::vector<std::size_t>> rsets, csets;
    choose(m.rows(), k, rsets);
    choose(m.cols(), k, csets);
    std::vector<HomCubicPoly3> out;
    out.reserve(rsets.size() * csets.size());
    for (const auto& r : rsets)
        for (const auto& c : csets) out.push_back(det_poly(m, r, c));
    return out;
}

}  // namespace g2flat
