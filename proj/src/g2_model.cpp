#include "g2flat/g2_model.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace g2flat {

namespace {

struct Entry {
    int row, col, var, num, den;
};

// M(row, col) += (num/den) * u[var], 0-based everywhere.
constexpr std::array<Entry, 44> k_g2_table{{
    {0, 0, 6, 1, 1},  {0, 1, 8, 1, 1},   {0, 2, 9, 1, 1},  {0, 3, 11, 1, 1},
    {0, 4, 12, 1, 1}, {0, 5, 13, 1, 1},

    {1, 0, 0, 1, 1},  {1, 1, 7, 1, 1},   {1, 2, 10, 1, 1}, {1, 3, 9, 1, 2},
    {1, 4, 11, -1, 4}, {1, 6, 13, -1, 1},

    {2, 0, 1, 1, 1},  {2, 1, 2, 1, 1},   {2, 2, 6, 1, 1},  {2, 2, 7, -1, 1},
    {2, 3, 8, -1, 2}, {2, 5, 11, 1, 4},  {2, 6, 12, -1, 1},

    {3, 0, 3, 1, 1},  {3, 1, 1, 4, 1},   {3, 2, 0, -4, 1}, {3, 4, 8, 1, 2},
    {3, 5, 9, -1, 2}, {3, 6, 11, -1, 1},

    {4, 0, 4, 1, 1},  {4, 1, 3, -2, 1},  {4, 3, 0, 4, 1},  {4, 4, 7, 1, 1},
    {4, 4, 6, -1, 1}, {4, 5, 10, -1, 1}, {4, 6, 9, -1, 1},

    {5, 0, 5, 1, 1},  {5, 2, 3, 2, 1},   {5, 3, 1, -4, 1}, {5, 4, 2, -1, 1},
    {5, 5, 7, -1, 1}, {5, 6, 8, -1, 1},

    {6, 1, 5, -1, 1}, {6, 2, 4, -1, 1},  {6, 3, 3, -1, 1}, {6, 4, 1, -1, 1},
    {6, 5, 0, -1, 1}, {6, 6, 6, -1, 1},
}};

Vec primitive_integer(const Vec& v) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Int l = 1;
    for (const auto& r : v) l = lcm(l, Int(denominator(r)));
    Int g = 0;
    for (const auto& r : v) g = gcd(g, Int(numerator(r) * (l / denominator(r))));
    if (g == 0) return v;
    Vec out(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) out[t] = v[t] * Rat(l, g);
    return out;
}

const std::vector<Mat>& g2_generators() {
    static const std::vector<Mat> gens = [] {
        std::vector<Mat> g;
        for (std::size_t t = 0; t < g2_param_count; ++t) {
            Vec u(g2_param_count);
            u[t] = 1;
            g.push_back(g2_to_matrix(u));
        }
        return g;
    }();
    return gens;
}

const std::vector<Mat>& m_generators() {
    static const std::vector<Mat> gens = [] {
        std::vector<Mat> g;
        for (std::size_t t = 0; t < m_param_count; ++t) {
            Vec u(m_param_count);
            u[t] = 1;
            g.push_back(m_to_matrix(u));
        }
        return g;
    }();
    return gens;
}

Mat flattened_columns(const std::vector<Mat>& gens) {
    Mat b(49, gens.size());
    for (std::size_t t = 0; t < gens.size(); ++t) {
        Vec f = flatten(gens[t]);
        for (std::size_t r = 0; r < 49; ++r) b(r, t) = f[r];
    }
    return b;
}

std::optional<Vec> coords_in(const std::vector<Mat>& gens, const Mat& x) {
    if (x.rows() != 7 || x.cols() != 7) return std::nullopt;
    return solve(flattened_columns(gens), flatten(x));
}

LieAlgebra structure_from(const std::vector<Mat>& gens, const std::string& prefix) {
    std::size_t n = gens.size();
    std::vector<std::string> labels;
    for (std::size_t t = 0; t < n; ++t) labels.push_back(prefix + std::to_string(t + 1));
    LieAlgebra l(n, labels);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto u = coords_in(gens, commutator(gens[i], gens[j]));
            if (!u) {
                std::ostringstream os;
                os << "commutator escapes the span at (" << labels[i] << ", "
                   << labels[j] << ")";
                throw std::logic_error(os.str());
            }
            if (!vec_is_zero(*u)) l.set_bracket(i, j, *u);
        }
    return l;
}

}  // namespace

Mat g2_to_matrix(const Vec& u) {
    if (u.size() != g2_param_count)
        throw std::invalid_argument("g2_to_matrix: expected 14 parameters");
    Mat m(7, 7);
    for (const auto& e : k_g2_table)
        m(e.row, e.col) += u[e.var] * Rat(e.num, e.den);
    return m;
}

Mat m_to_matrix(const Vec& u) {
    if (u.size() != m_param_count)
        throw std::invalid_argument("m_to_matrix: expected 6 parameters");
    Vec full(g2_param_count);
    for (std::size_t t = 0; t < m_param_count; ++t) full[t] = u[t];
    return g2_to_matrix(full);
}

Subspace g2_span() {
    std::vector<Vec> rows;
    for (const auto& g : g2_generators()) rows.push_back(flatten(g));
    return Subspace::span(49, rows);
}

Subspace m_span() {
    std::vector<Vec> rows;
    for (const auto& g : m_generators()) rows.push_back(flatten(g));
    return Subspace::span(49, rows);
}

std::optional<Vec> membership_in_g2(const Mat& x) { return coords_in(g2_generators(), x); }
std::optional<Vec> membership_in_m(const Mat& x) { return coords_in(m_generators(), x); }

LieAlgebra structure_constants_of_g2() { return structure_from(g2_generators(), "G"); }
LieAlgebra m_structure() { return structure_from(m_generators(), "M"); }

Mat invariant_bilinear_form() {
    // unknown: 28 coordinates of a symmetric S; equations G^T S + S G = 0
    std::vector<Mat> basis;
    for (std::size_t t = 0; t < 28; ++t) {
        Vec v(28);
        v[t] = 1;
        basis.push_back(coords_to_sym(v, 7));
    }
    std::vector<Vec> rows;
    for (const auto& g : g2_generators()) {
        std::vector<Mat> images;
        for (const auto& e : basis) images.push_back(g.transposed() * e + e * g);
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = i; j < 7; ++j) {
                Vec row(28);
                for (std::size_t t = 0; t < 28; ++t) row[t] = images[t](i, j);
                rows.push_back(row);
            }
    }
    Mat kb = kernel_basis(Mat::from_rows(28, rows));
    if (kb.rows() != 1)
        throw std::logic_error("invariant_bilinear_form: solution space is not a line");
    Mat s = coords_to_sym(primitive_integer(kb.row(0)), 7);
    if (signature(s).plus != 4) s = s * Rat(-1);
    Signature sig = signature(s);
    if (!(sig == Signature{4, 3, 0}))
        throw std::logic_error("invariant_bilinear_form: signature is not (4,3)");
    return s;
}

std::size_t ThreeForm::triple_index(std::size_t i, std::size_t j, std::size_t k) {
    static const auto table = [] {
        std::array<std::array<std::array<std::size_t, 7>, 7>, 7> t{};
        std::size_t idx = 0;
        for (std::size_t a = 0; a < 7; ++a)
            for (std::size_t b = a + 1; b < 7; ++b)
                for (std::size_t c = b + 1; c < 7; ++c) t[a][b][c] = idx++;
        return t;
    }();
    if (!(i < j && j < k && k < 7)) throw std::invalid_argument("triple_index: need i<j<k<7");
    return table[i][j][k];
}

ThreeForm ThreeForm::from_coords(const Vec& c35) {
    if (c35.size() != 35) throw std::invalid_argument("ThreeForm: expected 35 coefficients");
    return ThreeForm{c35};
}

ThreeForm ThreeForm::basis_form(std::size_t i, std::size_t j, std::size_t k) {
    Vec c(35);
    c[triple_index(i, j, k)] = 1;
    return ThreeForm{c};
}

Rat ThreeForm::value(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j || j == k || i == k) return 0;
    int sign = 1;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    return coeffs[triple_index(i, j, k)] * sign;
}

Rat ThreeForm::eval(const Vec& a, const Vec& b, const Vec& c) const {
    Rat out = 0;
    for (std::size_t i = 0; i < 7; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < 7; ++j) {
            if (b[j] == 0 || j == i) continue;
            for (std::size_t k = 0; k < 7; ++k) {
                if (c[k] == 0) continue;
                out += a[i] * b[j] * c[k] * value(i, j, k);
            }
        }
    }
    return out;
}

namespace {

// rows of the invariance system for one matrix g acting on three-forms:
// one equation per triple i<j<k, unknowns = 35 form coefficients
std::vector<Vec> derivation_rows_for(const Mat& g) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            for (std::size_t k = j + 1; k < 7; ++k) {
                Vec row(35);
                for (std::size_t t = 0; t < 35; ++t) {
                    Vec unit(35);
                    unit[t] = 1;
                    ThreeForm bt{unit};
                    Rat c = 0;
                    for (std::size_t s = 0; s < 7; ++s) {
                        c += g(s, i) * bt.value(s, j, k);
                        c += g(s, j) * bt.value(i, s, k);
                        c += g(s, k) * bt.value(i, j, s);
                    }
                    row[t] = c;
                }
                rows.push_back(row);
            }
    return rows;
}

}  // namespace

Subspace invariant_three_forms() {
    std::vector<Vec> rows;
    for (const auto& g : g2_generators())
        for (auto& r : derivation_rows_for(g)) rows.push_back(std::move(r));
    Mat kb = kernel_basis(Mat::from_rows(35, rows));
    Subspace s = Subspace::span_rows(kb);
    if (s.dim() != 1)
        throw std::logic_error("invariant_three_forms: solution space is not a line");
    return s;
}

ThreeForm invariant_three_form() {
    Vec v = primitive_integer(invariant_three_forms().basis().row(0));
    for (const auto& c : v) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : v) x = -x;
        break;
    }
    return ThreeForm::from_coords(v);
}

Subspace stabilizer_in_gl(const ThreeForm& phi) {
    // unknowns: X(i,j) = x[7*i + j]; one equation per triple i<j<k
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            for (std::size_t k = j + 1; k < 7; ++k) {
                Vec row(49);
                for (std::size_t s = 0; s < 7; ++s) {
                    row[7 * s + i] += phi.value(s, j, k);
                    row[7 * s + j] += phi.value(i, s, k);
                    row[7 * s + k] += phi.value(i, j, s);
                }
                rows.push_back(row);
            }
    return Subspace::span_rows(kernel_basis(Mat::from_rows(49, rows)));
}

}  // namespace g2flat
