#include "g2flat/algebra_io.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace g2flat {

namespace {

using ojson = nlohmann::ordered_json;

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

[[noreturn]] void bad_rational(const std::string& text) {
    throw std::invalid_argument("not a rational of the form p or p/q with q > 0: '" +
                                text + "'");
}

std::size_t resolve_label(const std::map<std::string, std::size_t>& index,
                          const std::string& label, const std::string& where) {
    auto it = index.find(label);
    if (it == index.end())
        throw std::invalid_argument("unknown basis label '" + label + "' in " + where);
    return it->second;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string digits = num;
    if (!digits.empty() && digits[0] == '-') digits.erase(0, 1);
    if (!all_digits(digits) || !all_digits(den)) bad_rational(text);
    Int p(num), q(den);
    if (q == 0) bad_rational(text);
    return Rat(p, q);
}

std::string rational_text(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

CatalogEntry parse_algebra_file(const std::string& document) {
    ojson doc;
    try {
        doc = ojson::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("algebra document: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("algebra document: not an object");

    auto need = [&](const char* key) -> const ojson& {
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("algebra document: missing field '") +
                                        key + "'");
        return doc[key];
    };

    std::string name = need("name").get<std::string>();
    std::size_t dim = need("dim").get<std::size_t>();
    const ojson& basis = need("basis");
    if (!basis.is_array() || basis.size() != dim)
        throw std::invalid_argument("algebra document: basis must list exactly dim labels");

    std::map<std::string, std::size_t> index;
    std::vector<std::string> labels;
    for (const auto& item : basis) {
        std::string label = item.get<std::string>();
        if (!index.emplace(label, labels.size()).second)
            throw std::invalid_argument("algebra document: duplicate basis label '" +
                                        label + "'");
        labels.push_back(label);
    }

    LieAlgebra l(dim, labels);
    std::set<std::pair<std::size_t, std::size_t>> seen_brackets;
    if (doc.contains("brackets")) {
        for (const auto& b : doc["brackets"]) {
            std::string x = b.at("x").get<std::string>();
            std::string y = b.at("y").get<std::string>();
            std::string where = "bracket [" + x + "," + y + "]";
            std::size_t i = resolve_label(index, x, where);
            std::size_t j = resolve_label(index, y, where);
            if (i == j)
                throw std::invalid_argument("algebra document: " + where +
                                            " pairs a label with itself");
            Rat sign = 1;
            if (i > j) {
                std::swap(i, j);
                sign = -1;
            }
            if (!seen_brackets.emplace(i, j).second)
                throw std::invalid_argument("algebra document: " + where +
                                            " listed more than once");
            Vec v(dim);
            for (const auto& [label, val] : b.at("value").items())
                v[resolve_label(index, label, where)] =
                    sign * parse_rational(val.get<std::string>());
            l.set_bracket(i, j, v);
        }
    }

    Mat g(dim, dim);
    std::set<std::pair<std::size_t, std::size_t>> seen_metric;
    if (doc.contains("metric")) {
        for (const auto& e : doc["metric"]) {
            std::string x = e.at("x").get<std::string>();
            std::string y = e.at("y").get<std::string>();
            std::string where = "metric entry (" + x + "," + y + ")";
            std::size_t i = resolve_label(index, x, where);
            std::size_t j = resolve_label(index, y, where);
            if (i > j) std::swap(i, j);
            if (!seen_metric.emplace(i, j).second)
                throw std::invalid_argument("algebra document: " + where +
                                            " listed more than once");
            Rat val = parse_rational(e.at("value").get<std::string>());
            g(i, j) = val;
            g(j, i) = val;
        }
    }

    return CatalogEntry{name, 0, {0, 0}, MetricLieAlgebra(l, g), ""};
}

std::string serialize_algebra(const std::string& name, const MetricLieAlgebra& m) {
    const std::size_t n = m.dim();
    const auto& labels = m.algebra().labels();

    ojson doc;
    doc["name"] = name;
    doc["dim"] = n;
    doc["basis"] = labels;

    ojson brackets = ojson::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = m.algebra().basis_bracket(i, j);
            ojson value = ojson::object();
            for (std::size_t k = 0; k < n; ++k)
                if (v[k] != 0) value[labels[k]] = rational_text(v[k]);
            if (!value.empty())
                brackets.push_back({{"x", labels[i]}, {"y", labels[j]}, {"value", value}});
        }
    doc["brackets"] = brackets;

    ojson metric = ojson::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (m.form()(i, j) != 0)
                metric.push_back({{"x", labels[i]},
                                  {"y", labels[j]},
                                  {"value", rational_text(m.form()(i, j))}});
    doc["metric"] = metric;

    return doc.dump(2) + "\n";
}

}  // namespace g2flat
