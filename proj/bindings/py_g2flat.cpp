#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "g2flat/algebra_io.hpp"
#include "g2flat/catalog.hpp"
#include "g2flat/cli.hpp"
#include "g2flat/g2_model.hpp"
#include "g2flat/geometry.hpp"
#include "g2flat/rank_obstruction.hpp"
#include "g2flat/verify.hpp"

#include <sstream>

namespace py = pybind11;
using namespace g2flat;

namespace {

py::tuple sig_tuple(const Signature& s) {
    return py::make_tuple(s.plus, s.minus, s.zero);
}

py::dict analyze_doc(const std::string& document) {
    CatalogEntry entry = parse_algebra_file(document);
    const MetricLieAlgebra& m = entry.value;
    py::dict d;
    d["name"] = entry.name;
    d["dim"] = m.dim();
    d["signature"] = sig_tuple(m.form_signature());
    auto cls = nilpotency_class(m.algebra());
    d["nilpotency_class"] = cls ? py::object(py::int_(*cls)) : py::object(py::none());
    d["derived_dim"] = derived_algebra(m.algebra()).dim();
    d["center_dim"] = center(m.algebra()).dim();
    WittDecomposition wd = witt_decomposition(m);
    d["isotropic_ideal_dim"] = wd.j.dim();
    d["complement_dim"] = wd.w.dim();
    GeometryReport g = geometry_report(m);
    d["holonomy_dim"] = g.holonomy_dim;
    d["ricci_flat"] = g.ricci_flat;
    d["flat"] = g.flat;
    ObstructionReport o = embedding_obstruction(m, entry.name);
    d["obstruction"] = to_string(o.conclusion);
    return d;
}

py::dict report_dict(const Report& r) {
    py::list records;
    for (const auto& rec : r.records) {
        py::dict line;
        line["check"] = rec.name;
        line["pass"] = rec.pass;
        line["claim"] = rec.claim;
        line["witness"] = rec.witness;
        records.append(line);
    }
    py::dict d;
    d["command"] = r.command;
    d["overall"] = r.overall();
    d["passed"] = r.passed();
    d["total"] = r.records.size();
    d["records"] = records;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact verification toolkit for seven-dimensional metric nilpotent "
                "Lie algebras and the split exceptional model";

    mod.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& entry : seven_dim_candidates()) names.push_back(entry.name);
        return names;
    });

    mod.def("export_algebra", [](const std::string& name) {
        for (const auto& entry : seven_dim_candidates())
            if (entry.name == name) return serialize_algebra(entry.name, entry.value);
        throw std::invalid_argument("unknown catalog name '" + name + "'");
    });

    mod.def("parse_roundtrip", [](const std::string& document) {
        CatalogEntry entry = parse_algebra_file(document);
        return serialize_algebra(entry.name, entry.value);
    });

    mod.def("analyze", &analyze_doc, py::arg("document"));

    mod.def("obstruction", [](const std::string& document) {
        CatalogEntry entry = parse_algebra_file(document);
        return std::string(to_string(
            embedding_obstruction(entry.value, entry.name).conclusion));
    });

    mod.def(
        "rank_classify",
        [](std::int64_t bound) {
            SweepReport rep = verify_rank2_classification(bound);
            py::dict d;
            d["bound"] = rep.bound;
            d["total"] = rep.total;
            d["zero"] = rep.tag_zero;
            d["family_a"] = rep.tag_family_a;
            d["family_b"] = rep.tag_family_b;
            d["above_rank_two"] = rep.tag_above;
            d["mismatches"] = rep.mismatches;
            return d;
        },
        py::arg("bound") = 2);

    mod.def(
        "search_rank2",
        [](std::size_t trials, std::uint64_t seed) {
            SearchReport rep = random_search_rank2_subalgebra(trials, seed);
            py::dict d;
            d["trials"] = rep.trials;
            d["seed"] = rep.seed;
            d["spans_sampled"] = rep.spans_sampled;
            d["spans_refuted"] = rep.spans_refuted;
            d["bracket_closed_spans"] = rep.bracket_closed_spans;
            d["pairs_checked"] = rep.pairs_checked;
            d["closing_pairs"] = rep.closing_pairs;
            d["failures"] = rep.pair_identity_failures + rep.refutation_failures;
            d["counterexample_found"] = !rep.counterexample.empty();
            return d;
        },
        py::arg("trials") = 10000, py::arg("seed") = 20260823);

    mod.def(
        "lowdim_lemma",
        [](std::size_t dim, std::size_t samples, std::uint64_t seed) {
            LowDimReport rep = verify_lowdim_abelian_lemma(dim, samples, seed);
            py::dict d;
            d["dim"] = rep.dim;
            d["exhaustive"] = rep.exhaustive;
            d["structures_examined"] = rep.structures_examined;
            d["jacobi_passed"] = rep.jacobi_passed;
            d["nilpotent"] = rep.nilpotent;
            d["nonabelian_nilpotent"] = rep.nonabelian_nilpotent;
            d["nonabelian_survivors"] = rep.nonabelian_survivors;
            return d;
        },
        py::arg("dim"), py::arg("samples") = 10000, py::arg("seed") = 4242);

    mod.def("main_theorem", [] {
        TheoremVerdict v = verify_main_theorem();
        py::list cases;
        for (const auto& outcome : v.cases) {
            py::dict line;
            line["name"] = outcome.name;
            line["conclusion"] = to_string(outcome.conclusion);
            line["holonomy_dim"] = outcome.holonomy_dim;
            line["flat"] = outcome.flat;
            line["nilpotency_class"] =
                outcome.nilpotency_class_computed
                    ? py::object(py::int_(*outcome.nilpotency_class_computed))
                    : py::object(py::none());
            cases.append(line);
        }
        py::dict d;
        d["conclusion"] = v.conclusion;
        d["obstructed"] = v.obstructed;
        d["survivors"] = v.survivors;
        d["cases"] = cases;
        d["notes"] = v.notes;
        return d;
    });

    mod.def("verify_paper", [] { return report_dict(run_full_verification()); });

    mod.def("g2_check", [] { return report_dict(g2_model_report()); });

    mod.def("run", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        int code = run_cli(args, out);
        return py::make_tuple(code, out.str());
    });
}
