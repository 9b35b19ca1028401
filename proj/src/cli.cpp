#include "g2flat/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "g2flat/algebra_io.hpp"
#include "g2flat/catalog.hpp"
#include "g2flat/g2_model.hpp"
#include "g2flat/geometry.hpp"
#include "g2flat/rank_obstruction.hpp"
#include "g2flat/verify.hpp"

namespace g2flat {

namespace {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit(const Report& report, const std::string& format, std::ostream& out) {
    out << (format == "machine" ? render_machine(report) : render_human(report));
    return report.overall() ? 0 : 1;
}

std::string sig_text(const Signature& s) {
    std::ostringstream out;
    out << "(" << s.plus << "," << s.minus << "," << s.zero << ")";
    return out.str();
}

/// A record that reports computed facts; it fails only if the computation
/// throws, in which case the message becomes the witness.
void add_fact(Report& report, std::string name, std::string claim,
              const std::function<std::string()>& body) {
    CheckRecord rec{std::move(name), false, std::move(claim), ""};
    try {
        rec.witness = body();
        rec.pass = true;
    } catch (const std::exception& e) {
        rec.witness = e.what();
    }
    report.records.push_back(std::move(rec));
}

Report analyze_document(const std::string& path, const std::string& text) {
    Report report;
    report.command = "analyze " + path;

    std::optional<CatalogEntry> parsed;
    add_fact(report, "parse", "the document defines a valid metric Lie algebra", [&] {
        parsed = parse_algebra_file(text);
        std::ostringstream out;
        out << parsed->name << ": dim " << parsed->value.dim() << ", signature "
            << sig_text(parsed->value.form_signature());
        return out.str();
    });
    if (!parsed) return report;
    const MetricLieAlgebra& m = parsed->value;

    add_fact(report, "structure",
             "derived algebra, center, nilpotency, and the isotropic ideal", [&] {
                 std::ostringstream out;
                 out << "derived dim " << derived_algebra(m.algebra()).dim()
                     << ", center dim " << center(m.algebra()).dim();
                 auto cls = nilpotency_class(m.algebra());
                 if (cls)
                     out << ", nilpotent of class " << *cls;
                 else
                     out << ", not nilpotent";
                 WittDecomposition wd = witt_decomposition(m);
                 out << "; isotropic ideal dim " << wd.j.dim() << ", complement dim "
                     << wd.w.dim();
                 return out.str();
             });

    add_fact(report, "geometry",
             "curvature-derived invariants of the bi-invariant connection", [&] {
                 GeometryReport rep = geometry_report(m);
                 std::ostringstream out;
                 out << "holonomy dim " << rep.holonomy_dim << ", "
                     << (rep.ricci_flat ? "Ricci = 0" : "Ricci != 0") << ", "
                     << (rep.flat ? "flat" : "not flat");
                 return out.str();
             });

    add_fact(report, "obstruction",
             "whether the algebra can match a subalgebra of the triangular model",
             [&] {
                 ObstructionReport rep = embedding_obstruction(m, parsed->name);
                 std::ostringstream out;
                 out << to_string(rep.conclusion);
                 if (rep.certificate.minor_identities_checked > 0)
                     out << "; " << rep.certificate.minor_identities_checked
                         << " certificate identities";
                 return out.str();
             });

    return report;
}

Report obstruct_document(const std::string& path, const std::string& text) {
    Report report;
    report.command = "obstruct " + path;
    CheckRecord rec{"obstruction", false,
                    "a three-dimensional constant-rank-two certificate excludes the "
                    "algebra from the triangular model (abelian algebras are exempt)",
                    ""};
    try {
        CatalogEntry entry = parse_algebra_file(text);
        ObstructionReport rep = embedding_obstruction(entry.value, entry.name);
        std::ostringstream out;
        out << entry.name << ": " << to_string(rep.conclusion);
        if (rep.certificate.minor_identities_checked > 0)
            out << "; " << rep.certificate.minor_identities_checked
                << " identities, grid rank [" << rep.certificate.grid_min_rank << ","
                << rep.certificate.grid_max_rank << "]";
        if (!rep.notes.empty()) out << "; " << rep.notes;
        rec.witness = out.str();
        rec.pass = rep.conclusion != ObstructionConclusion::Inconclusive;
    } catch (const std::exception& e) {
        rec.witness = e.what();
    }
    report.records.push_back(std::move(rec));
    return report;
}

std::string dump_model() {
    std::vector<std::string> basis;
    for (int i = 1; i <= 7; ++i) basis.push_back("e" + std::to_string(i));

    ojson doc;
    doc["dim"] = 7;
    doc["basis"] = basis;

    Mat s = invariant_bilinear_form();
    ojson form = ojson::array();
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i; j < 7; ++j)
            if (s(i, j) != 0)
                form.push_back(
                    {{"x", basis[i]}, {"y", basis[j]}, {"value", rational_text(s(i, j))}});
    doc["bilinear_form"] = form;

    ThreeForm phi = invariant_three_form();
    ojson three = ojson::array();
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            for (std::size_t k = j + 1; k < 7; ++k)
                if (phi.value(i, j, k) != 0)
                    three.push_back({{"x", basis[i]},
                                     {"y", basis[j]},
                                     {"z", basis[k]},
                                     {"value", rational_text(phi.value(i, j, k))}});
    doc["three_form"] = three;

    ojson gens = ojson::array();
    for (std::size_t t = 0; t < 14; ++t) {
        Vec u(14);
        u[t] = 1;
        Mat g = g2_to_matrix(u);
        ojson entries = ojson::array();
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 7; ++j)
                if (g(i, j) != 0)
                    entries.push_back({{"row", basis[i]},
                                       {"col", basis[j]},
                                       {"value", rational_text(g(i, j))}});
        gens.push_back({{"name", "G" + std::to_string(t + 1)}, {"entries", entries}});
    }
    doc["generators"] = gens;

    return doc.dump(2) + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact verification toolkit for the split exceptional model and "
                 "seven-dimensional metric nilpotent Lie algebras"};
    app.require_subcommand(1);

    std::string format = "human";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"human", "machine"}))
        ->capture_default_str();

    std::function<int()> action;

    auto* analyze = app.add_subcommand("analyze", "analyze an algebra document");
    std::string analyze_path;
    analyze->add_option("file", analyze_path, "algebra document")->required();
    analyze->callback([&] {
        action = [&, path = analyze_path] {
            return emit(analyze_document(path, read_file(path)), format, out);
        };
    });

    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
    verify->callback([&] {
        action = [&] { return emit(run_full_verification(), format, out); };
    });

    auto* g2 = app.add_subcommand("g2", "the exceptional-model commands");
    g2->require_subcommand(1);
    auto* g2check = g2->add_subcommand("check", "verify the model's defining facts");
    g2check->callback([&] {
        action = [&] { return emit(g2_model_report(), format, out); };
    });
    auto* g2dump =
        g2->add_subcommand("dump", "emit the bilinear form, three-form, and generators");
    g2dump->callback([&] {
        action = [&] {
            out << dump_model();
            return 0;
        };
    });

    auto* rank = app.add_subcommand("rank-classify",
                                    "sweep the rank-two classification over a box");
    std::size_t bound = 2;
    rank->add_option("--bound", bound, "half-width of the parameter box")
        ->capture_default_str();
    rank->callback([&] {
        action = [&, bound] {
            Report report;
            report.command = "rank-classify --bound " + std::to_string(bound);
            CheckRecord rec{"rank.sweep",
                            false,
                            "the syntactic rank-two classification agrees with exact "
                            "matrix rank over the whole box",
                            ""};
            try {
                SweepReport rep = verify_rank2_classification(bound);
                std::ostringstream w;
                w << rep.total << " matrices, " << rep.mismatches << " mismatches ("
                  << rep.tag_zero << " zero, " << rep.tag_family_a << " family A, "
                  << rep.tag_family_b << " family B, " << rep.tag_above
                  << " above rank two)";
                rec.witness = w.str();
                rec.pass = rep.ok() && rep.mismatches == 0;
            } catch (const std::exception& e) {
                rec.witness = e.what();
            }
            report.records.push_back(std::move(rec));
            return emit(report, format, out);
        };
    });

    auto* search =
        app.add_subcommand("search", "randomized search for a rank-two subspace");
    std::size_t trials = 10000;
    std::uint64_t seed = 20260823;
    search->add_option("--trials", trials, "number of trials")->capture_default_str();
    search->add_option("--seed", seed, "random seed")->capture_default_str();
    search->callback([&] {
        action = [&, trials, seed] {
            Report report;
            std::ostringstream cmd;
            cmd << "search --trials " << trials << " --seed " << seed;
            report.command = cmd.str();
            CheckRecord rec{"rank.search",
                            false,
                            "no sampled three-dimensional subspace has every element "
                            "of rank at most two",
                            ""};
            try {
                SearchReport rep = random_search_rank2_subalgebra(trials, seed);
                std::ostringstream w;
                w << rep.spans_sampled << " spans, " << rep.spans_refuted << " refuted, "
                  << rep.bracket_closed_spans << " bracket-closed, " << rep.pairs_checked
                  << " pairs, " << rep.closing_pairs << " closing pairs, "
                  << rep.pair_identity_failures + rep.refutation_failures << " failures";
                rec.witness = w.str();
                rec.pass = rep.ok() && rep.counterexample.empty();
            } catch (const std::exception& e) {
                rec.witness = e.what();
            }
            report.records.push_back(std::move(rec));
            return emit(report, format, out);
        };
    });

    auto* obstruct = app.add_subcommand("obstruct", "run the embedding obstruction "
                                                    "on an algebra document");
    std::string obstruct_path;
    obstruct->add_option("file", obstruct_path, "algebra document")->required();
    obstruct->callback([&] {
        action = [&, path = obstruct_path] {
            return emit(obstruct_document(path, read_file(path)), format, out);
        };
    });

    auto* catalog = app.add_subcommand("catalog", "catalogued candidate algebras");
    catalog->require_subcommand(1);
    auto* cat_export =
        catalog->add_subcommand("export", "write a catalogued algebra as a document");
    std::string cat_name;
    cat_export->add_option("name", cat_name, "catalogued name")->required();
    cat_export->callback([&] {
        action = [&, name = cat_name] {
            for (const auto& entry : seven_dim_candidates())
                if (entry.name == name) {
                    out << serialize_algebra(entry.name, entry.value);
                    return 0;
                }
            std::ostringstream known;
            for (const auto& entry : seven_dim_candidates()) known << " " << entry.name;
            throw CLI::ValidationError("unknown catalog name '" + name +
                                       "'; known names:" + known.str());
        };
    });

    // let --format appear after the subcommand as well
    for (CLI::App* sub : {analyze, verify, g2, g2check, g2dump, rank, search, obstruct,
                          catalog, cat_export})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    try {
        return action();
    } catch (const CLI::ValidationError& e) {
        out << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace g2flat
