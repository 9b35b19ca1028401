#include "g2flat/report.hpp"

#include <sstream>

#include "json.hpp"

namespace g2flat {

std::size_t Report::passed() const {
    std::size_t k = 0;
    for (const auto& rec : records)
        if (rec.pass) ++k;
    return k;
}

std::string render_human(const Report& r) {
    std::ostringstream out;
    out << "== " << r.command << " ==\n";
    for (const auto& rec : r.records) {
        out << (rec.pass ? "[PASS] " : "[FAIL] ") << rec.name << ": " << rec.claim;
        if (!rec.witness.empty()) out << " [" << rec.witness << "]";
        out << "\n";
    }
    out << "overall: " << (r.overall() ? "PASS" : "FAIL") << " (" << r.passed() << "/"
        << r.records.size() << " checks)\n";
    return out.str();
}

std::string render_machine(const Report& r) {
    using ojson = nlohmann::ordered_json;
    std::ostringstream out;
    for (const auto& rec : r.records) {
        ojson line;
        line["check"] = rec.name;
        line["pass"] = rec.pass;
        line["claim"] = rec.claim;
        line["witness"] = rec.witness;
        out << line.dump() << "\n";
    }
    ojson summary;
    summary["command"] = r.command;
    summary["passed"] = r.passed();
    summary["total"] = r.records.size();
    summary["overall"] = r.overall() ? "pass" : "fail";
    out << summary.dump() << "\n";
    return out.str();
}

}  // namespace g2flat
