#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace g2flat {

/// One verified statement: a stable machine name, the claim in words, and
/// the observed quantities backing it.
struct CheckRecord {
    std::string name;
    bool pass = false;
    std::string claim;
    std::string witness;  // may be empty
};

struct Report {
    std::string command;
    std::vector<CheckRecord> records;

    std::size_t passed() const;
    bool overall() const { return passed() == records.size(); }
};

/// Plain-text rendering, one line per record plus a summary line.
std::string render_human(const Report& r);

/// Line-delimited structured rendering: one record per line, then a summary
/// line. Identical inputs produce byte-identical output.
std::string render_machine(const Report& r);

}  // namespace g2flat
