#pragma once

#include <cstdint>

#include "g2flat/report.hpp"

namespace g2flat {

/// Knobs for the full verification run. The defaults finish in well under a
/// minute; the acceptance harness raises the sampled counts.
struct VerificationOptions {
    std::size_t sweep_bound = 2;
    std::size_t search_trials = 20000;
    std::uint64_t search_seed = 20260823;
    std::size_t refutation_spans = 2000;
    std::uint64_t refutation_seed = 777;
    std::size_t dim4_samples = 10000;
    std::uint64_t dim4_seed = 4242;
    std::size_t curvature_triples = 100;
    std::uint64_t curvature_seed = 91;
};

/// Runs every check in order: catalog validation; the exceptional-algebra
/// model (closure, invariant form, three-form, stabilizer); the triangular
/// subfamily; the rank-two classification sweep and locus; the randomized
/// subspace search with structured refutations; the low-dimensional
/// abelian lemmas; the class-two image identities; candidate geometry; the
/// five obstruction certificates; and the final verdict. The report passes
/// overall iff every record passes.
Report run_full_verification(const VerificationOptions& opt = {});

/// Just the exceptional-model checks (generator closure, invariant form,
/// three-form, stabilizer, triangular subfamily); the `g2 check` subcommand.
Report g2_model_report();

}  // namespace g2flat
