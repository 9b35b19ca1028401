#pragma once

#include <string>

#include "g2flat/catalog.hpp"

namespace g2flat {

/// Exact rational from "p" or "p/q" with q > 0 and an optional leading minus
/// on p. Throws std::invalid_argument on any other shape.
Rat parse_rational(const std::string& text);

/// Canonical text form: lowest terms, "p" when the denominator is 1.
std::string rational_text(const Rat& x);

/// Reads a structured-text algebra document: name, dimension, basis labels,
/// bracket table and metric entries (rationals as text; omitted entries are
/// zero; metric entries are symmetric-completed). The result is fully
/// validated: Jacobi, invariance of the metric, and nondegeneracy, with the
/// failing triple or pair named in the error. Parse errors carry the byte
/// position.
CatalogEntry parse_algebra_file(const std::string& document);

/// Inverse of parse_algebra_file up to ordering: emits the canonical
/// document (brackets with x-index < y-index, metric upper triangle only,
/// entries in basis order). parse(serialize(M)) reproduces M exactly.
std::string serialize_algebra(const std::string& name, const MetricLieAlgebra& m);

}  // namespace g2flat
