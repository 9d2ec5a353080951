#pragma once

#include <string>

#include "zinbiel/algebra.hpp"
#include "zinbiel/deduction.hpp"
#include "zinbiel/gradation.hpp"
#include "zinbiel/identities.hpp"

namespace zinbiel {

inline constexpr int kFormatVersion = 1;

/// Canonical JSON text; byte-stable for canonical scalars (fixed key order,
/// products sorted by (i, j), terms by k).
std::string algebra_to_json(const Algebra& a);

/// Parses and validates; throws SchemaError with a field path on violations
/// (including a "version" mismatch).
Algebra algebra_from_json(const std::string& text);

void save_algebra(const std::string& path, const Algebra& a);
Algebra load_algebra(const std::string& path);

std::string partial_table_to_json(const PartialTable& t);
PartialTable partial_table_from_json(const std::string& text);
PartialTable load_partial_table(const std::string& path);

std::string graded_to_json(const GradedAlgebra& g);

std::string certificate_to_json(const NonexistenceReport& r, bool checked);

} // namespace zinbiel
