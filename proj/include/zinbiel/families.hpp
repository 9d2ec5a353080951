#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"

namespace zinbiel {

/// Closed enumeration of constructible tables: the type-I families A1..A12,
/// the type-II families T1..T10, the four-dimensional (3,1) example EX31,
/// the null-filiform algebra NF, and the n = 3p+1 type-II witness W31.
enum class FamilyId {
    A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12,
    T1, T2, T3, T4, T5, T6, T7, T8, T9, T10,
    EX31, NF, W31,
};

std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);
std::vector<FamilyId> all_families();

struct FamilyParams {
    std::optional<int> n;
    std::optional<int> p;
    std::optional<int> t;            // T9/T10 only: n = 2p + t, 3 <= t <= p+1
    std::optional<Scalar> beta1;     // free for A1/A5/A8; finite set for T1/T6/T9
    std::optional<Scalar> gamma1;    // A7
    std::optional<Scalar> delta1;    // A7
    std::optional<Scalar> delta_pm1; // A10
};

/// beta_0 = 1, beta_j = prod_{k=0}^{j-1} (k + beta1)/(k + 1); returns the
/// first `length` entries.
std::vector<Scalar> beta_sequence(int p, const Scalar& beta1, int length);

/// Builds the complete multiplication table. Validates the family's dimension
/// and parameter constraints; unset optional parameters of A7 and A10 (and
/// the free beta1 of A1/A5/A8) stay symbolic.
Algebra build_family(FamilyId id, const FamilyParams& params);

/// Evaluates every applicable structure-constant restriction for the
/// family's type and dimension case on the built instance; all residuals are
/// expected to be zero.
std::vector<std::pair<std::string, Scalar>> restriction_residuals(FamilyId id,
                                                                  const FamilyParams& params);

} // namespace zinbiel
