#pragma once

#include "zinbiel/algebra.hpp"

namespace zinbiel {

/// Natural gradation gr(A) = A^1/A^2 + A^2/A^3 + ...
/// Section bases are echelon complements of A^{i+1} inside A^i with pivot
/// preference to earlier basis positions, so that gr of an already graded
/// table reproduces the table verbatim. The graded algebra is indexed by the
/// pivot positions of the section vectors (one per original basis index).
struct GradedAlgebra {
    Algebra algebra;                 // induced products in the lifted basis
    std::vector<int> degrees;        // 1-based basis index -> degree
    std::vector<int> component_dims; // dim A^i - dim A^{i+1}
    std::vector<Mat> sections;       // lifted basis rows per degree
    std::vector<Poly> side_conditions;
};

/// Throws NotNilpotentError on non-nilpotent input and DomainError when the
/// filtration is not multiplicative (a product escapes its expected level).
GradedAlgebra natural_grading(const Algebra& a);

/// dims of A^i / A^{i+1}.
std::vector<int> grading_dims(const Algebra& a);

struct NaturallyGradedResult {
    enum class Status { Yes, No, Exhausted };
    Status status;
    Mat witness_map;     // when Yes: matrix of an isomorphism a -> gr(a)
    std::string detail;  // reason / residual-system note
};

/// Decides (within bounded search) whether a is isomorphic to gr(a).
/// Scope: gr(a) generated in degree one by at most two elements.
NaturallyGradedResult is_naturally_graded(const Algebra& a);

} // namespace zinbiel
