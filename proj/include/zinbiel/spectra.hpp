#pragma once

#include <cstdint>
#include <optional>

#include "zinbiel/algebra.hpp"

namespace zinbiel {

/// Matrix of the left multiplication operator L_x; column j is x o e_j.
Mat left_mult_matrix(const Algebra& a, const Vec& x);

/// Jordan block sizes of a nilpotent matrix as a descending partition,
/// computed from ranks of powers: #blocks of size >= s equals
/// rank(M^{s-1}) - rank(M^s). Throws DomainError when M is not nilpotent.
std::vector<int> jordan_type_nilpotent(const Mat& m);

/// Block sizes read along the diagonal when the basis is adapted to L_x
/// (every column is zero or a single unit step to the next basis vector);
/// nullopt when the basis is not adapted in that sense.
std::optional<std::vector<int>> jordan_layout(const Algebra& a, const Vec& x);

/// Maximal m with L_x^{m-1}(x) != 0 (so 1 for any nonzero x in an abelian
/// algebra). Requires x != 0 and L_x nilpotent.
int chain_length(const Algebra& a, const Vec& x);

struct CharSequence {
    std::vector<int> partition; // descending, sums to dim
    Vec witness;                // attaining element, not in A^2
};

struct CharSeqStrategy {
    int grid_height = 3;       // integer grid on a complement of A^2
    int samples = 0;           // extra random rational samples on the whole space
    int sample_height = 10;
    std::uint64_t seed = 1;
    std::size_t max_candidates = 20000;
};

/// Lexicographic maximum of Jordan types over sampled x in A \ A^2, with a
/// witness. The result is a certified lower bound for the true characteristic
/// sequence, attained at the witness.
CharSequence char_sequence(const Algebra& a, const CharSeqStrategy& strategy = {});

enum class AlgebraType { I, II };

/// Type I when the witness chain has length n-p, type II when it has length p
/// (n >= 2p). Requires a two-part partition; reports I when both coincide.
AlgebraType detect_type(const Algebra& a, const CharSequence& cs);

} // namespace zinbiel
