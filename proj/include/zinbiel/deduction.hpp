#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"

namespace zinbiel {

/// Multiplication table with some products known and the rest formal:
/// each unknown product carries one fresh unknown per coordinate.
struct PartialTable {
    int dim = 0;
    std::map<std::pair<int, int>, SparseVec> known;
    std::set<std::pair<int, int>> unknown;

    void validate() const; // disjoint domains, indices in range
};

/// One linear constraint sum coeff * u + constant = 0 over the unknowns
/// u = (pair, coordinate).
struct LinearConstraint {
    struct Unknown {
        int i, j, coord;
        auto operator<=>(const Unknown&) const = default;
    };
    std::map<Unknown, Scalar> coeffs;
    Scalar constant;
};

struct PropagateResult {
    bool complete = true;          // false when the budget ran out
    long instances_expanded = 0;
    long quadratic_skips = 0;      // identity instances needing unknown*unknown
    std::vector<LinearConstraint> constraints; // reduced system (echelon)

    struct Contradiction {
        int basis_index;           // basis vector forced to zero
        int ti, tj, tk;            // identity instance that closed the loop
        std::string identity;      // "zinbiel" or "derived"
    };
    std::optional<Contradiction> contradiction;

    /// True when the reduced system pins the given unknown coordinate to zero.
    bool forces_zero(int i, int j, int coord) const;
};

/// Enumerates Zinbiel-identity instances (ei o ej) o ek = ei o (ej o ek) +
/// ei o (ek o ej) and the derived identity (a o b) o c = (a o c) o b over
/// basis triples in lexicographic order (derived first within each triple),
/// extracting the linear fragment: instances that would multiply two unknowns
/// are skipped and counted. The budget bounds expanded instances.
PropagateResult propagate(const PartialTable& t, long budget);

/// The Proposition 3.1 configuration: dim 5, e1 o e1 = 0,
/// e1 o e_i = e_{i+1} for 2 <= i <= 4, e1 o e5 = 0, all other products
/// unknown.  propagate reports e5 forced to zero.
PartialTable prop31_table();

} // namespace zinbiel
