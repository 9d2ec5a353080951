#pragma once

#include <string>

#include "zinbiel/algebra.hpp"
#include "zinbiel/spectra.hpp"

namespace zinbiel {

/// Graded change of generators: e1' = a e1 + b f1, f1' = c e1 + d f1.
/// Entries may be symbolic; nonvanishing of a d - b c is carried as a side
/// condition when it cannot be decided numerically.
struct BaseChange {
    Scalar a{1}, b{0}, c{0}, d{1};
    static BaseChange identity() { return {}; }
    Scalar det() const { return a * d - b * c; }
};

/// Chain layout of an adapted basis: labels e1..e_m then f1..f_k (k may be 0).
struct AdaptedShape {
    int e_len = 0;
    int f_len = 0;
};

/// Reads the shape off the labels; throws UnsupportedError when the labels do
/// not follow the adapted e/f naming.
AdaptedShape adapted_shape(const Algebra& a);

struct ExtendResult {
    bool ok = false;
    Mat map;                            // column i = image of src basis vector i in dst coords
    std::vector<Poly> side_conditions;  // nonvanishing assumptions (symbolic changes)
    // on failure:
    int fail_i = 0, fail_j = 0;
    std::string detail;
};

/// Extends the base change by the chain rule e_{i+1}' = e1' o e_i',
/// f_{i+1}' = e1' o f_i' inside dst, then checks that every src structure
/// constant is reproduced and that the resulting map is bijective.
ExtendResult extend_base_change(const Algebra& src, const Algebra& dst, const BaseChange& bc);

/// Isomorphism-invariant fingerprint.
struct Fingerprint {
    std::vector<int> series_dims;
    std::vector<int> char_partition;
    int witness_chain = 0;
    int deg1_sq_rank = 0;      // rank of u -> (v -> u o v) on gr_1 x gr_1 -> gr_2
    int annihilator_dim = 0;   // two-sided annihilator
    // projective rational zeros of u -> u o u on gr_1 (squaring-map data):
    // -2 not computed (dim gr_1 > 2 or symbolic), -1 the map vanishes, else count
    int sq_zero_points = -2;
    bool operator==(const Fingerprint& o) const = default;
    std::string str() const;
};

Fingerprint fingerprint(const Algebra& a);

struct IsoBounds {
    int height = 6;               // rational grid height for free unknowns
    long max_assignments = 200000;
    int max_depth = 24;
};

struct IsoResult {
    enum class Status { Yes, No, Exhausted };
    Status status = Status::Exhausted;
    BaseChange change;  // valid when Yes
    Mat map;            // valid when Yes
    std::string detail;
};

/// Bounded graded-isomorphism search for 2-generated naturally graded
/// algebras: fingerprints first (mismatch is a definitive No), then exact
/// solving of the base-change constraint system (linear extraction, rational
/// root search, bounded rational grid). Every Yes is re-verified by a full
/// homomorphism check; anything short of that is reported as Exhausted with
/// the residual system.
IsoResult iso_search(const Algebra& a1, const Algebra& a2, const IsoBounds& bounds = {});

} // namespace zinbiel
