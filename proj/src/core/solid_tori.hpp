#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/invariants.hpp"
#include "core/slope.hpp"

namespace itkc {

// Catalog of the candidate non-thickenable solid tori N_r^k around a
// prefix knot: boundary slopes in both framings, dividing-curve counts
// and the threshold beyond which they actually fail to thicken.

enum class TorusStatus {
    Nonthickenable,         // k >= C_r: exists and fails to thicken
    StandardNeighborhood,   // k = 0: standard neighborhood of a maximal-tb representative
    BelowThreshold          // 0 < k < C_r: no verdict recorded
};

std::string torus_status_str(TorusStatus s);

struct TorusClass {
    std::size_t r = 0;            // prefix index
    Int k;
    UnreducedSlope slope_cprime;  // -(k+1)/(A_r*k + B_r)
    UnreducedSlope slope_c;       // same class in the preferred frame, sign-normalized
    Int n;                        // gcd(k+1, A_r*k + B_r)
    Int dividing_curves;          // 2n
    TorusStatus status = TorusStatus::BelowThreshold;

    bool operator==(const TorusClass& other) const = default;
};

// Requires an all-positive knot; k >= 0.
TorusClass torus_class(const IteratedTorusKnot& knot, std::size_t prefix, const Int& k);

enum class ThresholdRule { TorusKnotBase, CaseI, CaseII };

std::string threshold_rule_str(ThresholdRule r);

struct ThresholdTable {
    std::vector<Int> C;
    std::vector<ThresholdRule> rule;
};

// C_1 = 0: every candidate around a positive torus knot fails to thicken.
// For i >= 2, C_i is the least k' >= 1 whose lift k = k'*q_i clears the
// previous threshold, and in Case II additionally satisfies the slope
// condition q_i*(A_{i-1}*k + B_{i-1}) + p_i*(k+1) > 0 (the cabling slope
// must lie below the boundary slope of the torus being used). These are
// sufficiency thresholds; minimality is not claimed.
ThresholdTable thresholds(const IteratedTorusKnot& knot);

// Merge the C column into an invariant table (all-positive knots only;
// a no-op for tables outside the regime).
void fill_thresholds(InvariantTable& table, const IteratedTorusKnot& knot);

// The boundary-slope computation for the rounded solid torus built from a
// candidate around the companion, an annulus, and a knot neighborhood.
// Inputs: the full (r+1)-step knot and a positive k divisible by q_{r+1}.
struct EdgeRounding {
    Int k_inner;                  // k, the companion-level index
    Int k_prime;                  // k / q_{r+1}
    Int m;                        // p_{r+1}*k' + A_r*k + B_r
    std::pair<Int, Int> bezout;   // (p', q') with p_{r+1}q' - p'q_{r+1} = 1
    Slope slope_nrk_cpp;          // companion torus boundary, rotated frame
    Slope slope_nlr_cpp;          // knot-neighborhood boundary, rotated frame
    UnreducedSlope result_cprime; // -(k'+1)/(A_{r+1}k' + B_{r+1}), unreduced
};

EdgeRounding edge_rounding_slope(const IteratedTorusKnot& knot, const Int& k);

// Boundary slopes -(k+1)/(A_i*k + B_i) for k = 1..k_max, reduced. The
// sequence strictly increases toward -1/A_i; both facts are asserted.
std::vector<Slope> slope_sequence(const IteratedTorusKnot& knot, std::size_t prefix,
                                  const Int& k_max);

} // namespace itkc
