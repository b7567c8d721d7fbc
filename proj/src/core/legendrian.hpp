#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/invariants.hpp"
#include "core/knot.hpp"

namespace itkc {

// Exact bookkeeping for Legendrian and transverse representatives:
// stabilizations, push-offs, the reachable slice of the mountain range,
// and the enumeration of cablings carrying two distinct Legendrian classes
// at the same maximal (tb, rot).

enum class Sign { Plus, Minus };

struct LegendrianClass {
    Int tb;
    Int rot;
    std::string label;

    bool operator==(const LegendrianClass& other) const = default;
};

struct TransverseClass {
    Int sl;
    std::string label;

    bool operator==(const TransverseClass& other) const = default;
};

// tb drops by one; rot moves by +1 (positive) or -1 (negative).
LegendrianClass stabilize(const LegendrianClass& l, Sign sign);

// sl(T_+) = tb - rot, sl(T_-) = tb + rot.
TransverseClass transverse_pushoff(const LegendrianClass& l, Sign sign);

// Rotation number of a (P, q) ruling: P*rot(meridian disc boundary) +
// q*rot(longitude surface boundary).
Int ruling_rotation(const Int& P, const Int& q, const Int& rot_meridian,
                    const Int& rot_longitude);

// The known piece of the mountain range for an all-positive knot:
// Ltilde_r^± = (A_r - P_r, ±(P_r - B_r)) and L_r^± = (0, ±(A_r - B_r)),
// joined by stabilization chains of length A_r - P_r. For r = 1 only the
// L_1^± points are emitted. Ordered by tb descending, rot ascending.
std::vector<LegendrianClass> mountain_range_slice(const IteratedTorusKnot& knot);

// One enumerated cabling that carries two Legendrian witnesses at maximal
// tb with equal rotation numbers. The cable is (A_r - B_r, k+1) in the
// preferred frame, equivalently (-(A_r*k + B_r), k+1) in the cabling frame.
struct NonSimpleCabling {
    IteratedTorusKnot base;
    Int k;
    CablingPair cable_c;
    CablingPair cable_cprime;
    Int tbbar;          // (k+1)(A_r - B_r)
    Int rot_magnitude;  // k(A_r - B_r); witnesses appear at ± this value
    Int slbar;          // (2k+1)(A_r - B_r)
    Int chi_cable;      // (2k+1)(B_r - A_r)

    bool operator==(const NonSimpleCabling& other) const = default;
};

// All k <= k_max with: k+1 strictly between the reciprocal-slope interval
// bounds (equivalently k+1 > A_r - B_r), two dividing curves
// (gcd(k+1, A_r - B_r) = 1), and k at or above the non-thickenability
// threshold. The list is a certified sublist of the infinite family, never
// a superset.
std::vector<NonSimpleCabling> enumerate_nonsimple_cablings(const IteratedTorusKnot& knot,
                                                           const Int& k_max);

// Recognizes a knot whose top pair is (A_r - B_r, k+1) over its own
// prefix and satisfies the enumeration criteria; empty otherwise.
std::optional<NonSimpleCabling> as_nonsimple_cabling(const IteratedTorusKnot& knot);

struct WitnessPairs {
    // Divides on the non-thickenable catalog torus, at (tbbar, -rot/+rot).
    std::vector<LegendrianClass> on_nonthickenable;
    // Divides on the thickenable torus with the same boundary slope, at
    // the same (tb, rot) points; a distinct Legendrian class by
    // construction (recorded, not re-proven here).
    std::vector<LegendrianClass> on_thickenable;
    // Push-off self-linking at the extremes: both equal slbar.
    Int sl_negative_pushoff_of_plus;
    Int sl_positive_pushoff_of_minus;
};

WitnessPairs witness_pairs(const NonSimpleCabling& c);

// Rotation numbers available to divides on tori that thicken to the
// widest competing boundary slope: ±(p_{r+1} + (A_r - 1)q_{r+1} +
// q_{r+1}*rho) over every rho the slice yields at tb = 1. Contains
// ±k(A_r - B_r) and is closed under negation. Sorted ascending.
std::vector<Int> rotation_numbers_at_width_boundary(const NonSimpleCabling& c);

} // namespace itkc
