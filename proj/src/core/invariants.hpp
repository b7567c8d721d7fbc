#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/knot.hpp"

namespace itkc {

// The two product invariants attached to each cabling prefix. A_r is also
// P_r*q_r, the framing shear between the two framings at level r.
struct ABPair {
    Int A;
    Int B;

    bool operator==(const ABPair& other) const = default;
};

// Recursion A_i = q_i^2*A_{i-1} + p_i*q_i, B_i = q_i*B_{i-1} + p_i with
// seeds A_0 = 0, B_0 = 1. Defined for any coefficient signs.
std::vector<ABPair> compute_ab_recursive(const IteratedTorusKnot& knot);

// Direct summation form of the same quantities; must agree with the
// recursion exactly. Kept as a second algebraic route, not an alias.
std::vector<ABPair> compute_ab_closed(const IteratedTorusKnot& knot);

// Euler characteristic of a minimal-genus spanning surface, via the
// cabling recursion chi_i = q_i*chi_{i-1} - P_i*q_i + P_i seeded with the
// torus-knot value -(p_1*q_1 - p_1 - q_1). Only proved when every P_i > 0;
// anything else throws UnsupportedRegime rather than guessing.
Int euler_characteristic(const IteratedTorusKnot& knot);
std::vector<Int> euler_characteristic_table(const IteratedTorusKnot& knot);

// g = (1 - chi)/2.
Int genus(const IteratedTorusKnot& knot);

// A knot admits arbitrarily fat non-thickenable solid tori exactly when
// every cabling step is positive in the preferred framing.
bool fails_utp(const IteratedTorusKnot& knot);

// Same truth value as fails_utp: these knots are precisely the ones whose
// fibration supports the standard tight contact structure.
bool supports_standard_structure(const IteratedTorusKnot& knot);

enum class WidthCase { Base, CaseI, CaseII };

std::string width_case_str(WidthCase c);

struct WidthRow {
    Int tbbar;  // maximal Thurston-Bennequin number
    Int width;  // contact width, equal to tbbar in this regime
    Int tbar;   // maximal twisting in the cabling frame: tbbar - A
    WidthCase kase;

    bool operator==(const WidthRow& other) const = default;
};

// Per-prefix maximal tb / width / twisting for all-positive knots.
// Base: w_1 = p_1*q_1 - p_1 - q_1. Step: if P_i/q_i > w_{i-1} then
// w_i = A_i - (P_i - q_i*w_{i-1}) (Case I), if P_i/q_i < w_{i-1} then
// w_i = A_i (Case II); equality cannot happen for coprime P_i, q_i with
// q_i > 1. Comparisons are exact cross-multiplications.
std::vector<WidthRow> width_tb_recursion(const IteratedTorusKnot& knot);

// Maximal self-linking number -chi = A_r - B_r (all-positive regime).
Int max_self_linking(const IteratedTorusKnot& knot);

// One row of the per-prefix invariant table. A, B, P, p, q are defined for
// any signs; the remaining columns only exist in the all-positive regime.
struct InvariantRow {
    Int A, B, P, p, q;
    std::optional<Int> chi, genus, tbbar, width, tbar;
    std::optional<Int> C;  // non-thickenability threshold, filled by the catalog layer
    std::optional<WidthCase> kase;

    bool operator==(const InvariantRow& other) const = default;
};

struct InvariantTable {
    std::vector<InvariantRow> rows;
    bool positive_regime = false;

    bool operator==(const InvariantTable& other) const = default;
};

// Assembles everything except the C column (which lives with the
// solid-torus catalog, see solid_tori.hpp).
InvariantTable invariant_table(const IteratedTorusKnot& knot);

} // namespace itkc
