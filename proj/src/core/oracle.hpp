#pragma once

#include <string>
#include <vector>

#include "core/invariants.hpp"
#include "core/knot.hpp"

namespace itkc {

// Independent brute-force verifiers. Each oracle is a separate code path
// from the module it checks: the summation oracle re-derives the product
// invariants term by term, the spanning-surface oracle uses a different
// closed form, and the framing oracle converts coefficients through
// explicit shear matrices. All comparisons are exact; there are no
// tolerances anywhere.

struct OracleReport {
    std::string check;
    std::string inputs;
    std::string expected;
    std::string actual;
    bool pass = false;

    bool operator==(const OracleReport& other) const = default;
};

// Literal term-by-term evaluation of the two defining sums for (A_r, B_r),
// with the empty product convention. Checks compute_ab_recursive.
ABPair ab_by_summation(const IteratedTorusKnot& knot);

// Euler characteristic by the product closed form
//   chi = prod u_i - sum_i v_i (u_i - 1) prod_{j>i} u_j
// where (u_1, v_1) = (P_1, q_1) and (u_i, v_i) = (q_i, P_i) for i >= 2
// (the two coordinates swap roles after the first step). Worked example
// for C:(2,3),(7,2): u = (2,2), v = (3,7), so
//   chi = 2*2 - (3*(2-1)*2 + 7*(2-1)) = 4 - 13 = -9.
// Checks euler_characteristic; must equal -(A_r - B_r).
Int chi_by_bw_formula(const IteratedTorusKnot& knot);

// gcd(k+1, A*k+B) = gcd(k+1, A-B) for every 0 <= k <= k_max; the
// dividing-curve count of a catalog torus depends only on k+1 mod (A-B).
OracleReport gcd_reduction_check(const Int& A, const Int& B, const Int& k_max);

// Brute cross-multiplied membership of -(k+1)/(A*k+B) in the open
// interval (-1/(A-1), -1/A) equals the criterion k+1 > A-B, for every
// 0 <= k <= k_max.
OracleReport interval_membership_check(const Int& A, const Int& B, const Int& k_max);

// Frame conversion through the explicit shear matrices [[1, ±P*q],[0,1]]
// agrees with to_frame, and the matrix round trip is the identity.
OracleReport framing_roundtrip_check(const IteratedTorusKnot& knot);

struct VerifyRanges {
    long r_max = 4;
    long q_max = 5;
    long p_max = 9;
    long k_max = 100;
    long cases = 200;

    // Grammar: comma-separated "key<=value" with keys r, q, p, k, cases.
    static VerifyRanges parse(const std::string& text);
    std::string str() const;

    bool operator==(const VerifyRanges& other) const = default;
};

struct VerifyOutcome {
    VerifyRanges ranges;
    std::vector<OracleReport> reports;
    bool all_pass = false;
};

// Runs every oracle over deterministic pseudo-random inputs drawn from the
// ranges. inject_fault names a check whose oracle value is perturbed for
// one case; this exists so the harness can prove a failing check is
// actually detected.
VerifyOutcome run_verify(const VerifyRanges& ranges, const std::string& inject_fault = "");

} // namespace itkc
