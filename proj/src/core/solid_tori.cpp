#include "core/solid_tori.hpp"

namespace itkc {

namespace {

void require_all_positive(const IteratedTorusKnot& knot, const char* what) {
    if (!knot.all_positive())
        throw UnsupportedRegime(std::string(what) +
                                " is only defined when every preferred-frame "
                                "coefficient is positive");
}

} // namespace

std::string torus_status_str(TorusStatus s) {
    switch (s) {
    case TorusStatus::Nonthickenable: return "nonthickenable";
    case TorusStatus::StandardNeighborhood: return "standard_neighborhood";
    case TorusStatus::BelowThreshold: return "below_threshold";
    }
    throw InternalInvariant("unknown torus status");
}

std::string threshold_rule_str(ThresholdRule r) {
    switch (r) {
    case ThresholdRule::TorusKnotBase: return "TorusKnotBase";
    case ThresholdRule::CaseI: return "CaseI";
    case ThresholdRule::CaseII: return "CaseII";
    }
    throw InternalInvariant("unknown threshold rule");
}

TorusClass torus_class(const IteratedTorusKnot& knot, std::size_t prefix, const Int& k) {
    require_all_positive(knot, "solid-torus catalog");
    require(k >= 0, "torus_class needs k >= 0");
    auto sub = knot.prefix(prefix);
    auto ab = compute_ab_recursive(sub).back();

    TorusClass out{
        prefix,
        k,
        UnreducedSlope(-(k + 1), ab.A * k + ab.B),
        // placeholder, replaced below
        UnreducedSlope(1, 1),
        Int(0),
        Int(0),
        TorusStatus::BelowThreshold,
    };
    out.slope_c =
        apply_map(UnimodularMap::frame_shear(ab.A), out.slope_cprime).sign_normalized();
    out.n = out.slope_cprime.multiplicity();
    ensure(out.n == gcd_int(k + 1, ab.A * k + ab.B), "dividing-curve count mismatch");
    out.dividing_curves = 2 * out.n;

    if (k == 0) {
        out.status = TorusStatus::StandardNeighborhood;
    } else {
        auto thr = thresholds(sub);
        out.status = (k >= thr.C.back()) ? TorusStatus::Nonthickenable
                                         : TorusStatus::BelowThreshold;
    }
    return out;
}

namespace {

// ceil(a / b) for b >= 1.
Int ceil_div(const Int& a, const Int& b) {
    if (a <= 0)
        return -((-a) / b);
    return (a + b - 1) / b;
}

} // namespace

ThresholdTable thresholds(const IteratedTorusKnot& knot) {
    require_all_positive(knot, "threshold table");
    auto ab = compute_ab_recursive(knot);
    auto widths = width_tb_recursion(knot);
    auto ps = knot.cabling_firsts();
    const auto& big_ps = knot.preferred_firsts();
    const auto& qs = knot.qs();

    ThresholdTable out;
    out.C.push_back(0);
    out.rule.push_back(ThresholdRule::TorusKnotBase);
    for (std::size_t i = 1; i < knot.length(); ++i) {
        Int c_prev = out.C.back();
        // least k' >= 1 with k'*q_i >= C_{i-1}
        Int k_prime = ceil_div(c_prev, qs[i]);
        if (k_prime < 1)
            k_prime = 1;
        if (widths[i].kase == WidthCase::CaseI) {
            out.rule.push_back(ThresholdRule::CaseI);
        } else {
            // additionally the candidate's boundary slope must clear the
            // cabling slope; in cleared-denominator form with p_i < 0:
            // q_i*(A_{i-1}*k + B_{i-1}) + p_i*(k+1) > 0, k = k'*q_i.
            // The left side collapses to k*P_i + B_i, increasing in k, so
            // the least admissible k is an exact ceiling.
            const Int& a_prev = ab[i - 1].A;
            const Int& b_prev = ab[i - 1].B;
            Int k_floor = ceil_div(1 - ab[i].B, big_ps[i]);
            Int from_slope = ceil_div(k_floor, qs[i]);
            if (from_slope > k_prime)
                k_prime = from_slope;
            Int k = k_prime * qs[i];
            ensure(qs[i] * (a_prev * k + b_prev) + ps[i] * (k + 1) > 0,
                   "threshold misses the slope condition");
            ensure(k_prime == 1 ||
                       (k_prime - 1) * qs[i] < c_prev ||
                       qs[i] * (a_prev * (k - qs[i]) + b_prev) + ps[i] * (k - qs[i] + 1) <= 0,
                   "threshold is not minimal");
            out.rule.push_back(ThresholdRule::CaseII);
        }
        out.C.push_back(k_prime);
    }
    return out;
}

void fill_thresholds(InvariantTable& table, const IteratedTorusKnot& knot) {
    if (!table.positive_regime)
        return;
    auto thr = thresholds(knot);
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        table.rows[i].C = thr.C[i];
}

EdgeRounding edge_rounding_slope(const IteratedTorusKnot& knot, const Int& k) {
    require(knot.length() >= 2, "edge rounding needs at least two cabling steps");
    require_all_positive(knot, "edge rounding");
    auto ps = knot.cabling_firsts();
    const auto& qs = knot.qs();
    auto ab = compute_ab_recursive(knot);
    std::size_t top = knot.length() - 1;

    const Int& p_top = ps[top];
    const Int& q_top = qs[top];
    Int a_r = ab[top - 1].A;
    Int b_r = ab[top - 1].B;

    require(k > 0 && k % q_top == 0, "k must be a positive multiple of the top q");

    // Applicability: the annulus construction needs either a positive top
    // coefficient in the cabling frame, or a cabling slope q/p beyond
    // 1/tbar(companion), or inside (1/tbar, -1/A_r). For a knot whose
    // preferred-frame coefficients are all positive this always holds;
    // the checks are kept explicit.
    Int tbar = width_tb_recursion(knot.prefix(top)).back().tbar;  // <= 0
    bool applicable = false;
    if (p_top > 0) {
        applicable = true;
    } else if (tbar < 0) {
        // q/p < 1/tbar  <=>  q*tbar < p   (p < 0, tbar < 0)
        if (q_top * tbar < p_top)
            applicable = true;
        // 1/tbar < q/p < -1/A_r  <=>  q*tbar > p and q*A_r + p > 0
        else if (q_top * tbar > p_top && q_top * a_r + p_top > 0)
            applicable = true;
    } else {
        // tbar = 0: the interval degenerates to q/p < -1/A_r.
        if (q_top * a_r + p_top > 0)
            applicable = true;
    }
    require(applicable, "edge rounding applicability condition violated");

    // Per-k admissibility: the companion candidate must carry a genuinely
    // negative boundary slope and sit above the cabling slope. In cleared
    // denominators the second condition is q*(A_r*k + B_r) + p*(k+1) > 0,
    // which is also the dividing-set intersection count of the cabling
    // curve with both tori.
    require(a_r * k + b_r > 0,
            "edge rounding applicability condition violated: companion candidate "
            "has nonpositive slope denominator at this k");
    require(q_top * (a_r * k + b_r) + p_top * (k + 1) > 0,
            "edge rounding applicability condition violated: cabling slope is not "
            "below the candidate's boundary slope at this k");

    Int k_prime = k / q_top;
    Int m = p_top * k_prime + a_r * k + b_r;
    ensure(m > 0, "dividing-curve index must be positive");

    // The curve (p_{r+1}, q_{r+1}) must intersect the dividing sets on the
    // two tori equally often.
    ensure(p_top + m * q_top == p_top * k + p_top + q_top * (a_r * k + b_r),
           "dividing-set intersection counts disagree");

    auto bezout = bezout_complement(p_top, q_top);
    const Int& p_c = bezout.first;
    const Int& q_c = bezout.second;

    Int denom = ab[top].A * k_prime + ab[top].B;
    ensure(denom > 0, "rounded-frame denominator must be positive");

    Int num_nrk = q_c * (a_r * k + b_r) + p_c * (q_top * k_prime + 1);
    Int num_nlr = q_c * (p_top * k_prime + a_r * k + b_r) + p_c;

    EdgeRounding out{
        k,
        k_prime,
        std::move(m),
        std::move(bezout),
        Slope(num_nrk, denom),
        Slope(num_nlr, denom),
        UnreducedSlope(num_nrk - num_nlr - 1, denom),
    };
    ensure(out.result_cprime.longitudes == -(out.k_prime + 1),
           "rounded boundary slope does not match the catalog form");
    return out;
}

std::vector<Slope> slope_sequence(const IteratedTorusKnot& knot, std::size_t prefix,
                                  const Int& k_max) {
    require_all_positive(knot, "slope sequence");
    require(k_max >= 1, "slope_sequence needs k_max >= 1");
    auto ab = compute_ab_recursive(knot.prefix(prefix)).back();

    std::vector<Slope> out;
    Slope limit(-1, ab.A);
    for (Int k = 1; k <= k_max; ++k) {
        Int denom = ab.A * k + ab.B;
        require(denom > 0, "slope sequence needs positive denominators on the range");
        Slope s(-(k + 1), denom);
        if (!out.empty())
            ensure(finite_less(out.back(), s), "slope sequence must strictly increase");
        ensure(finite_less(s, limit), "slope sequence must stay below -1/A");
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace itkc
