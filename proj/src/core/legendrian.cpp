#include "core/legendrian.hpp"

#include <algorithm>
#include <set>

#include "core/solid_tori.hpp"

namespace itkc {

namespace {

void require_all_positive(const IteratedTorusKnot& knot, const char* what) {
    if (!knot.all_positive())
        throw UnsupportedRegime(std::string(what) +
                                " is only defined when every preferred-frame "
                                "coefficient is positive");
}

std::string subscript(std::size_t r, Sign s) {
    return "_" + std::to_string(r) + (s == Sign::Plus ? "^+" : "^-");
}

// Rotation numbers of representatives at tb = 1 reachable from the slice.
// For r >= 2 these are the stabilization fans descending from Ltilde_r^±;
// for r = 1 the single destabilization of L_1^∓ (forced to rot
// ±(A_1 - B_1 - 1) by the self-linking bound).
std::set<Int> slice_rotations_at_tb_one(const IteratedTorusKnot& knot) {
    auto ab = compute_ab_recursive(knot).back();
    Int edge = ab.A - ab.B - 1;
    std::set<Int> rots;
    if (knot.length() == 1) {
        rots.insert(edge);
        rots.insert(-edge);
        return rots;
    }
    const Int& p_r = knot.preferred_firsts().back();
    Int tb_tilde = ab.A - p_r;
    Int chain = tb_tilde - 1;  // stabilizations needed to reach tb = 1
    ensure(chain >= 0, "slice point sits below tb = 1");
    for (int s : {+1, -1}) {
        Int center = s * (p_r - ab.B);
        for (Int d = -chain; d <= chain; d += 2)
            rots.insert(center + d);
    }
    return rots;
}

} // namespace

LegendrianClass stabilize(const LegendrianClass& l, Sign sign) {
    return {l.tb - 1, l.rot + (sign == Sign::Plus ? 1 : -1), l.label};
}

TransverseClass transverse_pushoff(const LegendrianClass& l, Sign sign) {
    return {sign == Sign::Plus ? Int(l.tb - l.rot) : Int(l.tb + l.rot), l.label};
}

Int ruling_rotation(const Int& P, const Int& q, const Int& rot_meridian,
                    const Int& rot_longitude) {
    return P * rot_meridian + q * rot_longitude;
}

std::vector<LegendrianClass> mountain_range_slice(const IteratedTorusKnot& knot) {
    require_all_positive(knot, "mountain range slice");
    auto ab = compute_ab_recursive(knot).back();
    std::size_t r = knot.length();
    Int sl_max = ab.A - ab.B;

    std::vector<LegendrianClass> out;
    if (r >= 2) {
        const Int& p_r = knot.preferred_firsts().back();
        Int tb_tilde = ab.A - p_r;
        Int rot_tilde = p_r - ab.B;
        ensure(tb_tilde > 0, "ruling representative must sit above tb = 0");
        LegendrianClass plus{tb_tilde, rot_tilde, "Ltilde" + subscript(r, Sign::Plus)};
        LegendrianClass minus{tb_tilde, -rot_tilde, "Ltilde" + subscript(r, Sign::Minus)};
        // The opposite-sign push-offs of the two ruling representatives
        // realize the maximal self-linking number.
        ensure(transverse_pushoff(plus, Sign::Minus).sl == sl_max &&
                   transverse_pushoff(minus, Sign::Plus).sl == sl_max,
               "push-off self-linking must equal A - B");
        out.push_back(minus);
        out.push_back(plus);
    }
    out.push_back({0, -sl_max, "L" + subscript(r, Sign::Minus)});
    out.push_back({0, sl_max, "L" + subscript(r, Sign::Plus)});

    std::sort(out.begin(), out.end(), [](const LegendrianClass& a, const LegendrianClass& b) {
        if (a.tb != b.tb)
            return a.tb > b.tb;
        return a.rot < b.rot;
    });
    return out;
}

namespace {

// Criteria: boundary slope strictly inside the open interval (equivalent
// to k+1 > A - B), two dividing curves, and a certified non-thickenable
// companion.
bool qualifies(const Int& k, const Int& span, const Int& c_r) {
    return k + 1 > span && gcd_int(k + 1, span) == 1 && k >= c_r;
}

NonSimpleCabling make_cabling(const IteratedTorusKnot& base, const Int& k,
                              const ABPair& ab, const Int& span) {
    // The witnesses are divides of the (span, k+1) ruling; their rotation
    // numbers come out of the meridian-disc term alone.
    Int rot = ruling_rotation(span, k + 1, k, 0);
    return {
        base,
        k,
        CablingPair{span, k + 1},
        CablingPair{-(ab.A * k + ab.B), k + 1},
        (k + 1) * span,
        rot,
        (2 * k + 1) * span,
        (2 * k + 1) * (ab.B - ab.A),
    };
}

} // namespace

std::vector<NonSimpleCabling> enumerate_nonsimple_cablings(const IteratedTorusKnot& knot,
                                                           const Int& k_max) {
    require_all_positive(knot, "non-simple cabling enumeration");
    require(k_max >= 1, "enumeration needs k_max >= 1");
    auto ab = compute_ab_recursive(knot).back();
    Int span = ab.A - ab.B;
    Int c_r = thresholds(knot).C.back();

    std::vector<NonSimpleCabling> out;
    for (Int k = 1; k <= k_max; ++k)
        if (qualifies(k, span, c_r))
            out.push_back(make_cabling(knot, k, ab, span));
    return out;
}

std::optional<NonSimpleCabling> as_nonsimple_cabling(const IteratedTorusKnot& knot) {
    if (knot.length() < 2 || !knot.all_positive())
        return std::nullopt;
    auto base = knot.prefix(knot.length() - 1);
    auto ab = compute_ab_recursive(base).back();
    Int span = ab.A - ab.B;
    if (knot.preferred_firsts().back() != span)
        return std::nullopt;
    Int k = knot.qs().back() - 1;
    if (!qualifies(k, span, thresholds(base).C.back()))
        return std::nullopt;
    return make_cabling(base, k, ab, span);
}

WitnessPairs witness_pairs(const NonSimpleCabling& c) {
    std::size_t level = c.base.length() + 1;
    std::string on_n = " divide on N_" + std::to_string(c.base.length()) + "^" + int_str(c.k);
    std::string on_hat = " divide on Nhat_" + std::to_string(c.base.length());

    WitnessPairs out;
    out.on_nonthickenable = {
        {c.tbbar, -c.rot_magnitude, "L" + subscript(level, Sign::Minus) + on_n},
        {c.tbbar, c.rot_magnitude, "L" + subscript(level, Sign::Plus) + on_n},
    };
    out.on_thickenable = {
        {c.tbbar, -c.rot_magnitude, "Lhat" + subscript(level, Sign::Minus) + on_hat},
        {c.tbbar, c.rot_magnitude, "Lhat" + subscript(level, Sign::Plus) + on_hat},
    };
    out.sl_negative_pushoff_of_plus =
        transverse_pushoff(out.on_nonthickenable[1], Sign::Minus).sl;
    out.sl_positive_pushoff_of_minus =
        transverse_pushoff(out.on_nonthickenable[0], Sign::Plus).sl;
    ensure(out.sl_negative_pushoff_of_plus == c.slbar &&
               out.sl_positive_pushoff_of_minus == c.slbar,
           "witness push-offs must realize the maximal self-linking number");
    return out;
}

std::vector<Int> rotation_numbers_at_width_boundary(const NonSimpleCabling& c) {
    auto ab = compute_ab_recursive(c.base).back();
    const Int& p_cable = c.cable_cprime.first;
    const Int& q_cable = c.cable_cprime.q;

    std::set<Int> out;
    for (const Int& rho : slice_rotations_at_tb_one(c.base)) {
        Int v = p_cable + (ab.A - 1) * q_cable + q_cable * rho;
        out.insert(v);
        out.insert(-v);
    }
    ensure(out.count(c.rot_magnitude) == 1 && out.count(-c.rot_magnitude) == 1,
           "width-boundary rotation numbers must contain ±k(A - B)");
    return {out.begin(), out.end()};
}

} // namespace itkc
