#include "core/invariants.hpp"

namespace itkc {

namespace {

void require_all_positive(const IteratedTorusKnot& knot, const char* what) {
    if (!knot.all_positive())
        throw UnsupportedRegime(std::string(what) +
                                " is only defined when every preferred-frame "
                                "coefficient is positive");
}

} // namespace

std::vector<ABPair> compute_ab_recursive(const IteratedTorusKnot& knot) {
    auto ps = knot.cabling_firsts();
    const auto& qs = knot.qs();
    std::vector<ABPair> out;
    out.reserve(ps.size());
    Int a_prev = 0, b_prev = 1;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        Int a = qs[i] * qs[i] * a_prev + ps[i] * qs[i];
        Int b = qs[i] * b_prev + ps[i];
        out.push_back({a, b});
        a_prev = std::move(a);
        b_prev = std::move(b);
    }
    return out;
}

std::vector<ABPair> compute_ab_closed(const IteratedTorusKnot& knot) {
    auto ps = knot.cabling_firsts();
    const auto& qs = knot.qs();
    std::vector<ABPair> out;
    out.reserve(ps.size());
    for (std::size_t r = 1; r <= ps.size(); ++r) {
        // A_r = sum_a p_a * prod_{b=a+1..r} q_b * prod_{b=a..r} q_b
        // B_r = sum_a p_a * prod_{b=a+1..r} q_b + prod_{a=1..r} q_a
        // with the empty product equal to 1.
        Int a_sum = 0, b_sum = 0, q_all = 1;
        for (std::size_t alpha = 1; alpha <= r; ++alpha) {
            Int tail = 1;
            for (std::size_t beta = alpha + 1; beta <= r; ++beta)
                tail *= qs[beta - 1];
            a_sum += ps[alpha - 1] * tail * (tail * qs[alpha - 1]);
            b_sum += ps[alpha - 1] * tail;
        }
        for (std::size_t alpha = 1; alpha <= r; ++alpha)
            q_all *= qs[alpha - 1];
        out.push_back({a_sum, b_sum + q_all});
    }
    ensure(out == compute_ab_recursive(knot), "summation disagrees with the recursion");
    return out;
}

std::vector<Int> euler_characteristic_table(const IteratedTorusKnot& knot) {
    require_all_positive(knot, "euler characteristic");
    const auto& ps = knot.preferred_firsts();
    const auto& qs = knot.qs();
    std::vector<Int> out;
    out.reserve(ps.size());
    Int chi = -(ps[0] * qs[0] - ps[0] - qs[0]);
    out.push_back(chi);
    for (std::size_t i = 1; i < ps.size(); ++i) {
        chi = qs[i] * chi - ps[i] * qs[i] + ps[i];
        out.push_back(chi);
    }
    // Cross-check against the product invariants: -chi_i = A_i - B_i.
    auto ab = compute_ab_recursive(knot);
    for (std::size_t i = 0; i < out.size(); ++i)
        ensure(out[i] == ab[i].B - ab[i].A,
               "euler characteristic recursion disagrees with A - B");
    return out;
}

Int euler_characteristic(const IteratedTorusKnot& knot) {
    return euler_characteristic_table(knot).back();
}

Int genus(const IteratedTorusKnot& knot) {
    Int chi = euler_characteristic(knot);
    ensure((1 - chi) % 2 == 0, "euler characteristic of a knot must be odd");
    return (1 - chi) / 2;
}

bool fails_utp(const IteratedTorusKnot& knot) {
    return knot.all_positive();
}

bool supports_standard_structure(const IteratedTorusKnot& knot) {
    return fails_utp(knot);
}

std::string width_case_str(WidthCase c) {
    switch (c) {
    case WidthCase::Base: return "Base";
    case WidthCase::CaseI: return "CaseI";
    case WidthCase::CaseII: return "CaseII";
    }
    throw InternalInvariant("unknown width case");
}

std::vector<WidthRow> width_tb_recursion(const IteratedTorusKnot& knot) {
    require_all_positive(knot, "width/tb recursion");
    const auto& ps = knot.preferred_firsts();
    const auto& qs = knot.qs();
    auto ab = compute_ab_recursive(knot);

    std::vector<WidthRow> out;
    out.reserve(ps.size());
    Int w = ps[0] * qs[0] - ps[0] - qs[0];
    out.push_back({w, w, w - ab[0].A, WidthCase::Base});
    for (std::size_t i = 1; i < ps.size(); ++i) {
        // Compare P_i/q_i with w_{i-1} by cross-multiplication. Equality
        // would force q_i to divide P_i.
        Int lhs = ps[i];
        Int rhs = qs[i] * w;
        ensure(lhs != rhs, "cabling fraction equals the width");
        Int tbbar;
        WidthCase kase;
        if (lhs > rhs) {
            kase = WidthCase::CaseI;
            tbbar = ab[i].A - (ps[i] - qs[i] * w);
            ensure(tbbar > 0, "maximal tb must stay positive");
        } else {
            kase = WidthCase::CaseII;
            tbbar = ab[i].A;
        }
        w = tbbar;
        ensure(w > 0 && w <= ab[i].A, "width out of range (0, A]");
        out.push_back({tbbar, w, w - ab[i].A, kase});
    }
    return out;
}

Int max_self_linking(const IteratedTorusKnot& knot) {
    require_all_positive(knot, "maximal self-linking number");
    auto ab = compute_ab_recursive(knot);
    return ab.back().A - ab.back().B;
}

InvariantTable invariant_table(const IteratedTorusKnot& knot) {
    InvariantTable table;
    table.positive_regime = knot.all_positive();

    auto ab = compute_ab_recursive(knot);
    const auto& big_ps = knot.preferred_firsts();
    auto small_ps = knot.cabling_firsts();
    const auto& qs = knot.qs();

    table.rows.resize(knot.length());
    for (std::size_t i = 0; i < knot.length(); ++i) {
        auto& row = table.rows[i];
        row.A = ab[i].A;
        row.B = ab[i].B;
        row.P = big_ps[i];
        row.p = small_ps[i];
        row.q = qs[i];
    }
    if (table.positive_regime) {
        auto chis = euler_characteristic_table(knot);
        auto widths = width_tb_recursion(knot);
        for (std::size_t i = 0; i < knot.length(); ++i) {
            auto& row = table.rows[i];
            row.chi = chis[i];
            row.genus = (1 - chis[i]) / 2;
            row.tbbar = widths[i].tbbar;
            row.width = widths[i].width;
            row.tbar = widths[i].tbar;
            row.kase = widths[i].kase;
        }
    }
    return table;
}

} // namespace itkc
