#include "core/slope.hpp"

namespace itkc {

namespace {

void check_not_both_zero(const Int& lambda, const Int& mu) {
    require(lambda != 0 || mu != 0, "invalid slope: 0/0");
}

// Splits "lambda/mu" after trimming whitespace; "inf" and "0" are handled
// by the callers.
std::string trim(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r')
            out.push_back(c);
    return out;
}

} // namespace

Slope::Slope(Int longitudes, Int meridians)
    : lambda_(std::move(longitudes)), mu_(std::move(meridians)) {
    check_not_both_zero(lambda_, mu_);
    Int g = gcd_int(lambda_, mu_);
    lambda_ /= g;
    mu_ /= g;
    if (mu_ < 0 || (mu_ == 0 && lambda_ < 0)) {
        lambda_ = -lambda_;
        mu_ = -mu_;
    }
}

std::string Slope::str() const {
    if (is_infinite())
        return "inf";
    if (lambda_ == 0)
        return "0";
    return int_str(lambda_) + "/" + int_str(mu_);
}

Slope Slope::parse(std::string_view text) {
    std::string t = trim(text);
    require(!t.empty(), "empty slope");
    if (t == "inf")
        return infinity();
    if (t == "0")
        return zero();
    auto slash = t.find('/');
    require(slash != std::string::npos, "slope '" + t + "' is not lambda/mu, 'inf' or '0'");
    return Slope(parse_int(std::string_view(t).substr(0, slash)),
                 parse_int(std::string_view(t).substr(slash + 1)));
}

UnreducedSlope::UnreducedSlope(Int lambda, Int mu)
    : longitudes(std::move(lambda)), meridians(std::move(mu)) {
    check_not_both_zero(longitudes, meridians);
}

UnreducedSlope UnreducedSlope::sign_normalized() const {
    if (meridians < 0 || (meridians == 0 && longitudes < 0))
        return UnreducedSlope(-longitudes, -meridians);
    return *this;
}

std::string UnreducedSlope::str() const {
    return int_str(longitudes) + "/" + int_str(meridians);
}

UnreducedSlope UnreducedSlope::parse(std::string_view text) {
    std::string t = trim(text);
    auto slash = t.find('/');
    require(slash != std::string::npos, "unreduced slope '" + t + "' is not lambda/mu");
    return UnreducedSlope(parse_int(std::string_view(t).substr(0, slash)),
                          parse_int(std::string_view(t).substr(slash + 1)));
}

std::pair<Slope, Int> reduce(const UnreducedSlope& s) {
    return {Slope(s.longitudes, s.meridians), s.multiplicity()};
}

UnimodularMap::UnimodularMap(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    require(abs_int(det()) == 1, "matrix is not unimodular");
}

UnimodularMap UnimodularMap::inverse() const {
    if (det() == 1)
        return UnimodularMap(d_, -b_, -c_, a_);
    return UnimodularMap(-d_, b_, c_, -a_);
}

Slope apply_map(const UnimodularMap& m, const Slope& s) {
    // Column vector (meridians, longitudes); unimodularity keeps the result
    // coprime, only the canonical sign needs restoring.
    return Slope(m.c() * s.meridians() + m.d() * s.longitudes(),
                 m.a() * s.meridians() + m.b() * s.longitudes());
}

UnreducedSlope apply_map(const UnimodularMap& m, const UnreducedSlope& s) {
    return UnreducedSlope(m.c() * s.meridians + m.d() * s.longitudes,
                          m.a() * s.meridians + m.b() * s.longitudes);
}

Int geometric_intersection(const Slope& s1, const Slope& s2) {
    return abs_int(s1.longitudes() * s2.meridians() - s2.longitudes() * s1.meridians());
}

bool farey_adjacent(const Slope& s1, const Slope& s2) {
    return geometric_intersection(s1, s2) == 1;
}

Slope farey_mediant(const Slope& s1, const Slope& s2) {
    require(farey_adjacent(s1, s2),
            "mediant of non-adjacent slopes " + s1.str() + ", " + s2.str());
    return Slope(s1.longitudes() + s2.longitudes(), s1.meridians() + s2.meridians());
}

std::pair<Int, Int> bezout_complement(const Int& p, const Int& q) {
    require(q >= 1, "bezout_complement requires q >= 1");
    require(gcd_int(p, q) == 1, "bezout_complement requires coprime input");
    if (q == 1)
        return {p - 1, Int(1)};
    // q' is the inverse of p modulo q, found by the extended Euclidean
    // algorithm on the least nonnegative residue.
    Int p_mod = ((p % q) + q) % q;
    Int old_r = p_mod, r = q;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int quotient = old_r / r;
        Int tmp = old_r - quotient * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quotient * s;
        old_s = s;
        s = tmp;
    }
    Int q_prime = ((old_s % q) + q) % q;
    Int p_prime = (p * q_prime - 1) / q;
    ensure(p * q_prime - p_prime * q == 1, "bezout identity failed");
    return {p_prime, q_prime};
}

int compare_finite(const Slope& s1, const Slope& s2) {
    require(!s1.is_infinite() && !s2.is_infinite(),
            "affine comparison needs finite slopes");
    Int cross = s1.longitudes() * s2.meridians() - s2.longitudes() * s1.meridians();
    return sign_int(cross);
}

bool finite_less(const Slope& s1, const Slope& s2) {
    return compare_finite(s1, s2) < 0;
}

} // namespace itkc
