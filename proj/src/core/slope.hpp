#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "core/ints.hpp"

namespace itkc {

// Exact rational slope arithmetic on the torus. A curve with mu meridians
// and lambda longitudes has slope lambda/mu (longitudes over meridians).
// The longitude itself is 1/0, written "inf"; the meridian is 0/1,
// written "0".

// Reduced slope in canonical form: gcd(|lambda|, |mu|) = 1, mu >= 0, and
// lambda = 1 when mu = 0. Canonical form makes equality structural and
// order comparisons a single cross-multiplication.
class Slope {
public:
    // Canonicalizes: divides out the gcd and fixes the sign so mu >= 0.
    Slope(Int longitudes, Int meridians);

    static Slope infinity() { return Slope(1, 0); }
    static Slope zero() { return Slope(0, 1); }

    const Int& longitudes() const { return lambda_; }
    const Int& meridians() const { return mu_; }
    bool is_infinite() const { return mu_ == 0; }

    bool operator==(const Slope& other) const = default;

    // "lambda/mu", with "inf" and "0" for the two distinguished slopes.
    std::string str() const;
    static Slope parse(std::string_view text);

private:
    Int lambda_;
    Int mu_;
};

// Slope with the gcd left in place. The reduction multiplicity carries
// geometric meaning (half the number of dividing curves), so these are a
// distinct type rather than a forgotten normalization.
struct UnreducedSlope {
    Int longitudes;
    Int meridians;

    UnreducedSlope(Int lambda, Int mu);

    Int multiplicity() const { return gcd_int(longitudes, meridians); }

    // Same ray with meridians >= 0 (longitudes > 0 when meridians = 0).
    UnreducedSlope sign_normalized() const;

    bool operator==(const UnreducedSlope& other) const = default;

    std::string str() const;
    static UnreducedSlope parse(std::string_view text);
};

// Canonical slope plus the reduction multiplicity; original = multiplicity
// times reduced, entrywise up to the canonical sign.
std::pair<Slope, Int> reduce(const UnreducedSlope& s);

// 2x2 integer matrix with determinant +-1, acting on coordinate columns
// (meridians, longitudes).
class UnimodularMap {
public:
    UnimodularMap(Int a, Int b, Int c, Int d);

    static UnimodularMap identity() { return UnimodularMap(1, 0, 0, 1); }

    // Change of basis from the cabling framing to the preferred framing:
    // [[1, pq], [0, 1]] shears meridian counts by pq per longitude.
    static UnimodularMap frame_shear(const Int& pq) {
        return UnimodularMap(1, pq, 0, 1);
    }

    UnimodularMap inverse() const;

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }
    Int det() const { return a_ * d_ - b_ * c_; }

    bool operator==(const UnimodularMap& other) const = default;

private:
    Int a_, b_, c_, d_;
};

Slope apply_map(const UnimodularMap& m, const Slope& s);
// Raw coordinates transform as-is; the multiplicity is preserved and no
// sign normalization is applied.
UnreducedSlope apply_map(const UnimodularMap& m, const UnreducedSlope& s);

// |lambda1*mu2 - lambda2*mu1|: minimal geometric intersection number of the
// two curve classes. Zero iff the slopes are equal.
Int geometric_intersection(const Slope& s1, const Slope& s2);

// Two slopes are joined by an edge of the Farey tessellation exactly when
// they intersect once.
bool farey_adjacent(const Slope& s1, const Slope& s2);

// Componentwise sum of the canonical representatives. Requires adjacency;
// the result is adjacent to both parents.
Slope farey_mediant(const Slope& s1, const Slope& s2);

// For coprime p, q with q >= 1, the unique (p', q') with p*q' - p'*q = 1
// and 0 <= q' < q; for q = 1 the normalized answer is (p - 1, 1).
std::pair<Int, Int> bezout_complement(const Int& p, const Int& q);

// Affine order on finite slopes; throws on an infinite input. All interval
// endpoints in this library are finite rationals, so no circular order on
// the boundary of the hyperbolic disc is needed.
int compare_finite(const Slope& s1, const Slope& s2);
bool finite_less(const Slope& s1, const Slope& s2);

} // namespace itkc
