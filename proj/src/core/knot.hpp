#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "core/ints.hpp"

namespace itkc {

// The two framings on the boundary torus of a knot neighborhood. Frame C
// is the preferred (surface) framing, with cabling coefficients written
// P_i; frame C' is the framing induced by the cabling torus, with
// coefficients written p_i. The same curve satisfies P = q*A_prev + p,
// where A_prev is the preferred-frame product invariant of the companion.
enum class Frame { C, Cprime };

// One cabling step: (first, q) where first is the meridian coordinate in
// the chosen frame and q > 1 the longitude coordinate.
struct CablingPair {
    Int first;
    Int q;

    bool operator==(const CablingPair& other) const = default;
};

// A validated iterated torus knot: an ordered tuple of coprime cabling
// pairs (base pair with |first| > 1), tagged with the frame its
// coefficients are expressed in. Storage is canonical in frame C; the
// frame tag controls which coefficients pairs() exposes.
class IteratedTorusKnot {
public:
    static IteratedTorusKnot validate(const std::vector<CablingPair>& raw, Frame frame);

    Frame frame() const { return frame_; }
    std::size_t length() const { return preferred_firsts_.size(); }

    // Coefficients in this knot's frame, derived from canonical storage.
    std::vector<CablingPair> pairs() const;

    // Preferred-frame coefficients P_1..P_r.
    const std::vector<Int>& preferred_firsts() const { return preferred_firsts_; }
    // Cabling-frame coefficients p_1..p_r.
    std::vector<Int> cabling_firsts() const;
    const std::vector<Int>& qs() const { return qs_; }

    // Same knot viewed in the target frame; round trips are the identity.
    IteratedTorusKnot to_frame(Frame target) const;

    // The companion knot of the first i cabling steps, 1 <= i <= r.
    IteratedTorusKnot prefix(std::size_t i) const;

    // True when every P_i > 0, the regime in which the width, Euler
    // characteristic and solid-torus catalog formulas apply.
    bool all_positive() const;

    bool operator==(const IteratedTorusKnot& other) const = default;

    // Text form, e.g. C:(2,3),(7,2) or C':(2,3),(-5,2).
    std::string str() const;
    // Whitespace-insensitive inverse of str().
    static IteratedTorusKnot parse(std::string_view text);

private:
    IteratedTorusKnot() = default;

    Frame frame_ = Frame::C;
    std::vector<Int> preferred_firsts_;
    std::vector<Int> qs_;
};

} // namespace itkc
