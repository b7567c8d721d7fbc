#include "core/knot.hpp"

#include <cctype>

namespace itkc {

namespace {

std::string pair_err(std::size_t i, const std::string& what) {
    return "pair " + std::to_string(i + 1) + " " + what;
}

void validate_pairs(const std::vector<CablingPair>& raw) {
    require(!raw.empty(), "a knot needs at least one cabling pair");
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& [first, q] = raw[i];
        require(q > 1, pair_err(i, "has q <= 1"));
        require(first != 0, pair_err(i, "has zero meridian coordinate"));
        require(gcd_int(first, q) == 1, pair_err(i, "not coprime"));
    }
    require(abs_int(raw[0].first) > 1, pair_err(0, "has |p| <= 1 (core or unknot base)"));
}

} // namespace

IteratedTorusKnot IteratedTorusKnot::validate(const std::vector<CablingPair>& raw,
                                              Frame frame) {
    validate_pairs(raw);
    IteratedTorusKnot knot;
    knot.frame_ = frame;
    knot.qs_.reserve(raw.size());
    knot.preferred_firsts_.reserve(raw.size());
    // Convert to canonical preferred-frame storage: P_i = q_i*A_{i-1} + p_i
    // with A_i = P_i*q_i running left to right, A_0 = 0. In frame C the
    // coefficients are stored as given.
    Int a_prev = 0;
    for (const auto& [first, q] : raw) {
        Int preferred = (frame == Frame::C) ? first : q * a_prev + first;
        knot.preferred_firsts_.push_back(preferred);
        knot.qs_.push_back(q);
        a_prev = preferred * q;
    }
    return knot;
}

std::vector<CablingPair> IteratedTorusKnot::pairs() const {
    std::vector<CablingPair> out;
    out.reserve(length());
    if (frame_ == Frame::C) {
        for (std::size_t i = 0; i < length(); ++i)
            out.push_back({preferred_firsts_[i], qs_[i]});
    } else {
        auto firsts = cabling_firsts();
        for (std::size_t i = 0; i < length(); ++i)
            out.push_back({firsts[i], qs_[i]});
    }
    return out;
}

std::vector<Int> IteratedTorusKnot::cabling_firsts() const {
    std::vector<Int> out;
    out.reserve(length());
    Int a_prev = 0;
    for (std::size_t i = 0; i < length(); ++i) {
        out.push_back(preferred_firsts_[i] - qs_[i] * a_prev);
        a_prev = preferred_firsts_[i] * qs_[i];
    }
    return out;
}

IteratedTorusKnot IteratedTorusKnot::to_frame(Frame target) const {
    IteratedTorusKnot out = *this;
    out.frame_ = target;
    return out;
}

IteratedTorusKnot IteratedTorusKnot::prefix(std::size_t i) const {
    require(i >= 1 && i <= length(), "prefix index out of range");
    IteratedTorusKnot out;
    out.frame_ = frame_;
    out.preferred_firsts_.assign(preferred_firsts_.begin(), preferred_firsts_.begin() + i);
    out.qs_.assign(qs_.begin(), qs_.begin() + i);
    return out;
}

bool IteratedTorusKnot::all_positive() const {
    for (const auto& p : preferred_firsts_)
        if (p <= 0)
            return false;
    return true;
}

std::string IteratedTorusKnot::str() const {
    std::string out = (frame_ == Frame::C) ? "C:" : "C':";
    auto ps = pairs();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i > 0)
            out += ",";
        out += "(" + int_str(ps[i].first) + "," + int_str(ps[i].q) + ")";
    }
    return out;
}

IteratedTorusKnot IteratedTorusKnot::parse(std::string_view text) {
    std::string t;
    t.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(c);

    Frame frame;
    std::size_t pos;
    if (t.rfind("C':", 0) == 0) {
        frame = Frame::Cprime;
        pos = 3;
    } else if (t.rfind("C:", 0) == 0) {
        frame = Frame::C;
        pos = 2;
    } else {
        throw InvalidArgument("knot must start with 'C:' or \"C':\"");
    }

    std::vector<CablingPair> raw;
    while (pos < t.size()) {
        require(t[pos] == '(', "expected '(' at position " + std::to_string(pos));
        auto comma = t.find(',', pos);
        auto close = t.find(')', pos);
        require(comma != std::string::npos && close != std::string::npos && comma < close,
                "malformed pair near position " + std::to_string(pos));
        Int first = parse_int(std::string_view(t).substr(pos + 1, comma - pos - 1));
        Int q = parse_int(std::string_view(t).substr(comma + 1, close - comma - 1));
        raw.push_back({std::move(first), std::move(q)});
        pos = close + 1;
        if (pos < t.size()) {
            require(t[pos] == ',', "expected ',' between pairs");
            ++pos;
            require(pos < t.size(), "trailing ',' in knot");
        }
    }
    require(!raw.empty(), "knot has no pairs");
    return validate(raw, frame);
}

} // namespace itkc
