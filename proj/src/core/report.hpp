#pragma once

#include <string>
#include <vector>

#include "core/invariants.hpp"
#include "core/knot.hpp"
#include "core/legendrian.hpp"
#include "core/oracle.hpp"
#include "core/solid_tori.hpp"

namespace itkc {

inline constexpr const char* kToolName = "itkc";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Format { Json, Text, Tsv };

// Rendering caps for the human-readable formats. JSON output is never
// truncated: the schema round-trips exactly.
struct RenderLimits {
    long max_digits = 0;  // 0 = unlimited
};

struct ReportParams {
    std::string command;  // analyze | tori | slice | cablings
    Frame display_frame = Frame::C;
    Int kmax = 5;
    bool chain = false;

    bool operator==(const ReportParams& other) const = default;
};

// A fully expanded cabling record: everything needed to reproduce the row
// without recomputation, so reports are self-contained values.
struct CablingRow {
    Int k;
    CablingPair cable_c;
    CablingPair cable_cprime;
    Int tbbar;
    Int rot_magnitude;
    Int slbar;
    Int chi_cable;
    std::vector<LegendrianClass> on_nonthickenable;
    std::vector<LegendrianClass> on_thickenable;
    Int sl_negative_pushoff_of_plus;
    Int sl_positive_pushoff_of_minus;

    bool operator==(const CablingRow& other) const = default;
};

struct Report {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    ReportParams params;

    std::string knot_preferred;
    std::string knot_cabling;

    bool fails_utp = false;
    bool supports_standard_structure = false;

    InvariantTable invariants;

    bool tori_supported = false;
    std::vector<TorusClass> tori;

    bool slice_supported = false;
    std::vector<LegendrianClass> slice;

    bool cablings_supported = false;
    std::vector<CablingRow> cablings;

    bool operator==(const Report& other) const = default;
};

// Builds the report for any valid knot. Positive-only sections are filled
// when the regime allows and marked unsupported otherwise.
Report build_report(const IteratedTorusKnot& knot, const ReportParams& params);

// The four point (or chain-expanded) slice used by reports.
std::vector<LegendrianClass> slice_points(const IteratedTorusKnot& knot, bool chain);

std::string render_report(const Report& report, Format format, const RenderLimits& limits);
Report report_from_json(const std::string& text);

struct VerifyReport {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    std::string ranges_requested;  // verbatim --ranges value ("" = defaults)
    VerifyRanges ranges;
    std::vector<OracleReport> checks;
    bool all_pass = false;

    bool operator==(const VerifyReport& other) const = default;
};

VerifyReport build_verify_report(const std::string& ranges_text,
                                 const std::string& inject_fault);
std::string render_verify_report(const VerifyReport& report, Format format,
                                 const RenderLimits& limits);
VerifyReport verify_report_from_json(const std::string& text);

} // namespace itkc
