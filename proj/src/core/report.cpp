#include "core/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace itkc {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt_int(const Int& value, const RenderLimits& limits) {
    std::string s = int_str(value);
    std::size_t digits = s.size() - (s[0] == '-' ? 1 : 0);
    if (limits.max_digits > 0 && digits > static_cast<std::size_t>(limits.max_digits)) {
        std::size_t keep = (s[0] == '-' ? 1 : 0) + static_cast<std::size_t>(limits.max_digits);
        return s.substr(0, keep) + "..(" + std::to_string(digits) + " digits)";
    }
    return s;
}

std::string fmt_unreduced(const UnreducedSlope& s, const RenderLimits& limits) {
    return fmt_int(s.longitudes, limits) + "/" + fmt_int(s.meridians, limits);
}

std::string fmt_pair(const CablingPair& p, const RenderLimits& limits) {
    return "(" + fmt_int(p.first, limits) + "," + fmt_int(p.q, limits) + ")";
}

CablingPair parse_pair(const std::string& text) {
    require(text.size() >= 5 && text.front() == '(' && text.back() == ')',
            "malformed pair '" + text + "'");
    auto comma = text.find(',');
    require(comma != std::string::npos, "malformed pair '" + text + "'");
    return {parse_int(std::string_view(text).substr(1, comma - 1)),
            parse_int(std::string_view(text).substr(comma + 1, text.size() - comma - 2))};
}

std::string frame_str(Frame f) {
    return f == Frame::C ? "C" : "C'";
}

Frame frame_from_str(const std::string& s) {
    if (s == "C")
        return Frame::C;
    if (s == "C'")
        return Frame::Cprime;
    throw InvalidArgument("unknown frame '" + s + "'");
}

WidthCase width_case_from_str(const std::string& s) {
    if (s == "Base")
        return WidthCase::Base;
    if (s == "CaseI")
        return WidthCase::CaseI;
    if (s == "CaseII")
        return WidthCase::CaseII;
    throw InvalidArgument("unknown width case '" + s + "'");
}

TorusStatus torus_status_from_str(const std::string& s) {
    if (s == "nonthickenable")
        return TorusStatus::Nonthickenable;
    if (s == "standard_neighborhood")
        return TorusStatus::StandardNeighborhood;
    if (s == "below_threshold")
        return TorusStatus::BelowThreshold;
    throw InvalidArgument("unknown torus status '" + s + "'");
}

// Aligned two-dimensional text table; numeric-looking cells read better
// right-aligned, labels left-aligned.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    std::vector<bool> leftish(header.size(), false);
    for (std::size_t c = 0; c < header.size(); ++c)
        width[c] = header[c].size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
            for (char ch : row[c])
                if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z'))
                    leftish[c] = true;
        }
    }
    auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                line += "  ";
            std::string pad(width[c] - row[c].size(), ' ');
            line += leftish[c] ? row[c] + pad : pad + row[c];
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        return line + "\n";
    };
    std::string out = emit(header);
    for (const auto& row : rows)
        out += emit(row);
    return out;
}

std::string join_tsv(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0)
            out += "\t";
        out += cells[i];
    }
    return out + "\n";
}

const std::string kUnsupportedNote =
    "unsupported regime: requires every preferred-frame coefficient positive";

// ---- JSON building ---------------------------------------------------

ordered_json json_opt_int(const std::optional<Int>& v) {
    if (!v)
        return nullptr;
    return int_str(*v);
}

ordered_json json_metadata(const Report& r) {
    ordered_json params;
    params["command"] = r.params.command;
    params["frame"] = frame_str(r.params.display_frame);
    params["kmax"] = int_str(r.params.kmax);
    params["chain"] = r.params.chain;
    return ordered_json{{"tool", r.tool}, {"version", r.version}, {"parameters", params}};
}

ordered_json json_invariants(const InvariantTable& table) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        ordered_json j;
        j["i"] = i + 1;
        j["q"] = int_str(row.q);
        j["P"] = int_str(row.P);
        j["p"] = int_str(row.p);
        j["A"] = int_str(row.A);
        j["B"] = int_str(row.B);
        j["chi"] = json_opt_int(row.chi);
        j["genus"] = json_opt_int(row.genus);
        j["tbbar"] = json_opt_int(row.tbbar);
        j["width"] = json_opt_int(row.width);
        j["tbar"] = json_opt_int(row.tbar);
        j["C"] = json_opt_int(row.C);
        j["case"] = row.kase ? ordered_json(width_case_str(*row.kase)) : nullptr;
        rows.push_back(std::move(j));
    }
    return ordered_json{{"positive_regime", table.positive_regime}, {"rows", rows}};
}

ordered_json json_tori(const Report& r) {
    if (!r.tori_supported)
        return ordered_json{{"supported", false}, {"note", kUnsupportedNote}};
    ordered_json rows = ordered_json::array();
    for (const auto& t : r.tori) {
        rows.push_back(ordered_json{
            {"r", t.r},
            {"k", int_str(t.k)},
            {"slope_cprime", t.slope_cprime.str()},
            {"slope_c", t.slope_c.str()},
            {"n", int_str(t.n)},
            {"dividing_curves", int_str(t.dividing_curves)},
            {"status", torus_status_str(t.status)},
        });
    }
    return ordered_json{{"supported", true}, {"rows", rows}};
}

ordered_json json_points(const std::vector<LegendrianClass>& pts) {
    ordered_json out = ordered_json::array();
    for (const auto& p : pts)
        out.push_back(ordered_json{
            {"tb", int_str(p.tb)}, {"rot", int_str(p.rot)}, {"label", p.label}});
    return out;
}

ordered_json json_slice(const Report& r) {
    if (!r.slice_supported)
        return ordered_json{{"supported", false}, {"note", kUnsupportedNote}};
    return ordered_json{{"supported", true}, {"points", json_points(r.slice)}};
}

ordered_json json_cablings(const Report& r) {
    if (!r.cablings_supported)
        return ordered_json{{"supported", false}, {"note", kUnsupportedNote}};
    RenderLimits unlimited;
    ordered_json rows = ordered_json::array();
    for (const auto& c : r.cablings) {
        ordered_json j;
        j["k"] = int_str(c.k);
        j["cable_c"] = fmt_pair(c.cable_c, unlimited);
        j["cable_cprime"] = fmt_pair(c.cable_cprime, unlimited);
        j["tbbar"] = int_str(c.tbbar);
        j["rot_pair"] = ordered_json::array({int_str(-c.rot_magnitude), int_str(c.rot_magnitude)});
        j["slbar"] = int_str(c.slbar);
        j["chi_cable"] = int_str(c.chi_cable);
        j["witnesses"] = ordered_json{{"on_nonthickenable", json_points(c.on_nonthickenable)},
                                      {"on_thickenable", json_points(c.on_thickenable)}};
        j["pushoff_sl"] = ordered_json{
            {"negative_of_plus", int_str(c.sl_negative_pushoff_of_plus)},
            {"positive_of_minus", int_str(c.sl_positive_pushoff_of_minus)}};
        rows.push_back(std::move(j));
    }
    return ordered_json{{"supported", true}, {"rows", rows}};
}

// ---- JSON parsing ----------------------------------------------------

std::optional<Int> opt_int_from_json(const ordered_json& j) {
    if (j.is_null())
        return std::nullopt;
    return parse_int(j.get<std::string>());
}

std::vector<LegendrianClass> points_from_json(const ordered_json& j) {
    std::vector<LegendrianClass> out;
    for (const auto& p : j)
        out.push_back({parse_int(p.at("tb").get<std::string>()),
                       parse_int(p.at("rot").get<std::string>()),
                       p.at("label").get<std::string>()});
    return out;
}

} // namespace

std::vector<LegendrianClass> slice_points(const IteratedTorusKnot& knot, bool chain) {
    auto pts = mountain_range_slice(knot);
    bool resort = false;
    if (chain && knot.length() >= 2) {
        // Walk the two stabilization chains from the ruling representatives
        // down to tb = 1; the endpoints at tb = 0 are already present.
        std::vector<LegendrianClass> expanded;
        for (const auto& start : pts) {
            if (start.tb == 0)
                continue;
            for (Sign sign : {Sign::Plus, Sign::Minus}) {
                // Positive stabilizations walk the right edge (from
                // Ltilde^+), negative ones the left edge (from Ltilde^-).
                if ((sign == Sign::Plus) != (start.rot > 0))
                    continue;
                LegendrianClass cur = start;
                Int step = 1;
                while (cur.tb > 1) {
                    cur = stabilize(cur, sign);
                    cur.label = start.label + (sign == Sign::Plus ? " S+^" : " S-^") +
                                int_str(step);
                    expanded.push_back(cur);
                    ++step;
                }
            }
        }
        pts.insert(pts.end(), expanded.begin(), expanded.end());
        resort = !expanded.empty();
    }
    // A knot that is itself a qualifying cabling of its prefix carries the
    // two witness pairs at maximal tb; they are plot data like the rest.
    if (auto cabling = as_nonsimple_cabling(knot)) {
        auto w = witness_pairs(*cabling);
        pts.insert(pts.end(), w.on_nonthickenable.begin(), w.on_nonthickenable.end());
        pts.insert(pts.end(), w.on_thickenable.begin(), w.on_thickenable.end());
        resort = true;
    }
    if (resort) {
        std::sort(pts.begin(), pts.end(),
                  [](const LegendrianClass& a, const LegendrianClass& b) {
                      if (a.tb != b.tb)
                          return a.tb > b.tb;
                      if (a.rot != b.rot)
                          return a.rot < b.rot;
                      return a.label < b.label;
                  });
    }
    return pts;
}

Report build_report(const IteratedTorusKnot& knot, const ReportParams& params) {
    require(params.kmax >= 0, "kmax must be >= 0");
    Report rep;
    rep.params = params;
    rep.knot_preferred = knot.to_frame(Frame::C).str();
    rep.knot_cabling = knot.to_frame(Frame::Cprime).str();
    rep.fails_utp = fails_utp(knot);
    rep.supports_standard_structure = supports_standard_structure(knot);

    // Only the sections the command renders are populated, so a report
    // value always round-trips through its own JSON.
    bool analyze = params.command == "analyze" || params.command.empty();
    if (analyze) {
        rep.invariants = invariant_table(knot);
        fill_thresholds(rep.invariants, knot);
    }
    if (knot.all_positive()) {
        if (analyze || params.command == "tori") {
            rep.tori_supported = true;
            for (Int k = 0; k <= params.kmax; ++k)
                rep.tori.push_back(torus_class(knot, knot.length(), k));
        }
        if (analyze || params.command == "slice") {
            rep.slice_supported = true;
            rep.slice = slice_points(knot, params.chain);
        }
        if (analyze || params.command == "cablings") {
            rep.cablings_supported = true;
            if (params.kmax >= 1) {
                for (const auto& c : enumerate_nonsimple_cablings(knot, params.kmax)) {
                    auto w = witness_pairs(c);
                    rep.cablings.push_back({c.k, c.cable_c, c.cable_cprime, c.tbbar,
                                            c.rot_magnitude, c.slbar, c.chi_cable,
                                            w.on_nonthickenable, w.on_thickenable,
                                            w.sl_negative_pushoff_of_plus,
                                            w.sl_positive_pushoff_of_minus});
                }
            }
        }
    }
    return rep;
}

namespace {

// ---- text / tsv rendering --------------------------------------------

std::vector<std::string> invariant_header() {
    return {"i", "q", "P", "p", "A", "B", "chi", "genus", "tbbar", "width", "tbar", "C",
            "case"};
}

std::vector<std::vector<std::string>> invariant_cells(const InvariantTable& table,
                                                      const RenderLimits& limits) {
    auto opt = [&](const std::optional<Int>& v) {
        return v ? fmt_int(*v, limits) : std::string();
    };
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        rows.push_back({std::to_string(i + 1), fmt_int(r.q, limits), fmt_int(r.P, limits),
                        fmt_int(r.p, limits), fmt_int(r.A, limits), fmt_int(r.B, limits),
                        opt(r.chi), opt(r.genus), opt(r.tbbar), opt(r.width), opt(r.tbar),
                        opt(r.C), r.kase ? width_case_str(*r.kase) : std::string()});
    }
    return rows;
}

std::vector<std::string> tori_header() {
    return {"r", "k", "slope_cprime", "slope_c", "n", "dividing_curves", "status"};
}

std::vector<std::vector<std::string>> tori_cells(const std::vector<TorusClass>& tori,
                                                 const RenderLimits& limits) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& t : tori)
        rows.push_back({std::to_string(t.r), fmt_int(t.k, limits),
                        fmt_unreduced(t.slope_cprime, limits), fmt_unreduced(t.slope_c, limits),
                        fmt_int(t.n, limits), fmt_int(t.dividing_curves, limits),
                        torus_status_str(t.status)});
    return rows;
}

std::vector<std::string> slice_header() {
    return {"tb", "rot", "label"};
}

std::vector<std::vector<std::string>> slice_cells(const std::vector<LegendrianClass>& pts,
                                                  const RenderLimits& limits) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : pts)
        rows.push_back({fmt_int(p.tb, limits), fmt_int(p.rot, limits), p.label});
    return rows;
}

std::vector<std::string> cabling_header() {
    return {"k", "cable_c", "cable_cprime", "tbbar", "rot_minus", "rot_plus", "slbar",
            "chi_cable"};
}

std::vector<std::vector<std::string>> cabling_cells(const std::vector<CablingRow>& rows_in,
                                                    const RenderLimits& limits) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : rows_in)
        rows.push_back({fmt_int(c.k, limits), fmt_pair(c.cable_c, limits),
                        fmt_pair(c.cable_cprime, limits), fmt_int(c.tbbar, limits),
                        fmt_int(-c.rot_magnitude, limits), fmt_int(c.rot_magnitude, limits),
                        fmt_int(c.slbar, limits), fmt_int(c.chi_cable, limits)});
    return rows;
}

std::string render_text(const Report& r, const RenderLimits& limits) {
    std::ostringstream out;
    if (r.params.display_frame == Frame::C) {
        out << "knot (preferred frame): " << r.knot_preferred << "\n";
        out << "knot (cabling frame):   " << r.knot_cabling << "\n";
    } else {
        out << "knot (cabling frame):   " << r.knot_cabling << "\n";
        out << "knot (preferred frame): " << r.knot_preferred << "\n";
    }
    out << "fails UTP: " << (r.fails_utp ? "yes" : "no") << "\n";
    out << "supports standard contact structure: "
        << (r.supports_standard_structure ? "yes" : "no") << "\n";

    bool analyze = r.params.command == "analyze";
    if (analyze || r.params.command.empty()) {
        out << "\ninvariants:\n"
            << render_table(invariant_header(), invariant_cells(r.invariants, limits));
    }
    if (analyze || r.params.command == "tori") {
        out << "\nsolid tori (k = 0.." << fmt_int(r.params.kmax, limits) << "):\n";
        out << (r.tori_supported ? render_table(tori_header(), tori_cells(r.tori, limits))
                                 : kUnsupportedNote + "\n");
    }
    if (analyze || r.params.command == "slice") {
        out << "\nmountain-range slice:\n";
        out << (r.slice_supported ? render_table(slice_header(), slice_cells(r.slice, limits))
                                  : kUnsupportedNote + "\n");
    }
    if (analyze || r.params.command == "cablings") {
        out << "\nnon-simple cablings (k <= " << fmt_int(r.params.kmax, limits) << "):\n";
        out << (r.cablings_supported
                    ? render_table(cabling_header(), cabling_cells(r.cablings, limits))
                    : kUnsupportedNote + "\n");
    }
    return out.str();
}

std::string render_tsv(const Report& r, const RenderLimits& limits) {
    std::string out;
    if (r.params.command == "tori") {
        out += join_tsv(tori_header());
        for (const auto& row : tori_cells(r.tori, limits))
            out += join_tsv(row);
    } else if (r.params.command == "slice") {
        out += join_tsv(slice_header());
        for (const auto& row : slice_cells(r.slice, limits))
            out += join_tsv(row);
    } else if (r.params.command == "cablings") {
        out += join_tsv(cabling_header());
        for (const auto& row : cabling_cells(r.cablings, limits))
            out += join_tsv(row);
    } else {
        out += join_tsv(invariant_header());
        for (const auto& row : invariant_cells(r.invariants, limits))
            out += join_tsv(row);
    }
    return out;
}

} // namespace

std::string render_report(const Report& r, Format format, const RenderLimits& limits) {
    if (format == Format::Text)
        return render_text(r, limits);
    if (format == Format::Tsv)
        return render_tsv(r, limits);

    ordered_json j;
    j["metadata"] = json_metadata(r);
    j["knot"] = ordered_json{{"preferred", r.knot_preferred}, {"cabling", r.knot_cabling}};
    j["utp"] = ordered_json{{"fails_utp", r.fails_utp},
                            {"supports_standard_structure", r.supports_standard_structure}};
    bool analyze = r.params.command == "analyze" || r.params.command.empty();
    if (analyze)
        j["invariants"] = json_invariants(r.invariants);
    if (analyze || r.params.command == "tori")
        j["tori"] = json_tori(r);
    if (analyze || r.params.command == "slice")
        j["slice"] = json_slice(r);
    if (analyze || r.params.command == "cablings")
        j["cablings"] = json_cablings(r);
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidArgument(std::string("report is not valid JSON: ") + e.what());
    }
    try {
        Report r;
        const auto& meta = j.at("metadata");
        r.tool = meta.at("tool").get<std::string>();
        r.version = meta.at("version").get<std::string>();
        const auto& params = meta.at("parameters");
        r.params.command = params.at("command").get<std::string>();
        r.params.display_frame = frame_from_str(params.at("frame").get<std::string>());
        r.params.kmax = parse_int(params.at("kmax").get<std::string>());
        r.params.chain = params.at("chain").get<bool>();

        r.knot_preferred = j.at("knot").at("preferred").get<std::string>();
        r.knot_cabling = j.at("knot").at("cabling").get<std::string>();
        r.fails_utp = j.at("utp").at("fails_utp").get<bool>();
        r.supports_standard_structure =
            j.at("utp").at("supports_standard_structure").get<bool>();

        if (j.contains("invariants")) {
            const auto& inv = j.at("invariants");
            r.invariants.positive_regime = inv.at("positive_regime").get<bool>();
            for (const auto& row : inv.at("rows")) {
                InvariantRow out;
                out.q = parse_int(row.at("q").get<std::string>());
                out.P = parse_int(row.at("P").get<std::string>());
                out.p = parse_int(row.at("p").get<std::string>());
                out.A = parse_int(row.at("A").get<std::string>());
                out.B = parse_int(row.at("B").get<std::string>());
                out.chi = opt_int_from_json(row.at("chi"));
                out.genus = opt_int_from_json(row.at("genus"));
                out.tbbar = opt_int_from_json(row.at("tbbar"));
                out.width = opt_int_from_json(row.at("width"));
                out.tbar = opt_int_from_json(row.at("tbar"));
                out.C = opt_int_from_json(row.at("C"));
                if (!row.at("case").is_null())
                    out.kase = width_case_from_str(row.at("case").get<std::string>());
                r.invariants.rows.push_back(std::move(out));
            }
        }
        if (j.contains("tori")) {
            const auto& tori = j.at("tori");
            r.tori_supported = tori.at("supported").get<bool>();
            if (r.tori_supported) {
                for (const auto& row : tori.at("rows")) {
                    TorusClass t{
                        row.at("r").get<std::size_t>(),
                        parse_int(row.at("k").get<std::string>()),
                        UnreducedSlope::parse(row.at("slope_cprime").get<std::string>()),
                        UnreducedSlope::parse(row.at("slope_c").get<std::string>()),
                        parse_int(row.at("n").get<std::string>()),
                        parse_int(row.at("dividing_curves").get<std::string>()),
                        torus_status_from_str(row.at("status").get<std::string>()),
                    };
                    r.tori.push_back(std::move(t));
                }
            }
        }
        if (j.contains("slice")) {
            const auto& slice = j.at("slice");
            r.slice_supported = slice.at("supported").get<bool>();
            if (r.slice_supported)
                r.slice = points_from_json(slice.at("points"));
        }
        if (j.contains("cablings")) {
            const auto& cablings = j.at("cablings");
            r.cablings_supported = cablings.at("supported").get<bool>();
            if (r.cablings_supported) {
                for (const auto& row : cablings.at("rows")) {
                    CablingRow c;
                    c.k = parse_int(row.at("k").get<std::string>());
                    c.cable_c = parse_pair(row.at("cable_c").get<std::string>());
                    c.cable_cprime = parse_pair(row.at("cable_cprime").get<std::string>());
                    c.tbbar = parse_int(row.at("tbbar").get<std::string>());
                    c.rot_magnitude = parse_int(row.at("rot_pair").at(1).get<std::string>());
                    c.slbar = parse_int(row.at("slbar").get<std::string>());
                    c.chi_cable = parse_int(row.at("chi_cable").get<std::string>());
                    c.on_nonthickenable =
                        points_from_json(row.at("witnesses").at("on_nonthickenable"));
                    c.on_thickenable =
                        points_from_json(row.at("witnesses").at("on_thickenable"));
                    c.sl_negative_pushoff_of_plus =
                        parse_int(row.at("pushoff_sl").at("negative_of_plus").get<std::string>());
                    c.sl_positive_pushoff_of_minus =
                        parse_int(row.at("pushoff_sl").at("positive_of_minus").get<std::string>());
                    r.cablings.push_back(std::move(c));
                }
            }
        }
        return r;
    } catch (const ordered_json::exception& e) {
        throw InvalidArgument(std::string("report JSON shape mismatch: ") + e.what());
    }
}

VerifyReport build_verify_report(const std::string& ranges_text,
                                 const std::string& inject_fault) {
    VerifyReport rep;
    rep.ranges_requested = ranges_text;
    auto outcome = run_verify(VerifyRanges::parse(ranges_text), inject_fault);
    rep.ranges = outcome.ranges;
    rep.checks = std::move(outcome.reports);
    rep.all_pass = outcome.all_pass;
    return rep;
}

std::string render_verify_report(const VerifyReport& r, Format format,
                                 const RenderLimits& limits) {
    (void)limits;
    if (format == Format::Json) {
        ordered_json j;
        j["metadata"] = ordered_json{
            {"tool", r.tool},
            {"version", r.version},
            {"parameters",
             ordered_json{{"command", "verify"}, {"ranges", r.ranges_requested}}}};
        j["ranges"] = ordered_json{{"r", r.ranges.r_max},
                                   {"q", r.ranges.q_max},
                                   {"p", r.ranges.p_max},
                                   {"k", r.ranges.k_max},
                                   {"cases", r.ranges.cases}};
        ordered_json checks = ordered_json::array();
        for (const auto& c : r.checks)
            checks.push_back(ordered_json{{"check", c.check},
                                          {"inputs", c.inputs},
                                          {"expected", c.expected},
                                          {"actual", c.actual},
                                          {"pass", c.pass}});
        j["checks"] = checks;
        j["all_pass"] = r.all_pass;
        return j.dump(2) + "\n";
    }
    if (format == Format::Tsv) {
        std::string out = join_tsv({"check", "inputs", "expected", "actual", "verdict"});
        for (const auto& c : r.checks)
            out += join_tsv({c.check, c.inputs, c.expected, c.actual,
                             c.pass ? "pass" : "FAIL"});
        return out;
    }
    std::ostringstream out;
    out << "oracle verification (ranges " << r.ranges.str() << ")\n";
    for (const auto& c : r.checks) {
        out << (c.pass ? "pass" : "FAIL") << "  " << c.check << "  [" << c.inputs << "]\n";
        if (!c.pass)
            out << "      expected: " << c.expected << "\n      actual:   " << c.actual
                << "\n";
    }
    out << (r.all_pass ? "all checks passed\n" : "some checks FAILED\n");
    return out.str();
}

VerifyReport verify_report_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidArgument(std::string("report is not valid JSON: ") + e.what());
    }
    try {
        VerifyReport r;
        r.tool = j.at("metadata").at("tool").get<std::string>();
        r.version = j.at("metadata").at("version").get<std::string>();
        r.ranges_requested =
            j.at("metadata").at("parameters").at("ranges").get<std::string>();
        r.ranges.r_max = j.at("ranges").at("r").get<long>();
        r.ranges.q_max = j.at("ranges").at("q").get<long>();
        r.ranges.p_max = j.at("ranges").at("p").get<long>();
        r.ranges.k_max = j.at("ranges").at("k").get<long>();
        r.ranges.cases = j.at("ranges").at("cases").get<long>();
        for (const auto& c : j.at("checks"))
            r.checks.push_back({c.at("check").get<std::string>(),
                                c.at("inputs").get<std::string>(),
                                c.at("expected").get<std::string>(),
                                c.at("actual").get<std::string>(),
                                c.at("pass").get<bool>()});
        r.all_pass = j.at("all_pass").get<bool>();
        return r;
    } catch (const ordered_json::exception& e) {
        throw InvalidArgument(std::string("report JSON shape mismatch: ") + e.what());
    }
}

} // namespace itkc
