// Command-line front end for the iterated-torus-knot invariant calculus.
// Argument handling lives here; every computation sits behind the
// shared-library C interface.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "itkc/itkc.h"

namespace {

struct CliArgs {
    std::string knot;
    std::string frame = "C";
    std::string format;
    long kmax = 5;
    bool chain = false;
    std::string ranges;
};

int format_code(const std::string& format) {
    if (format == "json")
        return ITKC_FORMAT_JSON;
    if (format == "text")
        return ITKC_FORMAT_TEXT;
    if (format == "tsv")
        return ITKC_FORMAT_TSV;
    std::cerr << "error: unknown format '" << format << "'\n";
    std::exit(2);
}

long max_digits_from_env() {
    const char* raw = std::getenv("ITK_MAX_DIGITS");
    if (raw == nullptr || *raw == '\0')
        return 0;
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || value < 0) {
        std::cerr << "error: ITK_MAX_DIGITS must be a nonnegative integer\n";
        std::exit(2);
    }
    return value;
}

itkc_options make_options(const CliArgs& args, const std::string& default_format) {
    itkc_options options;
    itkc_options_init(&options);
    if (args.frame == "C") {
        options.display_frame = ITKC_FRAME_PREFERRED;
    } else if (args.frame == "Cprime" || args.frame == "C'") {
        options.display_frame = ITKC_FRAME_CABLING;
    } else {
        std::cerr << "error: unknown frame '" << args.frame << "'\n";
        std::exit(2);
    }
    options.format = format_code(args.format.empty() ? default_format : args.format);
    options.kmax = args.kmax;
    options.expand_chains = args.chain ? 1 : 0;
    options.max_digits = max_digits_from_env();
    return options;
}

int finish(itkc_status status, char* output) {
    if (output != nullptr) {
        std::cout << output;
        itkc_string_free(output);
    }
    if (status != ITKC_OK)
        std::cerr << "error: " << itkc_last_error() << "\n";
    return static_cast<int>(status);
}

using KnotCommand = itkc_status (*)(const itkc_knot*, const itkc_options*, char**);

int run_knot_command(KnotCommand command, const CliArgs& args,
                     const std::string& default_format) {
    itkc_options options = make_options(args, default_format);
    itkc_knot* knot = nullptr;
    itkc_status status = itkc_knot_parse(args.knot.c_str(), &knot);
    if (status != ITKC_OK)
        return finish(status, nullptr);
    char* output = nullptr;
    status = command(knot, &options, &output);
    itkc_knot_free(knot);
    return finish(status, output);
}

void add_common_flags(CLI::App* cmd, CliArgs& args, bool with_kmax) {
    cmd->add_option("--frame", args.frame, "Display frame: C or Cprime")
        ->check(CLI::IsMember({"C", "Cprime", "C'"}));
    cmd->add_option("--format", args.format, "Output format: json, text or tsv")
        ->check(CLI::IsMember({"json", "text", "tsv"}));
    if (with_kmax)
        cmd->add_option("--kmax", args.kmax, "Catalog / enumeration bound (default 5)")
            ->check(CLI::NonNegativeNumber);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariant calculus for iterated torus knots"};
    app.set_version_flag("--version", std::string(itkc_version()));
    app.require_subcommand(1);

    CliArgs args;

    auto* analyze = app.add_subcommand(
        "analyze", "Full report: invariants, UTP verdict, tori, slice, cablings");
    analyze->add_option("knot", args.knot, "Knot, e.g. \"C:(2,3),(7,2)\"")->required();
    add_common_flags(analyze, args, true);
    analyze->add_flag("--chain", args.chain, "Expand stabilization chains in the slice");

    auto* tori = app.add_subcommand("tori", "Solid-torus catalog rows for k = 0..kmax");
    tori->add_option("knot", args.knot, "Knot, e.g. \"C:(2,3)\"")->required();
    add_common_flags(tori, args, true);

    auto* slice = app.add_subcommand("slice", "Mountain-range slice points (tb, rot, label)");
    slice->add_option("knot", args.knot, "Knot, e.g. \"C:(2,3),(7,2)\"")->required();
    add_common_flags(slice, args, false);
    slice->add_flag("--chain", args.chain, "Expand stabilization chains");

    auto* cablings =
        app.add_subcommand("cablings", "Non-simple cablings with witness pairs, k <= kmax");
    cablings->add_option("knot", args.knot, "Knot, e.g. \"C:(2,3),(7,2)\"")->required();
    add_common_flags(cablings, args, true);

    auto* verify = app.add_subcommand("verify", "Run the independent oracle checks");
    verify->add_option("--ranges", args.ranges,
                       "Check ranges, e.g. \"r<=5,q<=4,p<=9,k<=100,cases<=200\"");
    verify->add_option("--format", args.format, "Output format: json, text or tsv")
        ->check(CLI::IsMember({"json", "text", "tsv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (analyze->parsed())
        return run_knot_command(itkc_analyze, args, "text");
    if (tori->parsed())
        return run_knot_command(itkc_tori, args, "text");
    if (slice->parsed())
        return run_knot_command(itkc_slice, args, "tsv");
    if (cablings->parsed())
        return run_knot_command(itkc_cablings, args, "text");

    itkc_options options;
    itkc_options_init(&options);
    options.format = format_code(args.format.empty() ? "text" : args.format);
    options.max_digits = max_digits_from_env();
    options.ranges = args.ranges.c_str();
    // Testing hook: corrupts one oracle value so a red check is observable.
    options.inject_fault = std::getenv("ITKC_INJECT_FAULT");
    char* output = nullptr;
    itkc_status status = itkc_verify(&options, &output);
    return finish(status, output);
}
