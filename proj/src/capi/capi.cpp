#include "itkc/itkc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/report.hpp"

using namespace itkc;

struct itkc_knot {
    IteratedTorusKnot value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

itkc_status fail(itkc_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Runs fn, translating exceptions into status codes and storing the
// message for itkc_last_error.
template <typename Fn>
itkc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const UnsupportedRegime& e) {
        return fail(ITKC_UNSUPPORTED_REGIME, e.what());
    } catch (const InvalidArgument& e) {
        return fail(ITKC_INVALID_ARGUMENT, e.what());
    } catch (const InternalInvariant& e) {
        return fail(ITKC_INTERNAL_ERROR, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ITKC_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(ITKC_INTERNAL_ERROR, e.what());
    }
}

Format format_from(const itkc_options& options) {
    switch (options.format) {
    case ITKC_FORMAT_JSON: return Format::Json;
    case ITKC_FORMAT_TEXT: return Format::Text;
    case ITKC_FORMAT_TSV: return Format::Tsv;
    default: throw InvalidArgument("unknown format code");
    }
}

ReportParams params_from(const itkc_options& options, const char* command) {
    if (options.kmax < 0)
        throw InvalidArgument("kmax must be >= 0");
    ReportParams params;
    params.command = command;
    switch (options.display_frame) {
    case ITKC_FRAME_PREFERRED: params.display_frame = Frame::C; break;
    case ITKC_FRAME_CABLING: params.display_frame = Frame::Cprime; break;
    default: throw InvalidArgument("unknown frame code");
    }
    params.kmax = options.kmax;
    params.chain = options.expand_chains != 0;
    return params;
}

itkc_status emit(const std::string& text, char** out_text) {
    *out_text = dup_string(text);
    if (*out_text == nullptr)
        return fail(ITKC_INTERNAL_ERROR, "out of memory");
    return ITKC_OK;
}

itkc_status run_command(const itkc_knot* knot, const itkc_options* options,
                        const char* command, char** out_text) {
    return guarded([&]() -> itkc_status {
        if (knot == nullptr || options == nullptr || out_text == nullptr)
            return fail(ITKC_INVALID_ARGUMENT, "null argument");
        *out_text = nullptr;
        auto params = params_from(*options, command);
        if (std::strcmp(command, "analyze") != 0 && !knot->value.all_positive())
            throw UnsupportedRegime(
                std::string(command) +
                " is only defined when every preferred-frame coefficient is positive");
        Report report = build_report(knot->value, params);
        RenderLimits limits{options->max_digits};
        return emit(render_report(report, format_from(*options), limits), out_text);
    });
}

} // namespace

extern "C" {

void itkc_options_init(itkc_options* options) {
    if (options == nullptr)
        return;
    options->display_frame = ITKC_FRAME_PREFERRED;
    options->kmax = 5;
    options->format = ITKC_FORMAT_JSON;
    options->expand_chains = 0;
    options->max_digits = 0;
    options->ranges = nullptr;
    options->inject_fault = nullptr;
}

itkc_status itkc_knot_parse(const char* text, itkc_knot** out_knot) {
    return guarded([&]() -> itkc_status {
        if (text == nullptr || out_knot == nullptr)
            return fail(ITKC_INVALID_ARGUMENT, "null argument");
        *out_knot = new itkc_knot{IteratedTorusKnot::parse(text)};
        return ITKC_OK;
    });
}

itkc_status itkc_knot_format(const itkc_knot* knot, int frame, char** out_text) {
    return guarded([&]() -> itkc_status {
        if (knot == nullptr || out_text == nullptr)
            return fail(ITKC_INVALID_ARGUMENT, "null argument");
        Frame f;
        switch (frame) {
        case ITKC_FRAME_PREFERRED: f = Frame::C; break;
        case ITKC_FRAME_CABLING: f = Frame::Cprime; break;
        default: return fail(ITKC_INVALID_ARGUMENT, "unknown frame code");
        }
        return emit(knot->value.to_frame(f).str(), out_text);
    });
}

void itkc_knot_free(itkc_knot* knot) {
    delete knot;
}

void itkc_string_free(char* text) {
    std::free(text);
}

itkc_status itkc_analyze(const itkc_knot* knot, const itkc_options* options,
                         char** out_text) {
    return run_command(knot, options, "analyze", out_text);
}

itkc_status itkc_tori(const itkc_knot* knot, const itkc_options* options, char** out_text) {
    return run_command(knot, options, "tori", out_text);
}

itkc_status itkc_slice(const itkc_knot* knot, const itkc_options* options, char** out_text) {
    return run_command(knot, options, "slice", out_text);
}

itkc_status itkc_cablings(const itkc_knot* knot, const itkc_options* options,
                          char** out_text) {
    return run_command(knot, options, "cablings", out_text);
}

itkc_status itkc_verify(const itkc_options* options, char** out_text) {
    return guarded([&]() -> itkc_status {
        if (options == nullptr || out_text == nullptr)
            return fail(ITKC_INVALID_ARGUMENT, "null argument");
        *out_text = nullptr;
        std::string ranges = options->ranges != nullptr ? options->ranges : "";
        std::string fault = options->inject_fault != nullptr ? options->inject_fault : "";
        VerifyReport report = build_verify_report(ranges, fault);
        RenderLimits limits{options->max_digits};
        itkc_status status =
            emit(render_verify_report(report, format_from(*options), limits), out_text);
        if (status != ITKC_OK)
            return status;
        if (!report.all_pass)
            return fail(ITKC_INTERNAL_ERROR, "one or more verification checks failed");
        return ITKC_OK;
    });
}

const char* itkc_last_error(void) {
    return g_last_error.c_str();
}

const char* itkc_version(void) {
    return kToolVersion;
}

} // extern "C"
