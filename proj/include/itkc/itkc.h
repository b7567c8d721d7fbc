/*
 * itkc - exact invariant calculus for iterated torus knots.
 *
 * C interface to the computation core: opaque knot handles, status codes,
 * and report generation in JSON, plain-text or TSV form. All returned
 * strings are heap-allocated and must be released with itkc_string_free();
 * knot handles with itkc_knot_free(). Handles are immutable after creation
 * and safe to share across threads; the per-thread error message is
 * overwritten by the next failing call on the same thread.
 */

#ifndef ITKC_H
#define ITKC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum itkc_status {
    ITKC_OK = 0,
    /* Requested quantity is undefined outside the all-positive regime. */
    ITKC_UNSUPPORTED_REGIME = 1,
    /* Parse error or validation failure in the input. */
    ITKC_INVALID_ARGUMENT = 2,
    /* An internal exact-arithmetic invariant failed, or a verification
       check did not pass. */
    ITKC_INTERNAL_ERROR = 3
} itkc_status;

typedef enum itkc_frame {
    ITKC_FRAME_PREFERRED = 0, /* coefficients P_i, written C:(...)  */
    ITKC_FRAME_CABLING = 1    /* coefficients p_i, written C':(...) */
} itkc_frame;

typedef enum itkc_format {
    ITKC_FORMAT_JSON = 0,
    ITKC_FORMAT_TEXT = 1,
    ITKC_FORMAT_TSV = 2
} itkc_format;

typedef struct itkc_knot itkc_knot;

typedef struct itkc_options {
    int display_frame; /* itkc_frame; affects text layout and metadata only */
    long kmax;         /* catalog / enumeration bound, >= 0 */
    int format;        /* itkc_format */
    int expand_chains; /* nonzero: include stabilization chains in slices */
    long max_digits;   /* text/tsv integer rendering cap; 0 = unlimited */
    const char* ranges;       /* verify only; NULL or "" = defaults */
    const char* inject_fault; /* verify self-test hook; NULL = none */
} itkc_options;

/* Fills an options struct with the defaults listed above (kmax = 5). */
void itkc_options_init(itkc_options* options);

/* Parses "C:(2,3),(7,2)" or "C':(2,3),(-5,2)"; whitespace-insensitive. */
itkc_status itkc_knot_parse(const char* text, itkc_knot** out_knot);

/* Renders the knot in the requested frame. */
itkc_status itkc_knot_format(const itkc_knot* knot, int frame, char** out_text);

void itkc_knot_free(itkc_knot* knot);
void itkc_string_free(char* text);

/* Full report: knot in both frames, invariant table, UTP verdict, solid
 * torus catalog, mountain-range slice and non-simple cablings. Works for
 * any valid knot; outside the all-positive regime the positive-only
 * sections are marked unsupported and the call still succeeds. */
itkc_status itkc_analyze(const itkc_knot* knot, const itkc_options* options,
                         char** out_text);

/* Solid-torus catalog rows for k = 0..kmax. */
itkc_status itkc_tori(const itkc_knot* knot, const itkc_options* options, char** out_text);

/* Mountain-range slice points (tb, rot, label). */
itkc_status itkc_slice(const itkc_knot* knot, const itkc_options* options, char** out_text);

/* Non-simple cabling records with witness pairs, k <= kmax. */
itkc_status itkc_cablings(const itkc_knot* knot, const itkc_options* options,
                          char** out_text);

/* Runs the independent oracle checks over the configured ranges. Returns
 * ITKC_OK when every check passes; ITKC_INTERNAL_ERROR when one fails (the
 * report text is still produced and lists the failing cases). */
itkc_status itkc_verify(const itkc_options* options, char** out_text);

/* Message for the most recent failure on this thread ("" if none). The
 * pointer stays valid until the next failing call on the same thread. */
const char* itkc_last_error(void);

const char* itkc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ITKC_H */
