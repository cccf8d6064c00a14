#ifndef HEISCD_H
#define HEISCD_H

/* C interface to the mod p^n Heisenberg group engine.
 *
 * Every fallible call returns a heiscd_status; on failure the message is
 * available from heiscd_last_error() on the same thread until the next call.
 * Handles are opaque and owned by the caller, who releases them with the
 * matching destroy function. Strings returned through char** are released
 * with heiscd_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#pragma GCC visibility push(default)
#endif

typedef enum heiscd_status {
  HEISCD_OK = 0,
  HEISCD_NON_PRIME = 1,
  HEISCD_BAD_EXPONENT = 2,
  HEISCD_OVERFLOW = 3,
  HEISCD_COORDINATE_OUT_OF_RANGE = 4,
  HEISCD_NOT_A_SUBGROUP = 5,
  HEISCD_EMPTY_SET = 6,
  HEISCD_CENTRAL_ELEMENT = 7,
  HEISCD_ELL_OUT_OF_RANGE = 8,
  HEISCD_EQUAL_ELEMENTS = 9,
  HEISCD_NOT_SUPERCOMMUTING = 10,
  HEISCD_NOT_SPECIAL_PAIR = 11,
  HEISCD_IMPROPERLY_COMMUTING = 12,
  HEISCD_NOT_IN_PSEUDOCENTRALIZER = 13,
  HEISCD_CAP_EXCEEDED = 14,
  HEISCD_TOO_LARGE = 15,
  HEISCD_INVALID_ARGUMENT = 16,
  HEISCD_SPECIALIZATION_FAILED = 17,
  HEISCD_INVALID_HANDLE = 18,
  HEISCD_UNKNOWN = 99
} heiscd_status;

typedef enum heiscd_format {
  HEISCD_FORMAT_TEXT = 0,
  HEISCD_FORMAT_JSON = 1,
  HEISCD_FORMAT_DOT = 2
} heiscd_format;

typedef struct heiscd_group heiscd_group;
typedef struct heiscd_lattice heiscd_lattice;
typedef struct heiscd_report heiscd_report;
typedef struct heiscd_verification heiscd_verification;

/* (c1, c2, c3), each in [0, p^n). */
typedef struct heiscd_element {
  uint32_t c1;
  uint32_t c2;
  uint32_t c3;
} heiscd_element;

const char* heiscd_status_name(heiscd_status status);
const char* heiscd_last_error(void);
void heiscd_string_free(char* s);

/* Groups. Enumeration limits start from the defaults, with
 * HEISCD_MAX_SUBGROUPS read from the environment. */
heiscd_status heiscd_group_create(int64_t p, int64_t n, heiscd_group** out);
void heiscd_group_destroy(heiscd_group* g);
heiscd_status heiscd_group_info(const heiscd_group* g, uint32_t* p,
                                int32_t* n, uint64_t* order);
heiscd_status heiscd_group_set_limits(heiscd_group* g, uint64_t max_subgroups,
                                      double max_seconds);

/* Elements. Parsing accepts "c1,c2,c3" with arbitrary integers and reduces
 * them; the arithmetic calls reject unreduced inputs. */
heiscd_status heiscd_element_parse(const heiscd_group* g, const char* text,
                                   heiscd_element* out);
heiscd_status heiscd_mul(const heiscd_group* g, const heiscd_element* a,
                         const heiscd_element* b, heiscd_element* out);
heiscd_status heiscd_inv(const heiscd_group* g, const heiscd_element* a,
                         heiscd_element* out);
heiscd_status heiscd_pow(const heiscd_group* g, const heiscd_element* a,
                         int64_t m, heiscd_element* out);
heiscd_status heiscd_commutator(const heiscd_group* g, const heiscd_element* a,
                                const heiscd_element* b, heiscd_element* out);

typedef struct heiscd_element_info {
  uint64_t order;
  int32_t central;
  int32_t nondegenerate;
  int32_t nu; /* -1 for central elements */
  uint64_t centralizer_order;
  uint64_t pseudocentralizer_order;
} heiscd_element_info;

heiscd_status heiscd_element_describe(const heiscd_group* g,
                                      const heiscd_element* a,
                                      heiscd_element_info* out);

/* Witness pair separating P from C on {h1, h2}. */
typedef struct heiscd_witness {
  heiscd_element z1;
  heiscd_element z2;
  int32_t has_exponents; /* zero when the search fallback produced z1, z2 */
  int64_t w1;
  int64_t w2;
  const char* case_name; /* static storage */
  int32_t memberships_hold;
  char fallback_reason[192];
} heiscd_witness;

heiscd_status heiscd_witness_pair(const heiscd_group* g,
                                  const heiscd_element* h1,
                                  const heiscd_element* h2,
                                  heiscd_witness* out);

/* Subgroup lattice in canonical order. */
heiscd_status heiscd_lattice_create(const heiscd_group* g,
                                    heiscd_lattice** out);
void heiscd_lattice_destroy(heiscd_lattice* l);
size_t heiscd_lattice_size(const heiscd_lattice* l);

typedef struct heiscd_subgroup_info {
  uint64_t order;
  uint64_t centralizer_order;
  uint64_t pseudocentralizer_order;
  uint64_t m;
  uint64_t m_s;
  int32_t delta;
  size_t generator_count;
} heiscd_subgroup_info;

heiscd_status heiscd_lattice_subgroup(const heiscd_lattice* l, size_t index,
                                      heiscd_subgroup_info* out);
/* Copies up to cap generators; *count receives the full number. */
heiscd_status heiscd_lattice_generators(const heiscd_lattice* l, size_t index,
                                        heiscd_element* buf, size_t cap,
                                        size_t* count);
/* Text or JSON listing, or the Hasse diagram of the whole lattice as DOT. */
heiscd_status heiscd_lattice_render(const heiscd_lattice* l,
                                    heiscd_format format, char** out);

/* Measure reports: m*, m_s*, the CD and PCD families and the per-subgroup
 * table. DOT renders the Hasse diagram of CD. */
heiscd_status heiscd_report_create(const heiscd_group* g, heiscd_report** out);
void heiscd_report_destroy(heiscd_report* r);
heiscd_status heiscd_report_maxima(const heiscd_report* r, uint64_t* m_star,
                                   uint64_t* ms_star);
heiscd_status heiscd_report_render(const heiscd_report* r,
                                   heiscd_format format, char** out);

/* Invariant suites: "core", "pseudo", "structure", "lattice", "oracle",
 * "all". */
typedef struct heiscd_verify_options {
  uint64_t exhaustive_limit;
  uint64_t samples;
  uint64_t seed;
} heiscd_verify_options;

void heiscd_verify_defaults(heiscd_verify_options* out);

/* options may be NULL for the defaults. */
heiscd_status heiscd_verify_run(const heiscd_group* g, const char* suite,
                                const heiscd_verify_options* options,
                                heiscd_verification** out);
void heiscd_verification_destroy(heiscd_verification* v);
size_t heiscd_verification_size(const heiscd_verification* v);
int32_t heiscd_verification_passed(const heiscd_verification* v);

/* Strings stay valid while the verification handle lives. */
typedef struct heiscd_check {
  const char* suite;
  const char* name;
  const char* detail;
  int32_t passed;
  int32_t sampled;
  int32_t skipped;
  uint64_t cases;
} heiscd_check;

heiscd_status heiscd_verification_check(const heiscd_verification* v,
                                        size_t index, heiscd_check* out);

#if defined(__GNUC__)
#pragma GCC visibility pop
#endif

#ifdef __cplusplus
}
#endif

#endif
