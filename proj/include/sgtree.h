/*
 * sgtree - exhaustive exploration of the numerical semigroup tree.
 *
 * C interface of the shared library.  All functionality lives behind the
 * two opaque handles below; every call reports success through sgt_status.
 * Text outputs follow the (buf, size, needed) convention: *needed always
 * receives the required size including the terminating NUL, and the call
 * returns SGT_BUFFER_TOO_SMALL when the provided buffer cannot hold it
 * (buf may be NULL with size 0 to query the size first).
 */

#ifndef SGTREE_H
#define SGTREE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef SGT_API
#define SGT_API __attribute__((visibility("default")))
#endif

typedef enum sgt_status {
  SGT_OK = 0,
  SGT_INVALID_ARGUMENT = 1,
  SGT_OVERFLOW = 2,          /* a conductor does not fit the bit capacity */
  SGT_VERIFY_FAILED = 3,
  SGT_BUFFER_TOO_SMALL = 4,
  SGT_INTERNAL_ERROR = 5
} sgt_status;

SGT_API const char* sgt_status_name(sgt_status status);
SGT_API const char* sgt_version(void);

/* Supported bitstream widths; 0 in any capacity argument means 128. */
#define SGT_CAPACITY_128 128u
#define SGT_CAPACITY_256 256u

typedef struct sgt_semigroup sgt_semigroup;
typedef struct sgt_report sgt_report;

/* Everything the Wilf check and the Eliahou constant need at one node. */
typedef struct sgt_eliahou_data {
  uint64_t conductor;
  uint64_t multiplicity;
  uint64_t quotient;              /* ceil(conductor / multiplicity) */
  uint64_t remainder;             /* quotient * multiplicity - conductor */
  uint64_t primitive_count;
  uint64_t right_generator_count;
  uint64_t rank;
  int64_t constant;               /* k(p-r) - q(m-r) + remainder */
  uint64_t wilf_left;             /* conductor */
  uint64_t wilf_right;            /* rank * primitive_count */
  int wilf_holds;                 /* wilf_left <= wilf_right */
} sgt_eliahou_data;

/* ------------------------------------------------------------------ */
/* Construction.  Every constructor places a new handle in *out; free  */
/* it with sgt_semigroup_free.                                         */

/* The root of the tree: the natural numbers. */
SGT_API sgt_status sgt_semigroup_natural(uint32_t capacity_bits, sgt_semigroup** out);

/* Smallest semigroup containing the generators and every integer >=
 * floor_value; pass floor_value 0 for the plain closure (the generators
 * must then have gcd 1). */
SGT_API sgt_status sgt_semigroup_from_generators(const uint64_t* generators,
                                                 size_t generator_count,
                                                 uint64_t floor_value,
                                                 uint32_t capacity_bits,
                                                 sgt_semigroup** out);

/* The semigroup left_elements U [conductor, inf).  left_elements must
 * contain 0, omit conductor - 1 and be additively closed below the
 * conductor. */
SGT_API sgt_status sgt_semigroup_from_elements(const uint64_t* left_elements,
                                               size_t left_count,
                                               uint64_t conductor,
                                               uint32_t capacity_bits,
                                               sgt_semigroup** out);

/* Rank 1..3 closed forms: {0,m,...}, {0,m,m+u,...}, {0,m,m+u,m+u+v,...}.
 * Pass u = 0 (and v = 0) to drop the higher ranks. */
SGT_API sgt_status sgt_semigroup_low_rank(uint64_t m, uint64_t u, uint64_t v,
                                          uint32_t capacity_bits,
                                          sgt_semigroup** out);

/* The Eliahou-constant -1 families. */
SGT_API sgt_status sgt_semigroup_ef(uint64_t m, uint64_t a, uint64_t b,
                                    uint32_t capacity_bits, sgt_semigroup** out);
SGT_API sgt_status sgt_semigroup_delgado(uint64_t p, uint64_t tau, uint64_t i,
                                         uint64_t j, uint32_t capacity_bits,
                                         sgt_semigroup** out);
SGT_API sgt_status sgt_semigroup_bef(uint64_t t, uint32_t capacity_bits,
                                     sgt_semigroup** out);

/* The child of the tree obtained by removing one right generator. */
SGT_API sgt_status sgt_semigroup_child(const sgt_semigroup* s,
                                       uint64_t removed_generator,
                                       sgt_semigroup** out);

SGT_API void sgt_semigroup_free(sgt_semigroup* s);

/* ------------------------------------------------------------------ */
/* Queries.                                                            */

SGT_API uint64_t sgt_semigroup_conductor(const sgt_semigroup* s);
SGT_API uint64_t sgt_semigroup_multiplicity(const sgt_semigroup* s);
SGT_API uint64_t sgt_semigroup_genus(const sgt_semigroup* s);
SGT_API uint64_t sgt_semigroup_rank(const sgt_semigroup* s);
SGT_API uint64_t sgt_semigroup_jump1(const sgt_semigroup* s);
SGT_API uint64_t sgt_semigroup_jump2(const sgt_semigroup* s);
SGT_API uint32_t sgt_semigroup_capacity(const sgt_semigroup* s);

/* Closed-form number of children, grandchildren and great-grandchildren. */
SGT_API sgt_status sgt_semigroup_descendant_counts(const sgt_semigroup* s,
                                                   uint64_t* children,
                                                   uint64_t* grandchildren,
                                                   uint64_t* great_grandchildren);

SGT_API sgt_status sgt_semigroup_eliahou(const sgt_semigroup* s,
                                         sgt_eliahou_data* out);

/* Element lists; *count receives the total number available. */
SGT_API sgt_status sgt_semigroup_right_generators(const sgt_semigroup* s,
                                                  uint64_t* buf, size_t buf_len,
                                                  size_t* count);
SGT_API sgt_status sgt_semigroup_primitives(const sgt_semigroup* s, uint64_t* buf,
                                            size_t buf_len, size_t* count);

/* Text forms.  Bit strings print least significant index first.  The
 * seed table prints one row per line; the tree render nests one seed
 * table per node, depth between 1 and 3. */
SGT_API sgt_status sgt_semigroup_gap_bits(const sgt_semigroup* s, char* buf,
                                          size_t size, size_t* needed);
SGT_API sgt_status sgt_semigroup_seed_bits(const sgt_semigroup* s, char* buf,
                                           size_t size, size_t* needed);
SGT_API sgt_status sgt_semigroup_elements(const sgt_semigroup* s, char* buf,
                                          size_t size, size_t* needed);
SGT_API sgt_status sgt_semigroup_seed_table(const sgt_semigroup* s, char* buf,
                                            size_t size, size_t* needed);
SGT_API sgt_status sgt_semigroup_render(const sgt_semigroup* s, uint32_t depth,
                                        char* buf, size_t size, size_t* needed);

/* ------------------------------------------------------------------ */
/* Exploration.                                                        */

typedef void (*sgt_progress_fn)(uint64_t roots_done, uint64_t roots_total,
                                void* user_data);

typedef struct sgt_explore_options {
  uint32_t max_genus;
  uint32_t workers;       /* 0 = one per hardware thread */
  uint32_t capacity_bits; /* 0 = 128 */
  int eliahou;            /* nonzero runs the Eliahou/Wilf hook */
  sgt_progress_fn progress;
  void* progress_user;
} sgt_explore_options;

/* Visits every semigroup of genus <= max_genus exactly once.  Returns
 * SGT_OVERFLOW (with *out still produced) when some node's conductor
 * exceeds the capacity; sgt_report_overflow_genus names the genus. */
SGT_API sgt_status sgt_explore(const sgt_explore_options* options,
                               sgt_report** out);

SGT_API void sgt_report_free(sgt_report* r);

SGT_API uint32_t sgt_report_max_genus(const sgt_report* r);
SGT_API uint64_t sgt_report_count(const sgt_report* r, uint32_t genus);
SGT_API double sgt_report_wall_seconds(const sgt_report* r);
SGT_API int64_t sgt_report_overflow_genus(const sgt_report* r); /* -1 if none */

SGT_API size_t sgt_report_hit_count(const sgt_report* r);
SGT_API size_t sgt_report_wilf_violation_count(const sgt_report* r);
SGT_API sgt_status sgt_report_hit(const sgt_report* r, size_t index,
                                  uint32_t* genus, sgt_eliahou_data* data);
SGT_API sgt_status sgt_report_hit_generators(const sgt_report* r, size_t index,
                                             uint64_t* buf, size_t buf_len,
                                             size_t* count);

/* "genus<TAB>count" per line / one object with counts, eliahou_hits and
 * wall_seconds. */
SGT_API sgt_status sgt_report_tsv(const sgt_report* r, char* buf, size_t size,
                                  size_t* needed);
SGT_API sgt_status sgt_report_json(const sgt_report* r, char* buf, size_t size,
                                   size_t* needed);

/* ------------------------------------------------------------------ */
/* Verification suites: counts, seeds, ggc, eliahou, families.         */
/* genus_limit 0 selects the suite default.  *passed is set to 0/1 and */
/* the log text is returned through the buffer convention; the status  */
/* is SGT_VERIFY_FAILED when the suite found a mismatch.               */

SGT_API sgt_status sgt_verify(const char* suite, uint32_t genus_limit,
                              char* buf, size_t size, size_t* needed,
                              int* passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SGTREE_H */
