/* C interface to the hopflattice shared library.
 *
 * Every function returns 0 on success or a nonzero hl_errc code; on failure
 * hl_last_error() holds a message for the calling thread.  Strings returned
 * through char** out-parameters are heap-allocated JSON documents and must
 * be released with hl_string_free().
 */
#ifndef HOPFLATTICE_H
#define HOPFLATTICE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum hl_errc {
  HL_OK = 0,
  HL_PANIC = 1, /* unexpected exception */
  HL_INVALID_ARGUMENT = 2,
  HL_NOT_A_GROUP = 3,
  HL_DIMENSION_MISMATCH = 4,
  HL_NOT_SEMISIMPLE = 5,
  HL_NO_SOLUTION = 6,
  HL_NORMALIZATION_FAILURE = 7,
  HL_CONSTRUCTION_FAILURE = 8,
  HL_RANDOMIZATION_EXHAUSTED = 9,
  HL_NOT_A_MORPHISM = 10,
  HL_UNKNOWN_SURFACE = 11,
  HL_INVALID_SITE = 12,
  HL_SITES_NOT_DISJOINT = 13,
  HL_NON_INTEGER_TRACE = 14,
  HL_NON_INTEGER_MULTIPLICITY = 15,
  HL_QUASITRIANGULARITY_FAILURE = 16,
  HL_MISMATCH = 17,
  HL_TOO_LARGE = 18,
  HL_UNSUPPORTED_FLAVOR = 19,
  HL_IO_ERROR = 20
};

typedef struct hl_algebra hl_algebra;
typedef struct hl_surface hl_surface;

const char* hl_version(void);

/* Message for the last failing call on this thread; never NULL. */
const char* hl_last_error(void);

void hl_string_free(char* s);

/* Algebra spec strings: group:<name|file>, function:<name|file>,
 * dual:<spec>, double:<spec>, raw:<json file>.  Built-in groups: Z<k>, S3. */
int hl_algebra_create(const char* spec, hl_algebra** out);
void hl_algebra_free(hl_algebra* a);

/* Surface spec: a standard name (sphere:tetrahedron, sphere:cube,
 * sphere:bigon, torus:square-1v, torus:grid-NxM, genus2:octagon-1v) or
 * file:<path> with JSON {edge_pair, vertex_rot, positive_dart}. */
int hl_surface_create(const char* spec, hl_surface** out);
void hl_surface_free(hl_surface* s);

/* {spec, dim, basis, axiom_residuals{...}} */
int hl_algebra_info(const hl_algebra* a, char** json_out);

/* {spec, dim, blocks: [{dim}], sum_of_squares} */
int hl_wedderburn(const hl_algebra* a, uint64_t seed, char** json_out);

/* Drinfeld double of a: {dim, blocks, haar_residual,
 * quasitriangularity_residual, half_braiding_residual} */
int hl_double_report(const hl_algebra* a, uint64_t seed, char** json_out);

/* {algebra, surface, state_dim, ground_dim, elapsed_ms} */
int hl_ground_dim(const hl_algebra* a, const hl_surface* s, char** json_out);

/* suite: axioms | commutation | duality | orientation.  The surface may be
 * NULL for the axioms suite.  Report: {suite, residuals{...}, tolerance,
 * pass, elapsed_ms}. */
int hl_verify(const hl_algebra* a, const hl_surface* s, const char* suite, uint64_t seed,
              double tol_axiom, double tol_op, char** json_out);

/* sites: comma-separated anchor darts.  labels: comma-separated block
 * indices of the Drinfeld double (one per site), or "all" to sweep every
 * tuple.  Report: {sites, tuples: [{labels, dim_M, route_a, route_b}],
 * L_dim, consistency_ok, elapsed_ms}. */
int hl_protected(const hl_algebra* a, const hl_surface* s, const char* sites, const char* labels,
                 uint64_t seed, char** json_out);

/* name: commuting-pairs | brute-ground-dim | haar-formula.
 * commuting-pairs wants a group:<g> algebra and compares against the torus
 * ground dimension; brute-ground-dim compares the dense kernel count with
 * the engine on the given surface; haar-formula compares the closed form
 * for group:/function:/dual:group: algebras with the nullspace solver. */
int hl_oracle(const char* name, const hl_algebra* a, const hl_surface* s, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* HOPFLATTICE_H */
