/* C interface to the tetrahedron correspondence library.
 *
 * All rich data crosses the boundary as JSON text. Every function that can
 * fail returns a status code; on failure a human readable message is kept on
 * the context and read back with lagtetra_last_error. Strings returned
 * through char** outputs are heap allocated and released with
 * lagtetra_string_free.
 */
#ifndef LAGTETRA_H
#define LAGTETRA_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define LAGTETRA_OK 0
#define LAGTETRA_EVERIFY 1  /* verification checks ran and failed */
#define LAGTETRA_EPARSE 2   /* malformed input text or invalid configuration */
#define LAGTETRA_EGEOM 3    /* geometric or numerical failure */
#define LAGTETRA_EINVAL 4   /* null handle or argument */
#define LAGTETRA_EINTERNAL 5

typedef struct lagtetra_ctx lagtetra_ctx;
typedef struct lagtetra_lagrangian lagtetra_lagrangian;
typedef struct lagtetra_tetra lagtetra_tetra;

const char* lagtetra_version(void);

lagtetra_ctx* lagtetra_ctx_new(void);
void lagtetra_ctx_free(lagtetra_ctx* ctx);
int lagtetra_ctx_set_tolerance(lagtetra_ctx* ctx, double tol, double cluster);
int lagtetra_ctx_set_seed(lagtetra_ctx* ctx, uint64_t seed);
int lagtetra_ctx_set_samples(lagtetra_ctx* ctx, int samples);
const char* lagtetra_last_error(const lagtetra_ctx* ctx);

void lagtetra_string_free(char* s);

/* Planes: {"basis": [cubic, cubic]} or {"plucker": [six complex]}. */
int lagtetra_lagrangian_parse(lagtetra_ctx* ctx, const char* json,
                              lagtetra_lagrangian** out);
void lagtetra_lagrangian_free(lagtetra_lagrangian* w);
int lagtetra_lagrangian_to_json(lagtetra_ctx* ctx, const lagtetra_lagrangian* w,
                                char** out);
int lagtetra_lagrangian_classify(lagtetra_ctx* ctx, const lagtetra_lagrangian* w,
                                 char** out);
int lagtetra_lagrangian_project(lagtetra_ctx* ctx, const lagtetra_lagrangian* w,
                                char** out);
int lagtetra_lagrangian_roundtrip(lagtetra_ctx* ctx, const lagtetra_lagrangian* w,
                                  char** out);

/* Tetra: {"vertices": [four points]}; the decoration is rebuilt. */
int lagtetra_tetra_parse(lagtetra_ctx* ctx, const char* json, lagtetra_tetra** out);
void lagtetra_tetra_free(lagtetra_tetra* t);
int lagtetra_tetra_to_json(lagtetra_ctx* ctx, const lagtetra_tetra* t, char** out);
/* s_json: a number or {"inf": "+"} / {"inf": "-"}. */
int lagtetra_tetra_phi(lagtetra_ctx* ctx, const lagtetra_tetra* t, const char* s_json,
                       char** out);
int lagtetra_tetra_scene(lagtetra_ctx* ctx, const lagtetra_tetra* t, double s0,
                         double s1, int steps, char** out);

/* z_json: a boundary point; n representatives flowing to it. */
int lagtetra_fiber_sample(lagtetra_ctx* ctx, const char* z_json, int n, char** out);

/* suites_csv: comma separated suite names, or NULL for all. Returns
 * LAGTETRA_EVERIFY (with the report still written) when checks fail. */
int lagtetra_verify(lagtetra_ctx* ctx, const char* suites_csv, char** out);

int lagtetra_topology_certificate(lagtetra_ctx* ctx, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LAGTETRA_H */
