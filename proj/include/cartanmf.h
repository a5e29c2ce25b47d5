#ifndef CARTANMF_H
#define CARTANMF_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handle holding the working characteristic (0 = exact rationals,
 * otherwise a prime other than 2 and 3) plus cached constructions and the
 * last error message. Handles are not thread-safe; use one per thread. */
typedef struct cmf_ctx cmf_ctx;

typedef enum {
  CMF_OK = 0,
  CMF_ERR_INVALID = 1,      /* bad argument / unusable input */
  CMF_ERR_CHECK_FAILED = 2, /* a mathematical verification failed */
  CMF_ERR_INTERNAL = 3
} cmf_status;

cmf_ctx* cmf_ctx_new(unsigned long characteristic);
void cmf_ctx_free(cmf_ctx* ctx);

/* message for the most recent failing call on this handle; owned by the
 * handle, valid until the next call */
const char* cmf_last_error(const cmf_ctx* ctx);

/* free any char* returned through an out-parameter below */
void cmf_free(char* s);

/* All outputs are JSON strings unless noted; the caller frees them. */

/* ten quadrics q_1..q_5, q_1'..q_5' and their 10 x 16 linear syzygy matrix */
cmf_status cmf_build_spinor(cmf_ctx* ctx, char** json_out);

/* universal cubic F, Cartan cubic F_C, and the 45-triple sign table */
cmf_status cmf_build_cartan(cmf_ctx* ctx, char** json_out);

cmf_status cmf_hessian(cmf_ctx* ctx, char** json_out);
/* dot-for-zero text rendering of the Hessian */
cmf_status cmf_hessian_grid(cmf_ctx* ctx, char** text_out);

/* quadratic partner Q with H Q = Q H = F_C Id */
cmf_status cmf_comatrix(cmf_ctx* ctx, char** json_out);

/* resolution, homotopies, tail matrices D_5, D_6 and the Hessian match */
cmf_status cmf_shamash(cmf_ctx* ctx, char** json_out);

/* restriction of the Hessian factorization to a random linear section
 * of P^dim, 3 <= dim <= 8 */
cmf_status cmf_section(cmf_ctx* ctx, int dim, uint64_t seed, char** json_out);

/* Riemann-Roch Chern solve and obstruction verdict for one rank */
cmf_status cmf_rr(cmf_ctx* ctx, long rank, char** json_out);

/* group: spinor | cartan | shamash | sections | rr | all; status is
 * CMF_ERR_CHECK_FAILED when any check fails (report still returned) */
cmf_status cmf_verify(cmf_ctx* ctx, const char* group, uint64_t seed, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* CARTANMF_H */
