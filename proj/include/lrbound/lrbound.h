/* SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 The lrbound Authors
 *
 * C interface to the lrbound library. Every function returning lrb_status
 * reports failures through the code and lrb_last_error(); output pointers are
 * written only on LRB_OK. Handles are owned by the caller and released with
 * the matching *_free function.
 */
#ifndef LRBOUND_LRBOUND_H
#define LRBOUND_LRBOUND_H

#include <stddef.h>

#if defined(LRB_BUILDING_LIBRARY)
#define LRB_API __attribute__((visibility("default")))
#else
#define LRB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int lrb_status;

#define LRB_OK 0
#define LRB_ERR_INVALID 2  /* bad argument or parameter */
#define LRB_ERR_NUMERIC 3  /* tolerance or convergence failure */
#define LRB_ERR_SPEC 4     /* model-spec parse error */
#define LRB_ERR_INTERNAL 5 /* unexpected failure */

typedef struct lrb_spec lrb_spec;
typedef struct lrb_graph lrb_graph;
typedef struct lrb_cell lrb_cell;
typedef struct lrb_table lrb_table;

LRB_API const char* lrb_version(void);
/* Message of the last failure on the calling thread ("" if none). */
LRB_API const char* lrb_last_error(void);
/* Spec line of the last LRB_ERR_SPEC failure, 0 otherwise. */
LRB_API int lrb_last_error_line(void);

/* ---- model specs ---- */
LRB_API lrb_status lrb_spec_parse(const char* text, lrb_spec** out);
LRB_API lrb_status lrb_spec_load(const char* path, lrb_spec** out);
/* Builtin operator-level spec. extents: NULL for the translation-invariant
 * cell, or "L1,L2,..." with boundary "open" or "periodic". */
LRB_API lrb_status lrb_spec_builtin(const char* model, const char* params, const char* extents, const char* boundary,
                                    lrb_spec** out);
LRB_API lrb_status lrb_spec_translation_invariant(const lrb_spec* spec, int* out);
LRB_API lrb_status lrb_spec_majorana(const lrb_spec* spec, int* out);
/* key,value table: Clifford verification plus graph statistics. */
LRB_API lrb_status lrb_spec_check(const lrb_spec* spec, lrb_table** out);
LRB_API void lrb_spec_free(lrb_spec* spec);

/* ---- finite commutativity graphs ---- */
LRB_API lrb_status lrb_graph_build(const lrb_spec* spec, lrb_graph** out);
LRB_API lrb_status lrb_graph_reduce(const lrb_graph* g, const size_t* F, size_t nF, lrb_graph** out);
/* Eliminates every vertex whose label, up to an optional "@cell" suffix,
 * equals one of the comma-separated class names. */
LRB_API lrb_status lrb_graph_reduce_classes(const lrb_graph* g, const char* classes, lrb_graph** out);
LRB_API lrb_status lrb_graph_vertex_count(const lrb_graph* g, size_t* out);
LRB_API lrb_status lrb_graph_edge_count(const lrb_graph* g, size_t* out);
LRB_API lrb_status lrb_graph_find(const lrb_graph* g, const char* label, size_t* out);
/* Vertices anticommuting with the operator given as a factor list parsed
 * against spec. Writes up to cap ids and the full count. */
LRB_API lrb_status lrb_graph_support(const lrb_graph* g, const lrb_spec* spec, const char* factors, size_t* ids,
                                     size_t cap, size_t* count);
/* Hop distance between vertex sets; (size_t)-1 when disconnected. */
LRB_API lrb_status lrb_graph_distance(const lrb_graph* g, const size_t* X, size_t nX, const size_t* Y, size_t nY,
                                      size_t* out);
/* 2 lambda h e. */
LRB_API lrb_status lrb_graph_generic_velocity(const lrb_graph* g, double* out);
/* One-row velocity table for the generic 2 lambda h e bound. */
LRB_API lrb_status lrb_graph_velocity(const lrb_graph* g, lrb_table** out);
/* Edge-list text; release with lrb_string_free. */
LRB_API lrb_status lrb_graph_export(const lrb_graph* g, char** out);
LRB_API void lrb_graph_free(lrb_graph* g);
LRB_API void lrb_string_free(char* s);

/* ---- dynamics on finite graphs ---- */
/* t,target,source,G. tol <= 0 selects the default 1e-10. */
LRB_API lrb_status lrb_green(const lrb_graph* g, const size_t* sources, size_t ns, const size_t* targets, size_t nt,
                             const double* times, size_t ntimes, double tol, lrb_table** out);
/* t,bound,provenance. mode: "term" (X must be one vertex), "operator" or
 * "factorial" (velocity 2 lambda h e, constant certified on the graph). */
LRB_API lrb_status lrb_operator_bound(const lrb_graph* g, const char* mode, const size_t* X, size_t nX, const size_t* Y,
                                      size_t nY, double normA, double normB, const double* times, size_t ntimes,
                                      double tol, lrb_table** out);
LRB_API lrb_status lrb_taylor_coefficient(const lrb_graph* g, size_t i, size_t j, unsigned n, double* out);

/* ---- translation-invariant unit cells ---- */
/* fermion != 0 builds the fermion-method cell of a Majorana spec. */
LRB_API lrb_status lrb_cell_from_spec(const lrb_spec* spec, int fermion, lrb_cell** out);
/* which: "fermion" or "modified". */
LRB_API lrb_status lrb_cell_fh(const char* which, int N, int d, double J, double U, lrb_cell** out);
/* Eliminates the comma-separated vertex classes. */
LRB_API lrb_status lrb_cell_reduce(const lrb_cell* cell, const char* classes, lrb_cell** out);
LRB_API lrb_status lrb_cell_size(const lrb_cell* cell, size_t* out);
LRB_API lrb_status lrb_cell_dimension(const lrb_cell* cell, int* out);
LRB_API lrb_status lrb_cell_find(const lrb_cell* cell, const char* label, size_t* out);
/* Finite open lattice (commutativity cells only). */
LRB_API lrb_status lrb_cell_expand(const lrb_cell* cell, const int* extents, lrb_graph** out);
/* branch,value,is_bound,selected,method,kappa_star,baseline. */
LRB_API lrb_status lrb_cell_velocity(const lrb_cell* cell, lrb_table** out);
LRB_API lrb_status lrb_cell_velocity_value(const lrb_cell* cell, double* v, double* kappa_star);
/* kappa,omega,omega_over_kappa. */
LRB_API lrb_status lrb_cell_dispersion(const lrb_cell* cell, const double* kappas, size_t n, lrb_table** out);
/* t,r,alpha,beta,G. quad = 0 selects 64 points per axis. */
LRB_API lrb_status lrb_cell_fourier_green(const lrb_cell* cell, const int* r, size_t alpha, size_t beta,
                                          const double* times, size_t ntimes, size_t quad, lrb_table** out);
/* kappa == NULL minimizes over kappa_0 sgn(r). */
LRB_API lrb_status lrb_cell_tail_bound(const lrb_cell* cell, const int* r, size_t alpha, size_t beta, double t,
                                       const double* kappa, double* out);
LRB_API void lrb_cell_free(lrb_cell* cell);

/* ---- constants, models, oracles ---- */
LRB_API lrb_status lrb_solve_x(double y, double* out);
LRB_API lrb_status lrb_solve_z(double y, double* out);
/* Closed-form branch table with the baseline column filled when defined. */
LRB_API lrb_status lrb_model_velocity(const char* model, const char* params, lrb_table** out);
LRB_API lrb_status lrb_model_velocity_value(const char* model, const char* params, double* out);
LRB_API lrb_status lrb_model_baseline(const char* model, const char* params, double* out);
LRB_API lrb_status lrb_fh_anticommutator_bound(const int* x, size_t d, double t, double J, double U, int N,
                                               double* out);
LRB_API lrb_status lrb_free_fermion_exact(const int* x, size_t d, double t, double J, double* out);

/* ---- correlation length ---- */
LRB_API lrb_status lrb_lambert_w(double x, double* out);
LRB_API lrb_status lrb_xi_inverse_bound(double gap, double u, double* out);
LRB_API lrb_status lrb_xi_inverse_previous(double gap, double J, double* out);
LRB_API lrb_status lrb_xi_inverse_exact_tfim(double J, double h, double* out, int* critical);
/* h_over_J,xi_inv_ours,xi_inv_previous,xi_inv_exact; gap NULL for 2|J-h|. */
LRB_API lrb_status lrb_xi_report(double J, double lo, double hi, size_t n, const double* gap, lrb_table** out,
                                 double* previous_plateau);

/* ---- reports ---- */
LRB_API lrb_status lrb_table1(lrb_table** out);
LRB_API lrb_status lrb_fig4(double lo, double hi, size_t n, lrb_table** out);
LRB_API lrb_status lrb_fig6(double lo, double hi, size_t n, const double* gap, lrb_table** out);

/* ---- tables ---- */
LRB_API size_t lrb_table_rows(const lrb_table* t);
LRB_API size_t lrb_table_cols(const lrb_table* t);
LRB_API const char* lrb_table_column(const lrb_table* t, size_t col);
LRB_API int lrb_table_is_number(const lrb_table* t, size_t row, size_t col);
/* NaN for text cells or out-of-range indices. */
LRB_API double lrb_table_number(const lrb_table* t, size_t row, size_t col);
/* NULL for numeric cells or out-of-range indices. */
LRB_API const char* lrb_table_text(const lrb_table* t, size_t row, size_t col);
LRB_API void lrb_table_free(lrb_table* t);

#ifdef __cplusplus
}
#endif

#endif /* LRBOUND_LRBOUND_H */
