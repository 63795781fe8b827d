/*
 * Copyright 2026 The pseudogeo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libpseudogeo.
 *
 * Every fallible call returns a pg_status. On failure the message is
 * available from pg_last_error() on the calling thread until the next call
 * into the library from that thread. Objects are opaque handles released with
 * their matching *_free function; strings returned through char** are
 * released with pg_string_free. Strings owned by a handle (report text and
 * JSON) live as long as the handle.
 *
 * Angles are radians. Axis indices are 1-based.
 */

#ifndef PSEUDOGEO_H
#define PSEUDOGEO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PG_EXPORT __declspec(dllexport)
#else
#define PG_EXPORT __attribute__((visibility("default")))
#endif

typedef enum pg_status {
  PG_OK = 0,
  PG_ERR_INVALID_INPUT = 1,
  PG_ERR_DIMENSION = 2,
  PG_ERR_DEGENERATE_DIRECTION = 3,
  PG_ERR_OUT_OF_BOUNDS = 4,
  PG_ERR_COVERAGE = 5,
  PG_ERR_SINGULARITY = 6,
  PG_ERR_PARSE = 7,
  PG_ERR_VALIDATION = 8,
  PG_ERR_UNSUPPORTED = 9,
  PG_ERR_IO = 10,
  PG_ERR_INTERNAL = 99
} pg_status;

typedef enum pg_point_tag {
  PG_ELLIPTIC = 0,
  PG_EUCLIDEAN = 1,
  PG_HYPERBOLIC = 2
} pg_point_tag;

PG_EXPORT const char* pg_version(void);
PG_EXPORT const char* pg_status_name(pg_status status);
PG_EXPORT const char* pg_last_error(void);
PG_EXPORT void pg_string_free(char* s);

/* Charges and directions ------------------------------------------------ */

/* out receives n components in [0, 4pi). */
PG_EXPORT pg_status pg_reduce_omega(const double* raw, size_t n, double* out);
/* tags receives n pg_point_tag values. */
PG_EXPORT pg_status pg_classify_point(const double* raw, size_t n, int* tags);
/* Free direction angles in, transformed angles in [0, 2pi) out. */
PG_EXPORT pg_status pg_transform_direction(const double* theta,
                                           const double* omega_raw, size_t n,
                                           double* out);
PG_EXPORT pg_status pg_is_identity_mapping(const double* raw, size_t n,
                                           int* out);
/* "1.5pi", "-pi/2", "7/2pi", "0.25". */
PG_EXPORT pg_status pg_parse_angle(const char* text, double* out);

/* Reports --------------------------------------------------------------- */

typedef struct pg_report pg_report;

PG_EXPORT const char* pg_report_text(const pg_report* report);
PG_EXPORT const char* pg_report_json(const pg_report* report);
/* 0 when the report records a failed validation or check. */
PG_EXPORT int pg_report_ok(const pg_report* report);
PG_EXPORT void pg_report_free(pg_report* report);

PG_EXPORT pg_status pg_classify_report(const double* raw, size_t n,
                                       pg_report** out);
PG_EXPORT pg_status pg_parallels_report(const double* raw, size_t n,
                                        size_t axis, pg_report** out);

/* Tangent (cotangent != 0: cotangent) space at a point of R^n whose
 * euclidean axes are listed. */
PG_EXPORT pg_status pg_tangent_dimension(size_t n, const size_t* euclidean_axes,
                                         size_t s, size_t* dim);
PG_EXPORT pg_status pg_tangent_report(size_t n, const size_t* euclidean_axes,
                                      size_t s, int cotangent, pg_report** out);

/* Principal fiber bundle bookkeeping. An invalid spec still yields a
 * report (pg_report_ok == 0) listing every violated constraint. */
PG_EXPORT pg_status pg_fiber_report(long dim_p, long dim_m, long group_dim,
                                    long lambda, pg_report** out);
PG_EXPORT pg_status pg_vertical_dimension(long dim_p, long dim_m,
                                          long group_dim, long lambda,
                                          long* dim_v);

/* norm_spec: "euclidean", "quartic-mean", "linear[:axis]" or
 * "quadratic:a11,a12;a21,a22". m is the vector dimension (ignored for
 * quadratic forms). tol <= 0 selects the default 1e-9. */
PG_EXPORT pg_status pg_normcheck_report(const char* norm_spec, size_t m,
                                        double tol, pg_report** out);

/* metric_spec: "flat", "conformal", "product" or a constant 2n x 2n matrix
 * "g11,g12;g21,g22". n is the complex dimension (ignored for matrices).
 * Checked on a 3-point-per-axis lattice over [-1, 1]^{2n}. */
PG_EXPORT pg_status pg_kahler_report(const char* metric_spec, size_t n,
                                     double tol, pg_report** out);

/* Scenes ---------------------------------------------------------------- */

typedef struct pg_scene pg_scene;

PG_EXPORT pg_status pg_scene_load_file(const char* path, pg_scene** out);
PG_EXPORT pg_status pg_scene_parse(const char* json_text, pg_scene** out);
PG_EXPORT void pg_scene_free(pg_scene* scene);
PG_EXPORT size_t pg_scene_dimension(const pg_scene* scene);
PG_EXPORT size_t pg_scene_charge_count(const pg_scene* scene);
PG_EXPORT size_t pg_scene_ray_count(const pg_scene* scene);
/* Reduced omega of charge k (n values). */
PG_EXPORT pg_status pg_scene_charge_omega(const pg_scene* scene, size_t k,
                                          double* out);
PG_EXPORT pg_status pg_scene_to_json(const pg_scene* scene, char** out);

PG_EXPORT pg_status pg_detect_report(const pg_scene* scene, pg_report** out);
/* declared_order 0 means C^infinity. */
PG_EXPORT pg_status pg_structure_report(const pg_scene* scene,
                                        int declared_order, pg_report** out);

/* Traces ---------------------------------------------------------------- */

typedef struct pg_traces pg_traces;

/* Traces every ray listed in the scene file. */
PG_EXPORT pg_status pg_scene_trace(const pg_scene* scene, size_t max_events,
                                   pg_traces** out);
PG_EXPORT pg_status pg_scene_trace_ray(const pg_scene* scene,
                                       const double* origin,
                                       const double* direction, size_t n,
                                       size_t max_events, pg_traces** out);
PG_EXPORT void pg_traces_free(pg_traces* traces);
PG_EXPORT size_t pg_traces_count(const pg_traces* traces);
PG_EXPORT size_t pg_traces_vertex_count(const pg_traces* traces, size_t ray);
PG_EXPORT pg_status pg_traces_vertex(const pg_traces* traces, size_t ray,
                                     size_t vertex, double* out);
PG_EXPORT size_t pg_traces_event_count(const pg_traces* traces, size_t ray);
/* incoming and outgoing receive n direction angles each; either may be
 * NULL. */
PG_EXPORT pg_status pg_traces_event(const pg_traces* traces, size_t ray,
                                    size_t event, size_t* charge,
                                    double* incoming, double* outgoing);
PG_EXPORT pg_status pg_traces_report(const pg_traces* traces, pg_report** out);
PG_EXPORT pg_status pg_traces_csv(const pg_traces* traces, char** out);
PG_EXPORT pg_status pg_traces_write_csv(const pg_traces* traces,
                                        const char* path);
/* traces may be NULL for a frame-and-charges rendering. */
PG_EXPORT pg_status pg_scene_svg(const pg_scene* scene,
                                 const pg_traces* traces, char** out);
PG_EXPORT pg_status pg_scene_write_svg(const pg_scene* scene,
                                       const pg_traces* traces,
                                       const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PSEUDOGEO_H */
