#ifndef HOROPACK_H
#define HOROPACK_H

/* C interface to the horopack library.
 *
 * Computes horoball packing densities for ideal regular simplices in
 * n-dimensional hyperbolic space: Lorentz-model geometry, the ideal
 * regular simplex volume series, and the classical and generalized
 * simplicial packing densities.
 *
 * All functions return hp_status; outputs go through pointer arguments.
 * Coordinate arrays have dim+1 entries (projective Lorentz coordinates,
 * defined up to a nonzero scalar).
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hp_status {
    HP_OK = 0,
    HP_ERR_INVALID_ARGUMENT = 1, /* precondition violated */
    HP_ERR_DIMENSION_MISMATCH = 2,
    HP_ERR_DOMAIN = 3,           /* numeric domain error (bad point class, etc.) */
    HP_ERR_NOT_CONVERGED = 4,    /* series hit max_terms before the tolerance */
    HP_ERR_BUFFER_TOO_SMALL = 5,
    HP_ERR_INTERNAL = 6
} hp_status;

/* Static message for a status code. */
const char* hp_status_message(hp_status status);

/* ---- Lorentz model geometry (signature (1,n)) ------------------------- */

enum { HP_POINT_INTERIOR = 0, HP_POINT_ABSOLUTE = 1, HP_POINT_OUTER = 2 };

hp_status hp_bilinear_form(int dim, const double* x, const double* y,
                           double* out);
hp_status hp_classify_point(int dim, const double* x, double tol,
                            int* out_class);
hp_status hp_distance(int dim, const double* x, const double* y, double* out);
hp_status hp_polar_form(int dim, const double* x, double* out);
hp_status hp_foot_of_perpendicular(int dim, const double* x, const double* u,
                                   double* out);
hp_status hp_distance_to_hyperplane(int dim, const double* x, const double* u,
                                    double* out);

/* Ideal regular n-simplex in the standard frame: last vertex at
 * (1,0,...,0,1), centroid of the opposite facet at the model center. */
typedef struct hp_simplex hp_simplex;

hp_status hp_simplex_create(int dim, hp_simplex** out);
void hp_simplex_destroy(hp_simplex* s);
int hp_simplex_dim(const hp_simplex* s);
/* Writes dim+1 coordinates of vertex i (0 <= i <= dim). */
hp_status hp_simplex_vertex(const hp_simplex* s, int i, double* out);
hp_status hp_simplex_incenter(const hp_simplex* s, double* out);
/* Pole of the edge line (i,j) within the plane spanned by the edge and the
 * model center; a proper hyperplane form usable with
 * hp_distance_to_hyperplane. */
hp_status hp_simplex_edge_pole(const hp_simplex* s, int i, int j, double* out);

/* ---- Ideal regular simplex volume ------------------------------------- */

typedef struct hp_volume_result {
    double value;         /* partial_sum + tail_estimate */
    double uncertainty;   /* bound on |value - true volume| */
    double partial_sum;
    double tail_estimate;
    long terms_used;
    int converged;        /* 0/1 */
} hp_volume_result;

/* rel_tol <= 0 and max_terms <= 0 select the defaults (1e-7, 20000). */
hp_status hp_simplex_volume(int dim, double rel_tol, long max_terms,
                            hp_volume_result* out);

/* Exact series coefficient A_{n,k} as a decimal string. */
hp_status hp_composition_coefficient(int n, int k, char* buf, size_t buflen);

/* Lobachevsky function, theta in (0, pi/2]. */
hp_status hp_lobachevsky(double theta, double* out);

/* Dihedral angle arccos(1/(n-1)) of the ideal regular n-simplex. */
hp_status hp_dihedral_angle(int dim, double* out);

/* ---- Packing densities ------------------------------------------------- */

typedef struct hp_constants {
    int dim;
    double rho;           /* in-radius */
    double s;             /* incenter-to-edge distance */
    double r;             /* horocyclic ratio log */
    double q;             /* maximal tangency offset, q = r + rho */
    double half_dihedral;
    double phi;           /* angle with cot(phi) = sinh(s) */
    double v0;            /* one-horoball sector volume in B0 */
} hp_constants;

hp_status hp_geometric_constants(int dim, hp_constants* out);

hp_status hp_horocycle_arc_length(double x, double* out);
hp_status hp_horoball_sector_volume(double area, int dim, double* out);
hp_status hp_two_ball_exchange_volume(double v_at_zero, double x, int dim,
                                      double* out);
/* Total horoball-in-simplex volume at tangency offset x in [0, q_n]. */
hp_status hp_packing_volume(int dim, double x, double* out);

enum { HP_ARRANGEMENT_B0 = 0, HP_ARRANGEMENT_B1 = 1, HP_ARRANGEMENT_BOTH = 2 };

typedef struct hp_density_report {
    int dim;
    double classical;
    double generalized;
    double ratio;          /* generalized / classical */
    int optimal;           /* HP_ARRANGEMENT_* */
    double simplex_volume;
    double volume_uncertainty;
    double density_uncertainty;
    int volume_converged;  /* 0/1 */
} hp_density_report;

hp_status hp_density_report_compute(int dim, double rel_tol, long max_terms,
                                    hp_density_report* out);

/* Fills samples evenly spaced on [0, q_n] including both endpoints.
 * xs/vs/deltas must each hold `samples` doubles. */
hp_status hp_density_sweep(int dim, int samples, double rel_tol,
                           long max_terms, double* xs, double* vs,
                           double* deltas);

/* ---- Self-verification -------------------------------------------------- */

typedef void (*hp_verify_callback)(const char* check_name, int passed,
                                   const char* detail, void* user);

/* Runs the built-in oracle and invariant checks. classical_perturbation is a
 * fault-injection knob for the test harness (relative error applied to the
 * classical-density route); pass 0 for a normal run. *all_passed is set to
 * 1 iff every check passed. */
hp_status hp_verify(double classical_perturbation, hp_verify_callback cb,
                    void* user, int* all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HOROPACK_H */
