/*
 * qent.h: C interface to the qubit entropy library.
 *
 * All functions return a qent_status. On failure a human-readable message is
 * available from qent_last_error() on the calling thread until the next call
 * into the library from that thread. Output pointers are written only on
 * success. Objects behind opaque handles are immutable once created and may
 * be read concurrently; each must be released exactly once with its _free
 * function.
 *
 * Qubit basis convention: v3 = <1|rho|1> - <0|rho|0>, v+ = <0|rho|1>.
 * Entropies are in nats.
 */
#ifndef QENT_H
#define QENT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(QENT_BUILDING_LIBRARY)
#    define QENT_API __declspec(dllexport)
#  else
#    define QENT_API __declspec(dllimport)
#  endif
#else
#  define QENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define QENT_API_VERSION 1

typedef enum qent_status {
    QENT_OK = 0,
    QENT_ERR_DOMAIN = 1,           /* argument outside the mathematical domain */
    QENT_ERR_INVALID_ARGUMENT = 2, /* malformed parameters, grids or handles */
    QENT_ERR_CONVERGENCE = 3,      /* an oracle failed to reach its tolerance */
    QENT_ERR_NOT_FOUND = 4,        /* requested quantity does not exist */
    QENT_ERR_INTERNAL = 5
} qent_status;

typedef struct qent_trajectory qent_trajectory;
typedef struct qent_report qent_report;

typedef struct qent_dephasing_params {
    double s;        /* Ohmicity exponent, > 0 */
    double coupling; /* dimensionless coupling, >= 0 */
    double cutoff;   /* cutoff frequency, > 0 */
    double omega0;   /* qubit splitting; only enters the phase of v+ */
    double a0_re, a0_im, a1_re, a1_im; /* initial amplitudes of |0> and |1> */
} qent_dephasing_params;

typedef struct qent_jc_params {
    double gamma0; /* > 0 */
    double lambda; /* > 0 */
    double omega0;
    double a0_re, a0_im, c1_re, c1_im; /* initial amplitudes of |0> and |1> */
} qent_jc_params;

typedef struct qent_record {
    double t;
    double primary; /* gamma_vac (dephasing) or |c1|^2 (Jaynes-Cummings) */
    double v;
    double entropy;
    double v_plus_re, v_plus_im, v3;
} qent_record;

typedef struct qent_check {
    const char* suite;     /* valid while the report lives */
    const char* name;
    const char* criterion; /* "" for checks outside the acceptance list */
    double max_error;
    double tolerance;
    double seconds;
    int passed;
} qent_check;

typedef enum qent_fault {
    QENT_FAULT_NONE = 0,
    QENT_FAULT_GAMMA_SIGN = 1,     /* negate the closed-form decoherence function */
    QENT_FAULT_POPULATION_SIGN = 2 /* flip the sign of the sinh term in the JC envelope */
} qent_fault;

QENT_API const char* qent_version(void);
QENT_API int qent_api_version(void);
QENT_API const char* qent_last_error(void);
QENT_API const char* qent_status_string(qent_status status);

/* qubit core */
QENT_API qent_status qent_bloch_modulus(double v_plus_re, double v_plus_im, double v3, double* out);
QENT_API qent_status qent_entropy_from_modulus(double v, double* out);
QENT_API qent_status qent_schmidt_weights(double v, double* w0, double* w1);

/* dephasing model */
QENT_API qent_status qent_spectral_density(double s, double coupling, double cutoff, double omega,
                                           double* out);
QENT_API qent_status qent_gamma_vac(double s, double coupling, double cutoff, double t, double* out);
QENT_API qent_status qent_gamma_vac_infinity(double s, double coupling, double cutoff, double* out);
QENT_API qent_status qent_entropy_limit_dephasing(double s, double coupling, double cutoff, double v3,
                                                  double* out);
QENT_API qent_status qent_gamma_vac_quadrature(double s, double coupling, double cutoff, double t,
                                               double tol, double* out);
QENT_API qent_status qent_dephasing_trajectory_new(const qent_dephasing_params* params,
                                                   const double* times, size_t n_times,
                                                   qent_trajectory** out);

/* Jaynes-Cummings model */
QENT_API qent_status qent_jc_population(double gamma0, double lambda, double c1_0_sq, double t,
                                        double* out);
/* QENT_ERR_NOT_FOUND when c1_0_sq < 1 (the maximally mixed state is never reached). */
QENT_API qent_status qent_jc_max_entropy_time(double gamma0, double lambda, double c1_0_sq,
                                              double* out);
QENT_API qent_status qent_jc_trajectory_new(const qent_jc_params* params, const double* times,
                                            size_t n_times, qent_trajectory** out);
/* Populations from the Volterra oracle sampled at `times`, which must lie on
 * multiples of some step <= max_step (uniform grids from 0 qualify). */
QENT_API qent_status qent_jc_population_volterra(double gamma0, double lambda, double c1_0_sq,
                                                 const double* times, size_t n_times,
                                                 double max_step, double* out);

/* trajectories */
QENT_API size_t qent_trajectory_size(const qent_trajectory* traj);
QENT_API qent_status qent_trajectory_record(const qent_trajectory* traj, size_t index,
                                            qent_record* out);
QENT_API void qent_trajectory_free(qent_trajectory* traj);

/* verification; suite may be NULL or "all" */
QENT_API size_t qent_verify_suite_count(void);
QENT_API const char* qent_verify_suite_name(size_t index);
QENT_API qent_status qent_verify_run(const char* suite, qent_fault fault, qent_report** out);
QENT_API size_t qent_report_size(const qent_report* report);
QENT_API qent_status qent_report_check(const qent_report* report, size_t index, qent_check* out);
QENT_API int qent_report_all_passed(const qent_report* report);
QENT_API void qent_report_free(qent_report* report);

#ifdef __cplusplus
}
#endif

#endif /* QENT_H */
