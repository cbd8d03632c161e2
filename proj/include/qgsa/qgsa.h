/* qgsa.h - C API for the quantile gradient-sampling library.
 *
 * All functions return QGSA_OK (0) on success or a negative error code;
 * qgsa_last_error() returns a thread-local message for the most recent
 * failure on the calling thread. Objects are opaque handles released with
 * the matching *_free function.
 */
#ifndef QGSA_H
#define QGSA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define QGSA_OK 0
#define QGSA_ERR_USAGE -2   /* bad arguments / invalid configuration */
#define QGSA_ERR_DATA -3    /* I/O or malformed input data */
#define QGSA_ERR_NUMERIC -4 /* numerical failure */

const char* qgsa_version(void);
const char* qgsa_last_error(void);

typedef struct qgsa_panel qgsa_panel;
typedef struct qgsa_surface qgsa_surface;

/* ------------------------------------------------------------------ panel */

typedef struct qgsa_csv_schema {
    const char* date_col; /* NULL -> "date" */
    const char* hour_col; /* NULL -> "hour" */
    const char* qty_col;  /* NULL -> "qty"  */
    int opening_hour;     /* wall-clock hour mapped to t=1; <=0 -> 6 */
} qgsa_csv_schema;

/* Parses a sales CSV into a panel. T is inferred from the data when hours
 * <= 0. Row-level errors are reported through the optional callback and the
 * affected rows skipped; a NULL header or missing column fails with
 * QGSA_ERR_DATA. *n_bad (optional) receives the skipped-row count. */
int qgsa_panel_read_csv(const char* path, const qgsa_csv_schema* schema, int hours,
                        void (*row_error_cb)(long line, const char* message, void* ctx),
                        void* cb_ctx, long* n_bad, qgsa_panel** out);

typedef struct qgsa_sim_spec {
    int hours;        /* <=0 -> 17 */
    int day_classes;  /* <=0 -> 7  */
    int replicates;   /* <=0 -> 1  */
    const char* dist; /* "normal" | "lognormal" | "poisson"; NULL -> normal */
    /* mean(t,j) = mean_base + mean_amp*sin(2*pi*t/hours) + mean_day_slope*j */
    double mean_base;
    double mean_amp;
    double mean_day_slope;
    double sd;
    uint64_t seed;
} qgsa_sim_spec;

void qgsa_sim_spec_init(qgsa_sim_spec* spec);
int qgsa_panel_simulate(const qgsa_sim_spec* spec, qgsa_panel** out);
int qgsa_panel_write_csv(const qgsa_panel* panel, const char* path, int opening_hour);

int qgsa_panel_dims(const qgsa_panel* panel, int* hours, int* day_classes, long* n_obs);
void qgsa_panel_free(qgsa_panel* panel);

/* -------------------------------------------------------------------- fit */

typedef struct qgsa_fit_params {
    double alpha;
    double span;
    int degree;
    int mode; /* 0 = avg, 1 = qp */
    int m;    /* 0 = auto */
    double beta;
    double mu;
    double lambda;
    double eps0; /* 0 = auto-scale from the data */
    double tau0;
    double eps_min;
    double tau_min;
    long max_iter;
    uint64_t seed;
    int init_per_day; /* 0 = pooled constant, 1 = per-day constant */
    int resmooth_iterate;
} qgsa_fit_params;

void qgsa_fit_params_init(qgsa_fit_params* params);
int qgsa_fit(const qgsa_panel* panel, const qgsa_fit_params* params, qgsa_surface** out);

typedef struct qgsa_fit_info {
    double final_loss;
    long iterations;
    int converged;
    double alpha;
    int hours;
    int day_classes;
} qgsa_fit_info;

int qgsa_surface_info(const qgsa_surface* surface, qgsa_fit_info* info);

/* Grid lookup with interpolation in the hour; *extrapolated (optional) is set
 * to 1 when the hour falls outside the day's observed range. Fails with
 * QGSA_ERR_DATA if the day class was never observed. */
int qgsa_surface_predict(const qgsa_surface* surface, double hour, int day, double* value,
                         int* extrapolated);

int qgsa_surface_write_csv(const qgsa_surface* surface, const char* path, const char* meta);
int qgsa_surface_read_csv(const char* path, qgsa_surface** out);
int qgsa_surface_write_fitlog_csv(const qgsa_surface* surface, const char* path);

/* One SVG per observed day class into dir; *n_files (optional) receives the
 * count. The panel supplies the raw points overlaid under the curve. */
int qgsa_surface_write_plots(const qgsa_surface* surface, const qgsa_panel* panel,
                             const char* dir, int* n_files);

void qgsa_surface_free(qgsa_surface* surface);

/* ------------------------------------------------- generic descent engine */

typedef double (*qgsa_eval_fn)(const double* x, long n, void* ctx);
typedef void (*qgsa_grad_fn)(const double* x, long n, double* grad_out, void* ctx);

typedef struct qgsa_gsa_params {
    int m; /* 0 = auto */
    double beta;
    double mu;
    double lambda;
    double eps0;
    double tau0;
    double eps_min;
    double tau_min;
    long max_iter;
    uint64_t seed;
    int mode; /* 0 = avg, 1 = qp */
} qgsa_gsa_params;

void qgsa_gsa_params_init(qgsa_gsa_params* params);

typedef struct qgsa_gsa_report {
    double f_best;
    long iterations;
    int converged;
} qgsa_gsa_report;

/* Minimizes a caller-supplied locally Lipschitz objective from x0 (length n);
 * writes the best iterate into x_best (length n). report is optional. */
int qgsa_gsa_minimize(long n, qgsa_eval_fn eval, qgsa_grad_fn grad, void* ctx,
                      const double* x0, const qgsa_gsa_params* params, double* x_best,
                      qgsa_gsa_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QGSA_H */
