/* C API of the cliquebetti shared library.
 *
 * All functions return a cbetti_status; CBETTI_OK means success. On failure
 * a thread-local message is available through cbetti_last_error(). Objects
 * are opaque handles created and destroyed by the library; every *_free
 * accepts NULL.
 */
#ifndef CLIQUEBETTI_H
#define CLIQUEBETTI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cbetti_status {
    CBETTI_OK = 0,
    CBETTI_ERR_PARSE = 1,
    CBETTI_ERR_INVALID_ARGUMENT = 2,
    CBETTI_ERR_PRECONDITION = 3,
    CBETTI_ERR_LIMIT = 4,
    CBETTI_ERR_STRUCTURE = 5,
    CBETTI_ERR_IO = 6,
    CBETTI_ERR_UNSUPPORTED = 7,
    CBETTI_ERR_INTERNAL = 8
} cbetti_status;

const char* cbetti_status_name(cbetti_status status);
const char* cbetti_last_error(void);
const char* cbetti_version(void);

/* ---------------------------------------------------------------- graphs */

typedef struct cbetti_graph cbetti_graph;

cbetti_status cbetti_graph_parse(const char* text, cbetti_graph** out);
cbetti_status cbetti_graph_load(const char* path, cbetti_graph** out);
void cbetti_graph_free(cbetti_graph* g);

int64_t cbetti_graph_vertex_count(const cbetti_graph* g);
int64_t cbetti_graph_edge_count(const cbetti_graph* g);

typedef struct cbetti_graph_stats {
    int64_t max_degree;
    int64_t degeneracy;
    int64_t arboricity_lower; /* -1 when |V| < 2 */
    int64_t arboricity_upper;
} cbetti_graph_stats;

cbetti_status cbetti_graph_stats_get(const cbetti_graph* g, cbetti_graph_stats* out);

/* --------------------------------------------------------------- cliques */

typedef enum cbetti_strategy {
    CBETTI_STRATEGY_AUTO = 0,
    CBETTI_STRATEGY_ARBORICITY = 1,
    CBETTI_STRATEGY_DEGENERACY = 2,
    CBETTI_STRATEGY_BRUTE_FORCE = 3
} cbetti_strategy;

typedef struct cbetti_cliques cbetti_cliques;

cbetti_status cbetti_cliques_enumerate(const cbetti_graph* g, int k,
                                       cbetti_strategy strategy, cbetti_cliques** out);
void cbetti_cliques_free(cbetti_cliques* c);

int64_t cbetti_cliques_count(const cbetti_cliques* c);
int cbetti_cliques_size(const cbetti_cliques* c);
/* Flattened vertex ids, count*k entries; buffer must hold at least that. */
cbetti_status cbetti_cliques_copy(const cbetti_cliques* c, int64_t* buffer,
                                  int64_t capacity);
/* Serialized forms; the returned buffer must be freed with
 * cbetti_string_free. */
cbetti_status cbetti_cliques_to_csv(const cbetti_cliques* c, char** out);
cbetti_status cbetti_cliques_to_json(const cbetti_cliques* c, char** out);

void cbetti_string_free(char* s);

/* Per-dimension simplex counts |S_0| .. |S_r_max| (buffer of r_max+1). */
cbetti_status cbetti_simplex_counts(const cbetti_graph* g, int r_max,
                                    cbetti_strategy strategy, int64_t* counts);

/* ----------------------------------------------------------------- betti */

typedef struct cbetti_estimator_config {
    double epsilon;    /* additive accuracy target, (0,1) */
    double eta;        /* failure probability, (0,1) */
    double theta;      /* spectral cut; 0 selects the default */
    int degree;        /* filter degree; 0 selects the default */
    int64_t probes;    /* probe count; 0 selects the planned count */
    uint64_t seed;
    cbetti_strategy strategy;
} cbetti_estimator_config;

/* Fills the struct with library defaults (epsilon 0.05, eta 0.1, auto
 * theta/degree/probes, seed 0). */
void cbetti_estimator_config_init(cbetti_estimator_config* cfg);

/* Hoeffding-style probe planning. */
cbetti_status cbetti_plan_probes(double epsilon, double eta, int64_t* out);
cbetti_status cbetti_plan_probes_multiplicative(double delta, double eta, int64_t s_r_size,
                                                double beta_prior, int64_t* out);

typedef struct cbetti_betti_result {
    int r;
    double normalized;
    double absolute;
    double std_error;
    double kernel_fraction_r;
    double kernel_fraction_r_stderr;
    double kernel_fraction_r1;
    double kernel_fraction_r1_stderr;
    double ratio; /* |S_{r+1}| / |S_r| */
    int64_t s_r;
    int64_t s_r1;
    int64_t probes_used;
    int degree_used;
    double theta_used;
    int degree_warning; /* nonzero if the filter degree was heuristically low */
} cbetti_betti_result;

/* Exact integer computation (rational elimination). */
cbetti_status cbetti_betti_exact(const cbetti_graph* g, int r, cbetti_strategy strategy,
                                 cbetti_betti_result* out);
/* Stochastic estimation per the estimator configuration. */
cbetti_status cbetti_betti_estimate(const cbetti_graph* g, int r,
                                    const cbetti_estimator_config* cfg,
                                    cbetti_betti_result* out);

/* ------------------------------------------------------------- pipelines */

typedef struct cbetti_filtration cbetti_filtration;

/* Distance-matrix source: row-major n*n symmetric matrix. */
cbetti_status cbetti_filtration_from_distances(const double* distances, int64_t n,
                                               cbetti_filtration** out);
/* Image source loaded from CSV or PGM; 4-connectivity unless connect8. */
cbetti_status cbetti_filtration_from_image(const char* path, int connect8,
                                           cbetti_filtration** out);
/* Point-cloud source loaded from CSV (one point per row). */
cbetti_status cbetti_filtration_from_points(const char* path, cbetti_filtration** out);
/* Distances derived from a quantum state spec (path or constructor name:
 * bell, ghz(N), product(N), random_pure(N, seed)). */
cbetti_status cbetti_filtration_from_state(const char* spec, cbetti_filtration** out);
void cbetti_filtration_free(cbetti_filtration* f);

/* Graph at one threshold. */
cbetti_status cbetti_filtration_graph(const cbetti_filtration* f, double threshold,
                                      cbetti_graph** out);

typedef struct cbetti_curve cbetti_curve;

typedef enum cbetti_mode {
    CBETTI_MODE_EXACT = 0,
    CBETTI_MODE_STOCHASTIC = 1
} cbetti_mode;

cbetti_status cbetti_sweep(const cbetti_filtration* f, const double* thresholds,
                           int64_t count, int r, cbetti_mode mode,
                           const cbetti_estimator_config* cfg, cbetti_curve** out);
void cbetti_curve_free(cbetti_curve* c);

typedef struct cbetti_curve_sample {
    double threshold;
    int64_t s_r;
    int64_t s_r1;
    double normalized;
    double absolute;
    double std_error;
} cbetti_curve_sample;

int64_t cbetti_curve_length(const cbetti_curve* c);
cbetti_status cbetti_curve_sample_get(const cbetti_curve* c, int64_t index,
                                      cbetti_curve_sample* out);
cbetti_status cbetti_curve_to_csv(const cbetti_curve* c, char** out);
cbetti_status cbetti_curve_to_json(const cbetti_curve* c, char** out);

/* Pairwise mutual-information distances of a state spec; buffer n*n. */
cbetti_status cbetti_state_distances(const char* spec, double* buffer, int64_t capacity,
                                     int64_t* out_n);

/* ---------------------------------------------------------------- verify */

typedef struct cbetti_verify_report {
    int64_t dim;                 /* |S_r| */
    int64_t ancilla_dim;
    double subnormalization;     /* (r+1)|S_r| */
    double unitarity_defect;
    double block_defect;
    double action_residual;
    double orthogonality_defect;
    double product_defect;       /* squared-Gram composition */
    double lcu_defect;           /* (A/2 + A/2) combination  */
    double tensor_defect;        /* A (x) A                  */
    double scale_defect;         /* A / 2                    */
    int64_t kernel_dim_encoded;  /* from the encoded block   */
    int64_t kernel_dim_exact;    /* from the integer oracle  */
} cbetti_verify_report;

/* Builds the block encoding of the normalized Gram of d_r and checks the
 * dilation/composition contracts numerically. Guarded to |S_r| <= 128. */
cbetti_status cbetti_verify_encoding(const cbetti_graph* g, int r,
                                     cbetti_verify_report* out);

/* ------------------------------------------------------------ cost model */

typedef struct cbetti_cost_input {
    int64_t n;
    int r;
    int64_t s_r;
    int64_t s_r1;
    int64_t edges;
    double epsilon;
    double eta;
    double alpha;
    double degeneracy; /* < 0 when not provided */
} cbetti_cost_input;

typedef struct cbetti_cost_report {
    double lgz;
    double hybrid_classical_arboricity;
    double hybrid_classical_degeneracy; /* -1 when not provided */
    double hybrid_quantum;
    double hybrid_total;
    double ratio;
} cbetti_cost_report;

cbetti_status cbetti_cost_model(const cbetti_cost_input* in, cbetti_cost_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CLIQUEBETTI_H */
