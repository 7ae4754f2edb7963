/*
 * C interface to the complex corner-classification library.
 *
 * Objects are opaque handles created by a function that takes an out
 * pointer and released by the matching *_free function (NULL is accepted).
 * Every fallible call returns a ccc_status; on failure
 * ccc_last_error_message() describes the problem for the calling thread.
 *
 * Input symbols are bytes: bit 0 is the real part, bit 1 the imaginary
 * part, so 0 = "0", 1 = "1", 2 = "i", 3 = "1+i". Grid rows/columns and
 * series positions are 1-based; hidden-unit and output indices are 0-based.
 */
#ifndef CCC_CCC_H
#define CCC_CCC_H

#include <stddef.h>
#include <stdint.h>

#if defined(CCC_BUILDING_LIBRARY)
#define CCC_API __attribute__((visibility("default")))
#else
#define CCC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ccc_status {
  CCC_OK = 0,
  CCC_ERROR_INVALID_ARGUMENT = 1,
  CCC_ERROR_DIMENSION = 2,
  CCC_ERROR_INVALID_CODEWORD = 3,
  CCC_ERROR_FORMAT = 4,
  CCC_ERROR_IO = 5,
  CCC_ERROR_INTERNAL = 6
} ccc_status;

typedef uint8_t ccc_symbol;

enum {
  CCC_SYMBOL_ZERO = 0,
  CCC_SYMBOL_ONE = 1,
  CCC_SYMBOL_I = 2,
  CCC_SYMBOL_ONE_PLUS_I = 3
};

CCC_API const char* ccc_status_name(ccc_status status);
/* Message of the most recent failure on this thread; "" if none. */
CCC_API const char* ccc_last_error_message(void);

/* ---- quaternary encoding ------------------------------------------------ */

CCC_API ccc_status ccc_codeword_length(int32_t count, int32_t* length);
/* Writes `length` symbols to `out` (capacity `out_len`). */
CCC_API ccc_status ccc_encode(int32_t index, int32_t length, ccc_symbol* out, size_t out_len);
CCC_API ccc_status ccc_decode(const ccc_symbol* word, size_t length, int32_t* index);
/* '0', '1', 'i' or 'u'; '?' for an invalid symbol. */
CCC_API char ccc_symbol_char(ccc_symbol symbol);
/* Compact text such as "1111i" to symbols; `*length` receives the count. */
CCC_API ccc_status ccc_parse_symbols(const char* text, ccc_symbol* out, size_t out_len,
                                     size_t* length);

/* ---- sample sets -------------------------------------------------------- */

typedef struct ccc_samples ccc_samples;

CCC_API ccc_status ccc_samples_parse(const char* text, ccc_samples** out);
CCC_API ccc_status ccc_samples_load(const char* path, ccc_samples** out);
CCC_API void ccc_samples_free(ccc_samples* samples);
CCC_API size_t ccc_samples_count(const ccc_samples* samples);
CCC_API size_t ccc_samples_input_width(const ccc_samples* samples);
/* 0 for evaluation-only sets. */
CCC_API size_t ccc_samples_output_count(const ccc_samples* samples);
CCC_API ccc_status ccc_samples_get(const ccc_samples* samples, size_t index, ccc_symbol* input,
                                   size_t input_len, uint8_t* targets, size_t targets_len);

/* ---- network ------------------------------------------------------------ */

typedef struct ccc_network ccc_network;

CCC_API ccc_status ccc_network_train(const ccc_samples* samples, int32_t radius,
                                     ccc_network** out);
/* `inputs` is count x width symbols, `targets` is count x outputs bits,
 * both row-major. */
CCC_API ccc_status ccc_network_train_arrays(const ccc_symbol* inputs, const uint8_t* targets,
                                            size_t count, size_t width, size_t outputs,
                                            int32_t radius, ccc_network** out);
CCC_API void ccc_network_free(ccc_network* net);

CCC_API size_t ccc_network_input_width(const ccc_network* net);
CCC_API size_t ccc_network_output_count(const ccc_network* net);
CCC_API size_t ccc_network_hidden_count(const ccc_network* net);
CCC_API int32_t ccc_network_radius(const ccc_network* net);

/* Weights of hidden unit `unit`: real and imaginary parts (each +1 or -1),
 * its s value and its bias weight. Any out pointer may be NULL. */
CCC_API ccc_status ccc_network_hidden_unit(const ccc_network* net, size_t unit, int8_t* weight_re,
                                           int8_t* weight_im, size_t width, int32_t* s,
                                           int32_t* bias_weight);
CCC_API ccc_status ccc_network_output_weight(const ccc_network* net, size_t unit, size_t output,
                                             int8_t* weight);
CCC_API ccc_status ccc_network_hidden_inputs(const ccc_network* net, const ccc_symbol* x,
                                             size_t width, int32_t* out, size_t out_len);
CCC_API ccc_status ccc_network_forward(const ccc_network* net, const ccc_symbol* x, size_t width,
                                       uint8_t* out, size_t out_len);

CCC_API ccc_status ccc_hamming_distance(const ccc_symbol* a, const ccc_symbol* b, size_t width,
                                        int32_t* distance);

/* ---- spiral pattern experiment ------------------------------------------ */

typedef struct ccc_pattern ccc_pattern;
typedef struct ccc_plan ccc_plan;
typedef struct ccc_spiral_report ccc_spiral_report;

CCC_API ccc_status ccc_pattern_parse(const char* text, ccc_pattern** out);
CCC_API ccc_status ccc_pattern_load(const char* path, ccc_pattern** out);
CCC_API void ccc_pattern_free(ccc_pattern* pattern);
CCC_API ccc_status ccc_pattern_cell(const ccc_pattern* pattern, int32_t row, int32_t col,
                                    uint8_t* bit);

CCC_API ccc_status ccc_plan_sample(const ccc_pattern* pattern, int32_t n_black, int32_t n_white,
                                   uint64_t seed, ccc_plan** out);
CCC_API void ccc_plan_free(ccc_plan* plan);
CCC_API size_t ccc_plan_count(const ccc_plan* plan);
CCC_API ccc_status ccc_plan_point(const ccc_plan* plan, size_t index, int32_t* row, int32_t* col);

CCC_API ccc_status ccc_spiral_run(const ccc_pattern* pattern, const ccc_plan* plan, int32_t radius,
                                  ccc_spiral_report** out);
CCC_API void ccc_spiral_report_free(ccc_spiral_report* report);
CCC_API int32_t ccc_spiral_report_classified(const ccc_spiral_report* report);
CCC_API int32_t ccc_spiral_report_misclassified(const ccc_spiral_report* report);
CCC_API ccc_status ccc_spiral_report_prediction(const ccc_spiral_report* report, int32_t row,
                                                int32_t col, uint8_t* bit);

/* ---- Mackey-Glass experiment -------------------------------------------- */

typedef struct ccc_mg_params {
  double alpha;
  double beta;
  double gamma;
  int32_t tau;
  int32_t length;
  const double* seeds; /* tau + 1 values */
  size_t seed_count;
} ccc_mg_params;

/* The benchmark defaults; `seeds` points at static storage. */
CCC_API void ccc_mg_default_params(ccc_mg_params* params);

typedef struct ccc_series ccc_series;
typedef struct ccc_mg_result ccc_mg_result;

typedef struct ccc_mg_prediction {
  int32_t position;
  double actual;
  double predicted;
  int32_t region_actual;
  int32_t region_predicted;
} ccc_mg_prediction;

CCC_API ccc_status ccc_mg_generate(const ccc_mg_params* params, ccc_series** out);
CCC_API void ccc_series_free(ccc_series* series);
CCC_API int32_t ccc_series_length(const ccc_series* series);
CCC_API ccc_status ccc_series_value(const ccc_series* series, int32_t position, double* value);

/* Region index 1..16 on [-2, 2] and the matching bin center. */
CCC_API int32_t ccc_mg_quantize(double x);
CCC_API ccc_status ccc_mg_dequantize(int32_t index, double* x);

/* Trains on 175 windows and predicts position 180 to the series end. */
CCC_API ccc_status ccc_mg_run(const ccc_series* series, int32_t radius, ccc_mg_result** out);
CCC_API void ccc_mg_result_free(ccc_mg_result* result);
CCC_API size_t ccc_mg_result_prediction_count(const ccc_mg_result* result);
CCC_API ccc_status ccc_mg_result_prediction(const ccc_mg_result* result, size_t index,
                                            ccc_mg_prediction* out);
CCC_API size_t ccc_mg_result_trace_count(const ccc_mg_result* result);
CCC_API ccc_status ccc_mg_result_trace(const ccc_mg_result* result, size_t index,
                                       ccc_mg_prediction* out);
/* Mean squared error over the squared quantizer range. */
CCC_API double ccc_mg_result_nmse(const ccc_mg_result* result);
/* Squared error over the centered sum of squares of the actual values. */
CCC_API double ccc_mg_result_nmse_centered(const ccc_mg_result* result);

#ifdef __cplusplus
}
#endif

#endif /* CCC_CCC_H */
