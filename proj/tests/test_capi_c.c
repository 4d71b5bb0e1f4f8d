#include <math.h>
#include <stdio.h>

#include "scmad2d/scmad2d.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

int main(void) {
  scmad2d_config* cfg = NULL;
  scmad2d_report report;
  double value = 0.0;

  EXPECT(scmad2d_config_new(&cfg) == SCMAD2D_OK);
  EXPECT(scmad2d_config_set(cfg, "lambda_u", "2e-3") == SCMAD2D_OK);
  EXPECT(scmad2d_config_get(cfg, "lambda_u", &value) == SCMAD2D_OK && value == 2e-3);
  EXPECT(scmad2d_evaluate_analytic(cfg, &report) == SCMAD2D_OK);
  EXPECT(report.cp_cellular > 0.0 && report.cp_cellular < 1.0);
  EXPECT(report.monte_carlo == 0);
  EXPECT(scmad2d_hyp2f1(1.0, 0.5, 1.5, -10.0, &value) == SCMAD2D_OK);
  EXPECT(fabs(value - atan(sqrt(10.0)) / sqrt(10.0)) < 1e-12);
  EXPECT(scmad2d_config_set(cfg, "alpha", "1.5") == SCMAD2D_OK);
  EXPECT(scmad2d_evaluate_analytic(cfg, &report) == SCMAD2D_VALIDATION);
  EXPECT(scmad2d_last_error()[0] != '\0');
  scmad2d_config_free(cfg);

  if (failures == 0) printf("C interface: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
