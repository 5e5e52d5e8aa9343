/* Exercises the C interface from a C translation unit. */
#include <stdio.h>
#include <string.h>

#include "solvlie/solvlie.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  solvlie_algebra* g = NULL;
  char* out = NULL;
  int passed = 0;

  EXPECT(solvlie_algebra_build("s(n+1,1):6:beta=3/2", "R", &g) == SOLVLIE_OK);
  EXPECT(solvlie_algebra_dimension(g) == 7);
  EXPECT(solvlie_algebra_series_json(g, "s(n+1,1):6:beta=3/2", &out) == SOLVLIE_OK);
  EXPECT(strstr(out, "\"matches\": true") != NULL);
  solvlie_string_free(out);

  EXPECT(solvlie_algebra_table(g, &out) == SOLVLIE_OK);
  solvlie_algebra* h = NULL;
  EXPECT(solvlie_algebra_parse(out, &h) == SOLVLIE_OK);
  EXPECT(solvlie_algebra_dimension(h) == 7);
  solvlie_string_free(out);

  EXPECT(solvlie_algebra_classify_json(h, 6, "R", &out) == SOLVLIE_OK);
  EXPECT(strstr(out, "s(n+1,1):6:beta=3/2") != NULL);
  solvlie_string_free(out);
  solvlie_algebra_free(h);
  solvlie_algebra_free(g);

  EXPECT(solvlie_derivations_json(5, &out) == SOLVLIE_OK);
  EXPECT(strstr(out, "\"dimension\": 9") != NULL);
  solvlie_string_free(out);

  solvlie_sampling s = solvlie_sampling_default();
  EXPECT(s.trials == 5 && s.bound == 1000);
  EXPECT(solvlie_verify_json("s(n+1,6):7:a=[1,0,2,0]", "C", &s, &out, &passed) == SOLVLIE_OK);
  EXPECT(passed == 1);
  solvlie_string_free(out);

  EXPECT(solvlie_invariants_json("s(n+2):4", "R", &out) == SOLVLIE_OK);
  EXPECT(strstr(out, "\"invariants\": []") != NULL);
  solvlie_string_free(out);

  g = NULL;
  EXPECT(solvlie_algebra_build("s(n+1,1):6:beta=4", "R", &g) == SOLVLIE_ERR_EXCLUDED_PARAMETER);
  EXPECT(g == NULL);
  EXPECT(strlen(solvlie_last_error()) > 0);
  EXPECT(solvlie_algebra_build("s(n+1,9):6", "R", &g) == SOLVLIE_ERR_PARSE);
  EXPECT(solvlie_algebra_build(NULL, "R", &g) == SOLVLIE_ERR_NULL_ARGUMENT);
  EXPECT(solvlie_algebra_build("n(n,1):3", "R", &g) == SOLVLIE_ERR_BAD_DIMENSION);
  EXPECT(strcmp(solvlie_status_name(SOLVLIE_ERR_DEGENERATE_POINT), "degenerate point") == 0);
  EXPECT(solvlie_classify_spec_json("{\"n\":5,\"derivations\":[{\"alpha\":0,\"beta\":0,\"a\":[1,0],\"an\":0}]}", "R", &out) ==
         SOLVLIE_ERR_NILPOTENT_INPUT);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("C API: all checks passed\n");
  return failures ? 1 : 0;
}
