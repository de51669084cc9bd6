#include <stdio.h>
#include <string.h>
#include "catalan_log.h"

int main(void) {
    CatlogSeries *series = NULL;
    if (catlog_series_log_pow(CATLOG_ROUTE_STIRLING, 2, 2, 6, &series) != CATLOG_STATUS_OK) {
        return 1;
    }
    for (size_t n = 0; n <= 6; n++) {
        char *coeff = NULL;
        if (catlog_series_coeff(series, n, &coeff) != CATLOG_STATUS_OK) return 1;
        printf("[z^%zu] = %s\n", n, coeff);
        catlog_string_free(coeff);
    }
    catlog_series_free(series);

    uint32_t lambdas[] = {1, 2, 3};
    bool passed = false;
    char *json = NULL;
    if (catlog_verify(CATLOG_SUITE_ALL, 3, lambdas, 3, 15, 20, 5, &passed, &json) != CATLOG_STATUS_OK) {
        return 1;
    }
    printf("verify all: %s\n", passed ? "passed" : "FAILED");
    printf("%s\n", json);
    catlog_string_free(json);
    return passed ? 0 : 1;
}
