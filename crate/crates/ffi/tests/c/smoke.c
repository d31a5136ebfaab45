#include <math.h>
#include <stdio.h>
#include <string.h>

#include "sinecert.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "line %d: %s\n", __LINE__, #cond); return 1; } } while (0)

int main(void) {
    ScSinePoly *poly = NULL;
    ScCertificate *cert = NULL;
    ScReport *report = NULL;
    ScVerdict verdict;
    size_t first = 99;

    CHECK(sc_sine_poly_parse("2,1,4/3,1,6/5,0,0,3/4", &poly) == SC_STATUS_OK);
    CHECK(sc_certify(poly, &cert) == SC_STATUS_OK);
    CHECK(sc_certificate_verdict(cert, &verdict) == SC_STATUS_OK);
    CHECK(verdict == SC_VERDICT_VIOLATION);
    sc_certificate_free(cert);
    sc_sine_poly_free(poly);

    CHECK(sc_certify_family("gamma", 12, SC_MODE_EXACT, &report) == SC_STATUS_OK);
    CHECK(sc_report_first_violation(report, &first) == SC_STATUS_OK);
    CHECK(first == 0);
    char *json = sc_report_to_json(report);
    CHECK(json != NULL && strstr(json, "ExactNonneg") != NULL);
    sc_string_free(json);
    sc_report_free(report);

    CHECK(sc_certify_family("nope", 3, SC_MODE_AUTO, &report) == SC_STATUS_INVALID_ARGUMENT);
    CHECK(sc_last_error_message() != NULL);
    CHECK(fabs(sc_alpha() - 0.782652132952) < 1e-11);
    puts("ok");
    return 0;
}
