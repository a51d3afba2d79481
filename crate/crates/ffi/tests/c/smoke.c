#include <stdio.h>
#include <string.h>

#include "ck.h"

int main(void) {
    CkAlgebra *g = NULL;
    if (ck_algebra_builtin("poincare", true, &g) != CK_STATUS_OK) {
        fprintf(stderr, "builtin: %s\n", ck_last_error());
        return 1;
    }
    size_t dim = 0;
    ck_algebra_dim(g, &dim);
    bool passed = false;
    ck_algebra_verify(g, &passed);
    ck_algebra_free(g);
    if (dim != 6 || !passed) {
        return 2;
    }

    CkReport *r = NULL;
    if (ck_expand("poincare", "so31-ds", 1, true, &r) != CK_STATUS_OK) {
        fprintf(stderr, "expand: %s\n", ck_last_error());
        return 3;
    }
    CkVerdict v = CK_VERDICT_FAIL;
    ck_report_verdict(r, &v);
    int found = strstr(ck_report_json(r), "4*w2*c1*a1^2 + w1 = 0") != NULL;
    ck_report_free(r);
    if (v != CK_VERDICT_PASS || !found) {
        return 4;
    }

    if (ck_algebra_builtin("nope", true, &g) != CK_STATUS_NOT_FOUND || ck_last_error() == NULL) {
        return 5;
    }
    printf("ok\n");
    return 0;
}
