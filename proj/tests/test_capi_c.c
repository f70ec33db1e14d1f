/* The header must stay valid C. */
#include <stdio.h>
#include <string.h>

#include "gdet/gdet.h"

int main(void) {
    gdet_report* r = NULL;
    gdet_status s = gdet_achieve(3, "1", "-1", &r);
    int ok = s == GDET_OK && gdet_report_passed(r) && strstr(gdet_report_text(r, 0), "M: -26\n") != NULL;
    gdet_report_free(r);
    printf("%s\n", ok ? "ok" : "failed");
    return ok ? 0 : 1;
}
