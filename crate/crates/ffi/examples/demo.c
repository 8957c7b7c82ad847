#include <stdio.h>
#include "uhsl2.h"

int main(void) {
    char *text = NULL;
    if (uhsl2_decompose(1, 1, &text) != UHSL2_STATUS_OK) {
        fprintf(stderr, "decompose: %s\n", uhsl2_last_error());
        return 1;
    }
    printf("W(1/2) x W(1/2) = %s\n", text);
    uhsl2_string_free(text);

    Uhsl2Family *fam = NULL;
    if (uhsl2_family_new(UHSL2_FAMILY_KIND_BOSON_RAISING, 1, &fam) != UHSL2_STATUS_OK) {
        fprintf(stderr, "family: %s\n", uhsl2_last_error());
        return 1;
    }
    enum Uhsl2Status s = uhsl2_family_verify(fam, NULL);
    if (uhsl2_reduced_matrix_element(fam, 1, 2, &text) == UHSL2_STATUS_OK) {
        printf("I(1/2, 1/2, 1) = %s\n", text);
        uhsl2_string_free(text);
    }
    uhsl2_family_free(fam);

    if (uhsl2_cgc(2, 2, 6, 2, 2, 4, &text) == UHSL2_STATUS_SELECTION_RULE) {
        printf("rejected: %s\n", uhsl2_last_error());
    }
    return s == UHSL2_STATUS_OK ? 0 : 1;
}
