#include <stdio.h>
#include <inttypes.h>
#include "pythia.h"

int main(void) {
    PythiaTriple t;
    if (pythia_triple_from_params(1, 3, 2, &t) != PYTHIA_STATUS_OK) {
        fprintf(stderr, "%s\n", pythia_last_error());
        return 1;
    }
    printf("triple %" PRIu64 " %" PRIu64 " %" PRIu64 "\n", t.a, t.b, t.c);

    if (pythia_triple_from_params(1, 3, 1, &t) != PYTHIA_STATUS_DOMAIN) {
        return 1;
    }
    printf("error %s\n", pythia_last_error());

    PythiaTupleList *list = NULL;
    if (pythia_enumerate_triples(13, true, 1, &list) != PYTHIA_STATUS_OK) {
        return 1;
    }
    printf("primitive %zu\n", pythia_tuple_list_len(list));
    pythia_tuple_list_free(list);

    PythiaReport *report = NULL;
    if (pythia_verify(PYTHIA_CLAIM_PROP1, 50, 2, &report) != PYTHIA_STATUS_OK) {
        return 1;
    }
    printf("prop1 holds %d examined %" PRIu64 "\n", pythia_report_holds(report),
           pythia_report_examined(report));
    char *json = pythia_report_to_json(report);
    printf("%s\n", json);
    pythia_string_free(json);
    pythia_report_free(report);
    return 0;
}
