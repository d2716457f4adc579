#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "arquiver.h"

int main(void) {
    ArqQuiver *q = NULL;
    ArqStatus st = arq_quiver_new('D', 5, "4>3,3>5,2>3,2>1", &q);
    assert(st == ArqStatus_Ok);

    char *json = NULL;
    st = arq_check_json(q, 2565, &json);
    assert(st == ArqStatus_Ok);
    assert(strstr(json, "\"rigid\":true") != NULL);
    assert(strstr(json, "\"r\":20") != NULL);
    arq_string_free(json);

    char *table = NULL;
    st = arq_dq_table_json('E', &table);
    assert(st == ArqStatus_Ok);
    assert(strcmp(table, "{\"6\":2444,\"7\":13130,\"8\":107114}") == 0);
    arq_string_free(table);

    st = arq_quiver_new('A', 2, "1>2,2>1", &q);
    assert(st == ArqStatus_InvalidArgument);
    printf("ffi smoke ok\n");

    arq_quiver_free(q);
    return 0;
}
