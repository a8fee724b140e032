#include <stdio.h>
#include "topolab.h"

static const char *DOC =
    "{\"points\":[\"k\",\"l\",\"m\",\"n\"],"
    "\"opens\":[[],[\"k\"],[\"l\"],[\"k\",\"l\"],[\"k\",\"m\"],[\"k\",\"l\",\"m\"],[\"k\",\"l\",\"m\",\"n\"]]}";

int main(void) {
    TopolabSpace *s = NULL;
    if (topolab_space_from_json(DOC, &s) != TOPOLAB_STATUS_OK) {
        fprintf(stderr, "%s\n", topolab_last_error());
        return 1;
    }
    uint32_t cl = 0;
    bool g = true;
    if (topolab_space_closure(s, 1u, &cl) != TOPOLAB_STATUS_OK) return 1;
    if (topolab_space_classify_set(s, 5u, "g-closed", &g) != TOPOLAB_STATUS_OK) return 1;
    TopolabStatus e = topolab_space_classify_set(s, 5u, "bogus", &g);
    printf("closure=%u g-closed=%d error=%d\n", cl, (int)g, (int)e);
    topolab_space_free(s);
    return 0;
}
