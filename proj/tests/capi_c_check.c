/* Exercises the shared library from plain C99: the header must compile
 * without C++ constructs and the handle lifecycle must work end to end. */
#include <stdio.h>
#include <string.h>

#include "fairdiv/fairdiv.h"

static int fail(const char* what, char* err) {
    fprintf(stderr, "FAIL %s: %s\n", what, err ? err : "(no message)");
    fd_string_free(err);
    return 1;
}

int main(void) {
    char* err = NULL;
    char* text = NULL;

    if (fd_version() == NULL || strlen(fd_version()) == 0)
        return fail("fd_version", NULL);

    if (fd_fixture_names(&text, &err) != FD_OK)
        return fail("fd_fixture_names", err);
    if (strstr(text, "four-player-matrix") == NULL)
        return fail("fixture listing", NULL);
    fd_string_free(text);

    if (fd_fixture("four-player-matrix", &text, &err) != FD_OK)
        return fail("fd_fixture", err);

    fd_scenario* s = NULL;
    if (fd_scenario_parse(text, &s, &err) != FD_OK)
        return fail("fd_scenario_parse", err);
    fd_string_free(text);

    if (fd_scenario_players(s) != 4)
        return fail("player count", NULL);

    fd_division* d = NULL;
    if (fd_scenario_division(s, "witness", &d, &err) != FD_OK)
        return fail("fd_scenario_division", err);

    if (fd_check(s, d, &text, &err) != FD_OK)
        return fail("fd_check", err);
    if (strstr(text, "\"envy_free\"") == NULL)
        return fail("report contents", NULL);
    fd_string_free(text);

    fd_division_free(d);
    fd_scenario_free(s);

    /* Parse failures must come back as a status plus a message, not a crash. */
    s = NULL;
    if (fd_scenario_parse("{ nope", &s, &err) != FD_ERR_PARSE || s != NULL)
        return fail("parse error status", err);
    if (err == NULL)
        return fail("parse error message", NULL);
    fd_string_free(err);

    int exists = -1;
    if (fd_fixture("six-player", &text, &err) != FD_OK)
        return fail("six-player fixture", err);
    if (fd_scenario_parse(text, &s, &err) != FD_OK)
        return fail("six-player parse", err);
    fd_string_free(text);
    if (fd_strong_k_exists(s, 2, &exists, &err) != FD_OK || exists != 0)
        return fail("strict existence k=2", err);
    if (fd_strong_k_exists(s, 3, &exists, &err) != FD_OK || exists != 1)
        return fail("strict existence k=3", err);
    fd_scenario_free(s);

    puts("c header check ok");
    return 0;
}
