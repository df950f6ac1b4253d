#ifndef NSCAS_H
#define NSCAS_H

/* C interface to the nscas library: exact symbolic computation for the
 * Neveu-Schwarz superalgebra. All returned strings are heap-allocated and
 * must be released with nscas_string_free. Calls that fail leave a message
 * readable through nscas_last_error until the next failing call on the same
 * thread. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    NSCAS_OK = 0,
    NSCAS_ERR_SYNTAX = 1,        /* malformed expression or rule file */
    NSCAS_ERR_DOMAIN = 2,        /* parity, weight, zero division, bad rule */
    NSCAS_ERR_UNKNOWN_CHECK = 3, /* no check registered under the id */
    NSCAS_ERR_BAD_ARGUMENT = 4,  /* null pointer or unknown name */
    NSCAS_ERR_INTERNAL = 5
} nscas_status;

void nscas_string_free(char* s);
const char* nscas_last_error(void);

/* Parses an expression in the universal enveloping algebra and returns its
 * canonical normal-ordered rendering. */
nscas_status nscas_parse(const char* expr, char** canonical_out);

/* Normal form under the ascending PBW order, or under a trailing order when
 * trailing_csv is non-null (comma-separated generators, e.g. "L[-1],G[-1/2]").
 * With a trailing order the result is rendered as "quotient | ideal part". */
nscas_status nscas_normal_form(const char* expr, const char* trailing_csv, char** out);

/* Super-bracket of two generator tokens such as "L[2]" and "G[-3/2]". */
nscas_status nscas_bracket(const char* gen_a, const char* gen_b, char** out);

/* Constraint-module rule sets, loaded from the rule-file text format. */
typedef struct nscas_rules nscas_rules;
nscas_status nscas_rules_parse(const char* text, nscas_rules** out);
void nscas_rules_free(nscas_rules* r);
/* Applies an operator expression to a named state ("v" is the cyclic
 * vector) and renders the resulting state vector. */
nscas_status nscas_rules_act(const nscas_rules* r, const char* expr,
                             const char* state_name, char** out);

/* Verma module dimensions for levels 0, 1/2, ..., level_max_doubled/2,
 * rendered as a JSON array of {"level", "dim"} records. h and c are
 * optional scalar expressions; they are validated but do not affect
 * dimensions. */
nscas_status nscas_verma_dims(int level_max_doubled, const char* h, const char* c,
                              char** json_out);

/* Registry of named verification checks. nscas_check_ids returns a JSON
 * array of ids. nscas_check_run executes one check; the call succeeds even
 * when the check's verdict is fail (passed_out reports the verdict, the
 * JSON record carries id/status/details/machine). */
nscas_status nscas_check_ids(char** json_out);
nscas_status nscas_check_run(const char* id, int* passed_out, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* NSCAS_H */
