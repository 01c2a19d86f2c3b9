#ifndef AUTOSG_AUTOSG_H_
#define AUTOSG_AUTOSG_H_

/*
 * C interface to the automaton semigroup library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an autosg_status; on failure the message is
 * available from autosg_last_error() until the next call on the same
 * thread.  Strings returned through char** parameters are owned by the
 * caller and released with autosg_string_free().
 *
 * Words are comma-separated state names ("s,t,s").  Symbol strings are
 * symbol names written one after another, optionally separated by
 * whitespace ("0 1 1" or "011").  Symbol sets are comma-separated symbol
 * names.
 */

#include <stddef.h>

#if defined(_WIN32)
#define AUTOSG_API __declspec(dllexport)
#else
#define AUTOSG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum autosg_status {
  AUTOSG_OK = 0,
  AUTOSG_ERR_USAGE,        /* bad argument, unknown name, wrong shape */
  AUTOSG_ERR_PARSE,        /* malformed or invalid document */
  AUTOSG_ERR_PRECONDITION, /* construction hypothesis not satisfied */
  AUTOSG_ERR_CAPACITY,     /* a configured size cap was exceeded */
  AUTOSG_ERR_IO,           /* file could not be read */
  AUTOSG_ERR_INTERNAL
} autosg_status;

typedef struct autosg_automaton   autosg_automaton;
typedef struct autosg_monoid      autosg_monoid;
typedef struct autosg_enumeration autosg_enumeration;

AUTOSG_API const char* autosg_last_error(void);
AUTOSG_API const char* autosg_status_name(autosg_status status);
AUTOSG_API void        autosg_string_free(char* s);

/* Automata */

AUTOSG_API autosg_status autosg_automaton_parse(const char*        text,
                                                autosg_automaton** out);
AUTOSG_API autosg_status autosg_automaton_load(const char*        path,
                                               autosg_automaton** out);
AUTOSG_API void          autosg_automaton_free(autosg_automaton* a);
AUTOSG_API autosg_status autosg_automaton_serialize(const autosg_automaton* a,
                                                    char** out);
AUTOSG_API autosg_status autosg_automaton_size(const autosg_automaton* a,
                                               size_t* states,
                                               size_t* symbols);

/* Checks a document without building an automaton.  *valid is 1 when the
 * document is a valid automaton; otherwise *report lists one diagnostic
 * per line ("line N: ...").  Syntax errors are reported the same way. */
AUTOSG_API autosg_status autosg_validate_text(const char* text,
                                              int*        valid,
                                              char**      report);

/* Image of `input` under the word. */
AUTOSG_API autosg_status autosg_act(const autosg_automaton* a,
                                    const char*             word,
                                    const char*             input,
                                    char**                  out);

/* The action on every string of length `depth`, one "source -> image"
 * line each in lexicographic order.  bound = 0 selects the default. */
AUTOSG_API autosg_status autosg_act_on_level(const autosg_automaton* a,
                                             const char*             word,
                                             size_t                  depth,
                                             size_t                  bound,
                                             char**                  out);

AUTOSG_API autosg_status autosg_equal(const autosg_automaton* a,
                                      const char*             left,
                                      const char*             right,
                                      int*                    result);

/* Equality on strings whose first symbol lies in `initial_symbols` and
 * whose later symbols lie in `rest_symbols`. */
AUTOSG_API autosg_status
autosg_restricted_equal(const autosg_automaton* a,
                        const char*             left,
                        const char*             right,
                        const char*             initial_symbols,
                        const char*             rest_symbols,
                        int*                    result);

/* The symbol partition recorded by an initial-symbol construction, as two
 * comma-separated lists; AUTOSG_ERR_USAGE when the automaton has none. */
AUTOSG_API autosg_status
autosg_automaton_symbol_partition(const autosg_automaton* a,
                                  char**                  initial_symbols,
                                  char**                  rest_symbols);

AUTOSG_API autosg_status autosg_is_left_identity(const autosg_automaton* a,
                                                 const char* state,
                                                 int*        result);

/* Enumeration of the distinct elements given by words of length at most
 * max_len, ordered by (length, lexicographic) representative.
 * max_elements = 0 selects the default cap. */
AUTOSG_API autosg_status autosg_enumerate(const autosg_automaton* a,
                                          size_t                  max_len,
                                          size_t                  max_elements,
                                          autosg_enumeration**    out);
AUTOSG_API size_t autosg_enumeration_size(const autosg_enumeration* e);
AUTOSG_API autosg_status autosg_enumeration_word(const autosg_enumeration* e,
                                                 size_t index,
                                                 char** out);
AUTOSG_API autosg_status
autosg_enumeration_element_states(const autosg_enumeration* e,
                                  size_t                    index,
                                  size_t*                   states);
/* The minimized element as an automaton document with an initial state. */
AUTOSG_API autosg_status
autosg_enumeration_element_text(const autosg_enumeration* e,
                                size_t                    index,
                                char**                    out);
AUTOSG_API void autosg_enumeration_free(autosg_enumeration* e);

/* counts[i] receives the number of elements of word length <= i + 1;
 * `counts` must hold max_len entries. */
AUTOSG_API autosg_status autosg_growth(const autosg_automaton* a,
                                       size_t                  max_len,
                                       size_t                  max_elements,
                                       size_t*                 counts);

/* Monoids */

AUTOSG_API autosg_status autosg_monoid_parse(const char*     text,
                                             autosg_monoid** out);
AUTOSG_API autosg_status autosg_monoid_load(const char*     path,
                                            autosg_monoid** out);
AUTOSG_API void          autosg_monoid_free(autosg_monoid* m);

/* Constructions.  Identity states are named as in the factor automata; a
 * name as it appears in the constructed automaton is accepted too. */

AUTOSG_API autosg_status
autosg_construct_free_product(const autosg_automaton* left,
                              const char*             left_identity,
                              const autosg_automaton* right,
                              const char*             right_identity,
                              autosg_automaton**      out);

/* printed_table != 0 reproduces the variant transition t,$ -> t,#° for the
 * right factor states. */
AUTOSG_API autosg_status
autosg_construct_free_product_identity(const autosg_automaton* left,
                                       const autosg_automaton* right,
                                       int                     printed_table,
                                       autosg_automaton**      out);

/* cap = 0 selects the default state/symbol cap. */
AUTOSG_API autosg_status autosg_construct_direct_power(const autosg_automaton* a,
                                                       size_t             n,
                                                       size_t             cap,
                                                       autosg_automaton** out);
AUTOSG_API autosg_status
autosg_construct_wreath(const autosg_automaton* base,
                        const autosg_monoid*    monoid,
                        size_t                  cap,
                        autosg_automaton**      out);
AUTOSG_API autosg_status
autosg_construct_wreath_initial(const autosg_automaton* base,
                                const autosg_monoid*    monoid,
                                size_t                  cap,
                                autosg_automaton**      out);
AUTOSG_API autosg_status
autosg_construct_adjoin_identity(const autosg_automaton* a,
                                 autosg_automaton**      out);

/* Graphviz rendering. */
AUTOSG_API autosg_status autosg_export_dot(const autosg_automaton* a,
                                           char**                  out);

/* Verification suites */

typedef struct autosg_verify_args {
  const autosg_automaton* automaton; /* constructed automaton, or NULL */
  const char*             state;     /* state name, or NULL */
  const autosg_automaton* base;      /* base automaton S, or NULL */
  const autosg_monoid*    monoid;    /* finite monoid T, or NULL */
  size_t                  max_len;   /* 0 selects 4 */
  size_t                  max_k;     /* 0 selects 3 */
} autosg_verify_args;

/* Comma-separated list of suite names. */
AUTOSG_API const char* autosg_verify_suites(void);

/* Runs a suite.  *report receives one PASS/FAIL line per check and a
 * summary; *passed is 1 when every check passed. */
AUTOSG_API autosg_status autosg_verify(const char*               suite,
                                       const autosg_verify_args* args,
                                       char**                    report,
                                       int*                      passed);

#ifdef __cplusplus
}
#endif

#endif /* AUTOSG_AUTOSG_H_ */
