/* Copyright 2026 The leakgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libleakgame. Handles are opaque; every function that can
 * fail returns an lg_status and leaves a message for lg_last_error() on the
 * calling thread. Strings returned through char** are owned by the caller
 * and released with lg_string_free(). */

#ifndef LEAKGAME_LEAKGAME_H_
#define LEAKGAME_LEAKGAME_H_

#include <stdint.h>

#if defined(_WIN32)
#define LG_API __declspec(dllexport)
#else
#define LG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LG_OK = 0,
  LG_ASSERTION = 1, /* a checked relation or case-study number failed */
  LG_INPUT = 2,     /* malformed or inconsistent input */
  LG_CAPACITY = 3,  /* enumeration budget exceeded */
  LG_INTERNAL = 4
} lg_status;

typedef enum {
  LG_FORMAT_TEXT = 0,
  LG_FORMAT_CSV = 1,
  LG_FORMAT_JSON = 2
} lg_format;

typedef struct lg_spec lg_spec;
typedef struct lg_solution lg_solution;

/* Game specs. */
LG_API lg_status lg_spec_load_file(const char* path, lg_spec** out);
LG_API lg_status lg_spec_load_json(const char* json, lg_spec** out);
/* name: running-example, running-example-modified, password,
 * password-constant-time. */
LG_API lg_status lg_spec_builtin(const char* name, lg_spec** out);
LG_API lg_status lg_spec_to_json(const lg_spec* spec, char** out);
LG_API void lg_spec_free(lg_spec* spec);

/* game: "I".."VI" or "1".."6". guess_budget bounds |W|^|Y| for games IV and
 * V; 0 selects the default of 65536. */
LG_API lg_status lg_solve(const lg_spec* spec, const char* game,
                          uint64_t guess_budget, lg_solution** out);
LG_API lg_status lg_solution_render(const lg_solution* solution,
                                    lg_format format, char** out);
/* Exact value as "p/q" (may be NULL) and its nearest double (may be NULL). */
LG_API lg_status lg_solution_value(const lg_solution* solution, char** exact,
                                   double* approx);
LG_API void lg_solution_free(lg_solution* solution);

/* Solves all six games. *holds is 1 when every order relation holds. */
LG_API lg_status lg_compare(const lg_spec* spec, uint64_t guess_budget,
                            lg_format format, char** report, int* holds);
/* Channel references are "d|a". */
LG_API lg_status lg_equiv(const lg_spec* spec, const char* first,
                          const char* second, lg_format format, char** report,
                          int* equivalent);
/* name: running-example or password. *all_pass is 1 when every check
 * passes. */
LG_API lg_status lg_casestudy(const char* name, uint64_t guess_budget,
                              lg_format format, char** report, int* all_pass);

/* Message of the last failure on this thread; empty when none. */
LG_API const char* lg_last_error(void);
LG_API void lg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LEAKGAME_LEAKGAME_H_ */
