/*
 Copyright 2026 The birkhoff-lab Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#ifndef BIRKHOFF_BIRKHOFF_H
#define BIRKHOFF_BIRKHOFF_H

#include <stddef.h>

#if defined(_WIN32)
#define BL_API __declspec(dllexport)
#else
#define BL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bl_status {
    BL_OK = 0,
    BL_NEGATIVE = 1,        /* verdict negative; the result carries the witness */
    BL_INVALID_INPUT = 2,
    BL_BUDGET_EXCEEDED = 3,
    BL_IO_FAILURE = 4,
    BL_INTERNAL_ERROR = 5
} bl_status;

typedef struct bl_session bl_session;
typedef struct bl_result bl_result;

/* config_json may be NULL or "{}" for sessions that only run lemma commands. */
BL_API bl_status bl_session_create(const char* config_json, bl_session** out);
BL_API void bl_session_destroy(bl_session* session);
BL_API bl_status bl_session_set_threads(bl_session* session, unsigned threads);
/* Canonical JSON of the parsed configuration. */
BL_API bl_status bl_session_config(const bl_session* session, bl_result** out);

/*
 * Runs one command. format is "json" or "csv" (NULL means json). On BL_OK and
 * BL_NEGATIVE *out holds the payload; otherwise *out is NULL and
 * bl_last_error() describes the failure.
 */
BL_API bl_status bl_execute(bl_session* session, const char* command, const char* params_json, const char* format,
                            bl_result** out);

/* Exact Birkhoff sum of the session observable over a cyclic word, as "p/q+r/s*a". */
BL_API bl_status bl_birkhoff_sum(const bl_session* session, const char* word, bl_result** out);

BL_API const char* bl_result_payload(const bl_result* result);
BL_API size_t bl_result_size(const bl_result* result);
BL_API const char* bl_result_message(const bl_result* result);
BL_API bl_status bl_result_status(const bl_result* result);
BL_API void bl_result_destroy(bl_result* result);

/* Message of the last failed call on this thread; "" when none. */
BL_API const char* bl_last_error(void);
BL_API const char* bl_version(void);
/* Space-separated command names. */
BL_API const char* bl_commands(void);

#ifdef __cplusplus
}
#endif

#endif
