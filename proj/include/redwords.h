/* C interface to the reduced-word / pipe-dream toolkit.
 *
 * All functionality is driven through rw_engine_run with a JSON request of
 * the form {"cmd": "...", ...}; see the README for the command catalog.
 * Responses are NUL-terminated strings (JSON or TSV) owned by the caller.
 */
#ifndef REDWORDS_H
#define REDWORDS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rw_status {
  RW_OK = 0,
  RW_ERR_VERIFY = 1,   /* a verification suite reported failures */
  RW_ERR_USAGE = 2,    /* malformed request or invalid input */
  RW_ERR_NOMEM = 3,
  RW_ERR_INTERNAL = 4
} rw_status;

typedef struct rw_engine rw_engine; /* opaque */

rw_status rw_engine_create(rw_engine** out);
void rw_engine_destroy(rw_engine* engine);

/* Runs one command. On RW_OK and RW_ERR_VERIFY, *response receives the
 * rendered output; release it with rw_string_free. On other statuses the
 * message is available from rw_engine_last_error. */
rw_status rw_engine_run(rw_engine* engine, const char* request_json, char** response);

/* Message for the most recent failing rw_engine_run on this engine; valid
 * until the next call on the same engine. */
const char* rw_engine_last_error(const rw_engine* engine);

void rw_string_free(char* s);

const char* rw_version(void);

#ifdef __cplusplus
}
#endif

#endif /* REDWORDS_H */
