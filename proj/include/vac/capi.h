/* C interface to the exact affine vertex algebra engine.
 *
 * All entry points return an exit status:
 *   0  computation ran and every checked value matched the shipped data
 *   2  computation ran but a diff against the shipped data was found
 *   1  internal error (parse failure, bad arguments, ...); see
 *      vac_last_error()
 *
 * Reports are heap-allocated JSON strings owned by the caller; release them
 * with vac_string_free().
 */

#ifndef VAC_CAPI_H
#define VAC_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vac_engine vac_engine;

/* data_dir: directory with the transcription data files (NULL: $VAC_DATA_DIR
 * or "./data").  cache_dir: directory for cached intermediates (NULL: no
 * caching). */
vac_engine* vac_engine_new(const char* data_dir, const char* cache_dir);
void vac_engine_free(vac_engine* eng);

/* message of the last failed call on this engine */
const char* vac_last_error(const vac_engine* eng);

/* verify the singular-vector conditions for a state file */
int vac_verify_singular(vac_engine* eng, const char* path, char** out_json);

/* full classification pipelines; out_dir may be NULL */
int vac_pipeline_g2(vac_engine* eng, int emit_polys, const char* out_dir,
                    char** out_json);
int vac_pipeline_b3(vac_engine* eng, int skip_subsingular,
                    int check_ideal_membership, int emit_polys,
                    const char* out_dir, char** out_json);

/* associated-variety computation for G2 */
int vac_assoc_variety_g2(vac_engine* eng, int emit_polys, const char* out_dir,
                         char** out_json);

/* misc commands */
int vac_table1(vac_engine* eng, const char* algebra, const char* level,
               long max_dim, char** out_json);
int vac_conf_dim(vac_engine* eng, const char* algebra, const char* level,
                 const char* weight, char** out_json);
int vac_freudenthal(vac_engine* eng, const char* algebra, const char* lambda,
                    const char* mu, char** out_json);
int vac_spectral_flow_check(vac_engine* eng, char** out_json);

/* structure-constant / embedding tables as JSON test fixtures */
int vac_algebra_tables(vac_engine* eng, const char* algebra, char** out_json);
int vac_embedding_table(vac_engine* eng, const char* pair, char** out_json);

/* CSV for a classification report produced by the pipelines */
int vac_report_csv(vac_engine* eng, const char* report_json, char** out_csv);

void vac_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* VAC_CAPI_H */
