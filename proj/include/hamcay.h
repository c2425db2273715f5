/* hamcay: hamiltonian paths and cycles in Cayley digraphs of finite groups.
 *
 * C interface over the C++ core. Objects are opaque handles; every function
 * returns a status code, with a thread-local message available through
 * hc_last_error(). Strings returned through out-parameters are owned by the
 * caller and must be released with hc_string_free().
 *
 * JSON formats (all "format":1):
 *   group spec    {"type":"cyclic","n":12}
 *                 {"type":"direct_product","factors":[...]}
 *                 {"type":"semidirect_cyclic","m":12,"p":5,"u":3}
 *                 {"type":"semidirect_metacyclic","alpha":2,"beta":3,"p":7,"r":3}
 *                 {"type":"permutation","degree":4,"generators":[[1,0,3,2]]}
 *                 {"type":"table","order":2,"table":[[0,1],[1,0]]}
 *   element       coordinate array per spec kind (bare index for tables)
 *   certificate   {"group":...,"generators":[...],"start":...,"labels":[...],
 *                  "kind":"path"|"cycle"}
 */
#ifndef HAMCAY_H
#define HAMCAY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hc_group hc_group;
typedef struct hc_digraph hc_digraph;

typedef enum hc_status {
  HC_OK = 0,
  HC_ERROR = 1,           /* unclassified failure */
  HC_EPARSE = 2,          /* malformed JSON input */
  HC_EINVALID_SPEC = 3,   /* spec violates its invariants */
  HC_ENOT_A_GROUP = 4,    /* table fails the group axioms */
  HC_EPRECONDITION = 5,   /* operation preconditions unmet */
  HC_EBUDGET = 6,         /* search budget exhausted, verdict unknown */
  HC_ENOT_FOUND = 7,      /* construction criterion failed */
  HC_EIO = 8              /* file system failure */
} hc_status;

/* Message for the most recent failure on this thread. */
const char* hc_last_error(void);
void hc_string_free(char* s);

hc_status hc_group_from_json(const char* spec_json, hc_group** out);
hc_status hc_group_to_json(const hc_group* g, char** out_json);
int hc_group_order(const hc_group* g);
void hc_group_free(hc_group* g);

/* gens_json: JSON array of elements. */
hc_status hc_digraph_new(const hc_group* g, const char* gens_json, hc_digraph** out);
int hc_digraph_connected(const hc_digraph* d);
void hc_digraph_free(hc_digraph* d);

/* doc_json: either a bare group spec or a {"group":...,"generators":[...]}
 * bundle (the shape hc_family emits). A non-null gens_json overrides bundled
 * generators. On success both handles are owned by the caller. */
hc_status hc_digraph_load(const char* doc_json, const char* gens_json, hc_group** out_group,
                          hc_digraph** out_digraph);

/* options_json: {"kind":"path"|"cycle", "method":"dfs"|"structured"|"auto",
 *                "sharp":false, "node_cap":100000000, "start":element}
 * Writes a JSON report: verdict, certificate (or null), stats, method.
 * Status HC_OK even for a negative verdict; HC_EBUDGET when unknown. */
hc_status hc_decide(const hc_digraph* d, const char* options_json, char** report_json);

/* options_json: {"method":"abelian"|"rankin"|"fgl"|"small-commutator"|"abelian3",
 *                "subgroup":[element,...]  (fgl only),
 *                "k":element               (abelian3 only),
 *                "trace":"steps.jsonl"     (abelian3 only, optional)}
 * Writes a verified certificate; refuses to emit unverified output. */
hc_status hc_construct(const hc_digraph* d, const char* options_json, char** cert_json);

/* Verifies a self-contained certificate document. Writes
 * {"ok":bool,"reason":...,"step":...}; HC_OK even when the check rejects. */
hc_status hc_verify(const char* cert_json, char** result_json);

/* names_json: optional JSON array of arc label names (null for a,b,c,...). */
hc_status hc_export_dot(const hc_digraph* d, const char* names_json, char** dot_text);

/* name: "metacyclic" (params {"p":7,"n":1,"unsafe_any_prime":false}),
 *       "z12z5", "a4z2", "lw12k" ({"k":1}), "lw2k" ({"a":3,"b":2,"k":6}),
 *       "milnor" ({"max_order":72}).
 * Writes {"group":...,"generators":[...]} (an array of those for "milnor"). */
hc_status hc_family(const char* name, const char* params_json, char** out_json);

/* options_json: {"max_order":24,"workers":1}; writes JSONL records to path. */
hc_status hc_survey(const char* options_json, const char* out_path);

#ifdef __cplusplus
}
#endif

#endif /* HAMCAY_H */
