/*
 * qi3m — perturbative quantum invariants of 3-manifolds from classical data.
 *
 * C bindings for the exact-arithmetic core: diagram-valued series for
 * b1 >= 1, hyper-Kahler weight evaluations, the lambda / connected-sum
 * algebra and exact Pfaffian / Berezin utilities.
 *
 * Every function returns a qi3m_status. On failure, *err (when requested)
 * receives a malloc'd message the caller releases with qi3m_string_free;
 * output strings are returned the same way. All numbers are rendered as
 * exact fractions; nothing in the library uses floating point.
 */

#ifndef QI3M_H
#define QI3M_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qi3m_status {
    QI3M_OK = 0,
    QI3M_ERR_PARSE = 2,       /* malformed input text */
    QI3M_ERR_UNSUPPORTED = 3, /* valid data, but no defined value for the request */
    QI3M_ERR_INVARIANT = 4    /* input violates a structural invariant */
} qi3m_status;

typedef enum qi3m_format {
    QI3M_FORMAT_TABLE = 0,  /* human-readable, deterministic */
    QI3M_FORMAT_MACHINE = 1 /* JSON */
} qi3m_format;

typedef struct qi3m_manifold qi3m_manifold; /* opaque: classical 3-manifold data */
typedef struct qi3m_space qi3m_space;       /* opaque: hyper-Kahler weight data */

const char* qi3m_version(void);

void qi3m_string_free(char* s);

/* ---- handles ---------------------------------------------------------- */

qi3m_status qi3m_manifold_from_json(const char* json_text, qi3m_manifold** out, char** err);
void qi3m_manifold_free(qi3m_manifold* m);

qi3m_status qi3m_space_from_json(const char* json_text, qi3m_space** out, char** err);
void qi3m_space_free(qi3m_space* x);

/* ---- evaluations ------------------------------------------------------ */

/* Diagram series of the manifold truncated at `order`, rendered canonically
 * (sorted symbols, exact fractions). Defined for b1 >= 1; b1 = 1 requires
 * trivial torsion. */
qi3m_status qi3m_lmo_series(const qi3m_manifold* m, int order, qi3m_format format, char** out,
                            char** err);

/* Weight evaluation of the manifold against the space, as an exact fraction.
 * For b1 = 1 and nontrivial torsion, pass torsion_factor != 0 to multiply by
 * |Tor|^n instead of rejecting. */
qi3m_status qi3m_rw_invariant(const qi3m_manifold* m, const qi3m_space* x, int torsion_factor,
                              char** out, char** err);

/* The same value through the other route: the diagram series paired against
 * the space's weight system. */
qi3m_status qi3m_rw_via_diagrams(const qi3m_manifold* m, const qi3m_space* x, char** out,
                                 char** err);

/* Euler numbers of the two compact families: t^n coefficient of
 * prod (1-t^k)^{-24}, and (n+1)^3 sigma_1(n+1). Decimal integer strings. */
qi3m_status qi3m_euler_hilb(int n, char** out, char** err);
qi3m_status qi3m_euler_kummer(int n, char** out, char** err);

/* Lambda vector from Z-values and pairing data (JSON, entries may be
 * symbolic). */
qi3m_status qi3m_lambda_from_z(const char* z_json, const char* g_json, qi3m_format format,
                               char** out, char** err);

/* Pfaffian of an antisymmetric rational matrix (JSON), method "combinatorial"
 * or "berezin". Sign convention: the 2x2 block [[0,a],[-a,0]] maps to -a. */
qi3m_status qi3m_pfaffian(const char* matrix_json, const char* method, char** out, char** err);

/* Symbolic verification of the connected-sum law at level n; *verified is
 * set to 1 on success, and the rendered identities are returned. */
qi3m_status qi3m_verify_consum(int n, qi3m_format format, int* verified, char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* QI3M_H */
