#ifndef SWD_HOM_ENGINE_HPP
#define SWD_HOM_ENGINE_HPP

// Equivariant-map spaces and the exact duality checks built from them:
//
//  - hom_sigma: maps between weight spaces commuting with all place
//    permutations (dimension = number of contingency matrices);
//  - the corner algebra x kSigma_r x of an idempotent x, hom spaces over it
//    between the slices T_alpha.x, and the restriction map Theta from
//    hom_sigma onto them, with exact surjectivity verdicts;
//  - the commutant equality: right multiplications by the corner algebra on
//    T.x coincide with the commutant of the full equivariant-map algebra;
//  - the transport isomorphism between hom spaces over two idempotents e, f
//    tied by ef = f and fe = e;
//  - per-instance verification reports and the cross-field dimension
//    experiment for the restriction maps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swd/field.hpp"
#include "swd/group_algebra.hpp"
#include "swd/linalg.hpp"
#include "swd/partitions.hpp"
#include "swd/tableaux.hpp"
#include "swd/tensor_space.hpp"

namespace swd {

// A space of linear maps source -> target, stored as a canonical subspace of
// the flattened matrix space: a matrix M (target_dim x source_dim) flattens
// to index t*source_dim + s.
struct HomSpace {
    std::int64_t source_dim = 0;
    std::int64_t target_dim = 0;
    FieldPtr ctx;
    Subspace flat;

    std::int64_t dim() const { return flat.dim(); }
    Matrix matrix(std::int64_t i) const;  // reshape basis row i
};

// Number of non-negative integer matrices with row sums alpha and column
// sums beta: the double-coset count that hom_sigma's dimension must equal.
std::int64_t contingency_count(const Composition& alpha,
                               const Composition& beta);

// Maps T_alpha -> T_beta commuting with the place action, as the nullspace
// of the commutation constraints against the adjacent transpositions.
HomSpace hom_sigma(const Composition& alpha, const Composition& beta,
                   const FieldPtr& F);

// The same block with (n, r) validated against the compositions; the direct
// sum of all blocks is the algebra of all equivariant maps on T^{n,r}.
HomSpace schur_algebra_block(int n, int r, const FieldPtr& F,
                             const Composition& alpha,
                             const Composition& beta);

// Independent construction of the same block: one 0/1 matrix per orbit of
// pairs of words under the diagonal place action, flattened like HomSpace.
std::vector<SparseRow> orbit_sum_maps(const Composition& alpha,
                                      const Composition& beta,
                                      const FieldPtr& F);

// The corner algebra x kSigma_r x of an idempotent x: canonical basis (rows
// of the RREF span, read back as algebra elements) plus the span itself over
// the rank coordinates of kSigma_r.
struct CornerAlgebra {
    AlgebraElt idem;
    std::vector<AlgebraElt> basis;
    Subspace span;

    std::int64_t dim() const { return span.dim(); }
};
CornerAlgebra corner_algebra(const AlgebraElt& x);

// The slice T_alpha.x in weight-local coordinates.
struct Slice {
    WordSpace space;
    Subspace U;
};
Slice make_slice(const Composition& alpha, const AlgebraElt& x);

// Maps T_alpha.x -> T_beta.x commuting with the right action of every basis
// element of the corner algebra.
HomSpace hom_corner(const Composition& alpha, const Composition& beta,
                    const CornerAlgebra& H);

struct ThetaResult {
    std::int64_t dim_hom_sigma = 0;
    std::int64_t dim_hom_corner = 0;
    std::int64_t dim_image = 0;
    bool surjective = false;
    // The restricted maps always land inside hom_corner; recorded as an
    // internal consistency bit.
    bool image_inside = false;
};

// Restrict every equivariant map T_alpha -> T_beta to the slices T_alpha.x
// -> T_beta.x and measure the image inside hom_corner.
ThetaResult theta_restriction(const Composition& alpha,
                              const Composition& beta,
                              const CornerAlgebra& H);
// Same, but reusing an already computed equivariant hom space (its flat
// coordinates must match the weight pair, else SizeMismatch).
ThetaResult theta_restriction(const Composition& alpha,
                              const Composition& beta,
                              const CornerAlgebra& H, const HomSpace& hs);

// Right multiplications by the corner algebra on T.x versus the commutant of
// the full equivariant-map algebra (all orbit-sum blocks) acting there, both
// inside the weight-blocked endomorphism coordinates of T.x.
struct CommutantReport {
    std::int64_t module_dim = 0;     // dim T.x
    std::int64_t corner_dim = 0;     // dim of the right-multiplication span
    std::int64_t commutant_dim = 0;  // dim of the commutant
    bool equal = false;
};
CommutantReport commutant_equality_check(int n, int r, const FieldPtr& F,
                                         const AlgebraElt& x);

// For idempotents with ef = f and fe = e, phi -> (right-mult by f) o phi o
// (right-mult by e) carries maps over the e-corner to maps over the f-corner
// bijectively and multiplicatively, and matches the two restriction images.
struct TransportReport {
    std::int64_t dim_over_e = 0;
    std::int64_t dim_over_f = 0;
    std::int64_t dim_transport_image = 0;
    bool bijective = false;
    bool multiplicative = false;  // checked on basis pairs when alpha == beta
    std::int64_t theta_image_e = 0;
    std::int64_t theta_image_f = 0;
    bool theta_images_agree = false;
};
TransportReport transport_check(const AlgebraElt& e, const AlgebraElt& f,
                                const Composition& alpha,
                                const Composition& beta);

enum class IdempotentName { dsw, klyachko };
std::string to_string(IdempotentName which);

struct CheckRecord {
    std::string name;
    std::string statement;  // the identity or quantity being verified
    std::string expected;
    std::string computed;
    bool pass = false;
    // true: a failure is a bug; false: the outcome is experimental evidence.
    bool asserted = true;
};

struct ThetaRow {
    Composition alpha, beta;
    ThetaResult result;
};

struct SemisimpleReport {
    int r = 0;
    std::int64_t corner_dim_rank = 0;      // rank of f kSigma_r f
    std::int64_t corner_dim_tableaux = 0;  // sum of squared congruence counts
    std::int64_t corner_dim_census = 0;    // permutations with both maj == 1
    bool corner_dims_agree = false;
    struct Multiplicity {
        Partition lambda;
        std::int64_t from_characters = 0;  // inner product, exact in-field
        std::int64_t from_tableaux = 0;    // congruence count
        bool match = false;
    };
    std::vector<Multiplicity> multiplicities;
    bool multiplicities_match = false;
    // n^{cycles(mu)} = sum_lambda ssyt(lambda,n) chi^lambda(mu), n in {2,3}.
    bool tensor_character_identity = false;
};
SemisimpleReport semisimple_report(int r, const FieldPtr& F,
                                   const CycleChoice& gamma);

// Make a field spec concrete for symmetric degree r: stamp r (and the
// default conductor for number fields), then build, translating "this field
// cannot host degree r" conditions into InfeasibleField.
FieldPtr field_for_run(const FieldSpec& spec, int r,
                       ZetaChoice zeta = ZetaChoice::canonical);

// Which groups of checks a verification run performs.  Dropping a group
// drops its records (and for theta, the per-pair rows) from the report.
struct CheckSet {
    bool relations = true;
    bool lie = true;
    bool commutant = true;
    bool theta = true;
    bool semisimple = true;
};

struct VerifyOptions {
    ZetaChoice zeta = ZetaChoice::canonical;
    std::optional<Permutation> gamma;  // r-cycle override
    CheckSet checks;
};

struct VerifyReport {
    int n = 0, r = 0;
    std::string field;       // field spec string
    std::string idempotent;  // "dsw" or "klyachko"
    std::string gamma;       // one-line form of the cycle used
    std::string zeta;        // scalar string of the root of unity used
    // char 0 or char > r: surjectivity is a theorem; otherwise every
    // surjectivity verdict is experimental evidence.
    bool guaranteed_regime = false;
    std::vector<CheckRecord> checks;
    std::vector<ThetaRow> theta;
    bool duality_holds = false;
    std::optional<SemisimpleReport> semisimple;

    bool all_asserted_pass() const;
};

VerifyReport verify_instance(int n, int r, const FieldSpec& spec,
                             IdempotentName which,
                             const VerifyOptions& options = {});

struct FieldIndependence {
    int n = 0, r = 0;
    std::vector<std::string> fields;
    struct Row {
        Composition alpha, beta;
        std::vector<ThetaResult> per_field;  // parallel to fields
        bool independent = false;            // hom_corner dims all equal
    };
    std::vector<Row> rows;
    bool all_independent = false;
};
FieldIndependence field_independence_matrix(
    int r, int n, const std::vector<FieldSpec>& specs);

// Partition-shaped members of the weight list, in enumeration order: the
// representatives modulo permuting the entries of a composition.
std::vector<Composition> sorted_weights(int n, int r);

// A concrete permutation of cycle type mu (cycles laid out consecutively).
Permutation class_representative(const Partition& mu, int r);

}  // namespace swd

#endif
