#ifndef SWD_FIELD_HPP
#define SWD_FIELD_HPP

// Exact coefficient fields: GF(p), GF(p^m) and the cyclotomic rationals
// Q(zeta_r), each carrying a distinguished primitive r-th root of unity and
// the inverse of r. All arithmetic is exact; there is no floating point in
// this library.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swd/errors.hpp"

namespace swd {

enum class FieldKind { prime, extension, cyclotomic };

struct FieldSpec {
    FieldKind kind = FieldKind::prime;
    std::int64_t p = 0;  // characteristic (prime/extension kinds)
    int m = 1;           // extension degree
    std::int64_t r = 1;  // required order of the distinguished root of unity
    // Cyclotomic conductor R: the field is Q(zeta_R), which serves any run
    // order r dividing R. Zero means "equal to r".
    std::int64_t conductor = 0;

    // Grammar: "gf:P", "gf:P^M", "cyclo:R". The root order r of a gf spec is
    // supplied by the caller (it is a property of the run, not the field).
    static FieldSpec parse(const std::string& text, std::int64_t r);
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

enum class ZetaChoice { canonical, alternate };

// One field element. Prime fields store a residue in [0,p); extensions a
// coefficient vector of length m over GF(p) (constant term first) modulo a
// fixed monic irreducible; cyclotomic fields a rational vector of length
// phi(r) modulo Phi_r. Canonical form is maintained by every FieldCtx
// operation, so representational equality is field equality.
class Scalar {
  public:
    Scalar() : rep_(std::int64_t{0}) {}

    bool operator==(const Scalar& o) const { return rep_ == o.rep_; }
    bool operator!=(const Scalar& o) const { return !(rep_ == o.rep_); }

  private:
    friend class FieldCtx;
    friend FieldPtr build_field(const FieldSpec&, ZetaChoice);
    using Rep = std::variant<std::int64_t, std::vector<std::int64_t>,
                             std::vector<mpq_class>>;
    explicit Scalar(Rep rep) : rep_(std::move(rep)) {}
    Rep rep_;
};

// Immutable after construction; safe to share across threads.
class FieldCtx {
  public:
    const FieldSpec& spec() const { return spec_; }
    std::int64_t characteristic() const;           // 0 for cyclotomic
    std::optional<std::int64_t> cardinality() const;  // nullopt when infinite
    std::int64_t root_order() const { return spec_.r; }
    int degree() const { return degree_; }  // representation length

    Scalar zero() const;
    Scalar one() const;
    Scalar zeta() const { return zeta_; }
    Scalar r_inverse() const { return rinv_; }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // throws DivideByZero
    Scalar div(const Scalar& a, const Scalar& b) const;
    bool eq(const Scalar& a, const Scalar& b) const { return a == b; }
    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    Scalar pow(const Scalar& a, std::int64_t e) const;

    Scalar from_int(std::int64_t z) const;  // the unique ring map from Z
    Scalar from_rational(const mpq_class& q) const;  // a/b -> a * b^(-1)

    // Element of a finite field by mixed-radix index over the coefficient
    // vector (index 0 is zero, 1 is one). Used for enumeration and sampling;
    // throws on cyclotomic fields.
    Scalar element(std::uint64_t index) const;

    // Multiplicative order is exactly n.
    bool has_order(const Scalar& a, std::int64_t n) const;

    std::string to_string(const Scalar& a) const;
    Scalar parse_scalar(const std::string& text) const;

    // The fixed modulus as a coefficient string (empty for prime fields).
    std::string modulus_string() const;
    std::string zeta_string() const { return to_string(zeta_); }

    ~FieldCtx() = default;

  private:
    friend FieldPtr build_field(const FieldSpec&, ZetaChoice);

    FieldCtx() = default;

    FieldSpec spec_;
    int degree_ = 1;
    std::vector<std::int64_t> gf_modulus_;  // monic, length m+1, constant first
    std::vector<mpz_class> cyclo_modulus_;  // Phi_r, monic, constant first
    Scalar zeta_;
    Scalar rinv_;

    const std::vector<std::int64_t>& as_gf(const Scalar& a) const;
    const std::vector<mpq_class>& as_cy(const Scalar& a) const;
    std::int64_t as_res(const Scalar& a) const;
};

FieldPtr build_field(const FieldSpec& spec,
                     ZetaChoice choice = ZetaChoice::canonical);

// Phi_r over Z by the recursive exact division x^r - 1 = prod_{d|r} Phi_d.
std::vector<mpz_class> cyclotomic_polynomial(std::int64_t r);

bool is_prime_int(std::int64_t n);

}  // namespace swd

#endif
