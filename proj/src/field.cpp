#include "swd/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace swd {
namespace {

using i64 = std::int64_t;

i64 md(i64 a, i64 p) {
    i64 t = a % p;
    return t < 0 ? t + p : t;
}

i64 mul_mod(i64 a, i64 b, i64 p) {
    return static_cast<i64>(static_cast<__int128>(a) * b % p);
}

i64 inv_mod(i64 a, i64 p) {
    i64 r0 = p, r1 = md(a, p), t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
    }
    if (r0 != 1) throw DivideByZero("no inverse of " + std::to_string(a) +
                                    " modulo " + std::to_string(p));
    return md(t0, p);
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    for (i64 q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) out.push_back(n);
    return out;
}

i64 euler_phi(i64 n) {
    i64 out = n;
    for (i64 q : prime_factors(n)) out = out / q * (q - 1);
    return out;
}

// Multiplicative order of a modulo n (gcd(a, n) = 1 assumed).
i64 order_mod(i64 a, i64 n) {
    if (n == 1) return 1;
    i64 e = 1;
    i64 cur = md(a, n);
    while (cur != 1 % n) {
        cur = mul_mod(cur, md(a, n), n);
        ++e;
        if (e > n) throw Error("order_mod: a is not a unit modulo n");
    }
    return e;
}

// ---- polynomials over GF(p): coefficient vectors, constant term first, ----
// ---- trailing (high-degree) zeros trimmed; the zero polynomial is {}.   ----

using Poly = std::vector<i64>;

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly psub(const Poly& a, const Poly& b, i64 p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = md(c[i] - b[i], p);
    ptrim(c);
    return c;
}

Poly pmul(const Poly& a, const Poly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = md(c[i + j] + mul_mod(a[i], b[j], p), p);
    ptrim(c);
    return c;
}

// Remainder of a modulo b (b nonzero).
Poly prem(Poly a, const Poly& b, i64 p) {
    i64 lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        i64 f = mul_mod(a.back(), lead_inv, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = md(a[shift + i] - mul_mod(f, b[i], p), p);
        ptrim(a);
    }
    return a;
}

Poly pquot(Poly a, const Poly& b, i64 p) {
    i64 lead_inv = inv_mod(b.back(), p);
    if (a.size() < b.size()) return {};
    Poly q(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        i64 f = mul_mod(a.back(), lead_inv, p);
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = md(a[shift + i] - mul_mod(f, b[i], p), p);
        ptrim(a);
    }
    ptrim(q);
    return q;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& mod, i64 p) {
    return prem(pmul(a, b, p), mod, p);
}

Poly ppowmod(Poly a, i64 e, const Poly& mod, i64 p) {
    Poly acc = prem({1}, mod, p);
    a = prem(std::move(a), mod, p);
    for (; e > 0; e >>= 1) {
        if (e & 1) acc = pmulmod(acc, a, mod, p);
        a = pmulmod(a, a, mod, p);
    }
    return acc;
}

Poly pinvmod(const Poly& a, const Poly& mod, i64 p) {
    Poly r0 = mod, r1 = prem(a, mod, p), t0 = {}, t1 = {1};
    if (r1.empty()) throw DivideByZero("inverse of zero in GF(p^m)");
    while (!r1.empty()) {
        Poly q = pquot(r0, r1, p);
        Poly r2 = psub(r0, pmul(q, r1, p), p);
        Poly t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1)
        throw DivideByZero("element not invertible modulo the field polynomial");
    return prem(pmul(t0, {inv_mod(r0[0], p)}, p), mod, p);
}

// Monic polynomial of degree deg over GF(p) whose non-leading coefficients
// are the base-p digits of idx, constant term as the most significant digit
// (so ascending idx enumerates ascending lexicographic coefficient tuples).
Poly monic_from_index(std::uint64_t idx, int deg, i64 p) {
    Poly f(deg + 1, 0);
    f[deg] = 1;
    for (int i = deg - 1; i >= 0; --i) {
        f[i] = static_cast<i64>(idx % static_cast<std::uint64_t>(p));
        idx /= static_cast<std::uint64_t>(p);
    }
    return f;
}

bool is_irreducible(const Poly& f, i64 p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g = monic_from_index(idx, d, p);
            if (prem(f, g, p).empty()) return false;
        }
    }
    return true;
}

// ---- polynomials over Q (mpq coefficients), same conventions ----

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    qtrim(c);
    return c;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly c(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    qtrim(c);
    return c;
}

QPoly qrem(QPoly a, const QPoly& b) {
    mpq_class lead_inv = 1 / b.back();
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        qtrim(a);
    }
    return a;
}

QPoly qquot(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) return {};
    mpq_class lead_inv = 1 / b.back();
    QPoly q(a.size() - b.size() + 1, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        qtrim(a);
    }
    qtrim(q);
    return q;
}

QPoly qmulmod(const QPoly& a, const QPoly& b, const QPoly& mod) {
    return qrem(qmul(a, b), mod);
}

QPoly qpowmod(QPoly a, i64 e, const QPoly& mod) {
    QPoly acc = qrem({mpq_class(1)}, mod);
    a = qrem(std::move(a), mod);
    for (; e > 0; e >>= 1) {
        if (e & 1) acc = qmulmod(acc, a, mod);
        a = qmulmod(a, a, mod);
    }
    return acc;
}

QPoly qinvmod(const QPoly& a, const QPoly& mod) {
    QPoly r0 = mod, r1 = qrem(a, mod), t0 = {}, t1 = {mpq_class(1)};
    if (r1.empty()) throw DivideByZero("inverse of zero in Q(zeta_r)");
    while (!r1.empty()) {
        QPoly q = qquot(r0, r1);
        QPoly r2 = qsub(r0, qmul(q, r1));
        QPoly t2 = qsub(t0, qmul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1)
        throw DivideByZero("element not invertible modulo the field polynomial");
    mpq_class c = 1 / r0[0];
    QPoly out = t0;
    for (auto& x : out) x *= c;
    return qrem(std::move(out), mod);
}

// Exact division of integer polynomials, divisor monic.
std::vector<mpz_class> zdiv_exact(std::vector<mpz_class> a,
                                  const std::vector<mpz_class>& b) {
    if (a.size() < b.size()) throw Error("zdiv_exact: degree underflow");
    std::vector<mpz_class> q(a.size() - b.size() + 1, mpz_class(0));
    while (a.size() >= b.size()) {
        mpz_class f = a.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    if (!a.empty()) throw Error("zdiv_exact: division was not exact");
    return q;
}

std::vector<mpz_class> cyclo_rec(i64 r,
                                 std::map<i64, std::vector<mpz_class>>& memo) {
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    std::vector<mpz_class> num(static_cast<size_t>(r) + 1, mpz_class(0));
    num[0] = -1;
    num[static_cast<size_t>(r)] = 1;
    for (i64 d = 1; d < r; ++d)
        if (r % d == 0) num = zdiv_exact(std::move(num), cyclo_rec(d, memo));
    memo[r] = num;
    return num;
}

std::string poly_to_string(const std::vector<std::string>& coef_strings) {
    std::string out;
    for (size_t k = 0; k < coef_strings.size(); ++k) {
        const std::string& c = coef_strings[k];
        if (c == "0") continue;
        std::string term;
        if (k == 0) {
            term = c;
        } else {
            std::string var = (k == 1) ? "z" : "z^" + std::to_string(k);
            if (c == "1")
                term = var;
            else if (c == "-1")
                term = "-" + var;
            else
                term = c + "*" + var;
        }
        if (out.empty())
            out = term;
        else if (!term.empty() && term[0] == '-')
            out += term;
        else
            out += "+" + term;
    }
    return out.empty() ? "0" : out;
}

struct ParsedTerm {
    mpq_class coef;
    i64 power = 0;
};

// Terms of "c0+c1*z-3/2*z^4"-style strings; whitespace already stripped.
std::vector<ParsedTerm> parse_poly_terms(const std::string& s) {
    if (s.empty()) throw ParseError("empty scalar string");
    std::vector<ParsedTerm> terms;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        }
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw ParseError("dangling sign in scalar string");
        i = j;

        std::string coef_part, var_part;
        size_t star = term.find('*');
        if (star != std::string::npos) {
            coef_part = term.substr(0, star);
            var_part = term.substr(star + 1);
        } else if (term[0] == 'z') {
            coef_part = "1";
            var_part = term;
        } else {
            coef_part = term;
        }

        ParsedTerm t;
        try {
            t.coef = mpq_class(coef_part);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad coefficient '" + coef_part + "'");
        }
        if (t.coef.get_den() == 0)
            throw ParseError("zero denominator in '" + coef_part + "'");
        t.coef.canonicalize();
        t.coef *= sign;

        if (!var_part.empty()) {
            if (var_part == "z") {
                t.power = 1;
            } else if (var_part.rfind("z^", 0) == 0) {
                std::string e = var_part.substr(2);
                if (e.empty() ||
                    !std::all_of(e.begin(), e.end(),
                                 [](unsigned char c) { return std::isdigit(c); }))
                    throw ParseError("bad exponent in '" + var_part + "'");
                t.power = std::stoll(e);
            } else {
                throw ParseError("bad term '" + term + "'");
            }
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

constexpr std::uint64_t kMaxFiniteCardinality = 1ull << 20;

}  // namespace

bool is_prime_int(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 i = 3; i * i <= n; i += 2)
        if (n % i == 0) return false;
    return true;
}

std::vector<mpz_class> cyclotomic_polynomial(std::int64_t r) {
    if (r < 1) throw Error("cyclotomic_polynomial: r must be positive");
    std::map<i64, std::vector<mpz_class>> memo;
    return cyclo_rec(r, memo);
}

// ---------- FieldSpec ----------

FieldSpec FieldSpec::parse(const std::string& text, std::int64_t r) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    size_t colon = s.find(':');
    if (colon == std::string::npos)
        throw ParseError("field spec '" + text + "' lacks ':'");
    std::string head = s.substr(0, colon), tail = s.substr(colon + 1);
    auto parse_int = [&](const std::string& t) -> i64 {
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) {
                return std::isdigit(c);
            }))
            throw ParseError("bad integer '" + t + "' in field spec '" + text +
                             "'");
        return std::stoll(t);
    };
    FieldSpec spec;
    spec.r = r;
    if (head == "gf") {
        size_t caret = tail.find('^');
        if (caret == std::string::npos) {
            spec.kind = FieldKind::prime;
            spec.p = parse_int(tail);
            spec.m = 1;
        } else {
            spec.kind = FieldKind::extension;
            spec.p = parse_int(tail.substr(0, caret));
            i64 m = parse_int(tail.substr(caret + 1));
            if (m < 1 || m > 64)
                throw ParseError("extension degree out of range in '" + text +
                                 "'");
            spec.m = static_cast<int>(m);
            if (spec.m == 1) spec.kind = FieldKind::prime;
        }
    } else if (head == "cyclo") {
        spec.kind = FieldKind::cyclotomic;
        spec.conductor = parse_int(tail);
        if (spec.conductor < 1)
            throw ParseError("cyclotomic conductor must be positive");
    } else {
        throw ParseError("unknown field kind '" + head + "' (want gf or cyclo)");
    }
    return spec;
}

std::string FieldSpec::to_string() const {
    switch (kind) {
        case FieldKind::prime:
            return "gf:" + std::to_string(p);
        case FieldKind::extension:
            return "gf:" + std::to_string(p) + "^" + std::to_string(m);
        case FieldKind::cyclotomic:
            return "cyclo:" + std::to_string(conductor ? conductor : r);
    }
    throw Error("unreachable field kind");
}

// ---------- FieldCtx ----------

std::int64_t FieldCtx::characteristic() const {
    return spec_.kind == FieldKind::cyclotomic ? 0 : spec_.p;
}

std::optional<std::int64_t> FieldCtx::cardinality() const {
    if (spec_.kind == FieldKind::cyclotomic) return std::nullopt;
    i64 q = 1;
    for (int i = 0; i < (spec_.kind == FieldKind::prime ? 1 : spec_.m); ++i)
        q *= spec_.p;
    return q;
}

std::int64_t FieldCtx::as_res(const Scalar& a) const {
    if (!std::holds_alternative<i64>(a.rep_))
        throw CtxMismatch("scalar does not belong to this prime field");
    return std::get<i64>(a.rep_);
}

const std::vector<std::int64_t>& FieldCtx::as_gf(const Scalar& a) const {
    if (!std::holds_alternative<std::vector<i64>>(a.rep_))
        throw CtxMismatch("scalar does not belong to this extension field");
    const auto& v = std::get<std::vector<i64>>(a.rep_);
    if (static_cast<int>(v.size()) != degree_)
        throw CtxMismatch("scalar has wrong representation length");
    return v;
}

const std::vector<mpq_class>& FieldCtx::as_cy(const Scalar& a) const {
    if (!std::holds_alternative<std::vector<mpq_class>>(a.rep_))
        throw CtxMismatch("scalar does not belong to this cyclotomic field");
    const auto& v = std::get<std::vector<mpq_class>>(a.rep_);
    if (static_cast<int>(v.size()) != degree_)
        throw CtxMismatch("scalar has wrong representation length");
    return v;
}

Scalar FieldCtx::zero() const { return from_int(0); }
Scalar FieldCtx::one() const { return from_int(1); }

Scalar FieldCtx::from_int(std::int64_t z) const {
    switch (spec_.kind) {
        case FieldKind::prime:
            return Scalar(md(z, spec_.p));
        case FieldKind::extension: {
            std::vector<i64> v(degree_, 0);
            v[0] = md(z, spec_.p);
            return Scalar(std::move(v));
        }
        case FieldKind::cyclotomic: {
            std::vector<mpq_class> v(degree_, mpq_class(0));
            v[0] = mpq_class(z);
            return Scalar(std::move(v));
        }
    }
    throw Error("unreachable field kind");
}

Scalar FieldCtx::from_rational(const mpq_class& q) const {
    if (spec_.kind == FieldKind::cyclotomic) {
        std::vector<mpq_class> v(degree_, mpq_class(0));
        v[0] = q;
        v[0].canonicalize();
        return Scalar(std::move(v));
    }
    mpz_class num = q.get_num(), den = q.get_den();
    if (!num.fits_slong_p() || !den.fits_slong_p())
        throw Error("rational too large for finite-field embedding");
    return div(from_int(num.get_si()), from_int(den.get_si()));
}

Scalar FieldCtx::add(const Scalar& a, const Scalar& b) const {
    switch (spec_.kind) {
        case FieldKind::prime:
            return Scalar(md(as_res(a) + as_res(b), spec_.p));
        case FieldKind::extension: {
            const auto &x = as_gf(a), &y = as_gf(b);
            std::vector<i64> v(degree_);
            for (int i = 0; i < degree_; ++i) v[i] = md(x[i] + y[i], spec_.p);
            return Scalar(std::move(v));
        }
        case FieldKind::cyclotomic: {
            const auto &x = as_cy(a), &y = as_cy(b);
            std::vector<mpq_class> v(degree_);
            for (int i = 0; i < degree_; ++i) v[i] = x[i] + y[i];
            return Scalar(std::move(v));
        }
    }
    throw Error("unreachable field kind");
}

Scalar FieldCtx::sub(const Scalar& a, const Scalar& b) const {
    return add(a, neg(b));
}

Scalar FieldCtx::neg(const Scalar& a) const {
    switch (spec_.kind) {
        case FieldKind::prime:
            return Scalar(md(-as_res(a), spec_.p));
        case FieldKind::extension: {
            std::vector<i64> v = as_gf(a);
            for (auto& c : v) c = md(-c, spec_.p);
            return Scalar(std::move(v));
        }
        case FieldKind::cyclotomic: {
            std::vector<mpq_class> v = as_cy(a);
            for (auto& c : v) c = -c;
            return Scalar(std::move(v));
        }
    }
    throw Error("unreachable field kind");
}

Scalar FieldCtx::mul(const Scalar& a, const Scalar& b) const {
    switch (spec_.kind) {
        case FieldKind::prime:
            return Scalar(mul_mod(as_res(a), as_res(b), spec_.p));
        case FieldKind::extension: {
            Poly x = as_gf(a), y = as_gf(b);
            ptrim(x);
            ptrim(y);
            Poly z = pmulmod(x, y, gf_modulus_, spec_.p);
            z.resize(degree_, 0);
            return Scalar(std::move(z));
        }
        case FieldKind::cyclotomic: {
            QPoly x = as_cy(a), y = as_cy(b);
            qtrim(x);
            qtrim(y);
            QPoly mod(cyclo_modulus_.size());
            for (size_t i = 0; i < mod.size(); ++i)
                mod[i] = mpq_class(cyclo_modulus_[i]);
            QPoly z = qmulmod(x, y, mod);
            z.resize(degree_, mpq_class(0));
            return Scalar(std::move(z));
        }
    }
    throw Error("unreachable field kind");
}

Scalar FieldCtx::inv(const Scalar& a) const {
    switch (spec_.kind) {
        case FieldKind::prime: {
            i64 v = as_res(a);
            if (v == 0) throw DivideByZero("inverse of zero in GF(p)");
            return Scalar(inv_mod(v, spec_.p));
        }
        case FieldKind::extension: {
            Poly x = as_gf(a);
            ptrim(x);
            Poly z = pinvmod(x, gf_modulus_, spec_.p);
            z.resize(degree_, 0);
            return Scalar(std::move(z));
        }
        case FieldKind::cyclotomic: {
            QPoly x = as_cy(a);
            qtrim(x);
            QPoly mod(cyclo_modulus_.size());
            for (size_t i = 0; i < mod.size(); ++i)
                mod[i] = mpq_class(cyclo_modulus_[i]);
            QPoly z = qinvmod(x, mod);
            z.resize(degree_, mpq_class(0));
            return Scalar(std::move(z));
        }
    }
    throw Error("unreachable field kind");
}

Scalar FieldCtx::div(const Scalar& a, const Scalar& b) const {
    return mul(a, inv(b));
}

bool FieldCtx::is_zero(const Scalar& a) const { return eq(a, zero()); }
bool FieldCtx::is_one(const Scalar& a) const { return eq(a, one()); }

Scalar FieldCtx::pow(const Scalar& a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    Scalar acc = one(), base = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
    }
    return acc;
}

Scalar FieldCtx::element(std::uint64_t index) const {
    if (spec_.kind == FieldKind::cyclotomic)
        throw Error("element enumeration requires a finite field");
    auto q = cardinality();
    if (index >= static_cast<std::uint64_t>(*q))
        throw Error("element index out of range");
    if (spec_.kind == FieldKind::prime)
        return Scalar(static_cast<i64>(index));
    std::vector<i64> v(degree_, 0);
    for (int i = degree_ - 1; i >= 0; --i) {
        v[i] = static_cast<i64>(index % static_cast<std::uint64_t>(spec_.p));
        index /= static_cast<std::uint64_t>(spec_.p);
    }
    return Scalar(std::move(v));
}

bool FieldCtx::has_order(const Scalar& a, std::int64_t n) const {
    if (is_zero(a)) return false;
    if (!is_one(pow(a, n))) return false;
    for (i64 q : prime_factors(n))
        if (is_one(pow(a, n / q))) return false;
    return true;
}

std::string FieldCtx::to_string(const Scalar& a) const {
    switch (spec_.kind) {
        case FieldKind::prime:
            return std::to_string(as_res(a));
        case FieldKind::extension: {
            const auto& v = as_gf(a);
            std::vector<std::string> cs(v.size());
            for (size_t i = 0; i < v.size(); ++i) cs[i] = std::to_string(v[i]);
            return poly_to_string(cs);
        }
        case FieldKind::cyclotomic: {
            const auto& v = as_cy(a);
            std::vector<std::string> cs(v.size());
            for (size_t i = 0; i < v.size(); ++i) cs[i] = v[i].get_str();
            return poly_to_string(cs);
        }
    }
    throw Error("unreachable field kind");
}

Scalar FieldCtx::parse_scalar(const std::string& text) const {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto terms = parse_poly_terms(s);
    Scalar acc = zero();
    for (const auto& t : terms) {
        if (t.power > 0 && spec_.kind == FieldKind::prime)
            throw ParseError("prime-field scalars are plain integers");
        Scalar zp = one();
        if (t.power > 0) {
            // z denotes the representation generator (the class of x), not
            // the distinguished root of unity.
            if (spec_.kind == FieldKind::extension) {
                Poly z = ppowmod({0, 1}, t.power, gf_modulus_, spec_.p);
                z.resize(degree_, 0);
                zp = Scalar(std::move(z));
            } else {
                QPoly mod(cyclo_modulus_.size());
                for (size_t i = 0; i < mod.size(); ++i)
                    mod[i] = mpq_class(cyclo_modulus_[i]);
                QPoly z = qpowmod({mpq_class(0), mpq_class(1)}, t.power, mod);
                z.resize(degree_, mpq_class(0));
                zp = Scalar(std::move(z));
            }
        }
        acc = add(acc, mul(from_rational(t.coef), zp));
    }
    return acc;
}

std::string FieldCtx::modulus_string() const {
    switch (spec_.kind) {
        case FieldKind::prime:
            return "";
        case FieldKind::extension: {
            std::vector<std::string> cs(gf_modulus_.size());
            for (size_t i = 0; i < cs.size(); ++i)
                cs[i] = std::to_string(gf_modulus_[i]);
            return poly_to_string(cs);
        }
        case FieldKind::cyclotomic: {
            std::vector<std::string> cs(cyclo_modulus_.size());
            for (size_t i = 0; i < cs.size(); ++i)
                cs[i] = cyclo_modulus_[i].get_str();
            return poly_to_string(cs);
        }
    }
    throw Error("unreachable field kind");
}

// ---------- construction ----------

FieldPtr build_field(const FieldSpec& spec, ZetaChoice choice) {
    if (spec.r < 1) throw ParseError("root order r must be positive");
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->spec_ = spec;
    const i64 r = spec.r;

    if (spec.kind == FieldKind::prime || spec.kind == FieldKind::extension) {
        const i64 p = spec.p;
        const int m = (spec.kind == FieldKind::prime) ? 1 : spec.m;
        if (!is_prime_int(p))
            throw NotPrime(std::to_string(p) + " is not prime");
        if (r % p == 0)
            throw CharDividesR("characteristic " + std::to_string(p) +
                               " divides the root order " + std::to_string(r));
        std::uint64_t q = 1;
        for (int i = 0; i < m; ++i) {
            q *= static_cast<std::uint64_t>(p);
            if (q > kMaxFiniteCardinality)
                throw InfeasibleField("finite field of size " +
                                      std::to_string(p) + "^" +
                                      std::to_string(m) + " exceeds the 2^20 "
                                      "enumeration bound");
        }
        if ((q - 1) % static_cast<std::uint64_t>(r) != 0) {
            i64 m0 = order_mod(p, r);
            throw NoRootOfUnity(
                "GF(" + std::to_string(p) +
                (m > 1 ? "^" + std::to_string(m) : "") +
                ") has no primitive root of unity of order " +
                std::to_string(r) + "; the smallest admissible degree is " +
                std::to_string(p) + "^" + std::to_string(m0));
        }

        if (spec.kind == FieldKind::prime) {
            ctx->degree_ = 1;
            Scalar canonical, alternate;
            bool found = false, found_alt = false;
            for (i64 t = 1; t < p; ++t) {
                Scalar s = ctx->from_int(t);
                if (ctx->has_order(s, r)) {
                    if (!found) {
                        canonical = s;
                        found = true;
                    } else {
                        alternate = s;
                        found_alt = true;
                        break;
                    }
                }
            }
            if (!found) throw Error("internal: no root of unity found");
            ctx->zeta_ =
                (choice == ZetaChoice::alternate && found_alt) ? alternate
                                                               : canonical;
        } else {
            ctx->degree_ = m;
            // Lexicographically smallest monic irreducible of degree m,
            // coefficient tuples read constant term first.
            std::uint64_t count = 1;
            for (int i = 0; i < m; ++i) count *= static_cast<std::uint64_t>(p);
            bool have_mod = false;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                Poly f = monic_from_index(idx, m, p);
                if (is_irreducible(f, p)) {
                    ctx->gf_modulus_ = f;
                    have_mod = true;
                    break;
                }
            }
            if (!have_mod)
                throw Error("internal: no irreducible polynomial found");
            Scalar canonical, alternate;
            bool found = false, found_alt = false;
            for (std::uint64_t idx = 1; idx < q; ++idx) {
                Scalar s = ctx->element(idx);
                if (ctx->has_order(s, r)) {
                    if (!found) {
                        canonical = s;
                        found = true;
                    } else {
                        alternate = s;
                        found_alt = true;
                        break;
                    }
                }
            }
            if (!found) throw Error("internal: no root of unity found");
            ctx->zeta_ =
                (choice == ZetaChoice::alternate && found_alt) ? alternate
                                                               : canonical;
        }
    } else {
        const i64 R = spec.conductor ? spec.conductor : r;
        ctx->spec_.conductor = R;
        if (R % r != 0)
            throw NoRootOfUnity("Q(zeta_" + std::to_string(R) +
                                ") has no primitive root of unity of order " +
                                std::to_string(r) + "; use cyclo:" +
                                std::to_string(r));
        ctx->cyclo_modulus_ = cyclotomic_polynomial(R);
        ctx->degree_ = static_cast<int>(euler_phi(R));
        QPoly mod(ctx->cyclo_modulus_.size());
        for (size_t i = 0; i < mod.size(); ++i)
            mod[i] = mpq_class(ctx->cyclo_modulus_[i]);
        auto zeta_power = [&](i64 e) {
            QPoly z = qpowmod({mpq_class(0), mpq_class(1)}, e, mod);
            z.resize(ctx->degree_, mpq_class(0));
            return Scalar(std::move(z));
        };
        i64 e = R / r;
        if (choice == ZetaChoice::alternate && r > 2) {
            i64 j = 2;
            while (std::gcd(j, r) != 1) ++j;
            e *= j;
        }
        ctx->zeta_ = zeta_power(e);
    }

    ctx->rinv_ = ctx->inv(ctx->from_int(r));
    if (!ctx->has_order(ctx->zeta_, r))
        throw Error("internal: distinguished root has wrong order");
    return ctx;
}

}  // namespace swd
