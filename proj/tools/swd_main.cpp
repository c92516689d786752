// swd: command-line driver for the exact duality verifier.
//
// Two subcommands:
//
//   verify   - run the check suite for every requested (n, field) instance
//              at a fixed degree r, writing one JSON report per instance
//              plus an aggregate CSV of theta dimensions, and optionally the
//              cross-field independence table.
//   homdims  - tabulate dim Hom_Sigma, dim Hom_H and the image of the
//              restriction map across a list of fields at one (n, r), the
//              experiment probing whether the corner hom dimensions depend
//              on the field.
//
// Exit codes: 0 every asserted check passed, 1 an asserted check failed,
// 2 infeasible or malformed configuration, 3 internal error.
//
// Results are cached as content-addressed JSON blobs keyed by the full
// instance description.  A loaded blob is untrusted: reports are re-checked
// for structural and arithmetic consistency (including the independent
// double-coset count for every recorded equivariant hom dimension), and
// cached bases are re-verified against their defining constraints before
// use.  A blob that fails any re-check is recomputed and overwritten with a
// warning.  Output bytes are independent of cache state and of --jobs.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swd/cache.hpp"
#include "swd/errors.hpp"
#include "swd/field.hpp"
#include "swd/group_algebra.hpp"
#include "swd/hom_engine.hpp"
#include "swd/linalg.hpp"
#include "swd/partitions.hpp"
#include "swd/permutation.hpp"
#include "swd/report.hpp"
#include "swd/tensor_space.hpp"

namespace {

using namespace swd;
using i64 = std::int64_t;
namespace fs = std::filesystem;

constexpr const char* kFieldGrammar = "gf:P | gf:P^M | cyclo:R";
constexpr int kDefaultDegreeCap = 7;
constexpr i64 kDefaultGridCap = 4096;  // largest n^r the default grid accepts

// A configuration problem the user can fix; reported on stderr, exit 2.
struct UsageError {
    std::string message;
};

// ---------------------------------------------------------------------------
// small utilities

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// Field spec as a filename fragment: "gf:3^2" -> "gf3e2".
std::string field_slug(const std::string& text) {
    std::string out;
    for (char ch : text) {
        if (ch == ':') continue;
        out += (ch == '^') ? 'e' : ch;
    }
    return out;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error("cannot write " + path.string());
}

bool exceeds(i64 n, int r, i64 cap) {
    i64 v = 1;
    for (int i = 0; i < r; ++i) {
        if (v > cap / n) return true;
        v *= n;
    }
    return v > cap;
}

Permutation adjacent_transposition(int r, int i) {  // swaps places i, i+1
    std::vector<int> img(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) img[static_cast<std::size_t>(j)] = j + 1;
    std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
    return Permutation(img);
}

const Scalar* find_entry(const SparseRow& row, i64 index) {
    auto it = std::lower_bound(
        row.entries.begin(), row.entries.end(), index,
        [](const auto& entry, i64 key) { return entry.first < key; });
    if (it == row.entries.end() || it->first != index) return nullptr;
    return &it->second;
}

// ---------------------------------------------------------------------------
// parsed configuration shared by both subcommands

struct FieldChoice {
    std::string canonical;  // normalized spec string; key, filename and CSV form
    FieldSpec spec;
};

// Parse, normalize to the exact string a report will carry, and deduplicate.
std::vector<FieldChoice> resolve_fields(const std::vector<std::string>& texts,
                                        int r) {
    if (texts.empty())
        throw UsageError{"at least one --field (or --fields) is required"};
    std::vector<FieldChoice> out;
    for (const auto& text : texts) {
        FieldSpec spec;
        try {
            spec = FieldSpec::parse(text, r);
        } catch (const ParseError& ex) {
            throw UsageError{"invalid field spec '" + text + "': " + ex.what() +
                             " (grammar: " + std::string(kFieldGrammar) + ")"};
        }
        FieldSpec stamped = spec;  // mirror field_for_run's normalization
        if (stamped.kind == FieldKind::cyclotomic && stamped.conductor == 0)
            stamped.conductor = stamped.r;
        stamped.r = r;
        const std::string canonical = stamped.to_string();
        bool seen = false;
        for (const auto& prior : out) seen = seen || prior.canonical == canonical;
        if (!seen) out.push_back(FieldChoice{canonical, spec});
    }
    return out;
}

void check_degree(int r, bool allow_large) {
    if (r < 2)
        throw UsageError{"--r must be at least 2 (got " + std::to_string(r) + ")"};
    if (r > kDefaultDegreeCap && !allow_large)
        throw UsageError{
            "--r " + std::to_string(r) + " exceeds the default cap of " +
            std::to_string(kDefaultDegreeCap) +
            "; every check solves linear systems over the " +
            std::to_string(r) + "!-dimensional group algebra, so pass "
            "--allow-large-r only if you accept the cost"};
    if (r > kDefaultDegreeCap)
        std::cerr << "warning: r = " << r
                  << " solves systems over a group algebra of dimension " << r
                  << "!; expect long runtimes and large memory\n";
}

struct CheckSelection {
    CheckSet set;        // groups forwarded to the verifier
    bool fieldindep = false;
};

CheckSelection parse_checks(const std::vector<std::string>& tokens) {
    CheckSelection sel;
    sel.set = CheckSet{false, false, false, false, false};
    std::vector<std::string> effective = tokens;
    if (effective.empty()) effective.push_back("all");
    for (const auto& tok : effective) {
        if (tok == "all") {
            sel.set = CheckSet{true, true, true, true, true};
            sel.fieldindep = true;
        } else if (tok == "relations") {
            sel.set.relations = true;
        } else if (tok == "lie") {
            sel.set.lie = true;
        } else if (tok == "commutant") {
            sel.set.commutant = true;
        } else if (tok == "theta") {
            sel.set.theta = true;
        } else if (tok == "semisimple") {
            sel.set.semisimple = true;
        } else if (tok == "fieldindep") {
            sel.fieldindep = true;
        } else {
            throw UsageError{"unknown check '" + tok +
                             "'; valid tokens: relations, lie, commutant, "
                             "theta, semisimple, fieldindep, all"};
        }
    }
    return sel;
}

// Canonical token list for cache keys (fieldindep never alters a report).
std::string checks_key(const CheckSet& set) {
    std::vector<std::string> tokens;
    if (set.relations) tokens.push_back("relations");
    if (set.lie) tokens.push_back("lie");
    if (set.commutant) tokens.push_back("commutant");
    if (set.theta) tokens.push_back("theta");
    if (set.semisimple) tokens.push_back("semisimple");
    return join(tokens, "+");
}

std::optional<Cache> open_cache(const std::string& flag_dir,
                                const std::string& out_dir, bool no_cache) {
    if (no_cache) return std::nullopt;
    std::string dir = flag_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("SWD_CACHE_DIR")) dir = env;
    }
    if (dir.empty()) dir = (fs::path(out_dir) / ".swd-cache").string();
    try {
        return Cache(dir);
    } catch (const Error& ex) {
        throw UsageError{"cannot open cache directory '" + dir +
                         "': " + ex.what()};
    }
}

// ---------------------------------------------------------------------------
// cached objects: every loaded basis is re-verified before use

AlgebraElt elt_from_sparse(const FieldPtr& F, int r, const SparseRow& row) {
    AlgebraElt x(F, r);
    for (const auto& [rank, value] : row.entries) x.set_coeff(rank, value);
    return x;
}

// The corner algebra f kSigma_r f over the canonical cycle, through the
// cache.  A loaded basis is accepted only if every row h satisfies
// f.h == h == h.f and f itself lies in the span; this re-checks membership
// (any tampered scalar breaks it) but cannot detect a truncated basis, so
// the blob is still only a shortcut, never an authority, for claims about
// the corner's dimension.
CornerAlgebra cached_cycle_corner(int r, const FieldPtr& F,
                                  const std::string& field_text,
                                  const Cache* cache,
                                  std::vector<std::string>* warnings) {
    const CycleChoice cyc = canonical_cycle(r);
    const AlgebraElt f = cycle_idempotent(r, F, cyc);
    const std::string key = "v1|corner|r=" + std::to_string(r) + "|field=" +
                            field_text + "|idem=cycle|gamma=" +
                            cyc.gamma.to_string() + "|zeta=canonical";
    if (cache) {
        if (auto blob = cache->load(key)) {
            if (auto U = subspace_from_json(F, f.dim(), *blob)) {
                bool ok = U->dim() > 0;
                std::vector<AlgebraElt> basis;
                for (const auto& row : U->basis()) {
                    AlgebraElt h = elt_from_sparse(F, r, row);
                    if (!f.multiply(h).equal(h) || !h.multiply(f).equal(h)) {
                        ok = false;
                        break;
                    }
                    basis.push_back(std::move(h));
                }
                if (ok) {
                    RowBasis probe(F, f.dim());
                    for (const auto& row : U->basis()) probe.insert(SparseRow(row));
                    ok = !probe.insert(sparse_from_dense(*F, f.coeffs()));
                }
                if (ok) return CornerAlgebra{f, std::move(basis), std::move(*U)};
            }
            if (warnings)
                warnings->push_back("cache blob for '" + key +
                                    "' failed verification; recomputing");
        }
    }
    CornerAlgebra H = corner_algebra(f);
    if (cache) cache->store(key, subspace_to_json(F, H.span));
    return H;
}

// Every basis row, reshaped as a matrix M over (target c, source a), must
// satisfy the exchange condition M[c][a.s] == M[c.s][a] for each adjacent
// transposition s.  With b = a.s this reads: the entry at (c, b) equals the
// entry at (c.s, b.s), checked over all nonzero entries (the tables are
// involutions, so that covers every constraint touching a nonzero cell).
bool exchange_rows_valid(const WordSpace& S, const WordSpace& T,
                         const FieldPtr& F, const Subspace& U) {
    const i64 p = S.size();
    for (int i = 1; i < S.r(); ++i) {
        const Permutation s = adjacent_transposition(S.r(), i);
        const auto tS = S.action_table(s);
        const auto tT = T.action_table(s);
        for (const auto& row : U.basis())
            for (const auto& [cell, value] : row.entries) {
                const i64 partner = tT[cell / p] * p + tS[cell % p];
                if (partner == cell) continue;
                const Scalar* other = find_entry(row, partner);
                if (!other || !F->eq(*other, value)) return false;
            }
    }
    return true;
}

// Equivariant maps T_alpha -> T_beta through the cache.  A loaded basis is
// accepted only if it is canonical, satisfies every exchange constraint,
// and has exactly the double-coset count as its dimension — the last test
// is an independent combinatorial oracle, so a cached space that passes is
// the full solution space, not a subspace.
HomSpace cached_hom_sigma(const Composition& alpha, const Composition& beta,
                          const FieldPtr& F, const std::string& field_text,
                          const Cache* cache,
                          std::vector<std::string>* warnings) {
    int r = 0;
    for (int part : alpha.parts) r += part;
    const WordSpace S = WordSpace::weight(alpha.length(), r, alpha);
    const WordSpace T = WordSpace::weight(beta.length(), r, beta);
    const i64 p = S.size(), q = T.size();
    const std::string key =
        "v1|homsigma|r=" + std::to_string(r) + "|alpha=(" + alpha.to_string() +
        ")|beta=(" + beta.to_string() + ")|field=" + field_text +
        "|zeta=canonical";
    if (cache) {
        if (auto blob = cache->load(key)) {
            auto U = subspace_from_json(F, q * p, *blob);
            if (U && U->dim() == contingency_count(alpha, beta) &&
                exchange_rows_valid(S, T, F, *U))
                return HomSpace{p, q, F, std::move(*U)};
            if (warnings)
                warnings->push_back("cache blob for '" + key +
                                    "' failed verification; recomputing");
        }
    }
    HomSpace hs = hom_sigma(alpha, beta, F);
    if (cache) cache->store(key, subspace_to_json(F, hs.flat));
    return hs;
}

// The independence table with both object kinds drawn through the cache;
// mirrors the uncached construction row for row.
FieldIndependence independence_table(int r, int n,
                                     const std::vector<FieldChoice>& fields,
                                     const Cache* cache,
                                     std::vector<std::string>* warnings) {
    FieldIndependence out;
    out.n = n;
    out.r = r;
    const auto sw = sorted_weights(n, r);
    for (const auto& a : sw)
        for (const auto& b : sw)
            out.rows.push_back(FieldIndependence::Row{a, b, {}, false});
    for (const auto& choice : fields) {
        FieldPtr F = field_for_run(choice.spec, r, ZetaChoice::canonical);
        out.fields.push_back(F->spec().to_string());
        CornerAlgebra H =
            cached_cycle_corner(r, F, choice.canonical, cache, warnings);
        std::size_t k = 0;
        for (const auto& a : sw)
            for (const auto& b : sw) {
                HomSpace hs =
                    cached_hom_sigma(a, b, F, choice.canonical, cache, warnings);
                out.rows[k++].per_field.push_back(
                    theta_restriction(a, b, H, hs));
            }
    }
    out.all_independent = true;
    for (auto& row : out.rows) {
        row.independent = true;
        for (const auto& res : row.per_field)
            if (res.dim_hom_corner != row.per_field.front().dim_hom_corner)
                row.independent = false;
        out.all_independent = out.all_independent && row.independent;
    }
    return out;
}

// ---------------------------------------------------------------------------
// verify: whole-report cache with consistency re-checks

struct InstanceTask {
    int n = 0;
    FieldChoice field;
};

enum class Status { ok, asserted_fail, infeasible, internal };

struct Outcome {
    Status status = Status::internal;
    bool from_cache = false;
    std::string message;  // for infeasible / internal
    OrderedJson report;   // for ok / asserted_fail
    std::vector<std::string> warnings;
};

std::vector<std::string> expected_check_names(const CheckSet& set,
                                              bool guaranteed, int n) {
    std::vector<std::string> names;
    if (set.relations) names.push_back("idempotent-relations");
    if (set.lie) {
        names.push_back("lie-span-dsw");
        names.push_back("klyachko-contains-lie");
        names.push_back("klyachko-span");
    }
    if (set.commutant) names.push_back("commutant-equality");
    if (set.theta) {
        names.push_back("theta-inside");
        names.push_back("theta-surjectivity");
        if (n >= 2) names.push_back("weight-sort-invariance");
    }
    if (set.semisimple && guaranteed) {
        names.push_back("cycle-corner-dimension");
        names.push_back("cycle-module-multiplicities");
        names.push_back("tensor-character-identity");
    }
    return names;
}

bool check_is_asserted(const std::string& name, bool guaranteed) {
    if (name == "klyachko-span" || name == "theta-surjectivity")
        return guaranteed;
    return true;
}

// Structural and arithmetic re-check of a cached report: the instance block
// must match the request, the check records must be exactly the selected
// ones with the policy's asserted flags, every theta row must sit at the
// expected weight pair with dim_hom_sigma equal to the independent
// double-coset count and internally consistent image data, and the summary
// bits must equal what the rows imply.
bool report_json_consistent(const OrderedJson& j, int n, int r,
                            const std::string& field_text,
                            const std::string& idem_text,
                            const std::string& gamma_text,
                            const std::string& zeta_text, bool guaranteed,
                            const CheckSet& set,
                            const std::vector<Composition>& sw) {
    try {
        if (!j.is_object()) return false;
        if (j.at("schema").get<std::string>() != "swd-verify-report/1")
            return false;
        const auto& inst = j.at("instance");
        if (inst.at("n") != n || inst.at("r") != r) return false;
        if (inst.at("field").get<std::string>() != field_text) return false;
        if (inst.at("idempotent").get<std::string>() != idem_text) return false;
        if (inst.at("gamma").get<std::string>() != gamma_text) return false;
        if (inst.at("zeta").get<std::string>() != zeta_text) return false;
        if (inst.at("guaranteed_regime") != guaranteed) return false;

        const auto names = expected_check_names(set, guaranteed, n);
        const auto& checks = j.at("checks");
        if (!checks.is_array() || checks.size() != names.size()) return false;
        bool all_asserted = true;
        for (std::size_t i = 0; i < names.size(); ++i) {
            const auto& c = checks[i];
            if (c.at("name").get<std::string>() != names[i]) return false;
            if (!c.at("statement").is_string() || !c.at("expected").is_string() ||
                !c.at("computed").is_string())
                return false;
            if (!c.at("pass").is_boolean()) return false;
            if (c.at("asserted") != check_is_asserted(names[i], guaranteed))
                return false;
            if (c.at("asserted").get<bool>() && !c.at("pass").get<bool>())
                all_asserted = false;
        }

        const auto& theta = j.at("theta");
        if (!theta.is_array()) return false;
        if (set.theta) {
            if (theta.size() != sw.size() * sw.size()) return false;
            std::size_t k = 0;
            i64 surjective = 0;
            for (const auto& a : sw)
                for (const auto& b : sw) {
                    const auto& row = theta[k++];
                    if (row.at("alpha") != OrderedJson(a.parts)) return false;
                    if (row.at("beta") != OrderedJson(b.parts)) return false;
                    const i64 ds = row.at("dim_hom_sigma").get<i64>();
                    const i64 dc = row.at("dim_hom_corner").get<i64>();
                    const i64 di = row.at("dim_theta_image").get<i64>();
                    if (ds != contingency_count(a, b)) return false;
                    if (dc < 0 || di < 0 || di > ds || di > dc) return false;
                    if (row.at("image_inside") != true) return false;
                    if (row.at("surjective").get<bool>() != (di == dc))
                        return false;
                    if (di == dc) ++surjective;
                }
            if (j.at("duality_holds").get<bool>() !=
                (surjective == static_cast<i64>(theta.size())))
                return false;
        } else {
            if (!theta.empty()) return false;
            if (j.at("duality_holds") != false) return false;
        }

        const bool want_semisimple = set.semisimple && guaranteed;
        const auto& ss = j.at("semisimple");
        if (want_semisimple == ss.is_null()) return false;
        if (want_semisimple) {
            if (ss.at("r") != r) return false;
            if (!ss.at("corner_dim").is_object()) return false;
            if (!ss.at("multiplicities").is_array() ||
                ss.at("multiplicities").empty())
                return false;
        }
        if (j.at("all_asserted_pass").get<bool>() != all_asserted) return false;
        return true;
    } catch (const nlohmann::json::exception&) {
        return false;
    }
}

Outcome run_verify_instance(const InstanceTask& task, int r,
                            IdempotentName idem, const VerifyOptions& options,
                            const std::string& gamma_text,
                            const std::string& zeta_token, const Cache* cache) {
    Outcome out;
    const std::string idem_text = to_string(idem);
    const bool guaranteed =
        task.field.spec.kind == FieldKind::cyclotomic || task.field.spec.p > r;
    const std::string key =
        "v1|verify|n=" + std::to_string(task.n) + "|r=" + std::to_string(r) +
        "|field=" + task.field.canonical + "|idem=" + idem_text +
        "|gamma=" + gamma_text + "|zeta=" + zeta_token +
        "|checks=" + checks_key(options.checks);
    try {
        if (cache) {
            if (auto blob = cache->load(key)) {
                std::string zeta_value;
                try {
                    zeta_value =
                        field_for_run(task.field.spec, r, options.zeta)
                            ->zeta_string();
                } catch (const InfeasibleField&) {
                    zeta_value = "";  // infeasible fields never hit the cache
                }
                if (!zeta_value.empty() &&
                    report_json_consistent(
                        *blob, task.n, r, task.field.canonical, idem_text,
                        gamma_text, zeta_value, guaranteed, options.checks,
                        sorted_weights(task.n, r))) {
                    out.report = std::move(*blob);
                    out.from_cache = true;
                    out.status = out.report.at("all_asserted_pass").get<bool>()
                                     ? Status::ok
                                     : Status::asserted_fail;
                    return out;
                }
                out.warnings.push_back("cache blob for '" + key +
                                       "' failed verification; recomputing");
            }
        }
        const VerifyReport rep =
            verify_instance(task.n, r, task.field.spec, idem, options);
        out.report = to_json(rep);
        if (cache) cache->store(key, out.report);
        out.status = rep.all_asserted_pass() ? Status::ok : Status::asserted_fail;
        return out;
    } catch (const InfeasibleField& ex) {
        out.status = Status::infeasible;
        out.message = ex.what();
        return out;
    } catch (const std::exception& ex) {
        out.status = Status::internal;
        out.message = ex.what();
        return out;
    }
}

std::string composition_cell_text(const OrderedJson& parts) {
    std::string inner;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) inner += ",";
        inner += std::to_string(parts[i].get<i64>());
    }
    return csv_quote("(" + inner + ")");
}

// CSV rows regenerated from the report document, so cached and fresh runs
// share one formatting path.
std::vector<std::string> csv_rows_from_report(const OrderedJson& j) {
    std::vector<std::string> rows;
    const std::string field = j.at("instance").at("field").get<std::string>();
    for (const auto& row : j.at("theta"))
        rows.push_back(
            composition_cell_text(row.at("alpha")) + "," +
            composition_cell_text(row.at("beta")) + "," + field + "," +
            std::to_string(row.at("dim_hom_sigma").get<i64>()) + "," +
            std::to_string(row.at("dim_hom_corner").get<i64>()) + "," +
            std::to_string(row.at("dim_theta_image").get<i64>()) + "," +
            (row.at("surjective").get<bool>() ? "true" : "false"));
    return rows;
}

// ---------------------------------------------------------------------------
// subcommand arguments

struct VerifyArgs {
    int r = 0;
    std::vector<int> ns;
    std::vector<std::string> field_flags;
    std::vector<std::string> fields_csv;
    std::string idempotent = "dsw";
    std::vector<int> gamma_images;
    std::string zeta = "canonical";
    std::vector<std::string> checks;
    std::string out_dir = ".";
    std::string cache_dir;
    bool no_cache = false;
    int jobs = 1;
    bool skip_infeasible = false;
    bool allow_large_r = false;
};

struct HomdimsArgs {
    int r = 0;
    int n = 2;
    std::vector<std::string> field_flags;
    std::vector<std::string> fields_csv;
    std::string out_dir = ".";
    std::string cache_dir;
    bool no_cache = false;
    bool skip_infeasible = false;
    bool allow_large_r = false;
};

std::vector<std::string> merged_fields(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

int exit_code_for(Status status, bool skip_infeasible) {
    switch (status) {
        case Status::ok: return 0;
        case Status::asserted_fail: return 1;
        case Status::infeasible: return skip_infeasible ? 0 : 2;
        case Status::internal: return 3;
    }
    return 3;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

// Summary line and disagreement details for one independence table.
void print_independence(const FieldIndependence& table) {
    i64 disagreements = 0;
    for (const auto& row : table.rows)
        if (!row.independent) ++disagreements;
    std::cout << "independence n=" << table.n << " r=" << table.r
              << " fields=" << join(table.fields, ",") << ": ";
    if (table.all_independent) {
        std::cout << "corner hom dimensions agree on all " << table.rows.size()
                  << " weight pairs\n";
        return;
    }
    std::cout << "DISAGREEMENT on " << disagreements << " of "
              << table.rows.size() << " weight pairs\n";
    for (const auto& row : table.rows) {
        if (row.independent) continue;
        std::cout << "  alpha=(" << row.alpha.to_string() << ") beta=("
                  << row.beta.to_string() << "): corner dims";
        for (const auto& res : row.per_field)
            std::cout << " " << res.dim_hom_corner;
        std::cout << "\n";
    }
}

// ---------------------------------------------------------------------------
// verify subcommand

int run_verify(const VerifyArgs& args) {
    check_degree(args.r, args.allow_large_r);
    const int r = args.r;

    std::vector<int> ns = args.ns;
    if (ns.empty()) {
        std::set<int> grid{2, std::min(3, r), r};
        for (int n : grid)
            if (!exceeds(n, r, kDefaultGridCap)) ns.push_back(n);
    } else {
        for (int n : ns)
            if (n < 2)
                throw UsageError{"--n must be at least 2 (got " +
                                 std::to_string(n) + ")"};
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        for (int n : ns)
            if (exceeds(n, r, kDefaultGridCap))
                std::cerr << "warning: n^r = " << n << "^" << r
                          << " exceeds " << kDefaultGridCap
                          << "; expect long runtimes\n";
    }

    const std::vector<FieldChoice> fields =
        resolve_fields(merged_fields(args.field_flags, args.fields_csv), r);

    const IdempotentName idem = args.idempotent == "klyachko"
                                    ? IdempotentName::klyachko
                                    : IdempotentName::dsw;
    const CheckSelection selection = parse_checks(args.checks);

    VerifyOptions options;
    options.checks = selection.set;
    options.zeta = args.zeta == "alternate" ? ZetaChoice::alternate
                                            : ZetaChoice::canonical;
    if (!args.gamma_images.empty()) {
        Permutation gamma = Permutation::identity(r);
        try {
            gamma = Permutation(args.gamma_images);
        } catch (const Error& ex) {
            throw UsageError{std::string("invalid --gamma: ") + ex.what()};
        }
        if (gamma.size() != r || gamma.cycle_type() != std::vector<int>{r})
            throw UsageError{"--gamma must be a single r-cycle on " +
                             std::to_string(r) + " points, got " +
                             gamma.to_string()};
        options.gamma = gamma;
    }
    const std::string gamma_text = options.gamma
                                       ? options.gamma->to_string()
                                       : canonical_cycle(r).gamma.to_string();

    fs::create_directories(args.out_dir);
    const std::optional<Cache> cache =
        open_cache(args.cache_dir, args.out_dir, args.no_cache);
    const Cache* cache_ptr = cache ? &*cache : nullptr;

    std::vector<InstanceTask> tasks;
    for (int n : ns)
        for (const auto& field : fields) tasks.push_back(InstanceTask{n, field});

    std::vector<Outcome> outcomes(tasks.size());
    const int workers = std::max(
        1, std::min<int>(args.jobs, static_cast<int>(tasks.size())));
    std::atomic<std::size_t> next{0};
    auto drain = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            outcomes[i] = run_verify_instance(tasks[i], r, idem, options,
                                              gamma_text, args.zeta, cache_ptr);
        }
    };
    if (workers == 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& t : pool) t.join();
    }

    int exit_code = 0;
    std::vector<std::string> csv;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const InstanceTask& task = tasks[i];
        const Outcome& out = outcomes[i];
        print_warnings(out.warnings);
        exit_code = std::max(exit_code,
                             exit_code_for(out.status, args.skip_infeasible));
        std::cout << "instance n=" << task.n << " r=" << r
                  << " field=" << task.field.canonical
                  << " idempotent=" << to_string(idem) << ": ";
        if (out.status == Status::infeasible) {
            std::cout << "infeasible (" << out.message << ")"
                      << (args.skip_infeasible ? ", skipped" : "") << "\n";
            continue;
        }
        if (out.status == Status::internal) {
            std::cout << "internal error (" << out.message << ")\n";
            continue;
        }
        const bool guaranteed =
            out.report.at("instance").at("guaranteed_regime").get<bool>();
        std::cout << (out.status == Status::ok ? "pass"
                                               : "ASSERTED CHECK FAILED");
        if (!guaranteed) std::cout << " [experimental regime]";
        if (selection.set.theta) {
            i64 surjective = 0;
            const auto& theta = out.report.at("theta");
            for (const auto& row : theta)
                if (row.at("surjective").get<bool>()) ++surjective;
            std::cout << " (theta " << surjective << "/" << theta.size()
                      << " surjective)";
        }
        if (out.from_cache) std::cout << " (cached)";
        std::cout << "\n";

        const fs::path json_path =
            fs::path(args.out_dir) /
            ("verify_r" + std::to_string(r) + "_n" + std::to_string(task.n) +
             "_" + field_slug(task.field.canonical) + "_" + to_string(idem) +
             ".json");
        write_file(json_path, json_text(out.report));
        std::cout << "wrote " << json_path.string() << "\n";
        if (selection.set.theta)
            for (auto& row : csv_rows_from_report(out.report))
                csv.push_back(std::move(row));
    }

    if (selection.set.theta && !csv.empty()) {
        const fs::path csv_path =
            fs::path(args.out_dir) / ("verify_r" + std::to_string(r) + "_" +
                                      to_string(idem) + "_theta.csv");
        write_file(csv_path, csv_document(csv));
        std::cout << "wrote " << csv_path.string() << "\n";
    }

    if (selection.fieldindep) {
        std::vector<FieldChoice> feasible;
        for (const auto& field : fields) {
            bool bad = false;
            for (std::size_t i = 0; i < tasks.size(); ++i)
                if (tasks[i].field.canonical == field.canonical &&
                    outcomes[i].status == Status::infeasible)
                    bad = true;
            if (bad)
                std::cerr << "note: excluding infeasible field "
                          << field.canonical << " from the independence table\n";
            else
                feasible.push_back(field);
        }
        if (feasible.empty()) {
            std::cerr << "note: no feasible fields; skipping the independence "
                         "table\n";
        } else {
            for (int n : ns) {
                std::vector<std::string> warnings;
                const FieldIndependence table =
                    independence_table(r, n, feasible, cache_ptr, &warnings);
                print_warnings(warnings);
                print_independence(table);
                const OrderedJson doc = to_json(table);
                const fs::path json_path =
                    fs::path(args.out_dir) /
                    ("independence_r" + std::to_string(r) + "_n" +
                     std::to_string(n) + ".json");
                write_file(json_path, json_text(doc));
                std::cout << "wrote " << json_path.string() << "\n";
                const fs::path csv_path =
                    fs::path(args.out_dir) /
                    ("independence_r" + std::to_string(r) + "_n" +
                     std::to_string(n) + ".csv");
                write_file(csv_path, csv_document(csv_rows(table)));
                std::cout << "wrote " << csv_path.string() << "\n";
            }
        }
    }

    return exit_code;
}

// ---------------------------------------------------------------------------
// homdims subcommand

int run_homdims(const HomdimsArgs& args) {
    check_degree(args.r, args.allow_large_r);
    const int r = args.r;
    if (args.n < 2)
        throw UsageError{"--n must be at least 2 (got " +
                         std::to_string(args.n) + ")"};
    if (exceeds(args.n, r, kDefaultGridCap))
        std::cerr << "warning: n^r = " << args.n << "^" << r << " exceeds "
                  << kDefaultGridCap << "; expect long runtimes\n";

    const std::vector<FieldChoice> requested =
        resolve_fields(merged_fields(args.field_flags, args.fields_csv), r);

    int exit_code = 0;
    std::vector<FieldChoice> feasible;
    for (const auto& field : requested) {
        try {
            field_for_run(field.spec, r, ZetaChoice::canonical);
            feasible.push_back(field);
        } catch (const InfeasibleField& ex) {
            if (args.skip_infeasible) {
                std::cerr << "note: skipping infeasible field "
                          << field.canonical << " (" << ex.what() << ")\n";
            } else {
                std::cerr << "error: field " << field.canonical
                          << " is infeasible at r = " << r << ": " << ex.what()
                          << "\n";
                exit_code = 2;
            }
        }
    }
    if (exit_code != 0) return exit_code;
    if (feasible.empty()) {
        std::cerr << "error: no feasible fields remain\n";
        return 2;
    }

    fs::create_directories(args.out_dir);
    const std::optional<Cache> cache =
        open_cache(args.cache_dir, args.out_dir, args.no_cache);
    const Cache* cache_ptr = cache ? &*cache : nullptr;

    std::vector<std::string> warnings;
    const FieldIndependence table =
        independence_table(r, args.n, feasible, cache_ptr, &warnings);
    print_warnings(warnings);
    print_independence(table);

    const fs::path json_path =
        fs::path(args.out_dir) / ("independence_r" + std::to_string(r) + "_n" +
                                  std::to_string(args.n) + ".json");
    write_file(json_path, json_text(to_json(table)));
    std::cout << "wrote " << json_path.string() << "\n";
    const fs::path csv_path =
        fs::path(args.out_dir) / ("independence_r" + std::to_string(r) + "_n" +
                                  std::to_string(args.n) + ".csv");
    write_file(csv_path, csv_document(csv_rows(table)));
    std::cout << "wrote " << csv_path.string() << "\n";
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact verification of the commuting-actions picture on tensor "
        "space: idempotent identities, free-Lie spans, corner hom spaces "
        "and the restriction map, over finite fields and cyclotomic "
        "rationals"};
    app.require_subcommand(1);

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand(
        "verify",
        "run the check suite for each (n, field) instance at degree r");
    verify->add_option("--r", va.r, "degree r of the symmetric group (>= 2)")
        ->required();
    verify->add_option(
        "--n", va.ns,
        "tensor ranks n (repeatable); default grid {2, min(3,r), r} keeps "
        "n^r <= 4096");
    verify->add_option("--field", va.field_flags,
                       "field spec, " + std::string(kFieldGrammar) +
                           " (repeatable)");
    verify->add_option("--fields", va.fields_csv, "comma-joined field specs")
        ->delimiter(',');
    verify
        ->add_option("--idempotent", va.idempotent,
                     "projector onto the Lie component: dsw | klyachko")
        ->check(CLI::IsMember({"dsw", "klyachko"}));
    verify
        ->add_option("--gamma", va.gamma_images,
                     "r-cycle as a comma-joined one-line permutation")
        ->delimiter(',');
    verify
        ->add_option("--zeta", va.zeta,
                     "which primitive r-th root of unity to use: canonical | "
                     "alternate")
        ->check(CLI::IsMember({"canonical", "alternate"}));
    verify
        ->add_option("--checks", va.checks,
                     "comma-joined subset of relations, lie, commutant, "
                     "theta, semisimple, fieldindep, all (default all)")
        ->delimiter(',');
    verify->add_option("--out", va.out_dir, "output directory (default .)");
    verify->add_option("--cache-dir", va.cache_dir,
                       "cache directory (default $SWD_CACHE_DIR, else "
                       "<out>/.swd-cache)");
    verify->add_flag("--no-cache", va.no_cache, "bypass the result cache");
    verify->add_option("--jobs", va.jobs, "worker threads over instances")
        ->check(CLI::Range(1, 64));
    verify->add_flag("--skip-infeasible", va.skip_infeasible,
                     "note infeasible instances instead of failing");
    verify->add_flag("--allow-large-r", va.allow_large_r,
                     "permit r beyond the default cap of 7");

    HomdimsArgs ha;
    CLI::App* homdims = app.add_subcommand(
        "homdims",
        "tabulate equivariant and corner hom dimensions across fields");
    homdims->add_option("--r", ha.r, "degree r of the symmetric group (>= 2)")
        ->required();
    homdims->add_option("--n", ha.n, "tensor rank n (default 2)");
    homdims->add_option("--field", ha.field_flags,
                        "field spec, " + std::string(kFieldGrammar) +
                            " (repeatable)");
    homdims->add_option("--fields", ha.fields_csv, "comma-joined field specs")
        ->delimiter(',');
    homdims->add_option("--out", ha.out_dir, "output directory (default .)");
    homdims->add_option("--cache-dir", ha.cache_dir,
                        "cache directory (default $SWD_CACHE_DIR, else "
                        "<out>/.swd-cache)");
    homdims->add_flag("--no-cache", ha.no_cache, "bypass the result cache");
    homdims->add_flag("--skip-infeasible", ha.skip_infeasible,
                      "drop infeasible fields instead of failing");
    homdims->add_flag("--allow-large-r", ha.allow_large_r,
                      "permit r beyond the default cap of 7");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(va);
        return run_homdims(ha);
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.message << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 3;
    }
}
