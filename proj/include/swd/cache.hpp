// Content-addressed store for exact computation results.
//
// A blob's filename is the 64-bit FNV-1a hash of its key, and the blob
// echoes the key so that hash collisions and renamed files are detected on
// load.  Writes go through a temporary file plus rename, so a reader never
// sees a partial blob and concurrent writers of the same (deterministic)
// value are harmless.  The caller owns semantic validation of loaded
// values: a blob is untrusted input and every basis read back from one must
// be re-checked against its defining constraints before use.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "swd/field.hpp"
#include "swd/linalg.hpp"

namespace swd {

class Cache {
  public:
    // Creates the directory (and parents) if missing.
    explicit Cache(std::string dir);

    const std::string& dir() const { return dir_; }

    // The stored value, or nullopt if the blob is absent, unreadable,
    // malformed, or was stored under a different key.
    std::optional<nlohmann::ordered_json> load(const std::string& key) const;

    void store(const std::string& key,
               const nlohmann::ordered_json& value) const;

    static std::uint64_t fnv1a64(std::string_view text);
    static std::string blob_name(const std::string& key);

  private:
    std::string dir_;
};

// Basis rows with scalars in the field's string form; the companion reader
// re-inserts the rows and accepts them only if they already form the
// canonical reduced basis of their own span.
nlohmann::ordered_json subspace_to_json(const FieldPtr& F, const Subspace& U);
std::optional<Subspace> subspace_from_json(const FieldPtr& F,
                                           std::int64_t ambient,
                                           const nlohmann::ordered_json& j);

}  // namespace swd
