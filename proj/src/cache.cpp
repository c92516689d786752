#include "swd/cache.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <utility>

#include "swd/errors.hpp"

namespace swd {

namespace fs = std::filesystem;

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec)
        throw Error("cannot create cache directory '" + dir_ +
                    "': " + ec.message());
}

std::uint64_t Cache::fnv1a64(std::string_view text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string Cache::blob_name(const std::string& key) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(key);
    std::string name(16, '0');
    for (int i = 15; i >= 0; --i) {
        name[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return name + ".json";
}

std::optional<nlohmann::ordered_json> Cache::load(
    const std::string& key) const {
    const fs::path path = fs::path(dir_) / blob_name(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::ordered_json blob =
        nlohmann::ordered_json::parse(in, nullptr, false);
    if (blob.is_discarded() || !blob.is_object()) return std::nullopt;
    auto it = blob.find("key");
    if (it == blob.end() || !it->is_string() ||
        it->get<std::string>() != key)
        return std::nullopt;
    auto value = blob.find("value");
    if (value == blob.end()) return std::nullopt;
    return std::move(*value);
}

void Cache::store(const std::string& key,
                  const nlohmann::ordered_json& value) const {
    static std::atomic<unsigned> seq{0};
    const fs::path path = fs::path(dir_) / blob_name(key);
    const fs::path tmp =
        fs::path(dir_) /
        (blob_name(key) + ".tmp" + std::to_string(seq.fetch_add(1)));
    nlohmann::ordered_json blob;
    blob["key"] = key;
    blob["value"] = value;
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cannot write cache blob " + tmp.string());
        out << blob.dump(2) << "\n";
        if (!out) throw Error("short write on cache blob " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot publish cache blob " + path.string() + ": " +
                    ec.message());
    }
}

nlohmann::ordered_json subspace_to_json(const FieldPtr& F, const Subspace& U) {
    nlohmann::ordered_json j;
    j["ambient"] = U.ambient();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : U.basis()) {
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const auto& [col, val] : row.entries)
            cells.push_back({col, F->to_string(val)});
        rows.push_back(std::move(cells));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::optional<Subspace> subspace_from_json(const FieldPtr& F,
                                           std::int64_t ambient,
                                           const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("rows"))
        return std::nullopt;
    if (!j["ambient"].is_number_integer() ||
        j["ambient"].get<std::int64_t>() != ambient)
        return std::nullopt;
    const auto& rows = j["rows"];
    if (!rows.is_array()) return std::nullopt;
    std::vector<SparseRow> parsed;
    parsed.reserve(rows.size());
    try {
        for (const auto& cells : rows) {
            if (!cells.is_array() || cells.empty()) return std::nullopt;
            SparseRow row;
            std::int64_t prev = -1;
            for (const auto& cell : cells) {
                if (!cell.is_array() || cell.size() != 2 ||
                    !cell[0].is_number_integer() || !cell[1].is_string())
                    return std::nullopt;
                const std::int64_t col = cell[0].get<std::int64_t>();
                if (col <= prev || col >= ambient) return std::nullopt;
                prev = col;
                Scalar v = F->parse_scalar(cell[1].get<std::string>());
                if (F->is_zero(v)) return std::nullopt;
                row.entries.emplace_back(col, std::move(v));
            }
            parsed.push_back(std::move(row));
        }
    } catch (const Error&) {
        return std::nullopt;
    }
    // Accept only a canonical reduced basis: re-inserting must reproduce the
    // rows verbatim.
    RowBasis rb(F, ambient);
    for (const auto& row : parsed)
        if (!rb.insert(row)) return std::nullopt;
    const auto& canon = rb.rows();
    if (canon.size() != parsed.size()) return std::nullopt;
    for (std::size_t i = 0; i < canon.size(); ++i) {
        if (canon[i].entries.size() != parsed[i].entries.size())
            return std::nullopt;
        for (std::size_t t = 0; t < canon[i].entries.size(); ++t) {
            if (canon[i].entries[t].first != parsed[i].entries[t].first)
                return std::nullopt;
            if (!F->eq(canon[i].entries[t].second,
                       parsed[i].entries[t].second))
                return std::nullopt;
        }
    }
    return Subspace::from_rowbasis(rb);
}

}  // namespace swd
