#include "swd/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace swd {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw Error("partition parts must be positive");
        if (i && parts[i] > parts[i - 1])
            throw Error("partition parts must be weakly decreasing");
    }
}

int Partition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
        if (v < 0) throw NotAComposition("composition parts must be >= 0");
}

int Composition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Composition::sorted() const {
    std::vector<int> p;
    for (int v : parts)
        if (v > 0) p.push_back(v);
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

std::string Composition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

void weights_rec(int slots_left, int remaining, std::vector<int>& cur,
                 std::vector<Composition>& out) {
    if (slots_left == 1) {
        cur.push_back(remaining);
        out.push_back(Composition(cur));
        cur.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur.push_back(v);
        weights_rec(slots_left - 1, remaining - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int r) {
    if (r < 0) throw Error("partitions_of: r must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(r, r, cur, out);
    if (r == 0) out.push_back(Partition());
    return out;
}

std::vector<Composition> weights(int n, int r) {
    if (n < 1 || r < 0) throw Error("weights: need n >= 1, r >= 0");
    std::vector<Composition> out;
    std::vector<int> cur;
    weights_rec(n, r, cur, out);
    return out;
}

std::int64_t centralizer_order(const Partition& mu) {
    std::map<int, int> mult;
    for (int p : mu.parts) ++mult[p];
    std::int64_t z = 1;
    for (auto [i, k] : mult) {
        for (int t = 0; t < k; ++t) z *= i;
        z *= factorial(k);
    }
    return z;
}

std::vector<ClassData> enumerate_classes(int r) {
    std::vector<ClassData> out;
    const std::int64_t rfact = factorial(r);
    for (const Partition& mu : partitions_of(r)) {
        std::int64_t z = centralizer_order(mu);
        out.push_back({mu, rfact / z, z});
    }
    return out;
}

int block_of(const Composition& alpha, int v) {
    int acc = 0;
    for (int k = 0; k < alpha.length(); ++k) {
        acc += alpha.parts[k];
        if (v <= acc) return k + 1;
    }
    throw Error("value outside the blocks of the composition");
}

YoungData young_data(const Composition& alpha) {
    const int r = alpha.sum();
    if (r < 1) throw NotAComposition("young_data needs a composition of r >= 1");
    auto table = PermTable::get(r);

    auto inversions = [](const Permutation& s) {
        int inv = 0;
        for (int i = 1; i <= s.size(); ++i)
            for (int j = i + 1; j <= s.size(); ++j)
                if (s.apply(i) > s.apply(j)) ++inv;
        return inv;
    };

    YoungData out;
    // Right cosets Sigma_alpha sigma are the fibers of the block-valued word
    // i -> block(sigma(i)); within each fiber the minimal-length element is
    // the unique inversion minimizer.
    struct Best {
        int inv;
        Permutation rep;
        int ties;
    };
    std::map<std::vector<int>, Best> best;
    for (std::int64_t t = 0; t < table->size(); ++t) {
        const Permutation& s = table->at(t);
        std::vector<int> key(r);
        bool in_subgroup = true;
        for (int i = 1; i <= r; ++i) {
            key[i - 1] = block_of(alpha, s.apply(i));
            if (block_of(alpha, i) != key[i - 1]) in_subgroup = false;
        }
        if (in_subgroup) out.subgroup.push_back(s);
        int inv = inversions(s);
        auto it = best.find(key);
        if (it == best.end()) {
            best.emplace(key, Best{inv, s, 1});
        } else if (inv < it->second.inv) {
            it->second = Best{inv, s, 1};
        } else if (inv == it->second.inv) {
            ++it->second.ties;
        }
    }
    for (auto& [key, val] : best) {
        if (val.ties != 1)
            throw Error("minimal coset representative is not unique");
        out.coset_reps.push_back(val.rep);
    }
    std::sort(out.coset_reps.begin(), out.coset_reps.end(),
              [](const Permutation& a, const Permutation& b) {
                  return a.one_line() < b.one_line();
              });
    return out;
}

}  // namespace swd
