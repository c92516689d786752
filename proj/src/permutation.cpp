#include "swd/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace swd {

std::int64_t factorial(int r) {
    if (r < 0 || r > 20) throw Error("factorial argument out of range");
    std::int64_t f = 1;
    for (int i = 2; i <= r; ++i) f *= i;
    return f;
}

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    const int r = size();
    std::vector<bool> seen(r, false);
    for (int v : img_) {
        if (v < 1 || v > r || seen[v - 1])
            throw Error("not a permutation in one-line notation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int r) {
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& tau) const {
    if (size() != tau.size())
        throw SizeMismatch("composing permutations of different degrees");
    std::vector<int> v(size());
    for (int i = 1; i <= size(); ++i) v[i - 1] = apply(tau.apply(i));
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(size());
    for (int i = 1; i <= size(); ++i) v[img_[i - 1] - 1] = i;
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (apply(i) != i) return false;
    return true;
}

std::vector<int> Permutation::descent_set() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
        if (apply(i) > apply(i + 1)) d.push_back(i);
    return d;
}

int Permutation::major_index() const {
    int m = 0;
    for (int i : descent_set()) m += i;
    return m;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<bool> seen(size(), false);
    std::vector<int> lens;
    for (int i = 1; i <= size(); ++i) {
        if (seen[i - 1]) continue;
        int len = 0, j = i;
        do {
            seen[j - 1] = true;
            j = apply(j);
            ++len;
        } while (j != i);
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return lens;
}

std::int64_t Permutation::lex_rank() const {
    const int r = size();
    std::int64_t rank = 0;
    for (int i = 0; i < r; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < r; ++j)
            if (img_[j] < img_[i]) ++smaller;
        rank += smaller * factorial(r - 1 - i);
    }
    return rank;
}

Permutation Permutation::from_lex_rank(int r, std::int64_t rank) {
    if (rank < 0 || rank >= factorial(r))
        throw Error("permutation rank out of range");
    std::vector<int> pool(r);
    for (int i = 0; i < r; ++i) pool[i] = i + 1;
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) {
        std::int64_t f = factorial(r - 1 - i);
        int k = static_cast<int>(rank / f);
        rank %= f;
        v[i] = pool[k];
        pool.erase(pool.begin() + k);
    }
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    std::string s = "(";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += std::to_string(img_[i]);
    }
    return s + ")";
}

PermTable::PermTable(int r) : r_(r) {
    const std::int64_t n = factorial(r);
    perms_.reserve(n);
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) v[i] = i + 1;
    do {
        perms_.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    inv_.resize(n);
    for (std::int64_t i = 0; i < n; ++i) inv_[i] = perms_[i].inverse().lex_rank();
    if (r <= 6) {
        multab_.resize(n * n);
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b)
                multab_[a * n + b] = perms_[a].compose(perms_[b]).lex_rank();
    }
}

std::int64_t PermTable::mul(std::int64_t a, std::int64_t b) const {
    if (!multab_.empty()) return multab_[a * size() + b];
    return perms_[a].compose(perms_[b]).lex_rank();
}

std::shared_ptr<const PermTable> PermTable::get(int r) {
    if (r < 1 || r > 10) throw Error("permutation table degree out of range");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const PermTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[r];
    if (!slot) slot = std::shared_ptr<const PermTable>(new PermTable(r));
    return slot;
}

}  // namespace swd
