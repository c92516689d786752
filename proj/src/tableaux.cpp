#include "swd/tableaux.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace swd {

Partition StandardTableau::shape() const {
    std::vector<int> p;
    for (const auto& row : rows) p.push_back(static_cast<int>(row.size()));
    return Partition(std::move(p));
}

int StandardTableau::size() const {
    int n = 0;
    for (const auto& row : rows) n += static_cast<int>(row.size());
    return n;
}

std::vector<int> StandardTableau::descent_set() const {
    const int r = size();
    std::vector<int> row_of(r + 1, 0);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int v : rows[i]) row_of[v] = static_cast<int>(i);
    std::vector<int> d;
    for (int i = 1; i < r; ++i)
        if (row_of[i + 1] > row_of[i]) d.push_back(i);
    return d;
}

int StandardTableau::major_index() const {
    int m = 0;
    for (int i : descent_set()) m += i;
    return m;
}

namespace {

void syt_rec(const std::vector<int>& shape, std::vector<int>& fill, int next,
             int r, std::vector<std::vector<int>>& rows,
             std::vector<StandardTableau>& out) {
    if (next > r) {
        out.push_back(StandardTableau{rows});
        return;
    }
    for (size_t i = 0; i < shape.size(); ++i) {
        // Placing next at the end of row i keeps rows left-justified and
        // increasing; the column condition is fill[i] < fill[i-1] pre-move.
        if (fill[i] >= shape[i]) continue;
        if (i > 0 && fill[i] >= fill[i - 1]) continue;
        rows[i].push_back(next);
        ++fill[i];
        syt_rec(shape, fill, next + 1, r, rows, out);
        --fill[i];
        rows[i].pop_back();
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& lambda) {
    const int r = lambda.sum();
    std::vector<int> fill(lambda.parts.size(), 0);
    std::vector<std::vector<int>> rows(lambda.parts.size());
    std::vector<StandardTableau> out;
    syt_rec(lambda.parts, fill, 1, r, rows, out);
    return out;
}

std::int64_t hook_length_count(const Partition& lambda) {
    const int r = lambda.sum();
    if (r == 0) return 1;
    const auto& p = lambda.parts;
    const int rows = lambda.length();
    std::vector<int> col_len(p[0], 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < p[i]; ++j) ++col_len[j];
    // r! / prod hooks, dividing as we go to stay in range.
    std::vector<std::int64_t> hooks;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < p[i]; ++j)
            hooks.push_back((p[i] - j - 1) + (col_len[j] - i - 1) + 1);
    std::int64_t count = 1;
    for (int v = 1; v <= r; ++v) {
        count *= v;
        for (auto& h : hooks)
            if (h != 1 && count % h == 0) {
                count /= h;
                h = 1;
            }
    }
    for (auto h : hooks)
        if (h != 1) throw Error("hook length formula did not divide exactly");
    return count;
}

StandardTableau schensted_P(const Permutation& sigma) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= sigma.size(); ++i) {
        int x = sigma.apply(i);
        for (size_t row = 0;; ++row) {
            if (row == rows.size()) {
                rows.push_back({x});
                break;
            }
            auto it = std::upper_bound(rows[row].begin(), rows[row].end(), x);
            if (it == rows[row].end()) {
                rows[row].push_back(x);
                break;
            }
            std::swap(*it, x);  // bump
        }
    }
    return StandardTableau{rows};
}

std::int64_t klyachko_count(const Partition& lambda, int r) {
    if (lambda.sum() != r) throw Error("klyachko_count: lambda must sum to r");
    std::int64_t c = 0;
    for (const auto& t : enumerate_syt(lambda))
        if (t.major_index() % r == 1 % r) ++c;
    return c;
}

namespace {

// Murnaghan-Nakayama on beta-sets: removing a border strip of length L from
// lambda is removing b from the beta-set and inserting b-L (when b-L >= 0 and
// not already present); the strip height is the number of beta values
// strictly between b-L and b.
std::int64_t mn_rec(std::vector<int> lambda, std::vector<int> mu,
                    std::map<std::pair<std::vector<int>, std::vector<int>>,
                             std::int64_t>& memo) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    if (lambda.empty()) return 0;
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int L = mu[0];
    std::vector<int> mu_rest(mu.begin() + 1, mu.end());
    const int ell = static_cast<int>(lambda.size());
    std::vector<int> beta(ell);
    for (int i = 0; i < ell; ++i) beta[i] = lambda[i] + (ell - 1 - i);
    // beta is strictly decreasing.
    std::int64_t total = 0;
    for (int i = 0; i < ell; ++i) {
        int b = beta[i], nb = b - L;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int height = 0;
        for (int j = 0; j < ell; ++j)
            if (beta[j] > nb && beta[j] < b) ++height;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nlambda;
        for (int j = 0; j < ell; ++j) {
            int part = nbeta[j] - (ell - 1 - j);
            if (part < 0) throw Error("beta-set arithmetic broke");
            if (part > 0) nlambda.push_back(part);
        }
        std::int64_t sign = (height % 2 == 0) ? 1 : -1;
        total += sign * mn_rec(std::move(nlambda), mu_rest, memo);
    }
    memo[key] = total;
    return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum())
        throw Error("mn_character: lambda and mu must partition the same r");
    static std::mutex mtx;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>
        memo;
    std::lock_guard<std::mutex> lock(mtx);
    return mn_rec(lambda.parts, mu.parts, memo);
}

namespace {

std::int64_t ssyt_rec(const std::vector<int>& shape,
                      std::vector<std::vector<int>>& rows, int row, int col,
                      int n) {
    if (row == static_cast<int>(shape.size())) return 1;
    if (col == shape[row]) return ssyt_rec(shape, rows, row + 1, 0, n);
    int lo = 1;
    if (col > 0) lo = std::max(lo, rows[row][col - 1]);            // weak rows
    if (row > 0 && col < shape[row - 1])
        lo = std::max(lo, rows[row - 1][col] + 1);                 // strict cols
    std::int64_t total = 0;
    for (int v = lo; v <= n; ++v) {
        rows[row][col] = v;
        total += ssyt_rec(shape, rows, row, col + 1, n);
    }
    return total;
}

}  // namespace

std::int64_t ssyt_count(const Partition& lambda, int n) {
    if (n < 1) throw Error("ssyt_count: n must be >= 1");
    if (lambda.length() > n) return 0;
    if (lambda.sum() == 0) return 1;
    std::vector<std::vector<int>> rows;
    for (int len : lambda.parts) rows.push_back(std::vector<int>(len, 0));
    return ssyt_rec(lambda.parts, rows, 0, 0, n);
}

}  // namespace swd
