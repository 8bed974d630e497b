#include "socle/lr.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "memo.hpp"

namespace socle {

namespace {

struct LrSearch {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<int>> grid;
    std::vector<int> count;
    std::uint64_t found = 0;

    LrSearch(const Partition& l, const Partition& m, const Partition& n)
        : lambda(l), mu(m), nu(n), grid(l.rows()), count(n.rows() + 1, 0) {
        for (int i = 0; i < l.rows(); ++i) grid[i].assign(l[i], 0);
    }

    // Cells are visited in reading order: rows top to bottom, each row right to left.
    void fill(int row, int col) {
        if (row == lambda.rows()) {
            ++found;
            return;
        }
        if (col < mu[row]) {
            fill(row + 1, row + 1 < lambda.rows() ? lambda[row + 1] - 1 : 0);
            return;
        }
        int hi = nu.rows();
        if (col + 1 < lambda[row]) hi = std::min(hi, grid[row][col + 1]);
        int lo = 1;
        if (row > 0 && col >= mu[row - 1]) lo = grid[row - 1][col] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (count[v] >= nu[v - 1]) continue;
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;
            ++count[v];
            grid[row][col] = v;
            fill(row, col - 1);
            --count[v];
        }
        grid[row][col] = 0;
    }
};

std::string key3(const Partition& a, const Partition& b, const Partition& c) {
    std::string k;
    for (const Partition* p : {&a, &b, &c}) {
        for (int x : p->parts()) {
            k += std::to_string(x);
            k += ',';
        }
        k += '|';
    }
    return k;
}

std::string key2(const Partition& a, const Partition& b) { return key3(a, b, Partition{}); }

Memo<std::string, std::uint64_t>& lrMemo() {
    static Memo<std::string, std::uint64_t> m;
    return m;
}
Memo<std::string, LrMap>& productMemo() {
    static Memo<std::string, LrMap> m;
    return m;
}
Memo<std::string, LrMap>& skewMemo() {
    static Memo<std::string, LrMap> m;
    return m;
}

void candidates(const Partition& mu, int row, int remaining, int cap, int maxRows, int width,
                std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        std::vector<int> full = cur;
        for (int i = row; i < mu.rows(); ++i) full.push_back(mu[i]);
        out.emplace_back(full);
        return;
    }
    if (row >= maxRows) return;
    int lo = mu[row];
    int hi = std::min(cap, mu[row] + width);
    hi = std::min(hi, mu[row] + remaining);
    for (int x = hi; x >= std::max(lo, 1); --x) {
        cur.push_back(x);
        candidates(mu, row + 1, remaining - (x - mu[row]), x, maxRows, width, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::uint64_t lrEnumerate(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu))
        return 0;
    if (nu.empty()) return 1;
    LrSearch s(lambda, mu, nu);
    int start = 0;
    s.fill(start, lambda[0] - 1);
    return s.found;
}

std::uint64_t lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu))
        return 0;
    if (mu.empty()) return lambda == nu ? 1 : 0;
    if (nu.empty()) return lambda == mu ? 1 : 0;
    // c^l_{m n} = c^l_{n m}; normalize so the cache sees one key.
    const Partition& a = mu < nu ? mu : nu;
    const Partition& b = mu < nu ? nu : mu;
    return lrMemo().getOrCompute(key3(lambda, a, b), [&] { return lrEnumerate(lambda, a, b); });
}

const LrMap& productExpand(const Partition& mu, const Partition& nu) {
    const Partition& a = mu < nu ? nu : mu;
    const Partition& b = mu < nu ? mu : nu;
    return productMemo().getOrCompute(key2(a, b), [&] {
        LrMap out;
        std::vector<Partition> cands;
        std::vector<int> cur;
        candidates(a, 0, b.size(), a.size() + b.size(), a.rows() + b.rows(), b[0], cur, cands);
        for (const auto& lam : cands) {
            auto c = lr(lam, a, b);
            if (c) out.emplace(lam, c);
        }
        return out;
    });
}

const LrMap& skewExpand(const Partition& lambda, const Partition& sigma) {
    return skewMemo().getOrCompute(key2(lambda, sigma), [&] {
        LrMap out;
        if (!lambda.contains(sigma)) return out;
        for (const auto& g : subPartitions(lambda, lambda.size() - sigma.size())) {
            auto c = lr(lambda, sigma, g);
            if (c) out.emplace(g, c);
        }
        return out;
    });
}

}  // namespace socle
