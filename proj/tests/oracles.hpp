#pragma once

// Brute-force reference implementations used only by the tests. None of them call
// into the library's combinatorics.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Shape = std::vector<int>;
using Monomial = std::vector<int>;
using Poly = std::map<Monomial, std::int64_t>;

inline Shape trimmed(Shape s) {
    while (!s.empty() && s.back() == 0) s.pop_back();
    return s;
}

inline int at(const Shape& s, std::size_t i) { return i < s.size() ? s[i] : 0; }

inline int boxes(const Shape& s) {
    int n = 0;
    for (int x : s) n += x;
    return n;
}

// Fills the skew shape outer/inner with entries in 1..k, rows weakly increasing,
// columns strictly increasing; calls visit with the content vector of each filling.
inline void skewTableaux(const Shape& outer, const Shape& inner, int k,
                         const std::function<void(const Monomial&)>& visit) {
    std::vector<std::vector<int>> t(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i) t[i].assign(outer[i], 0);
    Monomial content(k, 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t row, int col) {
        if (row == outer.size()) {
            visit(content);
            return;
        }
        if (col == outer[row]) {
            go(row + 1, row + 1 < outer.size() ? at(inner, row + 1) : 0);
            return;
        }
        int lo = 1;
        if (col > at(inner, row)) lo = t[row][col - 1];
        if (row > 0 && col >= at(inner, row - 1) && col < outer[row - 1]) lo = std::max(lo, t[row - 1][col] + 1);
        for (int v = lo; v <= k; ++v) {
            t[row][col] = v;
            ++content[v - 1];
            go(row, col + 1);
            --content[v - 1];
        }
    };
    if (outer.empty()) {
        visit(content);
        return;
    }
    go(0, at(inner, 0));
}

inline std::uint64_t skewSsytCount(const Shape& outer, const Shape& inner, int k) {
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > at(outer, i)) return 0;
    std::uint64_t n = 0;
    skewTableaux(outer, inner, k, [&](const Monomial&) { ++n; });
    return n;
}

// Schur polynomial in n variables as a monomial expansion.
inline Poly schur(const Shape& lambda, int n) {
    Poly p;
    if (static_cast<int>(trimmed(lambda).size()) > n) return p;
    skewTableaux(trimmed(lambda), {}, n, [&](const Monomial& m) { ++p[m]; });
    return p;
}

inline Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            Monomial z(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
            out[z] += cx * cy;
        }
    return out;
}

// Expands a symmetric polynomial in Schur polynomials by peeling the lex-largest monomial.
inline std::map<Shape, std::int64_t> schurExpand(Poly p, int n) {
    std::map<Shape, std::int64_t> out;
    while (true) {
        std::erase_if(p, [](const auto& e) { return e.second == 0; });
        if (p.empty()) break;
        auto top = std::prev(p.end());
        Shape lambda = trimmed(top->first);
        std::int64_t c = top->second;
        out[lambda] += c;
        for (const auto& [m, v] : schur(lambda, n)) p[m] -= c * v;
    }
    return out;
}

// Littlewood-Richardson coefficients of mu * nu via Schur polynomial multiplication.
inline std::map<Shape, std::int64_t> lrProduct(const Shape& mu, const Shape& nu) {
    int n = static_cast<int>(trimmed(mu).size() + trimmed(nu).size());
    if (n == 0) return {{{}, 1}};
    return schurExpand(multiply(schur(mu, n), schur(nu, n)), n);
}

// Number of standard Young tableaux, by removing corners.
inline std::uint64_t sytCount(const Shape& lambda) {
    static std::map<Shape, std::uint64_t> memo;
    Shape s = trimmed(lambda);
    if (boxes(s) <= 1) return 1;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (at(s, i) > at(s, i + 1)) {
            Shape t = s;
            --t[i];
            total += sytCount(t);
        }
    memo[s] = total;
    return total;
}

inline bool interlace(const Shape& sigma, const Shape& lambda) {
    std::size_t n = std::max(sigma.size(), lambda.size());
    for (std::size_t i = 0; i < n; ++i)
        if (at(sigma, i) > at(lambda, i) || at(sigma, i) < at(lambda, i + 1)) return false;
    return true;
}

// All shapes nu with lambda_{i+1} <= nu_i <= lambda_i.
inline std::vector<Shape> interlacingBelow(const Shape& lambda) {
    std::vector<Shape> out;
    Shape cur(lambda.size(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == lambda.size()) {
            out.push_back(trimmed(cur));
            return;
        }
        for (int v = at(lambda, i + 1); v <= lambda[i]; ++v) {
            cur[i] = v;
            go(i + 1);
        }
    };
    go(0);
    return out;
}

// Number of chains lambda = nu_0, nu_1, ..., nu_k = sigma with each step interlacing.
inline std::uint64_t gtChains(const Shape& lambda, const Shape& sigma, int k) {
    if (k == 0) return trimmed(lambda) == trimmed(sigma) ? 1 : 0;
    std::uint64_t total = 0;
    for (const auto& nu : interlacingBelow(trimmed(lambda))) total += gtChains(nu, sigma, k - 1);
    return total;
}

inline std::vector<Shape> partitions(int n, int maxPart = -1) {
    if (maxPart < 0) maxPart = n;
    if (n == 0) return {{}};
    std::vector<Shape> out;
    for (int first = std::min(n, maxPart); first >= 1; --first)
        for (auto rest : partitions(n - first, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

}  // namespace oracle
