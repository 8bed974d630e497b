#include "socle/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace socle {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition is not weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

bool Partition::contains(const Partition& other) const {
    if (other.rows() > rows()) return false;
    for (int i = 0; i < other.rows(); ++i)
        if (other.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
    out << ']';
    return out.str();
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
}

Partition parsePartition(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument("partition entries must be integers");
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out(lambda.empty() ? 0 : lambda[0], 0);
    for (int row : lambda.parts())
        for (int j = 0; j < row; ++j) ++out[j];
    return Partition(std::move(out));
}

bool interlaces(const Partition& sigma, const Partition& lambda) {
    int n = std::max(sigma.rows(), lambda.rows());
    for (int i = 0; i < n; ++i) {
        if (sigma[i] > lambda[i]) return false;
        if (sigma[i] < lambda[i + 1]) return false;
    }
    return true;
}

Partition doubled(const Partition& delta) {
    std::vector<int> out = delta.parts();
    for (int& x : out) x *= 2;
    return Partition(std::move(out));
}

Partition doubledConjugate(const Partition& delta) { return conjugate(doubled(delta)); }

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt symDim(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    BigInt hooks = 1;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j) + (conj[j] - i) - 1;
    return factorial(lambda.size()) / hooks;
}

BigInt ssytCount(const Partition& lambda, int k) {
    if (k < 0) throw std::invalid_argument("ssytCount needs k >= 0");
    if (lambda.rows() > k) return 0;
    Partition conj = conjugate(lambda);
    BigInt num = 1, den = 1;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            num *= k + j - i;
            den *= (lambda[i] - j) + (conj[j] - i) - 1;
        }
    return num / den;
}

namespace {

void enumerateRec(int remaining, int maxPart, int partsLeft, std::vector<int>& cur,
                  std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (partsLeft == 0) return;
    for (int x = std::min(remaining, maxPart); x >= 1; --x) {
        cur.push_back(x);
        enumerateRec(remaining - x, x, partsLeft - 1, cur, out);
        cur.pop_back();
    }
}

void subRec(const Partition& lambda, int row, int remaining, int cap, std::vector<int>& cur,
            std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (row >= lambda.rows()) return;
    int top = std::min({remaining, cap, lambda[row]});
    for (int x = top; x >= 1; --x) {
        cur.push_back(x);
        subRec(lambda, row + 1, remaining - x, x, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumeratePartitions(int n, int maxParts, int maxPart) {
    if (n < 0) throw std::invalid_argument("enumeratePartitions needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerateRec(n, maxPart < 0 ? n : maxPart, maxParts < 0 ? n : maxParts, cur, out);
    return out;
}

std::vector<Partition> subPartitions(const Partition& lambda, int n) {
    std::vector<Partition> out;
    if (n < 0 || n > lambda.size()) return out;
    std::vector<int> cur;
    subRec(lambda, 0, n, n, cur, out);
    return out;
}

}  // namespace socle
