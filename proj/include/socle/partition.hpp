#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace socle {

using BigInt = boost::multiprecision::cpp_int;

// Weakly decreasing sequence of positive integers; trailing zeros are never stored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool contains(const Partition& other) const;
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

// Descending lexicographic order, the canonical output order.
struct DescendingLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

Partition parsePartition(const std::string& text);

Partition conjugate(const Partition& lambda);
// true iff lambda_1 >= sigma_1 >= lambda_2 >= sigma_2 >= ...
bool interlaces(const Partition& sigma, const Partition& lambda);
Partition doubled(const Partition& delta);
Partition doubledConjugate(const Partition& delta);

BigInt symDim(const Partition& lambda);
BigInt ssytCount(const Partition& lambda, int k);

// All partitions of n, descending lexicographic; maxParts < 0 and maxPart < 0 mean unbounded.
std::vector<Partition> enumeratePartitions(int n, int maxParts = -1, int maxPart = -1);
// Partitions nu with |nu| = n and nu contained in lambda.
std::vector<Partition> subPartitions(const Partition& lambda, int n);

BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace socle
