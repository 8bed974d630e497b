#pragma once

#include <compare>
#include <string>

#include "socle/partition.hpp"

namespace socle {

// Value in N with an adjoined infinity; a commutative semiring with inf * 0 = 0.
class ExtendedNat {
public:
    ExtendedNat() = default;
    ExtendedNat(BigInt v);
    ExtendedNat(long long v) : ExtendedNat(BigInt(v)) {}
    ExtendedNat(int v) : ExtendedNat(BigInt(v)) {}

    static ExtendedNat infinity();
    static ExtendedNat parse(const std::string& text);

    bool isInfinite() const { return inf_; }
    bool isZero() const { return !inf_ && value_ == 0; }
    const BigInt& value() const;
    std::string str() const;

    ExtendedNat& operator+=(const ExtendedNat& o);
    ExtendedNat& operator*=(const ExtendedNat& o);
    friend ExtendedNat operator+(ExtendedNat a, const ExtendedNat& b) { return a += b; }
    friend ExtendedNat operator*(ExtendedNat a, const ExtendedNat& b) { return a *= b; }

    friend bool operator==(const ExtendedNat& a, const ExtendedNat& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b);

private:
    bool inf_ = false;
    BigInt value_ = 0;
};

ExtendedNat min(const ExtendedNat& a, const ExtendedNat& b);

}  // namespace socle
