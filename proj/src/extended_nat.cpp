#include "socle/extended_nat.hpp"

#include <stdexcept>

namespace socle {

ExtendedNat::ExtendedNat(BigInt v) : value_(std::move(v)) {
    if (value_ < 0) throw std::invalid_argument("ExtendedNat must be nonnegative");
}

ExtendedNat ExtendedNat::infinity() {
    ExtendedNat x;
    x.inf_ = true;
    return x;
}

ExtendedNat ExtendedNat::parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "∞") return infinity();
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not an extended natural: " + text);
    return ExtendedNat(BigInt(text));
}

const BigInt& ExtendedNat::value() const {
    if (inf_) throw std::logic_error("value() of infinity");
    return value_;
}

std::string ExtendedNat::str() const { return inf_ ? "inf" : value_.str(); }

ExtendedNat& ExtendedNat::operator+=(const ExtendedNat& o) {
    if (inf_ || o.inf_) {
        inf_ = true;
        value_ = 0;
    } else {
        value_ += o.value_;
    }
    return *this;
}

ExtendedNat& ExtendedNat::operator*=(const ExtendedNat& o) {
    if (isZero() || o.isZero()) {
        inf_ = false;
        value_ = 0;
    } else if (inf_ || o.inf_) {
        inf_ = true;
        value_ = 0;
    } else {
        value_ *= o.value_;
    }
    return *this;
}

std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ExtendedNat min(const ExtendedNat& a, const ExtendedNat& b) { return b < a ? b : a; }

}  // namespace socle
