#ifndef WHEELS_COUNT128_HPP
#define WHEELS_COUNT128_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "wheels/errors.hpp"

namespace wheels {

// Unsigned 128-bit counter with checked arithmetic. Overflow and inexact
// division throw; results never wrap silently.
class Count128 {
  public:
    constexpr Count128() = default;
    constexpr Count128(std::uint64_t v) : value_(v) {}  // NOLINT: counts from literals

    Count128 operator+(Count128 o) const {
        Count128 r;
        r.value_ = value_ + o.value_;
        if (r.value_ < value_) throw OverflowError("128-bit count overflow in addition");
        return r;
    }

    Count128 operator-(Count128 o) const {
        if (o.value_ > value_) throw OverflowError("128-bit count underflow in subtraction");
        Count128 r;
        r.value_ = value_ - o.value_;
        return r;
    }

    Count128 operator*(Count128 o) const {
        Count128 r;
        r.value_ = value_ * o.value_;
        if (value_ != 0 && r.value_ / value_ != o.value_)
            throw OverflowError("128-bit count overflow in multiplication");
        return r;
    }

    Count128& operator+=(Count128 o) { return *this = *this + o; }

    // Division that must leave no remainder.
    Count128 div_exact(Count128 d) const {
        if (d.value_ == 0) throw InvalidArgument("division by zero");
        if (value_ % d.value_ != 0) throw Error("inexact division in count arithmetic");
        Count128 r;
        r.value_ = value_ / d.value_;
        return r;
    }

    Count128 floor_div(Count128 d) const {
        if (d.value_ == 0) throw InvalidArgument("division by zero");
        Count128 r;
        r.value_ = value_ / d.value_;
        return r;
    }

    bool operator==(const Count128& o) const { return value_ == o.value_; }
    std::strong_ordering operator<=>(const Count128& o) const {
        if (value_ < o.value_) return std::strong_ordering::less;
        if (value_ > o.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::uint64_t to_u64() const {
        if (value_ >> 64) throw OverflowError("count does not fit in 64 bits");
        return static_cast<std::uint64_t>(value_);
    }

    std::string str() const;

  private:
    unsigned __int128 value_ = 0;
};

// base^exp with overflow checking.
Count128 checked_pow(Count128 base, std::uint64_t exp);

std::ostream& operator<<(std::ostream& os, const Count128& c);

}  // namespace wheels

#endif  // WHEELS_COUNT128_HPP
