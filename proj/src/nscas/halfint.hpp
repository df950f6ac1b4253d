#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace nscas {

// Exact element of (1/2)Z, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() : doubled_(0) {}
    constexpr static HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
    constexpr static HalfInt halves(std::int64_t d) { return HalfInt(d); }

    constexpr std::int64_t doubled() const { return doubled_; }
    constexpr bool is_integer() const { return doubled_ % 2 == 0; }
    constexpr bool is_half_odd() const { return doubled_ % 2 != 0; }
    // Only valid when is_integer().
    constexpr std::int64_t as_integer() const { return doubled_ / 2; }

    constexpr HalfInt operator-() const { return HalfInt(-doubled_); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(doubled_ + o.doubled_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(doubled_ - o.doubled_); }
    constexpr HalfInt abs() const { return HalfInt(doubled_ < 0 ? -doubled_ : doubled_); }

    constexpr auto operator<=>(const HalfInt&) const = default;

    std::string str() const {
        if (is_integer()) return std::to_string(as_integer());
        return std::to_string(doubled_) + "/2";
    }

private:
    constexpr explicit HalfInt(std::int64_t d) : doubled_(d) {}
    std::int64_t doubled_;
};

}  // namespace nscas
