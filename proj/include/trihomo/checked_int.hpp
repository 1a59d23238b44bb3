#pragma once

// Exact signed integer arithmetic on a 128-bit word. Every operation is
// overflow-checked and throws OverflowError instead of wrapping; entries in
// this problem domain stay tiny, so the wide word is headroom, not a limit.

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

#include "trihomo/errors.hpp"

namespace trihomo {

class Int128 {
  public:
    constexpr Int128() : v_(0) {}
    constexpr Int128(int v) : v_(v) {}
    constexpr Int128(long v) : v_(v) {}
    constexpr Int128(long long v) : v_(v) {}
    constexpr Int128(unsigned v) : v_(v) {}
    constexpr Int128(unsigned long long v) : v_(v) {}

    static constexpr Int128 raw(__int128 v) {
        Int128 r;
        r.v_ = v;
        return r;
    }

    constexpr bool is_zero() const { return v_ == 0; }
    constexpr int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    friend Int128 operator+(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("integer addition overflow");
        return raw(r);
    }
    friend Int128 operator-(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("integer subtraction overflow");
        return raw(r);
    }
    friend Int128 operator*(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("integer multiplication overflow");
        return raw(r);
    }
    friend Int128 operator-(Int128 a) { return Int128(0) - a; }

    Int128& operator+=(Int128 b) { return *this = *this + b; }
    Int128& operator-=(Int128 b) { return *this = *this - b; }
    Int128& operator*=(Int128 b) { return *this = *this * b; }

    // Truncated division; only the INT128_MIN / -1 corner can overflow.
    friend Int128 operator/(Int128 a, Int128 b) {
        if (b.v_ == 0) throw std::domain_error("division by zero");
        if (b.v_ == -1) return -a;
        return raw(a.v_ / b.v_);
    }
    friend Int128 operator%(Int128 a, Int128 b) {
        if (b.v_ == 0) throw std::domain_error("division by zero");
        if (b.v_ == -1) return Int128(0);
        return raw(a.v_ % b.v_);
    }

    friend constexpr bool operator==(Int128 a, Int128 b) { return a.v_ == b.v_; }
    friend constexpr std::strong_ordering operator<=>(Int128 a, Int128 b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Narrowing accessor for I/O; throws when the value does not fit.
    long long to_int64() const {
        if (v_ > INT64_MAX || v_ < INT64_MIN) throw OverflowError("value does not fit in 64 bits");
        return static_cast<long long>(v_);
    }
    bool fits_int64() const { return v_ <= INT64_MAX && v_ >= INT64_MIN; }

    friend Int128 abs(Int128 a) { return a.v_ < 0 ? -a : a; }

    friend Int128 gcd(Int128 a, Int128 b) {
        a = abs(a);
        b = abs(b);
        while (!b.is_zero()) {
            Int128 t = raw(a.v_ % b.v_);
            a = b;
            b = t;
        }
        return a;
    }

    friend std::string to_string(Int128 a) {
        if (a.v_ == 0) return "0";
        bool neg = a.v_ < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(a.v_) : static_cast<unsigned __int128>(a.v_);
        std::string s;
        while (u != 0) {
            s += static_cast<char>('0' + static_cast<int>(u % 10));
            u /= 10;
        }
        if (neg) s += '-';
        return std::string(s.rbegin(), s.rend());
    }

    // Decimal string with optional sign. Throws ParseError on junk.
    static Int128 parse(std::string_view text) {
        size_t i = 0;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
        if (i == text.size()) throw ParseError("expected integer, got '" + std::string(text) + "'");
        Int128 r(0);
        for (; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw ParseError("bad digit in integer '" + std::string(text) + "'");
            r = r * Int128(10) + Int128(text[i] - '0');
        }
        return neg ? -r : r;
    }

  private:
    __int128 v_;
};

}  // namespace trihomo
