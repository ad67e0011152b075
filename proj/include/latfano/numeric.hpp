// Exact arithmetic kernel: overflow-checked integers and reduced rationals.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latfano {

struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("exact integer overflow") {}
};

/// 64-bit signed integer that refuses to wrap: every arithmetic operation
/// checks for overflow and throws OverflowError instead of producing a
/// wrong value.
class Int {
 public:
  constexpr Int() = default;
  constexpr Int(long long v) : v_(v) {}  // implicit on purpose

  constexpr long long value() const { return v_; }

  friend Int operator+(Int a, Int b) {
    long long r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError();
    return Int(r);
  }
  friend Int operator-(Int a, Int b) {
    long long r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError();
    return Int(r);
  }
  friend Int operator*(Int a, Int b) {
    long long r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError();
    return Int(r);
  }
  friend Int operator-(Int a) {
    long long r;
    if (__builtin_sub_overflow(0ll, a.v_, &r)) throw OverflowError();
    return Int(r);
  }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }

  friend constexpr bool operator==(Int, Int) = default;
  friend constexpr std::strong_ordering operator<=>(Int a, Int b) {
    return a.v_ <=> b.v_;
  }

 private:
  long long v_ = 0;
};

inline Int abs(Int a) { return a < Int(0) ? -a : a; }

inline int sgn(Int a) { return a < Int(0) ? -1 : (a == Int(0) ? 0 : 1); }

inline Int gcd(Int a, Int b) {
  // Euclid on magnitudes; unsigned absolute values avoid the LLONG_MIN trap.
  auto mag = [](long long v) {
    return v < 0 ? 0ull - static_cast<unsigned long long>(v)
                 : static_cast<unsigned long long>(v);
  };
  unsigned long long x = mag(a.value()), y = mag(b.value());
  while (y != 0) {
    unsigned long long t = x % y;
    x = y;
    y = t;
  }
  if (x > 0x7fffffffffffffffull) throw OverflowError();
  return Int(static_cast<long long>(x));
}

/// Floor division, exact for all signs; b must be nonzero.
inline Int floordiv(Int a, Int b) {
  if (b == Int(0)) throw std::invalid_argument("floordiv: zero divisor");
  if (b == Int(-1)) return -a;  // avoids LLONG_MIN / -1
  long long q = a.value() / b.value();
  long long r = a.value() % b.value();
  if (r != 0 && ((r < 0) != (b.value() < 0))) --q;
  return Int(q);
}

inline Int ceildiv(Int a, Int b) { return -floordiv(-a, b); }

/// Division that must be exact; throws std::logic_error on a remainder.
inline Int divexact(Int a, Int b) {
  if (b == Int(0)) throw std::invalid_argument("divexact: zero divisor");
  if (b == Int(-1)) return -a;
  if (a.value() % b.value() != 0) throw std::logic_error("divexact: remainder");
  return Int(a.value() / b.value());
}

inline std::string to_string(Int a) { return std::to_string(a.value()); }

/// Rational number stored reduced: den > 0 and gcd(|num|, den) = 1.
struct Rat {
  Int num{0};
  Int den{1};

  Rat() = default;
  Rat(Int n) : num(n), den(1) {}  // implicit: Int embeds in Rat
  Rat(Int n, Int d) {
    if (d == Int(0)) throw std::invalid_argument("Rat: zero denominator");
    if (d < Int(0)) {
      n = -n;
      d = -d;
    }
    Int g = gcd(n, d);
    if (g > Int(1)) {
      n = divexact(n, g);
      d = divexact(d, g);
    }
    num = n;
    den = d;
  }

  bool is_integer() const { return den == Int(1); }
  Int floor() const { return floordiv(num, den); }
  Int ceil() const { return ceildiv(num, den); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num * b.num, a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == Int(0)) throw std::invalid_argument("Rat: division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  friend Rat operator-(const Rat& a) {
    Rat r;
    r.num = -a.num;
    r.den = a.den;
    return r;
  }

  friend bool operator==(const Rat&, const Rat&) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return (a.num * b.den) <=> (b.num * a.den);
  }
};

inline std::string to_string(const Rat& r) {
  if (r.is_integer()) return to_string(r.num);
  return to_string(r.num) + "/" + to_string(r.den);
}

}  // namespace latfano
