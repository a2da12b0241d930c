#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "fcgp/errors.hpp"

namespace fcgp {

namespace detail {

inline unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long long narrow128(__int128 v, const char* what) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error(what);
  return static_cast<long long>(v);
}

}  // namespace detail

// Exact rational on 64-bit words, always reduced, denominator positive.
// Intermediates run through __int128; anything that will not reduce back
// into 64 bits throws std::overflow_error rather than wrapping.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) { *this = normalized(n, d); }

  static Rational normalized(__int128 n, __int128 d) {
    if (d == 0) throw input_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    unsigned __int128 a = n < 0 ? static_cast<unsigned __int128>(-n)
                                : static_cast<unsigned __int128>(n);
    unsigned __int128 g = detail::gcd128(a, static_cast<unsigned __int128>(d));
    if (g > 1) {
      n /= static_cast<__int128>(g);
      d /= static_cast<__int128>(g);
    }
    Rational r;
    r.num = detail::narrow128(n, "rational numerator overflow");
    r.den = detail::narrow128(d, "rational denominator overflow");
    return r;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return normalized(static_cast<__int128>(x.num) * y.den +
                          static_cast<__int128>(y.num) * x.den,
                      static_cast<__int128>(x.den) * y.den);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return normalized(static_cast<__int128>(x.num) * y.den -
                          static_cast<__int128>(y.num) * x.den,
                      static_cast<__int128>(x.den) * y.den);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return normalized(static_cast<__int128>(x.num) * y.num,
                      static_cast<__int128>(x.den) * y.den);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num == 0) throw input_error("rational division by zero");
    return normalized(static_cast<__int128>(x.num) * y.den,
                      static_cast<__int128>(x.den) * y.num);
  }
  Rational operator-() const {
    Rational r;
    r.num = detail::narrow128(-static_cast<__int128>(num), "rational negate overflow");
    r.den = den;
    return r;
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  // cross products fit in 128 bits, so comparisons never overflow
  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

  int sign() const { return num < 0 ? -1 : num > 0 ? 1 : 0; }
  bool is_integer() const { return den == 1; }

  // serialized form is always "p/q", q > 0, fully reduced
  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // accepts "p/q" or a bare integer "p"
  static Rational parse(std::string_view text) {
    auto fail = [&] { throw input_error("bad rational '" + std::string(text) + "'"); };
    auto read_int = [&](std::string_view part) -> long long {
      if (part.empty()) fail();
      std::size_t i = 0;
      bool neg = false;
      if (part[0] == '-' || part[0] == '+') {
        neg = part[0] == '-';
        i = 1;
        if (part.size() == 1) fail();
      }
      __int128 v = 0;
      for (; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') fail();
        v = v * 10 + (part[i] - '0');
        if (v > static_cast<__int128>(std::numeric_limits<long long>::max()) + 1)
          throw std::overflow_error("rational literal overflow");
      }
      if (neg) v = -v;
      return detail::narrow128(v, "rational literal overflow");
    };
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(read_int(text));
    long long n = read_int(text.substr(0, slash));
    long long d = read_int(text.substr(slash + 1));
    if (d == 0) fail();
    return Rational(n, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }
};

// smallest integer >= r
inline long long ceil_to_int(const Rational& r) {
  long long q = r.num / r.den;
  if (r.num % r.den != 0 && r.num > 0) ++q;
  return q;
}

// largest integer <= r
inline long long floor_to_int(const Rational& r) {
  long long q = r.num / r.den;
  if (r.num % r.den != 0 && r.num < 0) --q;
  return q;
}

}  // namespace fcgp
