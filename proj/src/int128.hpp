#pragma once

#include <string>

#include <gmpxx.h>

namespace sumcubes::detail {

using int128 = __int128;

inline mpz_class to_mpz(int128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class out(static_cast<unsigned long>(mag >> 64));
  out <<= 64;
  out += mpz_class(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFull));
  return neg ? mpz_class(-out) : out;
}

/// Caller guarantees |v| < 2^127.
inline int128 to_int128(const mpz_class& v) {
  mpz_class mag = abs(v);
  const mpz_class hi = mag >> 64;
  const mpz_class lo = mag - (hi << 64);
  unsigned __int128 u = static_cast<unsigned __int128>(mpz_get_ui(hi.get_mpz_t())) << 64;
  u |= mpz_get_ui(lo.get_mpz_t());
  const auto s = static_cast<int128>(u);
  return sgn(v) < 0 ? -s : s;
}

constexpr int mod9(int128 v) {
  const int r = static_cast<int>(v % 9);
  return r < 0 ? r + 9 : r;
}

constexpr int128 cube(std::int64_t v) {
  const int128 w = v;
  return w * w * w;
}

}  // namespace sumcubes::detail
