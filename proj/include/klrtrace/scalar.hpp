#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace klrtrace {

// Exact rational scalar. All arithmetic in the engine is over Q; there is
// no floating point anywhere.
using Scalar = mpq_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Scalar rat(long num, long den = 1) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
inline std::string rat_str(const Scalar& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Scalar parse_rat(const std::string& s) {
  Scalar q;
  if (q.set_str(s, 10) != 0) throw Error("bad rational: '" + s + "'");
  q.canonicalize();
  if (q.get_den() == 0) throw Error("zero denominator: '" + s + "'");
  return q;
}

inline Scalar factorial(int n) {
  Scalar f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Scalar binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Scalar b = 1;
  for (int j = 0; j < k; ++j) b = b * (n - j) / (j + 1);
  return b;
}

inline Scalar pow_scalar(const Scalar& base, int e) {
  if (e < 0) {
    if (base == 0) throw Error("inverse of zero");
    return 1 / pow_scalar(base, -e);
  }
  Scalar p = 1, b = base;
  while (e > 0) {
    if (e & 1) p *= b;
    b *= b;
    e >>= 1;
  }
  return p;
}

// FNV-1a, used for input checksums in cache headers. Stable across runs
// and platforms, unlike std::hash.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace klrtrace
