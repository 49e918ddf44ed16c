#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Eigen needs to know how to cost and classify GMP integers before any
// Matrix<mpz_class> is instantiated.
namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace extiso {

using Int = mpz_class;

// gmpxx ships operators for long but not long long; LP64 makes the bridge
// lossless. Assignments into Int still need an explicit to_int.
static_assert(sizeof(long) == sizeof(long long));
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Int operator+(const Int& a, long long b) { return a + static_cast<long>(b); }
inline Int operator+(long long a, const Int& b) { return static_cast<long>(a) + b; }
inline Int operator-(const Int& a, long long b) { return a - static_cast<long>(b); }
inline Int operator-(long long a, const Int& b) { return static_cast<long>(a) - b; }
inline Int operator*(const Int& a, long long b) { return a * static_cast<long>(b); }
inline Int operator*(long long a, const Int& b) { return static_cast<long>(a) * b; }
inline Int operator/(const Int& a, long long b) { return a / static_cast<long>(b); }
inline Int operator%(const Int& a, long long b) { return a % static_cast<long>(b); }
inline Int& operator+=(Int& a, long long b) { a += static_cast<long>(b); return a; }
inline Int& operator-=(Int& a, long long b) { a -= static_cast<long>(b); return a; }
inline Int& operator*=(Int& a, long long b) { a *= static_cast<long>(b); return a; }
inline Int& operator/=(Int& a, long long b) { a /= static_cast<long>(b); return a; }
inline Int& operator%=(Int& a, long long b) { a %= static_cast<long>(b); return a; }
inline bool operator==(const Int& a, long long b) { return a == static_cast<long>(b); }
inline bool operator==(long long a, const Int& b) { return static_cast<long>(a) == b; }
inline bool operator!=(const Int& a, long long b) { return a != static_cast<long>(b); }
inline bool operator!=(long long a, const Int& b) { return static_cast<long>(a) != b; }
inline bool operator<(const Int& a, long long b) { return a < static_cast<long>(b); }
inline bool operator<(long long a, const Int& b) { return static_cast<long>(a) < b; }
inline bool operator>(const Int& a, long long b) { return a > static_cast<long>(b); }
inline bool operator>(long long a, const Int& b) { return static_cast<long>(a) > b; }
inline bool operator<=(const Int& a, long long b) { return a <= static_cast<long>(b); }
inline bool operator>=(const Int& a, long long b) { return a >= static_cast<long>(b); }

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
// Small coefficient matrices (group actions, F_p work); entries stay far from
// overflow at the sizes this library accepts.
using MatI64 = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using VecI64 = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPrimePowerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNilpotentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSemisimpleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotGeneratingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RelatorOutsideKernelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline long long to_ll(const Int& a) {
  if (!a.fits_slong_p()) throw ResourceLimitError("integer exceeds 64-bit range: " + a.get_str());
  return a.get_si();
}

// Nearest-integer division, |a - q*b| <= |b|/2.
inline Int round_div(const Int& a, const Int& b) {
  Int babs = abs(b);
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), babs.get_mpz_t());
  if (2 * r > babs) q += 1;
  if (b < 0) q = -q;
  return q;
}

inline long long mod_ll(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

inline long long pow_mod(long long base, long long exp, long long m) {
  long long r = 1 % m;
  base = mod_ll(base, m);
  while (exp > 0) {
    if (exp & 1) r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

inline std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      out.push_back({p, e});
    }
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline bool is_prime_ll(long long n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

}  // namespace extiso
