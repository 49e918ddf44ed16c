#pragma once

#include <vector>

#include "extiso/numeric.hpp"

namespace extiso {

// F_p[x] with coefficients in [0, p), ascending degree, no trailing zeros.
namespace poly {
using P = std::vector<long long>;

P trim(P a);
int deg(const P& a);  // deg(0) == -1
P add(const P& a, const P& b, long long p);
P sub(const P& a, const P& b, long long p);
P mul(const P& a, const P& b, long long p);
P scale(const P& a, long long c, long long p);
P monic(const P& a, long long p);
std::pair<P, P> divmod(const P& a, const P& b, long long p);
P gcd(P a, P b, long long p);  // monic
P deriv(const P& a, long long p);
P pow_mod(P base, long long e, const P& mod, long long p);
long long eval(const P& a, long long x, long long p);

// Full factorization into monic irreducibles with multiplicities,
// deterministic (Berlekamp subalgebra splitting, trying c in F_p order).
std::vector<std::pair<P, int>> factor(const P& f, long long p);
bool is_irreducible(const P& f, long long p);
}  // namespace poly

struct FiniteFieldDesc {
  long long p = 2;
  int f = 1;
  poly::P min_poly;  // monic irreducible of degree f
  long long q() const;
};

// F_q arithmetic on coefficient vectors of length f.
struct Fq {
  FiniteFieldDesc d;
  using El = std::vector<long long>;

  El zero() const { return El(d.f, 0); }
  El one() const;
  El from_int(long long c) const;
  bool is_zero(const El& a) const;
  El add(const El& a, const El& b) const;
  El sub(const El& a, const El& b) const;
  El neg(const El& a) const;
  El mul(const El& a, const El& b) const;
  El inv(const El& a) const;
  El pow(El a, long long e) const;
  long long element_order(const El& a) const;
};

// least irreducible monic polynomial of degree f in odometer order
FiniteFieldDesc make_field(long long p, int f);

// first element of multiplicative order q-1 in odometer order
Fq::El field_unit_generator(const FiniteFieldDesc& d);

using FqMat = std::vector<std::vector<Fq::El>>;

FqMat fq_identity(int n, const Fq& k);
FqMat fq_mat_mul(const FqMat& a, const FqMat& b, const Fq& k);

// Transvections over an F_p-basis plus one primitive diagonal generator.
std::vector<FqMat> gl_generators(int n, const FiniteFieldDesc& d);

}  // namespace extiso
