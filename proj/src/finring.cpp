#include "extiso/finring.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "extiso/zlinalg.hpp"
#include "fp_linalg.hpp"
#include "zutil.hpp"

namespace extiso {

namespace {

Coord unit_coord(int t, int c) {
  Coord e(t, 0);
  e[c] = 1;
  return e;
}

}  // namespace

using zutil::reduce_rows;

long long StructuredRing::size() const {
  Int n = 1;
  for (long long m : factors) n *= m;
  return to_ll(n);
}

Coord StructuredRing::reduce(Coord x) const {
  for (int k = 0; k < t(); ++k) x[k] = mod_ll(x[k], factors[k]);
  return x;
}

Coord StructuredRing::add(const Coord& x, const Coord& y) const {
  Coord z(t());
  for (int k = 0; k < t(); ++k) z[k] = mod_ll(x[k] + y[k], factors[k]);
  return z;
}

Coord StructuredRing::sub(const Coord& x, const Coord& y) const {
  Coord z(t());
  for (int k = 0; k < t(); ++k) z[k] = mod_ll(x[k] - y[k], factors[k]);
  return z;
}

Coord StructuredRing::neg(const Coord& x) const { return sub(zero(), x); }

Coord StructuredRing::scale(long long c, const Coord& x) const {
  Coord z(t());
  for (int k = 0; k < t(); ++k) z[k] = mod_ll(c, factors[k]) * x[k] % factors[k];
  return z;
}

Coord StructuredRing::mul(const Coord& x, const Coord& y) const {
  Coord acc(t(), 0);
  for (int i = 0; i < t(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < t(); ++j) {
      if (y[j] == 0) continue;
      const Coord& a = alpha[i][j];
      for (int k = 0; k < t(); ++k) {
        if (a[k] == 0) continue;
        long long m = factors[k];
        acc[k] = (acc[k] + x[i] % m * (y[j] % m) % m * a[k]) % m;
      }
    }
  }
  return acc;
}

bool StructuredRing::is_zero(const Coord& x) const {
  for (int k = 0; k < t(); ++k)
    if (mod_ll(x[k], factors[k]) != 0) return false;
  return true;
}

MatI64 StructuredRing::left_action_matrix(const Coord& x) const {
  MatI64 l = MatI64::Zero(t(), t());
  for (int j = 0; j < t(); ++j) {
    Coord col = mul(x, unit_coord(t(), j));
    for (int k = 0; k < t(); ++k) l(k, j) = col[k];
  }
  return l;
}

long long StructuredRing::rank_of(const Coord& x) const {
  long long r = 0;
  for (int k = t() - 1; k >= 0; --k) r = r * factors[k] + mod_ll(x[k], factors[k]);
  return r;
}

Coord StructuredRing::element_of(long long rank) const {
  Coord x(t());
  for (int k = 0; k < t(); ++k) {
    x[k] = rank % factors[k];
    rank /= factors[k];
  }
  return x;
}

void StructuredRing::validate() const {
  int n = t();
  for (long long m : factors)
    if (m < 2) throw TableError("ring factor must be at least 2");
  if (static_cast<int>(one.size()) != n) throw TableError("ring unit has wrong length");
  if (static_cast<int>(alpha.size()) != n) throw TableError("alpha must be t x t x t");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(alpha[i].size()) != n) throw TableError("alpha must be t x t x t");
    for (int j = 0; j < n; ++j) {
      const Coord& a = alpha[i][j];
      if (static_cast<int>(a.size()) != n) throw TableError("alpha must be t x t x t");
      for (int k = 0; k < n; ++k) {
        if (a[k] < 0 || a[k] >= factors[k]) throw TableError("alpha entry out of range");
        // e_i and e_j have additive orders m_i, m_j; both must kill e_i*e_j
        if (factors[i] % factors[k] * a[k] % factors[k] != 0 ||
            factors[j] % factors[k] * a[k] % factors[k] != 0)
          throw TableError("structure constants are not additively consistent at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  Coord e1 = reduce(one);
  for (int j = 0; j < n; ++j) {
    Coord ej = unit_coord(n, j);
    if (mul(e1, ej) != ej || mul(ej, e1) != ej)
      throw TableError("designated unit fails at generator " + std::to_string(j));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Coord ei = unit_coord(n, i), ej = unit_coord(n, j), ek = unit_coord(n, k);
        if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek)))
          throw TableError("multiplication is not associative at (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + ")");
      }
}

StructuredRing ring_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("ring file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("invariant_factors") || !j.contains("one") ||
      !j.contains("alpha"))
    throw FormatError("ring file: expected object with invariant_factors, one, alpha");
  StructuredRing r;
  try {
    r.factors = j.at("invariant_factors").get<std::vector<long long>>();
    r.one = j.at("one").get<Coord>();
    r.alpha = j.at("alpha").get<std::vector<std::vector<Coord>>>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("ring file: ") + e.what());
  }
  for (long long m : r.factors)
    if (m < 2) throw FormatError("ring file: factors must be >= 2");
  int n = r.t();
  if (static_cast<int>(r.one.size()) != n || static_cast<int>(r.alpha.size()) != n)
    throw FormatError("ring file: shape mismatch");
  for (const auto& row : r.alpha) {
    if (static_cast<int>(row.size()) != n) throw FormatError("ring file: shape mismatch");
    for (const auto& c : row)
      if (static_cast<int>(c.size()) != n) throw FormatError("ring file: shape mismatch");
  }
  r.one = r.reduce(std::move(r.one));
  for (auto& row : r.alpha)
    for (auto& c : row) c = r.reduce(std::move(c));
  r.validate();
  return r;
}

StructuredRing ring_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open ring file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ring_from_json_text(ss.str());
}

std::string ring_to_json_text(const StructuredRing& r) {
  nlohmann::json j;
  j["invariant_factors"] = r.factors;
  j["one"] = r.one;
  j["alpha"] = r.alpha;
  return j.dump() + "\n";
}

std::optional<RModule> module_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("ring file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("beta")) return std::nullopt;
  const auto& b = j.at("beta");
  if (!b.is_object() || !b.contains("invariant_factors") || !b.contains("actions"))
    throw FormatError("ring file: beta block needs invariant_factors and actions");
  RModule m;
  try {
    m.module = abstract_decomposition(b.at("invariant_factors").get<std::vector<long long>>());
    for (const auto& mat : b.at("actions")) {
      auto rows = mat.get<std::vector<std::vector<long long>>>();
      int k = m.module.t();
      if (static_cast<int>(rows.size()) != k)
        throw FormatError("ring file: beta action has the wrong shape");
      MatI64 a(k, k);
      for (int i = 0; i < k; ++i) {
        if (static_cast<int>(rows[i].size()) != k)
          throw FormatError("ring file: beta action has the wrong shape");
        for (int jj = 0; jj < k; ++jj) a(i, jj) = rows[i][jj];
      }
      m.actions.push_back(std::move(a));
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("ring file: ") + e.what());
  }
  return m;
}

std::optional<RModule> module_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open ring file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return module_from_json_text(ss.str());
}

std::string ring_with_module_to_json_text(const StructuredRing& r, const RModule& m) {
  nlohmann::json j;
  j["invariant_factors"] = r.factors;
  j["one"] = r.one;
  j["alpha"] = r.alpha;
  nlohmann::json b;
  b["invariant_factors"] = m.module.factors;
  nlohmann::json acts = nlohmann::json::array();
  for (const MatI64& a : m.actions) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < a.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int jj = 0; jj < a.cols(); ++jj) row.push_back(a(i, jj));
      rows.push_back(std::move(row));
    }
    acts.push_back(std::move(rows));
  }
  b["actions"] = std::move(acts);
  j["beta"] = std::move(b);
  return j.dump() + "\n";
}

void validate_module(const StructuredRing& r, const RModule& m) {
  int k = m.module.t();
  const auto& n = m.module.factors;
  if (static_cast<int>(m.actions.size()) != r.t())
    throw TableError("module needs one action matrix per ring generator");
  for (int c = 0; c < r.t(); ++c) {
    const MatI64& a = m.actions[c];
    if (a.rows() != k || a.cols() != k) throw TableError("action matrix has wrong shape");
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (a(i, j) % n[i] * (n[j] % n[i]) % n[i] != 0)
          throw TableError("action matrix does not respect generator orders");
        if (a(i, j) % n[i] * (r.factors[c] % n[i]) % n[i] != 0)
          throw TableError("action matrix ignores the ring generator's additive order");
      }
  }
  auto action_of = [&](const Coord& x) {
    MatI64 s = MatI64::Zero(k, k);
    for (int c = 0; c < r.t(); ++c)
      if (x[c] != 0) s += x[c] * m.actions[c];
    return reduce_rows(std::move(s), n);
  };
  MatI64 id = reduce_rows(MatI64::Identity(k, k), n);
  if (action_of(r.reduce(r.one)) != id) throw TableError("ring unit must act as the identity");
  for (int c = 0; c < r.t(); ++c)
    for (int d = 0; d < r.t(); ++d) {
      // mul(e_c, e_d) acts as "e_c first, then e_d"
      MatI64 composed = reduce_rows(m.actions[d] * m.actions[c], n);
      if (action_of(r.alpha[c][d]) != composed)
        throw TableError("action is not compatible with ring multiplication at (" +
                         std::to_string(c) + "," + std::to_string(d) + ")");
    }
}

MatI64 EndRing::action_matrix(const Coord& x) const {
  int k = gen_matrices.empty() ? static_cast<int>(module_factors.size())
                               : static_cast<int>(gen_matrices[0].rows());
  MatI64 s = MatI64::Zero(k, k);
  for (int c = 0; c < ring.t(); ++c)
    if (x[c] != 0) s += mod_ll(x[c], ring.factors[c]) * gen_matrices[c];
  return reduce_rows(std::move(s), module_factors);
}

EndRing end_ring(const AbelianDecomposition& a) {
  int k = a.t();
  const auto& n = a.factors;
  std::vector<std::pair<int, int>> gens;
  std::vector<std::vector<int>> pos(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      long long g = std::gcd(n[i], n[j]);
      if (g < 2) continue;  // the only map e_j -> multiples of e_i is zero
      pos[i][j] = static_cast<int>(gens.size());
      gens.push_back({i, j});
    }
  int t = static_cast<int>(gens.size());

  EndRing out;
  out.module_factors = n;
  out.ring.factors.resize(t);
  for (int c = 0; c < t; ++c)
    out.ring.factors[c] = std::gcd(n[gens[c].first], n[gens[c].second]);
  out.ring.one.assign(t, 0);
  for (int i = 0; i < k; ++i) out.ring.one[pos[i][i]] = 1;
  out.ring.alpha.assign(t, std::vector<Coord>(t, Coord(t, 0)));
  for (int c = 0; c < t; ++c) {
    auto [i, j] = gens[c];
    long long hi = n[i] / std::gcd(n[i], n[j]);  // e_j -> hi * e_i
    for (int d = 0; d < t; ++d) {
      auto [kk, l] = gens[d];
      if (l != i) continue;
      // composite sends e_j to C * e_kk
      long long c_coeff = hi % n[kk] * ((n[kk] / std::gcd(n[kk], n[i])) % n[kk]) % n[kk];
      long long gkj = std::gcd(n[kk], n[j]);
      long long coeff = c_coeff / (n[kk] / gkj) % gkj;
      if (coeff != 0) out.ring.alpha[c][d][pos[kk][j]] = coeff;
    }
  }
  out.gen_matrices.resize(t);
  for (int c = 0; c < t; ++c) {
    auto [i, j] = gens[c];
    MatI64 m = MatI64::Zero(k, k);
    m(i, j) = n[i] / std::gcd(n[i], n[j]);
    out.gen_matrices[c] = m;
  }
  return out;
}

std::vector<EndGenerator> end_ring_generators(const AbelianDecomposition& a) {
  int k = a.t();
  const auto& n = a.factors;
  std::vector<EndGenerator> out;
  long long sz = a.size();
  for (int i = 0; i < k; ++i) {
    for (long long rank = 1; rank < sz; ++rank) {
      std::vector<long long> v(k);
      long long rr = rank;
      for (int j = 0; j < k; ++j) {
        v[j] = rr % n[j];
        rr /= n[j];
      }
      long long order = 1;
      for (int j = 0; j < k; ++j) order = std::lcm(order, n[j] / std::gcd(n[j], v[j]));
      if (n[i] % order != 0) continue;
      MatI64 m = MatI64::Zero(k, k);
      for (int j = 0; j < k; ++j) m(j, i) = v[j];
      out.push_back({i, v, m});
    }
  }
  return out;
}

using zutil::LatticeSolver;
using zutil::flatten;

EndRing commutant_ring(const AbelianDecomposition& a, const std::vector<MatI64>& actors) {
  int k = a.t();
  const auto& n = a.factors;
  if (k == 0) return EndRing{};
  int unknowns = k * k;
  auto idx = [&](int i, int j) { return i * k + j; };

  // rows: theta must be a well-defined endomorphism and commute with each actor
  int nrows = unknowns * (1 + static_cast<int>(actors.size()));
  IntMat sys = IntMat::Zero(nrows, unknowns);
  std::vector<Int> moduli(nrows);
  int row = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      sys(row, idx(i, j)) = to_int(n[j]);
      moduli[row] = to_int(n[i]);
      ++row;
    }
  for (const MatI64& m : actors)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        for (int l = 0; l < k; ++l) {
          sys(row, idx(i, l)) += m(l, j);
          sys(row, idx(l, j)) -= m(i, l);
        }
        moduli[row] = to_int(n[i]);
        ++row;
      }

  auto sol = zlinalg::solve_mod(sys, IntVec::Zero(nrows), moduli);
  // b == 0 is always solvable
  IntMat lat = sol->nullspace;
  LatticeSolver solver(lat);

  // quotient by the coordinate moduli lattice n_i * E_ij
  IntMat inner = IntMat::Zero(lat.cols(), unknowns);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      IntVec v = IntVec::Zero(unknowns);
      v[idx(i, j)] = to_int(n[i]);
      auto y = solver.solve(v);
      if (!y) throw TableError("commutant: modulus lattice escaped the solution lattice");
      inner.col(idx(i, j)) = *y;
    }
  auto q = zlinalg::quotient_structure(static_cast<int>(lat.cols()), inner);

  EndRing out;
  out.module_factors = n;
  int t = static_cast<int>(q.factors.size());
  out.ring.factors.resize(t);
  for (int c = 0; c < t; ++c) out.ring.factors[c] = to_ll(q.factors[c]);

  auto unflatten = [&](const IntVec& flat) {
    MatI64 m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = to_ll(flat[idx(i, j)] % n[i] + (flat[idx(i, j)] % n[i] < 0 ? n[i] : 0));
    return m;
  };
  out.gen_matrices.resize(t);
  for (int c = 0; c < t; ++c) {
    IntVec y = q.lift.col(c);
    out.gen_matrices[c] = unflatten(lat * y);
  }

  auto coords_of_matrix = [&](const MatI64& m) {
    auto y = solver.solve(flatten(m));
    if (!y) throw TableError("commutant: product escaped the solution lattice");
    IntVec qc = q.project * *y;
    Coord c(t);
    for (int i = 0; i < t; ++i) {
      Int v = qc[i] % q.factors[i];
      if (v < 0) v += q.factors[i];
      c[i] = to_ll(v);
    }
    return c;
  };

  out.ring.one = coords_of_matrix(reduce_rows(MatI64::Identity(k, k), n));
  out.ring.alpha.assign(t, std::vector<Coord>(t));
  for (int c = 0; c < t; ++c)
    for (int d = 0; d < t; ++d) {
      // "c acts first" composes to the matrix product G_d * G_c
      MatI64 p = reduce_rows(out.gen_matrices[d] * out.gen_matrices[c], n);
      out.ring.alpha[c][d] = coords_of_matrix(p);
    }
  return out;
}

Coord PrimeComponent::embed(const Coord& x) const {
  Coord amb(ambient_factors.size(), 0);
  for (int c = 0; c < static_cast<int>(kept.size()); ++c) {
    int i = kept[c];
    amb[i] = mod_ll(x[c], ring.factors[c]) % ambient_factors[i] * (multiplier[c] % ambient_factors[i]) %
             ambient_factors[i];
  }
  return amb;
}

Coord PrimeComponent::restrict(const Coord& ambient_x) const {
  Coord x(kept.size());
  for (int c = 0; c < static_cast<int>(kept.size()); ++c) {
    int i = kept[c];
    long long m = ambient_factors[i];
    long long w = lambda % m * (mod_ll(ambient_x[i], m)) % m;
    x[c] = w / (m / ring.factors[c]) % ring.factors[c];
  }
  return x;
}

std::vector<PrimeComponent> prime_components(const StructuredRing& r) {
  long long nsize = r.size();
  std::vector<long long> primes;
  for (long long m : r.factors)
    for (auto [p, e] : factorize(m))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());

  std::vector<PrimeComponent> out;
  for (long long p : primes) {
    PrimeComponent pc;
    pc.p = p;
    pc.ambient_factors = r.factors;
    long long pcmod = 1;  // p^c, c = multiplicity of p in |R|
    std::vector<long long> part(r.t(), 1);
    for (int i = 0; i < r.t(); ++i) {
      long long m = r.factors[i];
      while (m % p == 0) {
        part[i] *= p;
        m /= p;
      }
      pcmod *= part[i];
    }
    for (int i = 0; i < r.t(); ++i) {
      if (part[i] == 1) continue;
      pc.kept.push_back(i);
      pc.multiplier.push_back(r.factors[i] / part[i]);
      pc.ring.factors.push_back(part[i]);
    }
    Int npc = to_int(nsize) / pcmod;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), Int(npc % pcmod).get_mpz_t(), to_int(pcmod).get_mpz_t()) == 0)
      throw TableError("prime component: idempotent inversion failed");
    pc.lambda = to_ll(Int(npc * inv) % nsize);

    int t = static_cast<int>(pc.kept.size());
    pc.ring.one = pc.restrict(r.reduce(r.one));
    pc.ring.alpha.assign(t, std::vector<Coord>(t));
    for (int c = 0; c < t; ++c)
      for (int d = 0; d < t; ++d)
        pc.ring.alpha[c][d] =
            pc.restrict(r.mul(pc.embed(unit_coord(t, c)), pc.embed(unit_coord(t, d))));
    out.push_back(std::move(pc));
  }
  return out;
}

Coord QuotientRing::project_elem(const StructuredRing& ambient, const Coord& x) const {
  (void)ambient;
  int t = ring.t();
  Coord q(t, 0);
  for (int i = 0; i < t; ++i) {
    long long acc = 0;
    for (int j = 0; j < static_cast<int>(x.size()); ++j)
      acc = mod_ll(acc + project(i, j) % ring.factors[i] * (x[j] % ring.factors[i]),
                   ring.factors[i]);
    q[i] = acc;
  }
  return q;
}

Coord QuotientRing::lift_elem(const Coord& xbar) const {
  int amb = static_cast<int>(lift.rows());
  Coord x(amb, 0);
  for (int i = 0; i < amb; ++i) {
    long long acc = 0;
    for (int j = 0; j < ring.t(); ++j) acc += lift(i, j) * xbar[j];
    x[i] = acc;
  }
  return x;
}

QuotientRing quotient_ring(const StructuredRing& r, const std::vector<Coord>& ideal_gens) {
  int n = r.t();
  if (n == 0) {
    QuotientRing out;
    out.project = MatI64::Zero(0, 0);
    out.lift = MatI64::Zero(0, 0);
    return out;
  }
  IntMat lat = IntMat::Zero(n, static_cast<int>(ideal_gens.size()) + n);
  for (int c = 0; c < static_cast<int>(ideal_gens.size()); ++c)
    for (int i = 0; i < n; ++i) lat(i, c) = to_int(ideal_gens[c][i]);
  for (int i = 0; i < n; ++i) lat(i, static_cast<int>(ideal_gens.size()) + i) = to_int(r.factors[i]);
  auto q = zlinalg::quotient_structure(n, lat);

  QuotientRing out;
  int t = static_cast<int>(q.factors.size());
  out.ring.factors.resize(t);
  for (int i = 0; i < t; ++i) out.ring.factors[i] = to_ll(q.factors[i]);
  out.project = MatI64(t, n);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < n; ++j) {
      Int v = q.project(i, j) % out.ring.factors[i];
      if (v < 0) v += out.ring.factors[i];
      out.project(i, j) = to_ll(v);
    }
  out.lift = MatI64(n, t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < t; ++j) {
      Int v = q.lift(i, j) % r.factors[i];
      if (v < 0) v += r.factors[i];
      out.lift(i, j) = to_ll(v);
    }
  out.ring.one = out.project_elem(r, r.reduce(r.one));
  out.ring.alpha.assign(t, std::vector<Coord>(t));
  for (int c = 0; c < t; ++c)
    for (int d = 0; d < t; ++d)
      out.ring.alpha[c][d] = out.project_elem(
          r, r.mul(out.lift_elem(unit_coord(t, c)), out.lift_elem(unit_coord(t, d))));
  return out;
}

namespace {

// T_i(z) = trace(M^(p^i)) / p^i mod p, M the canonical 0..p-1 lift of left
// multiplication by z on R/pR.
long long radical_trace(const StructuredRing& r, const Coord& z, long long p, int i) {
  int n = r.t();
  IntMat m = IntMat::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    Coord col = r.mul(z, unit_coord(n, j));
    for (int k = 0; k < n; ++k) m(k, j) = to_int(col[k] % p);
  }
  Int pi = 1;
  for (int s = 0; s < i; ++s) pi *= p;
  // m^(p^i) by binary powering
  IntMat acc = IntMat::Identity(n, n);
  Int e = pi;
  IntMat base = m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = (acc * base).eval();
    e >>= 1;
    if (e > 0) base = (base * base).eval();
  }
  Int tr = 0;
  for (int k = 0; k < n; ++k) tr += acc(k, k);
  if (tr % pi != 0) throw TableError("radical: trace lift is not divisible as required");
  Int v = Int(tr / pi) % p;
  if (v < 0) v += p;
  return to_ll(v);
}

}  // namespace

std::vector<Coord> jacobson_radical(const StructuredRing& r) {
  if (r.t() == 0) return {};
  long long nsize = r.size();
  auto fact = factorize(nsize);
  if (fact.size() != 1) throw NotPrimePowerError("ring size " + std::to_string(nsize) +
                                                 " is not a prime power");
  long long p = fact[0].first;
  int n = r.t();

  // descending chain of subspaces of R/pR, cut by the trace forms T_0..T_l
  fp::Mat basis;
  for (int i = 0; i < n; ++i) {
    fp::Vec e(n, 0);
    e[i] = 1;
    basis.push_back(e);
  }
  int l = 0;
  {
    long long q = p;
    while (q <= n) {
      q *= p;
      ++l;
    }
  }
  auto as_coord = [&](const fp::Vec& v) {
    Coord c(n);
    for (int i = 0; i < n; ++i) c[i] = v[i];
    return c;
  };
  for (int i = 0; i <= l && !basis.empty(); ++i) {
    int b = static_cast<int>(basis.size());
    fp::Mat cond(b, fp::Vec(b));
    for (int kk = 0; kk < b; ++kk)
      for (int jj = 0; jj < b; ++jj) {
        Coord z = r.mul(as_coord(basis[jj]), as_coord(basis[kk]));
        for (auto& x : z) x %= p;
        cond[kk][jj] = radical_trace(r, z, p, i);
      }
    fp::Mat ker = fp::kernel(cond, p);
    fp::Mat next;
    for (const auto& lam : ker) {
      fp::Vec x(n, 0);
      for (int jj = 0; jj < b; ++jj)
        for (int col = 0; col < n; ++col) x[col] = mod_ll(x[col] + lam[jj] * basis[jj][col], p);
      next.push_back(std::move(x));
    }
    basis = std::move(next);
  }

  std::vector<Coord> gens;
  for (const auto& v : basis) gens.push_back(as_coord(v));
  for (int i = 0; i < n; ++i) {
    Coord g(n, 0);
    g[i] = p % r.factors[i];
    if (g[i] != 0) gens.push_back(std::move(g));
  }
  return gens;
}

namespace {

constexpr long long kEnumerableRing = 1 << 22;

// additive closure of a generating list, as sorted element ranks
std::vector<long long> additive_closure(const StructuredRing& r, const std::vector<Coord>& gens) {
  long long n = r.size();
  if (n > kEnumerableRing) throw ResourceLimitError("ring too large to enumerate additively");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<long long> todo{0}, out;
  seen[0] = 1;
  while (!todo.empty()) {
    long long x = todo.back();
    todo.pop_back();
    out.push_back(x);
    Coord cx = r.element_of(x);
    for (const Coord& g : gens) {
      long long y = r.rank_of(r.add(cx, g));
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        todo.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// drop generators that do not enlarge the additive span
std::vector<Coord> additive_basis(const StructuredRing& r, const std::vector<Coord>& gens) {
  std::vector<Coord> kept;
  size_t span = 1;
  for (const Coord& g : gens) {
    if (r.is_zero(g)) continue;
    std::vector<Coord> trial = kept;
    trial.push_back(g);
    size_t s = additive_closure(r, trial).size();
    if (s > span) {
      span = s;
      kept = std::move(trial);
    }
  }
  return kept;
}

}  // namespace

std::vector<Coord> unipotent_generators(const StructuredRing& r,
                                        const std::vector<Coord>& radical_gens) {
  std::vector<Coord> reduced;
  for (const Coord& g : radical_gens) reduced.push_back(r.reduce(g));
  std::vector<Coord> jgens = additive_basis(r, reduced);
  if (jgens.empty()) return {};

  // powers[s] generates J^(s+1) additively
  std::vector<std::vector<Coord>> powers{jgens};
  std::vector<size_t> sizes{additive_closure(r, jgens).size()};
  while (sizes.back() > 1) {
    std::vector<Coord> prod;
    for (const Coord& a : powers.back())
      for (const Coord& b : jgens) prod.push_back(r.mul(a, b));
    std::vector<Coord> next = additive_basis(r, prod);
    size_t s = next.empty() ? 1 : additive_closure(r, next).size();
    if (s == sizes.back())
      throw NotNilpotentError("the proposed radical is not a nilpotent ideal");
    powers.push_back(std::move(next));
    sizes.push_back(s);
  }
  size_t nil_index = powers.size();  // J^nil_index == 0

  std::vector<Coord> out;
  Coord one = r.reduce(r.one);
  for (size_t m = 1; m < nil_index; m *= 2)
    for (const Coord& g : powers[m - 1]) out.push_back(r.add(one, g));
  return out;
}

Perm right_multiplication_perm(const StructuredRing& r, const Coord& u) {
  long long n = r.size();
  if (n > kEnumerableRing) throw ResourceLimitError("ring too large to enumerate");
  Perm p;
  p.img.resize(static_cast<size_t>(n));
  for (long long x = 0; x < n; ++x)
    p.img[static_cast<size_t>(x)] = static_cast<int>(r.rank_of(r.mul(r.element_of(x), u)));
  return p;
}

}  // namespace extiso
