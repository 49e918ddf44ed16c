#pragma once

#include <optional>
#include <vector>

#include "extiso/numeric.hpp"

namespace extiso {

struct Perm {
  std::vector<int> img;

  static Perm identity(int n);
  int degree() const { return static_cast<int>(img.size()); }
  bool is_identity() const;
  int operator[](int x) const { return img[x]; }
  // apply this, then o
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool operator==(const Perm&) const = default;
};

// Stabilizer chain with Schreier vectors; deterministic construction.
struct StabChain {
  int degree = 0;

  struct Level {
    int beta = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;   // discovery order, orbit[0] == beta
    std::vector<int> parent;  // point -> previous point, -1 off orbit / at beta
    std::vector<int> via;     // point -> index into gens
  };
  std::vector<Level> levels;

  // forced_base points become the first levels even when redundant.
  static StabChain build(int degree, const std::vector<Perm>& gens,
                         const std::vector<int>& forced_base = {});

  mpz_class order() const;
  bool contains(const Perm& p) const;
  bool in_orbit(int level, int point) const;
  Perm transversal(int level, int point) const;  // u with beta^u == point
  std::vector<Perm> strong_generators() const;
  // all group elements; throws ResourceLimitError when order > limit
  std::vector<Perm> elements(size_t limit) const;
};

StabChain pointwise_stabilizer(const StabChain& g, const std::vector<int>& pts);

// Some g with src[i]^g = dst[i] for all i, or nullopt.
std::optional<Perm> transporter(const StabChain& g, const std::vector<int>& src,
                                const std::vector<int>& dst);

std::vector<Perm> reduce_generators(int degree, const std::vector<Perm>& gens);

}  // namespace extiso
