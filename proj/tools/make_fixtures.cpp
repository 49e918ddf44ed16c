// Regenerates the data/ fixtures: one .gtab per corpus group and the .ring
// files used by the unit-group and module tests. Run from the repo root,
// or pass the target directory as the only argument.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "extiso/abelian.hpp"
#include "extiso/cayley.hpp"
#include "extiso/finring.hpp"
#include "extiso/samples.hpp"

using namespace extiso;

namespace {

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  if (!out.flush()) {
    std::fprintf(stderr, "cannot write %s\n", path.c_str());
    std::exit(1);
  }
}

StructuredRing end_of(const std::vector<long long>& factors) {
  return end_ring(abstract_decomposition(factors)).ring;
}

StructuredRing f4_ring() {
  StructuredRing r;
  r.factors = {2, 2};
  r.alpha.assign(2, std::vector<Coord>(2));
  r.alpha[0][0] = {1, 0};
  r.alpha[0][1] = {0, 1};
  r.alpha[1][0] = {0, 1};
  r.alpha[1][1] = {1, 1};  // x^2 = 1 + x
  r.one = {1, 0};
  return r;
}

// Upper triangular n x n matrices over Z_p, basis E_ij (i <= j) in row-major
// order; products stay in the span so structure constants are 0/1.
StructuredRing triangular_ring(int n, long long p) {
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) basis.emplace_back(i, j);
  int t = static_cast<int>(basis.size());
  auto pos = [&](int i, int j) {
    for (int a = 0; a < t; ++a)
      if (basis[a] == std::pair<int, int>{i, j}) return a;
    return -1;
  };
  StructuredRing r;
  r.factors.assign(t, p);
  r.alpha.assign(t, std::vector<Coord>(t, Coord(t, 0)));
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) {
      auto [i, j] = basis[a];
      auto [k, l] = basis[b];
      if (j == k) r.alpha[a][b][pos(i, l)] = 1;
    }
  r.one = Coord(t, 0);
  for (int i = 0; i < n; ++i) r.one[pos(i, i)] = 1;
  return r;
}

// Z_n[C_2] with basis (e, g): the inversion/trivial module fixtures attach a
// rank-one module through the beta block.
StructuredRing zn_c2_ring(long long n) {
  StructuredRing r;
  r.factors = {n, n};
  r.alpha.assign(2, std::vector<Coord>(2));
  r.alpha[0][0] = {1, 0};
  r.alpha[0][1] = {0, 1};
  r.alpha[1][0] = {0, 1};
  r.alpha[1][1] = {1, 0};  // g^2 = e
  r.one = {1, 0};
  return r;
}

RModule rank_one_module(long long n, long long gen_action) {
  RModule m;
  m.module = abstract_decomposition({n});
  MatI64 ident(1, 1), act(1, 1);
  ident(0, 0) = 1;
  act(0, 0) = gen_action;
  m.actions = {ident, act};
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir);

  int files = 0;
  for (const auto& [name, g] : samples::corpus()) {
    std::ofstream out(dir + "/" + name + ".gtab", std::ios::binary);
    write_gtab(out, g);
    if (!out.flush()) {
      std::fprintf(stderr, "cannot write %s.gtab\n", name.c_str());
      return 1;
    }
    ++files;
  }
  {
    std::ofstream out(dir + "/klein3.gtab", std::ios::binary);
    write_gtab(out, samples::abelian_of({2, 2, 2}));
    ++files;
  }

  const std::vector<std::pair<std::string, StructuredRing>> rings = {
      {"end_z5", end_of({5})},
      {"end_z8", end_of({8})},
      {"end_z12", end_of({12})},
      {"end_z16", end_of({16})},
      {"end_z2z2", end_of({2, 2})},
      {"end_z2z4", end_of({2, 4})},
      {"end_z2z2z2", end_of({2, 2, 2})},
      {"end_z3z3", end_of({3, 3})},
      {"f2", end_of({2})},
      {"f4", f4_ring()},
      {"z4", end_of({4})},
      {"z6", end_of({6})},
      {"z8", end_of({8})},
      {"z9", end_of({9})},
      {"z16", end_of({16})},
      {"z27", end_of({27})},
      {"z81", end_of({81})},
      {"m2f2", end_of({2, 2})},
      {"m2f3", end_of({3, 3})},
      {"ut2f2", triangular_ring(2, 2)},
      {"ut3f2", triangular_ring(3, 2)},
  };
  for (const auto& [name, r] : rings) {
    r.validate();
    write_file(dir + "/" + name + ".ring", ring_to_json_text(r));
    ++files;
  }

  StructuredRing z4c2 = zn_c2_ring(4);
  z4c2.validate();
  RModule invert = rank_one_module(4, 3);
  RModule trivial = rank_one_module(4, 1);
  validate_module(z4c2, invert);
  validate_module(z4c2, trivial);
  write_file(dir + "/z4c2_invert.ring", ring_with_module_to_json_text(z4c2, invert));
  write_file(dir + "/z4c2_trivial.ring", ring_with_module_to_json_text(z4c2, trivial));
  files += 2;

  std::printf("wrote %d fixture files to %s\n", files, dir.c_str());
  return 0;
}
