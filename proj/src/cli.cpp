#include "extiso/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "extiso/abelian.hpp"
#include "extiso/cayley.hpp"
#include "extiso/extension.hpp"
#include "extiso/finring.hpp"
#include "extiso/oracle.hpp"
#include "extiso/tower.hpp"

namespace extiso::cli {

namespace {

using nlohmann::json;

json coset_json(const StabChain& chain, const std::optional<GroupHom>& rep) {
  json j;
  j["stabilizer_order"] = chain.order().get_str();
  json gens = json::array();
  for (const Perm& p : chain.strong_generators()) gens.push_back(p.img);
  j["stabilizer_generators"] = std::move(gens);
  if (rep) j["representative"] = rep->images;
  return j;
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open output file: " + path);
  out << body;
  if (!out.flush()) throw FormatError("cannot write output file: " + path);
}

// One 0-based element index per whitespace-separated token; the listed set
// must be exactly an abelian normal subgroup.
Subgroup subgroup_from_file(const GroupTable& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open subgroup file: " + path);
  std::vector<int> elems;
  long long v = 0;
  while (in >> v) {
    if (v < 0 || v >= g.n)
      throw FormatError("subgroup file " + path + ": element " + std::to_string(v) +
                        " out of range");
    elems.push_back(static_cast<int>(v));
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (subgroup_generated(g, elems).elements != elems)
    throw FormatError("subgroup file " + path + ": elements do not form a subgroup");
  Subgroup s{&g, std::move(elems)};
  if (!s.is_abelian() || !is_normal(g, s))
    throw FormatError("subgroup file " + path + ": subgroup must be abelian and normal");
  return s;
}

std::vector<Subgroup> candidate_bottoms(const GroupTable& g, int k) {
  std::vector<Subgroup> out;
  for (Subgroup& n : all_normal_subgroups(g)) {
    if (!n.is_abelian()) continue;
    QuotientData q = quotient(g, n);
    if (first_generating_tuple(*q.group, k)) out.push_back(std::move(n));
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;

  if (const char* tv = std::getenv("EXTISO_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(tv, &end, 10);
    if (end == tv || *end != '\0' || n < 1) {
      res.exit_code = 64;
      res.output = "error: EXTISO_THREADS must be a positive integer\n";
      return res;
    }
    // every algorithm here is single-threaded; the cap only validates
  }

  CLI::App app{"isomorphism and automorphism computation for finite groups given by Cayley tables"};
  app.name("extiso");
  bool want_json = false, want_timings = false, min_gens = false;
  long long seed = 0;
  app.add_flag("--json", want_json, "emit a JSON report instead of text");
  app.add_flag("--timings", want_timings, "append wall-clock timings to the output");
  app.add_option("--seed", seed, "reserved, must be 0: every algorithm is deterministic");
  app.require_subcommand(1);

  std::string f1, f2, coset_path, bottom_path, bottom0_path, kind, mode;
  std::vector<std::string> oracle_files;
  int depth = 1, kgen = 1;

  CLI::App* iso = app.add_subcommand("iso", "decide isomorphism, emitting the coset of all isomorphisms");
  iso->fallthrough();
  iso->add_option("group", f1, "first .gtab file")->required();
  iso->add_option("group0", f2, "second .gtab file")->required();
  iso->add_option("--depth", depth, "tower depth k")->check(CLI::PositiveNumber);
  iso->add_flag("--min-gens", min_gens,
                "size the quotient search by its minimal generating number instead of 2k");
  iso->add_option("--coset", coset_path, "also write the coset to this JSON file");

  CLI::App* aut = app.add_subcommand("aut", "compute the automorphism group");
  aut->fallthrough();
  aut->add_option("group", f1, ".gtab file")->required();
  aut->add_option("--depth", depth, "tower depth k")->check(CLI::PositiveNumber);
  aut->add_flag("--min-gens", min_gens,
                "size the quotient search by its minimal generating number instead of 2k");

  CLI::App* normals = app.add_subcommand(
      "normals", "list normal subgroups with cyclic or simple quotient, or tower witnesses");
  normals->fallthrough();
  normals->add_option("group", f1, ".gtab file")->required();
  normals->add_option("--kind", kind, "cyclic, simple, or tower")
      ->required()
      ->check(CLI::IsMember({"cyclic", "simple", "tower"}));
  normals->add_option("--depth", depth, "tower depth k (tower kind only)")
      ->check(CLI::PositiveNumber);

  CLI::App* isoext =
      app.add_subcommand("iso-ext", "decide isomorphism through chosen abelian normal bottoms");
  isoext->fallthrough();
  isoext->add_option("group", f1, "first .gtab file")->required();
  isoext->add_option("group0", f2, "second .gtab file")->required();
  isoext->add_option("--k", kgen, "quotient generator count")->check(CLI::PositiveNumber);
  isoext->add_option("--bottom", bottom_path, "file listing the elements of A (0-based)");
  isoext->add_option("--bottom0", bottom0_path, "file listing the elements of A0 (0-based)");
  isoext->add_option("--coset", coset_path, "also write the stabilizer coset to this JSON file");

  CLI::App* units = app.add_subcommand("units", "unit group of a structure-constant ring");
  units->fallthrough();
  units->add_option("ring", f1, ".ring file")->required();

  CLI::App* decomp = app.add_subcommand("decompose", "invariant factors of an abelian group");
  decomp->fallthrough();
  decomp->add_option("group", f1, ".gtab file")->required();

  CLI::App* orc = app.add_subcommand("oracle", "exhaustive small-case reference answers");
  orc->fallthrough();
  orc->add_option("mode", mode, "iso, aut, or units")
      ->required()
      ->check(CLI::IsMember({"iso", "aut", "units"}));
  orc->add_option("files", oracle_files, "input files")->expected(1, 2);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("extiso");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      res.output = app.help();
      return res;
    }
    res.exit_code = 64;
    res.output = std::string("error: ") + e.what() + "\n";
    return res;
  }

  if (seed != 0) {
    res.exit_code = 64;
    res.output = "error: --seed must be 0 (reserved; every algorithm is deterministic)\n";
    return res;
  }

  json report;
  report["command"] = app.get_subcommands().front()->get_name();
  std::ostringstream text;
  std::string outcome = "success";
  int code = 0;
  auto t0 = std::chrono::steady_clock::now();

  try {
    if (iso->parsed()) {
      report["inputs"] = json::array({f1, f2});
      GroupTable g = read_gtab_file(f1);
      GroupTable g0 = read_gtab_file(f2);
      IsomorphismCoset c = isomorphism_test(g, g0, depth, min_gens);
      json cj = coset_json(c.stabilizer, c.representative);
      report["coset"] = cj;
      if (!coset_path.empty()) write_text_file(coset_path, cj.dump(2) + "\n");
      if (c.representative) {
        outcome = "iso";
        text << "isomorphic\n";
      } else {
        outcome = "non-iso";
        code = 1;
        text << "not isomorphic\n";
      }
      text << "automorphism group order " << c.stabilizer.order().get_str() << "\n";
    } else if (aut->parsed()) {
      report["inputs"] = json::array({f1});
      GroupTable g = read_gtab_file(f1);
      StabChain a = automorphism_group(g, depth, min_gens);
      report["coset"] = coset_json(a, std::nullopt);
      text << "automorphism group order " << a.order().get_str() << "\n";
    } else if (normals->parsed()) {
      report["inputs"] = json::array({f1});
      GroupTable g = read_gtab_file(f1);
      if (kind == "tower") {
        json arr = json::array();
        for (const NormalWitness& w : tower_normals(g, depth)) {
          json wj;
          wj["subgroup"] = w.subgroup.elements;
          json tw = json::array();
          for (const Subgroup& lvl : w.tower) tw.push_back(lvl.elements);
          wj["tower"] = std::move(tw);
          json kd = json::array();
          std::string kline;
          for (FactorKind fk : w.kinds) {
            const char* nm = fk == FactorKind::cyclic ? "cyclic" : "simple";
            kd.push_back(nm);
            kline += ' ';
            kline += nm;
          }
          wj["kinds"] = std::move(kd);
          arr.push_back(std::move(wj));
          text << join_ints(w.subgroup.elements) << "  kinds:" << kline << "\n";
        }
        report["witnesses"] = std::move(arr);
      } else {
        auto subs = kind == "cyclic" ? cyclic_quotient_normals(g) : simple_quotient_normals(g);
        json arr = json::array();
        for (const Subgroup& s : subs) {
          arr.push_back(s.elements);
          text << join_ints(s.elements) << "\n";
        }
        report["subgroups"] = std::move(arr);
      }
    } else if (isoext->parsed()) {
      report["inputs"] = json::array({f1, f2});
      GroupTable g = read_gtab_file(f1);
      GroupTable g0 = read_gtab_file(f2);
      std::vector<Subgroup> bots, bots0;
      if (!bottom_path.empty())
        bots.push_back(subgroup_from_file(g, bottom_path));
      else
        bots = candidate_bottoms(g, kgen);
      if (bots.empty())
        throw UnsupportedShapeError("no abelian normal subgroup with a " +
                                    std::to_string(kgen) + "-generated quotient");
      if (!bottom0_path.empty())
        bots0.push_back(subgroup_from_file(g0, bottom0_path));
      else
        bots0 = candidate_bottoms(g0, kgen);

      std::optional<IsomorphismCoset> found;
      if (g.n == g0.n) {
        for (const Subgroup& a : bots) {
          AbelianDecomposition dec = decompose(a);
          QuotientData q = quotient(g, a);
          for (const Subgroup& a0 : bots0) {
            if (a0.size() != a.size() || decompose(a0).factors != dec.factors) continue;
            QuotientData q0 = quotient(g0, a0);
            for (auto& pim : oracle::all_isomorphisms(*q.group, *q0.group, q.group->n)) {
              GroupHom psi{q.group.get(), q0.group.get(), std::move(pim)};
              IsomorphismCoset ext = extend_quotient_isomorphism(g, g0, a, a0, psi, kgen);
              if (ext.representative) {
                found = std::move(ext);
                break;
              }
            }
            if (found) break;
          }
          if (found) break;
        }
      }
      if (found) {
        json cj = coset_json(found->stabilizer, found->representative);
        report["coset"] = cj;
        if (!coset_path.empty()) write_text_file(coset_path, cj.dump(2) + "\n");
        outcome = "iso";
        text << "isomorphic\nstabilizer order " << found->stabilizer.order().get_str() << "\n";
      } else {
        outcome = "non-iso";
        code = 1;
        text << "not isomorphic\n";
      }
    } else if (units->parsed()) {
      report["inputs"] = json::array({f1});
      StructuredRing r = ring_from_file(f1);
      UnitGroupData u = unit_group(r);
      report["unit_order"] = u.order.get_str();
      json gens = json::array();
      for (const Coord& c : u.generators) gens.push_back(c);
      report["unit_generators"] = std::move(gens);
      report["has_chain"] = u.chain.has_value();
      text << "unit group order " << u.order.get_str() << "\n";
    } else if (decomp->parsed()) {
      report["inputs"] = json::array({f1});
      GroupTable g = read_gtab_file(f1);
      AbelianDecomposition dec = decompose(whole_group(g));
      report["invariant_factors"] = dec.factors;
      text << "invariant factors:";
      for (long long f : dec.factors) text << ' ' << f;
      text << "\n";
    } else if (orc->parsed()) {
      report["inputs"] = json(oracle_files);
      report["mode"] = mode;
      if (mode == "iso") {
        if (oracle_files.size() != 2) throw FormatError("oracle iso needs two .gtab files");
        GroupTable g = read_gtab_file(oracle_files[0]);
        GroupTable g0 = read_gtab_file(oracle_files[1]);
        auto isos = oracle::all_isomorphisms(g, g0);
        report["isomorphism_count"] = std::to_string(isos.size());
        text << "isomorphisms: " << isos.size() << "\n";
        if (isos.empty()) {
          outcome = "non-iso";
          code = 1;
        } else {
          outcome = "iso";
        }
      } else if (mode == "aut") {
        if (oracle_files.size() != 1) throw FormatError("oracle aut needs one .gtab file");
        GroupTable g = read_gtab_file(oracle_files[0]);
        long long n = oracle::automorphism_order(g);
        report["aut_order"] = std::to_string(n);
        text << "automorphism group order " << n << "\n";
      } else {
        if (oracle_files.size() != 1) throw FormatError("oracle units needs one .ring file");
        StructuredRing r = ring_from_file(oracle_files[0]);
        long long n = oracle::unit_count(r);
        report["unit_order"] = std::to_string(n);
        text << "unit group order " << n << "\n";
      }
    }
  } catch (const ResourceLimitError& e) {
    outcome = "error";
    code = 2;
    report["error"] = e.what();
    text.str("");
    text << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    outcome = "error";
    code = 64;
    report["error"] = e.what();
    text.str("");
    text << "error: " << e.what() << "\n";
  }

  if (want_timings) {
    auto t1 = std::chrono::steady_clock::now();
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    report["timings"] = json{{"total_ms", ms}};
    text << "elapsed " << ms << " ms\n";
  }
  report["outcome"] = outcome;
  report["exit_code"] = code;
  res.exit_code = code;
  res.output = want_json ? report.dump(2) + "\n" : text.str();
  return res;
}

}  // namespace extiso::cli
