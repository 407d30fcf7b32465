// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "modrep/cli/runner.hpp"
#include "modrep/error.hpp"
#include "modrep/groups/catalog.hpp"
#include "modrep/rep/decompose.hpp"
#include "modrep/rep/meataxe.hpp"

using namespace modrep;
using ffla::Field;
using ffla::FieldPtr;
using ffla::Scalar;
using rep::GroupAlgebra;
using rep::Module;
using J = nlohmann::ordered_json;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

// Reports are computed once and shared; each criterion is charged the time
// of the scenarios it triggers first.
const cli::Report& report(const std::string& name) {
  static std::map<std::string, cli::Report> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, cli::run_scenario(cli::builtin(name))).first;
  return it->second;
}

const cli::CheckResult& check(const std::string& scenario, const std::string& name) {
  const auto* c = report(scenario).check(name);
  if (!c) throw AssertionFailure(scenario + " did not run " + name);
  return *c;
}

std::string counts(const std::map<std::size_t, std::size_t>& m) {
  std::ostringstream os;
  os << "{";
  for (const auto& [b, n] : m) os << (os.tellp() > 1 ? ", " : "") << "B" << b << ":" << n;
  os << "}";
  return os.str();
}

int run(int id, const std::string& title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& ex) {
    out.passed = false;
    out.detail = std::string("error: ") + ex.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_seconds > 0 && secs > budget_seconds) {
    out.require(false, "runtime over " + std::to_string(static_cast<int>(budget_seconds)) + " s");
  }
  std::cout << (out.passed ? "PASS" : "FAIL") << " criterion " << id << " (" << title << "): " << out.detail << " ["
            << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
  return out.passed ? 0 : 1;
}

// --- random modules -------------------------------------------------------

Module random_module(const GroupAlgebra& A, std::mt19937_64& rng) {
  const auto& ss = A.simples();
  std::vector<Module> parts{ss[rng() % ss.size()]};
  if (rng() % 4 == 0) parts.push_back(A.pims()[rng() % ss.size()]);
  const auto& R = A.regular();
  ffla::Vector v(R.dim(), 0);
  // sparse seeds keep the spun submodules small
  for (int k = 0; k < 3; ++k) v[rng() % v.size()] = static_cast<Scalar>(1 + rng() % (A.field()->order() - 1));
  const auto W = rep::spin(R, {v});
  if (W.cols() > 0 && W.cols() < R.dim()) parts.push_back(rng() % 2 ? rep::submodule(R, W) : rep::quotient(R, W));
  return rep::direct_sum(parts, A.group(), A.field());
}

Module random_E_module(const groups::GroupPtr& E, const FieldPtr& F, std::mt19937_64& rng) {
  const auto reg = rep::regular_module(E, F);
  std::vector<Module> parts;
  for (int k = 0, count = 1 + static_cast<int>(rng() % 2); k < count; ++k) {
    ffla::Vector v(reg.dim());
    for (auto& x : v) x = static_cast<Scalar>(rng() % F->order());
    v[0] = 0;
    const auto W = rep::spin(reg, {v});
    switch (rng() % 3) {
      case 0: parts.push_back(rep::quotient(reg, W)); break;
      case 1: parts.push_back(rep::submodule(reg, W)); break;
      default: parts.push_back(rep::trivial_module(E, F)); break;
    }
  }
  return rep::direct_sum(parts, E, F);
}

// --- property suites --------------------------------------------------------

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Exhaustive over pairs. Associativity and distributivity reduce to pairs by
// Light's test: it suffices to take the third argument from a generating set
// (the generator for the unit group, 1, g, ..., g^(n-1) for addition).
bool field_axioms(const Field& F) {
  const Scalar q = F.order();
  const Scalar g = F.generator();
  std::vector<Scalar> additive{1};
  for (unsigned i = 1; i < F.degree(); ++i) additive.push_back(F.mul(additive.back(), g));
  if (F.multiplicative_order(g) != q - 1) return false;
  for (Scalar a = 0; a < q; ++a) {
    if (F.add(a, 0) != a || F.mul(a, 1) != a || F.add(a, F.neg(a)) != 0) return false;
    if (a && F.mul(a, F.inv(a)) != 1) return false;
    for (Scalar b = 0; b < q; ++b) {
      const Scalar ab = F.mul(a, b), apb = F.add(a, b);
      if (apb != F.add(b, a) || ab != F.mul(b, a)) return false;
      if (a && b && F.mul(F.mul(a, g), b) != F.mul(a, F.mul(g, b))) return false;
      for (Scalar s : additive) {
        if (F.add(apb, s) != F.add(a, F.add(b, s))) return false;
        if (F.mul(a, F.add(b, s)) != F.add(ab, F.mul(a, s))) return false;
      }
    }
  }
  return true;
}

Outcome field_suite() {
  Outcome o;
  std::size_t fields = 0;
  for (std::uint32_t p = 2; p <= 1024; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint32_t n = 1, q = p; q <= 1024; ++n, q *= p) {
      ++fields;
      o.require(field_axioms(*Field::make(p, n)), "axioms in GF(" + std::to_string(p) + "^" + std::to_string(n) + ")");
    }
  }
  o.note("field axioms on all " + std::to_string(fields) + " fields of order <= 1024");
  return o;
}

struct SubgroupCase {
  std::shared_ptr<GroupAlgebra> A;
  groups::SubgroupPtr H;
  std::shared_ptr<GroupAlgebra> AH;
};

std::vector<SubgroupCase> subgroup_cases() {
  std::vector<SubgroupCase> out;
  auto add = [&](const groups::CatalogGroup& cg, FieldPtr F, const std::vector<groups::Elem>& gens, std::uint64_t seed) {
    auto A = std::make_shared<GroupAlgebra>(cg.group, F, seed);
    auto H = groups::subgroup(cg.group, gens);
    out.push_back({A, H, std::make_shared<GroupAlgebra>(H->group(), F, seed + 1)});
  };
  const auto s3 = groups::s3();
  add(s3, Field::make(3, 2), {s3.named("a")}, 11);
  add(s3, Field::make(3, 2), {s3.named("z")}, 13);
  const auto g = groups::g84();
  add(g, Field::make(2, 2), {g.named("g"), g.named("x"), g.named("y")}, 17);
  add(g, Field::make(2, 2), {g.named("x"), g.named("z")}, 19);
  const auto p3 = groups::p3_group();
  add(p3, Field::make(3, 2), {p3.named("b"), p3.named("c"), p3.named("z")}, 23);
  return out;
}

Outcome frobenius_suite() {
  Outcome o;
  const auto cases = subgroup_cases();
  std::mt19937_64 rng(101);
  for (int t = 0; t < 50; ++t) {
    const auto& c = cases[t % cases.size()];
    const Module M = random_module(*c.A, rng);
    const Module X = random_module(*c.AH, rng);
    const Module IX = rep::induce(X, *c.H);
    const Module RM = rep::restrict(M, *c.H);
    o.require(rep::hom_dim(IX, M) == rep::hom_dim(X, RM), "Hom(Ind X, M) = Hom(X, Res M), triple " + std::to_string(t));
    o.require(rep::hom_dim(M, IX) == rep::hom_dim(RM, X), "Hom(M, Ind X) = Hom(Res M, X), triple " + std::to_string(t));
  }
  o.note("Frobenius reciprocity on 50 triples");
  return o;
}

Outcome tate_duality_suite() {
  Outcome o;
  const auto s3 = groups::s3();
  const auto g = groups::g84();
  const auto p3 = groups::p3_group();
  const std::vector<std::shared_ptr<GroupAlgebra>> algebras{
      std::make_shared<GroupAlgebra>(s3.group, Field::make(3, 1), 31),
      std::make_shared<GroupAlgebra>(groups::elementary_abelian(2, 2), Field::make(2, 2), 37),
      std::make_shared<GroupAlgebra>(g.group, Field::make(2, 2), 41),
      std::make_shared<GroupAlgebra>(p3.group, Field::make(3, 2), 43)};
  std::mt19937_64 rng(202);
  std::size_t nonzero = 0;
  for (int t = 0; t < 50; ++t) {
    const auto& A = *algebras[t % algebras.size()];
    const Module M = random_module(A, rng);
    const Module N = random_module(A, rng);
    const auto lhs = A.stable_hom_dim(M, N);
    nonzero += lhs > 0;
    o.require(lhs == A.stable_hom_dim(N, A.omega(M)), "stHom(M, N) = stHom(N, Omega M), pair " + std::to_string(t));
  }
  o.note("Tate duality on 50 pairs (" + std::to_string(nonzero) + " nonzero)");
  return o;
}

Outcome scenario_line_suite() {
  Outcome o;
  std::size_t lines = 0, lifts = 0;
  for (const auto& name : cli::builtin_names()) {
    const auto s = cli::builtin(name);
    o.require(report(name).summary["orbit_stabilizer"].get<bool>(), "orbit-stabilizer on the line of " + name);
    const auto cg = cli::resolve_group(s.group);
    const auto F = Field::make(s.field.p, s.field.n);
    const auto E = std::make_shared<groups::ElementaryAbelianBasis>(cg.group, cg.e_basis, s.field.p);
    const auto N = groups::normalizer(cg.group, *E->subgroup());
    const auto C = groups::centralizer(cg.group, *E->subgroup());
    for (const auto& l : varieties::sample_lines(E, F, 64)) {
      ++lines;
      const auto orbit = varieties::line_orbit(l);
      const auto H = varieties::line_stabilizer(l);
      o.require(orbit.size() * H->order() == N->order(), "orbit-stabilizer on " + name + " line " + l.format());
      if (H->order() != cg.group->order() || !varieties::fp_independent(l) || C->index() % s.field.p == 0) continue;
      // postconditions of the lift, checked again from outside
      const auto chi = varieties::chi_from_line(l);
      const auto u = varieties::equivariant_lift(l, chi).value;
      const auto u0 = varieties::shifted_unit(l).value;
      bool ok = u.power(s.field.p).is_zero() && varieties::in_rad_square(E, u - u0) && !varieties::in_rad_square(E, u);
      for (groups::Elem g = 0; g < cg.group->order(); ++g) ok = ok && u.conjugated(g) == u.scaled(chi(g));
      o.require(ok, "lift postconditions on " + name + " line " + l.format());
      ++lifts;
    }
  }
  o.note("orbit-stabilizer on " + std::to_string(lines) + " lines, lift postconditions on " + std::to_string(lifts) +
         " lifts");
  return o;
}

Outcome tensor_suite() {
  Outcome o;
  const auto cg = groups::g84();
  const auto E = std::make_shared<groups::ElementaryAbelianBasis>(cg.group, cg.e_basis, cg.p);
  const auto F = Field::make(2, 3);
  const auto& S = *E->subgroup();
  std::mt19937_64 rng(303);
  for (int t = 0; t < 20; ++t) {
    const auto M = random_E_module(S.group(), F, rng);
    const auto N = random_E_module(S.group(), F, rng);
    const varieties::Line l(E, F, {static_cast<Scalar>(rng() % 8), static_cast<Scalar>(1 + rng() % 7)});
    const bool m = varieties::line_in_module_variety(M, l, S), n = varieties::line_in_module_variety(N, l, S);
    o.require(varieties::line_in_module_variety(rep::tensor(M, N), l, S) == (m && n), "tensor theorem, pair " + std::to_string(t));
  }
  o.note("tensor theorem on 20 pairs");
  return o;
}

}  // namespace

int main() {
  int failures = 0;

  failures += run(1, "block counts", 10, [] {
    Outcome o;
    const auto cg = groups::g84();
    const auto F = Field::make(2, 3);
    const auto E = std::make_shared<groups::ElementaryAbelianBasis>(cg.group, cg.e_basis, cg.p);
    const auto H = groups::centralizer(cg.group, *E->subgroup());
    GroupAlgebra AH(H->group(), F);
    const auto bpH = blocks::block_partition(AH);
    std::size_t one_dim = 0;
    for (const auto& S : bpH.simples) one_dim += S.dim() == 1;
    o.require(H->order() == 28, "|C_G(E)| = 28");
    o.require(bpH.count() == 7, "kH has 7 blocks");
    o.require(bpH.simples.size() == 7 && one_dim == 7, "kH has 7 one-dimensional simples");
    GroupAlgebra A(cg.group, F);
    const auto bp = blocks::block_partition(A);
    o.require(bp.count() == 3, "kG has 3 blocks");
    for (std::size_t b = 1; b < bp.count(); ++b) {
      o.require(bp.blocks[b].size() == 1 && bp.simples[bp.blocks[b][0]].dim() == 3,
                "B" + std::to_string(b) + " holds exactly one simple, of dimension 3");
    }
    o.note("kH: " + std::to_string(bpH.count()) + " blocks, " + std::to_string(one_dim) +
           " one-dimensional simples; kG: " + std::to_string(bp.count()) + " blocks");
    return o;
  });

  failures += run(2, "unstable line", 300, [] {
    Outcome o;
    const auto& r = report("g84-unstable");
    o.require(check("g84-unstable", "ext_blocks").passed, "ext_blocks check");
    const auto& ext = *r.ext;
    const std::map<std::size_t, std::size_t> want{{0, 1}, {1, 3}, {2, 3}};
    o.require(ext.classes_per_kg_block() == want, "graph partition " + counts(ext.classes_per_kg_block()));
    o.require(ext.labels_per_kg_block() == want, "Benson labels " + counts(ext.labels_per_kg_block()));
    o.require(ext.agrees_with_benson.value_or(false), "graph and Benson partitions agree");
    const auto kh = check("g84-unstable", "blocks").result["kh_blocks"].get<std::size_t>();
    o.require(ext.graph_partition.size() == kh, "class count equals number of kH-blocks");
    o.note("graph " + counts(ext.classes_per_kg_block()) + ", Benson " + counts(ext.labels_per_kg_block()) + ", " +
           std::to_string(ext.graph_partition.size()) + " classes, " + std::to_string(kh) + " kH-blocks");
    return o;
  });

  failures += run(3, "stable line", 300, [] {
    Outcome o;
    const auto& r = report("g84-stable");
    const auto& ext = *r.ext;
    const auto bp = check("g84-stable", "blocks").result["kg"];
    std::set<std::size_t> positive;
    for (std::size_t b = 0; b < bp["blocks"].size(); ++b) {
      if (!bp["blocks"][b]["defect_zero"].get<bool>()) positive.insert(b);
    }
    std::set<std::size_t> met;
    for (const auto& [b, n] : ext.classes_per_kg_block()) {
      met.insert(b);
      o.require(n == 1, "one ext-block in B" + std::to_string(b));
    }
    o.require(met == positive, "every positive-defect block meets the family");
    o.require(ext.agrees_with_benson.value_or(false), "graph and Benson partitions agree");
    o.note("graph " + counts(ext.classes_per_kg_block()) + " over " + std::to_string(positive.size()) +
           " positive-defect blocks");
    return o;
  });

  failures += run(4, "lemma suite", 120, [] {
    Outcome o;
    const auto& lemma = check("g84-stable", "lemma_suite");
    o.require(lemma.passed, "lemma suite on g84-stable");
    for (const auto& c : lemma.result["checks"]) {
      const auto name = c["name"].get<std::string>();
      if (name == "window_nonvanishing") {
        o.require(c["data"].size() >= 3, "at least 3 window samples");
        for (const auto& d : c["data"]) {
          for (const auto& v : d["window"]) o.require(v.get<std::size_t>() > 0, "nonzero window entry");
        }
      } else if (name == "omega_twist") {
        for (const auto& d : c["data"]) {
          const auto& m = d["omega_t_matches_Y_t"];
          o.require(m.size() >= 3 && m[0] && m[1] && m[2], "Omega^t(X_j) = Y_t (x) X_j for t = 1, 2, 3");
        }
      } else if (name == "linked_pims_stable_hom") {
        bool principal = false;
        for (const auto& d : c["data"]) principal = principal || (d["pair"][0] == 0 && d["pair"][1] == 0);
        o.require(principal, "principal block pairs covered");
      }
    }
    const auto& odd = check("s3-sanity", "lemma_suite");
    o.require(odd.passed, "lemma suite on s3-sanity");
    std::string exps;
    for (const auto& c : odd.result["checks"]) {
      if (c["name"] != "omega2_twist") continue;
      for (const auto& d : c["data"]) {
        o.require(d["omega2_matches_Y_p"].get<bool>(), "Omega^2(X_j) = Y_p (x) X_j");
        exps += (exps.empty() ? "" : ", ") + d["twist_exponents"][0]["e"].dump();
      }
    }
    o.note("p = 2 twists hold for t = 1..3; p = 3 twist exponents " + exps);
    return o;
  });

  failures += run(5, "p = 3 example", 300, [] {
    Outcome o;
    const auto& blocks = check("p3", "blocks").result;
    o.require(blocks["kh_blocks"] == 5, "kH has 5 blocks");
    o.require(blocks["kg_blocks"] == 3, "kG has 3 blocks");
    const auto per = report("p3").ext->classes_per_kg_block();
    for (std::size_t b = 1; b < 3; ++b) {
      o.require(per.count(b) && per.at(b) == 2, "two ext-blocks in B" + std::to_string(b));
    }
    o.note("kH " + blocks["kh_blocks"].dump() + " blocks, kG " + blocks["kg_blocks"].dump() + ", ext-blocks " + counts(per));
    return o;
  });

  failures += run(6, "stable Hom into every ext-block", 0, [] {
    Outcome o;
    const auto& ext = *report("g84-unstable").ext;
    const auto& any = ext.family.front().module;
    GroupAlgebra A(any.group(), any.field());
    const auto bp = blocks::block_partition(A);
    const std::size_t b1 = 1;
    const Module& M1 = bp.simples[bp.blocks[b1][0]];
    std::map<std::size_t, std::size_t> hits;
    std::set<std::size_t> classes;
    for (const auto& m : ext.family) {
      if (m.kg_block != b1) continue;
      classes.insert(m.graph_class);
      if (hits.count(m.graph_class)) continue;
      const auto d = A.stable_hom_dim(M1, m.module);
      if (d > 0) hits[m.graph_class] = d;
    }
    o.require(classes.size() == 3, "three ext-blocks in B1");
    o.require(hits.size() == classes.size(), "stHom(M1, R) > 0 for a representative of each");
    o.note("M1 of dimension " + std::to_string(M1.dim()) + " reaches " + std::to_string(hits.size()) + "/" +
           std::to_string(classes.size()) + " ext-blocks of B1");
    return o;
  });

  failures += run(7, "stmod blocks", 0, [] {
    Outcome o;
    for (const auto* name : {"g84-unstable", "g84-stable", "p3", "p5"}) {
      o.require(check(name, "stmod").passed, std::string("Tate linkage equals positive-defect blocks for ") + name);
    }
    o.note("Tate linkage of simples matches the positive-defect blocks for g84 (GF(8), GF(64)), p3 and p5");
    return o;
  });

  failures += run(8, "property suites", 0, [] {
    Outcome o;
    for (const auto& name : cli::builtin_names()) o.require(report(name).passed(), "scenario " + name);
    for (const auto& suite : {field_suite, frobenius_suite, tate_duality_suite, scenario_line_suite, tensor_suite}) {
      const auto r = suite();
      o.require(r.passed, r.detail);
      if (r.passed) o.note(r.detail);
    }
    const auto resummed = rep::resummation_checks();
    o.require(resummed > 0, "re-summation checks ran");
    o.note(std::to_string(resummed) + " decompositions re-summed");
    return o;
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failures ? 1 : 0;
}
