#include "modrep/cli/runner.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <memory>
#include <set>
#include <sstream>

#include "modrep/rep/decompose.hpp"

namespace modrep::cli {

using J = nlohmann::ordered_json;
using ffla::FieldPtr;
using rep::GroupAlgebra;
using rep::Module;
using varieties::Line;

namespace {

constexpr std::size_t kBensonSamples = 6;

std::string block_name(std::size_t b) { return "B" + std::to_string(b); }

// Everything a scenario computes, built lazily and shared between checks.
class Context {
 public:
  explicit Context(const Scenario& s) : s_(s), cg_(resolve_group(s.group)) {
    F_ = s.field.modulus.empty() ? ffla::Field::make(s.field.p, s.field.n)
                                 : ffla::Field::make(s.field.p, s.field.n, s.field.modulus);
    std::vector<groups::Elem> basis = cg_.e_basis;
    if (!s.e_basis.empty()) {
      basis.clear();
      for (const auto& tok : s.e_basis) basis.push_back(resolve_element(cg_, tok));
    }
    E_ = std::make_shared<groups::ElementaryAbelianBasis>(cg_.group, basis, s.field.p);
    line_.emplace(varieties::parse_line(E_, F_, s.alpha));
    A_ = std::make_unique<GroupAlgebra>(cg_.group, F_, s.options.seed, s.options.retries);
    H_ = varieties::line_stabilizer(*line_);
    C_ = groups::centralizer(cg_.group, *E_->subgroup());
    N_ = groups::normalizer(cg_.group, *E_->subgroup());
    orbit_ = varieties::line_orbit(*line_);
    stable_ = H_->order() == cg_.group->order();
    window_ = s.options.window.value_or(static_cast<unsigned>(2 * s.field.p * C_->index()));
    if (stable_ && varieties::fp_independent(*line_) && C_->index() % s.field.p != 0) {
      chi_ = varieties::chi_from_line(*line_);
      u_ = varieties::equivariant_lift(*line_, *chi_);
    } else {
      u_ = varieties::shifted_unit(*line_);
    }
  }

  const Scenario& scenario() const { return s_; }
  const groups::CatalogGroup& cg() const { return cg_; }
  const FieldPtr& field() const { return F_; }
  const Line& line() const { return *line_; }
  const GroupAlgebra& A() const { return *A_; }
  const groups::Subgroup& H() const { return *H_; }
  const groups::Subgroup& C() const { return *C_; }
  const groups::Subgroup& N() const { return *N_; }
  const std::vector<Line>& orbit() const { return orbit_; }
  bool stable() const { return stable_; }
  unsigned window() const { return window_; }
  const std::optional<varieties::Character>& chi() const { return chi_; }
  const varieties::ShiftedElem& u() const { return u_; }

  const blocks::BlockPartition& bp() {
    if (!bp_) bp_ = blocks::block_partition(*A_);
    return *bp_;
  }
  const GroupAlgebra& AH() {
    if (!AH_) AH_ = std::make_unique<GroupAlgebra>(H_->group(), F_, s_.options.seed, s_.options.retries);
    return *AH_;
  }
  const blocks::BlockPartition& bpH() {
    if (!bpH_) bpH_ = blocks::block_partition(AH());
    return *bpH_;
  }
  const Module& X() {
    if (!X_) X_ = varieties::cyclic_quotient_module(u_.value);
    return *X_;
  }
  extblocks::StableStore& store() {
    if (!store_) store_ = std::make_unique<extblocks::StableStore>(*A_, bp());
    return *store_;
  }
  const std::vector<Module>& family() {
    if (!family_) family_ = extblocks::generating_family(*A_, bp(), X(), *line_);
    return *family_;
  }
  const extblocks::ExtBlockReport& ext() {
    if (!ext_) {
      extblocks::PartitionInput in;
      in.family = family();
      in.window = window_;
      in.H = H_.get();
      in.AH = &AH();
      in.bpH = &bpH();
      in.line = *line_;
      if (chi_) in.chi = &*chi_;
      ext_ = extblocks::ext_block_partition(store(), in);
    }
    return *ext_;
  }
  bool has_ext() const { return ext_.has_value(); }

 private:
  const Scenario& s_;
  groups::CatalogGroup cg_;
  FieldPtr F_;
  varieties::EBasisPtr E_;
  std::optional<Line> line_;
  std::unique_ptr<GroupAlgebra> A_;
  groups::SubgroupPtr H_, C_, N_;
  std::vector<Line> orbit_;
  bool stable_ = false;
  unsigned window_ = 0;
  std::optional<varieties::Character> chi_;
  varieties::ShiftedElem u_;
  std::optional<blocks::BlockPartition> bp_;
  std::unique_ptr<GroupAlgebra> AH_;
  std::optional<blocks::BlockPartition> bpH_;
  std::optional<Module> X_;
  std::unique_ptr<extblocks::StableStore> store_;
  std::optional<std::vector<Module>> family_;
  std::optional<extblocks::ExtBlockReport> ext_;
};

std::string field_name(const ffla::Field& F) {
  return "GF(" + std::to_string(F.characteristic()) + (F.degree() > 1 ? "^" + std::to_string(F.degree()) : "") + ")";
}

// Records a mismatch against an expectation.
template <class T>
void expect(CheckResult& c, const char* what, const std::optional<T>& expected, const T& actual) {
  if (!expected) return;
  c.result["expected"][what] = *expected;
  if (!(*expected == actual)) {
    c.passed = false;
    c.summary += std::string(" [expected ") + what + " differs]";
  }
}

std::map<std::string, std::size_t> named(const std::map<std::size_t, std::size_t>& m) {
  std::map<std::string, std::size_t> out;
  for (const auto& [b, n] : m) out[block_name(b)] = n;
  return out;
}

std::string format_counts(const std::map<std::string, std::size_t>& m) {
  std::string out = "{";
  for (const auto& [b, n] : m) out += (out.size() > 1 ? ", " : "") + b + ":" + std::to_string(n);
  return out + "}";
}

CheckResult check_blocks(Context& ctx) {
  CheckResult c{"blocks", true, "", J::object(), 0};
  const auto& bp = ctx.bp();
  const auto& bpH = ctx.bpH();
  c.result["kg"] = bp.to_json();
  c.result["kh"] = bpH.to_json();
  c.result["kg_blocks"] = bp.count();
  c.result["kh_blocks"] = bpH.count();
  c.summary = "kG has " + std::to_string(bp.count()) + " blocks, kH (|H| = " + std::to_string(ctx.H().order()) +
              ") has " + std::to_string(bpH.count());
  expect(c, "kg_blocks", ctx.scenario().expect.kg_blocks, bp.count());
  expect(c, "kh_blocks", ctx.scenario().expect.kh_blocks, bpH.count());
  return c;
}

CheckResult check_simples(Context& ctx) {
  CheckResult c{"simples", true, "", J::object(), 0};
  const auto& bp = ctx.bp();
  std::vector<std::size_t> dims, pims;
  for (const auto& S : bp.simples) dims.push_back(S.dim());
  for (const auto& P : bp.pims) pims.push_back(P.dim());
  c.result["dims"] = dims;
  c.result["end_dims"] = bp.end_dims;
  c.result["pim_dims"] = pims;
  c.result["split"] = bp.split;
  std::ostringstream os;
  os << bp.simples.size() << " simples of dimensions";
  for (auto d : dims) os << " " << d;
  os << (bp.split ? " (split)" : " (field not split)");
  c.summary = os.str();
  expect(c, "simple_dims", ctx.scenario().expect.simple_dims, dims);
  return c;
}

CheckResult check_ext_blocks(Context& ctx) {
  CheckResult c{"ext_blocks", true, "", J::object(), 0};
  const auto& r = ctx.ext();
  c.result = r.to_json();
  const auto graph = named(r.classes_per_kg_block());
  c.passed = r.refines_kg_blocks && (!r.agrees_with_benson || *r.agrees_with_benson);
  c.summary = "graph " + format_counts(graph);
  if (r.has_benson) c.summary += ", Benson " + format_counts(named(r.labels_per_kg_block()));
  c.summary += ", family " + std::to_string(r.family.size()) + ", window " + std::to_string(r.window);
  if (!r.refines_kg_blocks) c.summary += " [classes cross kG-blocks]";
  if (r.agrees_with_benson && !*r.agrees_with_benson) c.summary += " [graph and Benson labels disagree]";
  if (!r.agrees_with_benson) c.result["graph_status"] = "lower bound on merging";
  expect(c, "ext_blocks", ctx.scenario().expect.ext_blocks, graph);
  if (r.has_benson) expect(c, "ext_blocks", ctx.scenario().expect.ext_blocks, named(r.labels_per_kg_block()));
  return c;
}

CheckResult check_lemma_suite(Context& ctx) {
  CheckResult c{"lemma_suite", true, "", J::object(), 0};
  if (!ctx.chi()) {
    c.passed = false;
    c.summary = "hypotheses fail: the line is not G-stable or alpha is dependent over the prime field";
    return c;
  }
  const auto& bp = ctx.bp();
  // samples: first family members of distinct blocks, then the rest
  std::vector<Module> samples;
  std::set<std::size_t> seen;
  const auto& fam = ctx.family();
  for (const auto& M : fam) {
    const auto b = *blocks::block_of(bp, ctx.A(), M).block;
    if (seen.insert(b).second) samples.push_back(M);
  }
  for (const auto& M : fam) {
    if (samples.size() >= 3) break;
    if (std::find_if(samples.begin(), samples.end(), [&](const Module& S) { return &S == &M; }) == samples.end()) {
      samples.push_back(M);
    }
  }
  extblocks::LemmaInput in{ctx.X(), ctx.u(), *ctx.chi(), ctx.window(), samples, std::nullopt};
  auto checks = extblocks::verify_lemma_suite(ctx.store(), in);
  J arr = J::array();
  std::string names;
  for (const auto& lc : checks) {
    c.passed = c.passed && lc.passed;
    arr.push_back({{"name", lc.name}, {"passed", lc.passed}, {"data", lc.data}});
    names += " " + lc.name + (lc.passed ? "=ok" : "=FAILED");
  }
  c.result["chi_order"] = ctx.chi()->order();
  c.result["checks"] = arr;
  c.summary = "order of chi " + std::to_string(ctx.chi()->order()) + ";" + names;
  return c;
}

CheckResult check_benson(Context& ctx) {
  CheckResult c{"benson", true, "", J::object(), 0};
  const auto& H = ctx.H();
  const auto& AH = ctx.AH();
  const auto& line = ctx.line();
  const auto uH = varieties::restrict_to(ctx.u().value, H);
  const Module XH = varieties::cyclic_quotient_module(uH);
  std::vector<Module> samples;
  for (const auto& S : AH.simples()) {
    for (const auto& P : rep::decompose_full(rep::tensor(XH, S), AH.search()).pieces) {
      if (samples.size() < kBensonSamples && !AH.is_projective(P)) samples.push_back(P);
    }
  }
  J arr = J::array();
  std::size_t ok = 0;
  for (const auto& N : samples) {
    const Module up = rep::induce(N, H);
    const Module T = extblocks::benson_transport(up, H, line, ctx.A().search());
    const bool round_trip = rep::are_isomorphic(AH.projective_free_part(T), N, AH.search());
    std::size_t on_line = 0, pieces = 0;
    for (const auto& P : rep::decompose_full(rep::restrict(up, H), AH.search()).pieces) {
      ++pieces;
      on_line += varieties::line_in_module_variety(P, line, H);
    }
    const bool pass = round_trip && on_line == 1;
    ok += pass;
    arr.push_back({{"dim", N.dim()}, {"round_trip", round_trip}, {"summands", pieces}, {"on_line", on_line}});
  }
  c.passed = samples.size() >= 5 && ok == samples.size();
  c.result["samples"] = arr;
  c.summary = std::to_string(ok) + "/" + std::to_string(samples.size()) + " round trips through induction";
  return c;
}

CheckResult check_correspondence(Context& ctx) {
  CheckResult c{"correspondence", true, "", J::object(), 0};
  try {
    const auto map = extblocks::block_correspondence_map(ctx.ext());
    J m = J::object();
    std::map<std::size_t, std::size_t> fibre;
    for (const auto& [h, g] : map) {
      m["b" + std::to_string(h)] = block_name(g);
      ++fibre[g];
    }
    c.result["map"] = m;
    c.summary = "kH-blocks per kG-block " + format_counts(named(fibre));
  } catch (const Error& ex) {
    c.passed = false;
    c.summary = ex.what();
  }
  return c;
}

CheckResult check_stmod(Context& ctx) {
  CheckResult c{"stmod", true, "", J::object(), 0};
  const auto& bp = ctx.bp();
  const unsigned w = ctx.scenario().options.stmod_window;
  const auto parts = extblocks::simple_tate_partition(ctx.store(), w);
  std::vector<std::vector<std::size_t>> expected;
  for (std::size_t b = 0; b < bp.count(); ++b) {
    if (!bp.defect_zero[b]) expected.push_back(bp.blocks[b]);
  }
  c.passed = parts == expected;
  c.result["window"] = w;
  c.result["tate_classes"] = parts;
  c.result["positive_defect_blocks"] = expected;
  c.summary = std::to_string(parts.size()) + " Tate classes of simples, " + std::to_string(expected.size()) +
              " blocks of positive defect" + (c.passed ? "" : " [differ]");
  return c;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Report::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Report run_scenario(const Scenario& s) {
  Report r;
  r.scenario = s;
  Context ctx(s);
  const auto& G = *ctx.cg().group;
  J sum;
  sum["group"] = s.group;
  sum["group_order"] = G.order();
  sum["field"] = field_name(*ctx.field());
  sum["e_rank"] = ctx.line().alpha().size();
  sum["line"] = ctx.line().format();
  sum["centralizer_order"] = ctx.C().order();
  sum["normalizer_order"] = ctx.N().order();
  sum["orbit_size"] = ctx.orbit().size();
  sum["stabilizer_order"] = ctx.H().order();
  sum["orbit_stabilizer"] = ctx.orbit().size() * ctx.H().order() == ctx.N().order();
  sum["fp_independent"] = varieties::fp_independent(ctx.line());
  sum["stable"] = ctx.stable();
  sum["chi_order"] = ctx.chi() ? J(ctx.chi()->order()) : J(nullptr);
  // the shifted element is built inside kE, not in the radical of kG
  sum["shifted_element_in"] = "kE";
  sum["window"] = ctx.window();
  r.summary = sum;

  const std::map<std::string, std::function<CheckResult(Context&)>> table{
      {"blocks", check_blocks},         {"simples", check_simples}, {"ext_blocks", check_ext_blocks},
      {"lemma_suite", check_lemma_suite}, {"benson", check_benson},   {"correspondence", check_correspondence},
      {"stmod", check_stmod}};
  if (s.expect.orbit_size && *s.expect.orbit_size != ctx.orbit().size()) {
    r.checks.push_back({"orbit", false, "orbit size " + std::to_string(ctx.orbit().size()) + " differs from expected",
                        J::object(), 0});
  }
  for (const auto& name : s.checks) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult c;
    try {
      c = table.at(name)(ctx);
    } catch (const Error& ex) {
      c = {name, false, std::string("error: ") + ex.what(), J::object(), 0};
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.checks.push_back(std::move(c));
  }
  if (ctx.has_ext()) r.ext = ctx.ext();
  return r;
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  if (name == "text") return Format::Text;
  throw InvalidArgument("unknown format \"" + name + "\" (json, dot, text)");
}

std::string emit(const Report& r, Format f) {
  switch (f) {
    case Format::Json: {
      J j;
      j["tool"] = "modrep";
      j["version"] = kToolVersion;
      j["seed"] = r.scenario.options.seed;
      j["scenario"] = {{"name", r.scenario.name},
                       {"field", {{"p", r.scenario.field.p}, {"n", r.scenario.field.n}}},
                       {"group", r.scenario.group},
                       {"e_basis", r.scenario.e_basis},
                       {"alpha", r.scenario.alpha},
                       {"checks", r.scenario.checks}};
      j["summary"] = r.summary;
      J checks = J::array();
      for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"summary", c.summary}, {"result", c.result}});
      }
      j["checks"] = checks;
      j["passed"] = r.passed();
      return j.dump(2) + "\n";
    }
    case Format::Dot:
      if (!r.ext) throw InvalidArgument("dot output needs the ext_blocks check");
      return r.ext->to_dot();
    case Format::Text: {
      std::ostringstream os;
      os << r.scenario.name << ": " << r.summary["group"].get<std::string>() << " (order "
         << r.summary["group_order"].get<std::size_t>() << ") over " << r.summary["field"].get<std::string>()
         << ", line " << r.summary["line"].get<std::string>() << ", orbit " << r.summary["orbit_size"].get<std::size_t>()
         << "\n";
      for (const auto& c : r.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.summary << " (" << std::fixed
           << std::setprecision(2) << c.seconds << " s)\n";
      }
      os << (r.passed() ? "all checks passed" : "some checks failed") << "\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace modrep::cli
