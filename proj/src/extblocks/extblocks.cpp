#include "modrep/extblocks/extblocks.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "modrep/error.hpp"
#include "modrep/rep/decompose.hpp"
#include "modrep/rep/hom.hpp"

namespace modrep::extblocks {

namespace {

constexpr std::size_t kVarietyLineSample = 128;

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void unite(std::vector<std::size_t>& parent, std::size_t a, std::size_t b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

std::vector<std::vector<std::size_t>> components(std::vector<std::size_t>& parent) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<long> id(parent.size(), -1);
  for (std::size_t i = 0; i < parent.size(); ++i) {
    const auto r = find_root(parent, i);
    if (id[r] < 0) {
      id[r] = static_cast<long>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(id[r])].push_back(i);
  }
  return out;
}

std::string block_name(std::size_t b) { return "B" + std::to_string(b); }

}  // namespace

std::size_t phom_dim(const GroupAlgebra& A, const Module& M, const Module& N) { return A.phom_dim(M, N); }

std::size_t stable_hom_dim(const GroupAlgebra& A, const Module& M, const Module& N) {
  return A.stable_hom_dim(M, N);
}

std::vector<std::size_t> tate_ext_window(const GroupAlgebra& A, const Module& M, const Module& N, unsigned w) {
  std::vector<std::size_t> out(2 * w + 1, 0);
  Module up = A.projective_free_part(M), down = up;
  out[w] = A.stable_hom_dim(up, N);
  for (unsigned i = 1; i <= w; ++i) {
    up = A.omega(up);
    down = A.omega_inv(down);
    out[w + i] = A.stable_hom_dim(up, N);
    out[w - i] = A.stable_hom_dim(down, N);
  }
  return out;
}

StableStore::StableStore(const GroupAlgebra& A, const BlockPartition& bp) : A_(A), bp_(bp) {}

std::size_t StableStore::add(const Module& M) {
  const auto mem = blocks::block_of(bp_, A_, M);
  if (!mem.block) throw InvalidArgument("StableStore: module meets several blocks");
  for (std::size_t i = 0; i < mods_.size(); ++i) {
    if (blocks_[i] == *mem.block && mods_[i].dim() == M.dim() && rep::isomorphic_indecomposables(mods_[i], M)) return i;
  }
  if (A_.is_projective(M)) throw InvalidArgument("StableStore: module is projective");
  mods_.push_back(M);
  blocks_.push_back(*mem.block);
  next_.emplace_back();
  prev_.emplace_back();
  return mods_.size() - 1;
}

std::size_t StableStore::omega(std::size_t i, int t) {
  for (; t > 0; --t) {
    if (!next_[i]) {
      const auto j = add(A_.omega(mods_[i]));
      next_[i] = j;
      prev_[j] = i;
    }
    i = *next_[i];
  }
  for (; t < 0; ++t) {
    if (!prev_[i]) {
      const auto j = add(A_.omega_inv(mods_[i]));
      prev_[i] = j;
      next_[j] = i;
    }
    i = *prev_[i];
  }
  return i;
}

std::size_t StableStore::stable_hom(std::size_t i, std::size_t j) {
  if (blocks_[i] != blocks_[j]) return 0;
  auto key = std::make_pair(i, j);
  auto it = sthom_.find(key);
  if (it != sthom_.end()) return it->second;
  const auto d = A_.stable_hom_dim(mods_[i], mods_[j]);
  sthom_.emplace(key, d);
  return d;
}

std::vector<std::size_t> StableStore::window(std::size_t i, std::size_t j, unsigned w) {
  std::vector<std::size_t> out;
  for (int t = -static_cast<int>(w); t <= static_cast<int>(w); ++t) out.push_back(stable_hom(omega(i, t), j));
  return out;
}

std::vector<std::vector<std::size_t>> simple_tate_partition(StableStore& store, unsigned w) {
  const auto& bp = store.partition();
  std::vector<std::size_t> simples, ids;
  for (std::size_t i = 0; i < bp.simples.size(); ++i) {
    if (bp.defect_zero[bp.block_of_simple[i]]) continue;
    simples.push_back(i);
    ids.push_back(store.add(bp.simples[i]));
  }
  std::vector<std::size_t> parent(simples.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t a = 0; a < simples.size(); ++a)
    for (std::size_t b = 0; b < simples.size(); ++b) {
      const auto win = store.window(ids[a], ids[b], w);
      if (std::any_of(win.begin(), win.end(), [](std::size_t d) { return d != 0; })) unite(parent, a, b);
    }
  auto out = components(parent);
  for (auto& cls : out)
    for (auto& i : cls) i = simples[i];
  return out;
}

std::vector<Module> generating_family(const GroupAlgebra& A, const BlockPartition& bp, const Module& X,
                                      const Line& line, std::optional<std::size_t> b) {
  const Module Xd = rep::dual(X);
  std::vector<Module> out;
  for (const auto& S : bp.simples) {
    auto d = rep::decompose_full(rep::tensor(Xd, S), A.search());
    for (const auto& P : d.pieces) {
      if (A.is_projective(P)) continue;
      const auto mem = blocks::block_of(bp, A, P);
      if (!mem.block) throw AssertionFailure("generating_family: indecomposable summand meets two blocks");
      if (b && *mem.block != *b) continue;
      bool seen = false;
      for (const auto& Q : out) {
        if (Q.dim() == P.dim() && rep::isomorphic_indecomposables(Q, P)) {
          seen = true;
          break;
        }
      }
      if (!seen) out.push_back(P.relabeled("F" + std::to_string(out.size())));
    }
  }
  const auto orbit = varieties::line_orbit(line);
  const auto lines = varieties::sample_lines(line.E(), line.field(), kVarietyLineSample);
  for (const auto& M : out) {
    for (const auto& l : lines) {
      const bool in_orbit = std::find(orbit.begin(), orbit.end(), l) != orbit.end();
      if (varieties::line_in_module_variety(M, l) != in_orbit) {
        throw AssertionFailure("generating_family: rank variety of a member is not the orbit of " + line.format());
      }
    }
  }
  return out;
}

Module benson_transport(const Module& M, const groups::Subgroup& H, const Line& line, rep::Search& search) {
  const Module R = rep::restrict(M, H);
  auto d = rep::decompose_full(R, search);
  std::vector<Module> keep;
  for (const auto& P : d.pieces) {
    if (varieties::line_in_module_variety(P, line, H)) keep.push_back(P);
  }
  return rep::direct_sum(keep, H.group(), M.field());
}

std::map<std::size_t, std::size_t> ExtBlockReport::classes_per_kg_block() const {
  std::map<std::size_t, std::set<std::size_t>> seen;
  for (const auto& m : family) seen[m.kg_block].insert(m.graph_class);
  std::map<std::size_t, std::size_t> out;
  for (const auto& [b, s] : seen) out[b] = s.size();
  return out;
}

std::map<std::size_t, std::size_t> ExtBlockReport::labels_per_kg_block() const {
  std::map<std::size_t, std::set<std::size_t>> seen;
  for (const auto& m : family) {
    if (m.kh_label) seen[m.kg_block].insert(*m.kh_label);
  }
  std::map<std::size_t, std::size_t> out;
  for (const auto& [b, s] : seen) out[b] = s.size();
  return out;
}

nlohmann::ordered_json ExtBlockReport::to_json() const {
  using J = nlohmann::ordered_json;
  J j;
  j["window"] = window;
  J fam = J::array();
  for (const auto& m : family) {
    J e;
    e["tag"] = m.tag;
    e["origin"] = m.origin;
    e["dim"] = m.module.dim();
    e["kg_block"] = block_name(m.kg_block);
    e["kh_label"] = m.kh_label ? J("b" + std::to_string(*m.kh_label)) : J(nullptr);
    e["class"] = m.graph_class;
    fam.push_back(e);
  }
  j["family"] = fam;
  j["graph_partition"] = graph_partition;
  J per = J::object();
  for (const auto& [b, n] : classes_per_kg_block()) per[block_name(b)] = n;
  j["classes_per_kg_block"] = per;
  if (has_benson) {
    J lab = J::object();
    for (const auto& [b, n] : labels_per_kg_block()) lab[block_name(b)] = n;
    j["labels_per_kg_block"] = lab;
  }
  j["refines_kg_blocks"] = refines_kg_blocks;
  j["agrees_with_benson"] = agrees_with_benson ? J(*agrees_with_benson) : J(nullptr);
  J edg = J::array();
  for (const auto& e : edges) edg.push_back({e.from, e.to, e.degree, e.dim});
  j["tate_edges"] = edg;
  J lem = J::array();
  for (const auto& c : lemma_results) lem.push_back({{"name", c.name}, {"passed", c.passed}, {"data", c.data}});
  j["lemmas"] = lem;
  return j;
}

std::string ExtBlockReport::to_dot() const {
  std::ostringstream os;
  os << "digraph ext_blocks {\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& m = family[i];
    os << "  " << m.tag << " [label=\"" << m.module.dim() << ", " << block_name(m.kg_block) << ", "
       << (m.kh_label ? "b" + std::to_string(*m.kh_label) : std::string("-")) << "\" group=" << m.graph_class
       << "];\n";
  }
  for (const auto& e : edges) {
    os << "  " << family[e.from].tag << " -> " << family[e.to].tag << " [label=\"" << e.degree << ":" << e.dim
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

ExtBlockReport ext_block_partition(StableStore& store, const PartitionInput& in) {
  if (in.family.empty()) throw InvalidArgument("ext_block_partition: empty family");
  const GroupAlgebra& A = store.algebra();
  ExtBlockReport rep;
  rep.window = in.window;
  const int w = static_cast<int>(in.window);

  // breadth-first closure; ids are store indices, members in discovery order
  std::vector<std::size_t> ids;
  std::map<std::size_t, std::size_t> member_of;
  std::deque<std::pair<std::size_t, int>> queue;
  auto admit = [&](std::size_t id, int dist, std::string origin) {
    if (member_of.count(id)) return;
    member_of[id] = ids.size();
    ids.push_back(id);
    FamilyMember m;
    m.module = store.module(id);
    m.tag = "m" + std::to_string(member_of[id]);
    m.origin = std::move(origin);
    m.kg_block = store.block(id);
    rep.family.push_back(std::move(m));
    queue.emplace_back(id, dist);
  };
  for (std::size_t k = 0; k < in.family.size(); ++k) admit(store.add(in.family[k]), 0, "seed");
  const Module Y1 = in.chi ? varieties::character_module(*in.chi, 1) : Module();
  while (!queue.empty()) {
    const auto [id, dist] = queue.front();
    queue.pop_front();
    const std::string tag = rep.family[member_of[id]].tag;
    if (dist < w) {
      admit(store.omega(id, 1), dist + 1, "omega(" + tag + ")");
      admit(store.omega(id, -1), dist + 1, "omega^-1(" + tag + ")");
    }
    if (in.chi) admit(store.add(rep::tensor(Y1, store.module(id))), dist, "Y1(" + tag + ")");
  }

  const std::size_t n = ids.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (store.block(ids[a]) != store.block(ids[b])) continue;
      const auto win = store.window(ids[a], ids[b], in.window);
      for (int t = -w; t <= w; ++t) {
        const auto d = win[static_cast<std::size_t>(t + w)];
        if (!d) continue;
        rep.edges.push_back({a, b, t, d});
        unite(parent, a, b);
      }
    }
  rep.graph_partition = components(parent);
  for (std::size_t c = 0; c < rep.graph_partition.size(); ++c)
    for (auto i : rep.graph_partition[c]) rep.family[i].graph_class = c;

  rep.refines_kg_blocks = true;
  for (const auto& cls : rep.graph_partition)
    for (auto i : cls) rep.refines_kg_blocks = rep.refines_kg_blocks && rep.family[i].kg_block == rep.family[cls[0]].kg_block;

  if (in.H && in.AH && in.bpH && in.line) {
    rep.has_benson = true;
    bool agree = true;
    for (auto& m : rep.family) {
      const Module T = benson_transport(m.module, *in.H, *in.line, A.search());
      if (T.dim() > 0) m.kh_label = blocks::block_of(*in.bpH, *in.AH, T).block;
      agree = agree && m.kh_label.has_value();
    }
    for (std::size_t a = 0; a < n && agree; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const bool same_class = rep.family[a].graph_class == rep.family[b].graph_class;
        const bool same_label = rep.family[a].kh_label == rep.family[b].kh_label;
        if (same_class != same_label) {
          agree = false;
          break;
        }
      }
    rep.agrees_with_benson = agree;
  }
  return rep;
}

std::map<std::size_t, std::size_t> block_correspondence_map(const ExtBlockReport& report) {
  if (!report.has_benson) throw InvalidArgument("block_correspondence_map: report has no Benson labels");
  std::map<std::size_t, std::size_t> out;
  for (const auto& m : report.family) {
    if (!m.kh_label) continue;
    auto [it, fresh] = out.emplace(*m.kh_label, m.kg_block);
    if (!fresh && it->second != m.kg_block) {
      throw AssertionFailure("block_correspondence_map: label b" + std::to_string(*m.kh_label) + " meets blocks " +
                             block_name(it->second) + " and " + block_name(m.kg_block) + " (member " + m.tag + ")");
    }
  }
  return out;
}

std::vector<LemmaCheck> verify_lemma_suite(StableStore& store, const LemmaInput& in) {
  using J = nlohmann::ordered_json;
  const GroupAlgebra& A = store.algebra();
  const BlockPartition& bp = store.partition();
  const std::uint32_t p = A.characteristic();
  const long order = static_cast<long>(in.chi.order());
  const int w = static_cast<int>(in.window);
  std::vector<LemmaCheck> out;

  {
    LemmaCheck c{"window_nonvanishing", !in.samples.empty(), J::array()};
    for (const auto& M : in.samples) {
      const auto id = store.add(M);
      std::vector<std::size_t> win;
      for (int t = -w; t <= w; ++t) win.push_back(A.stable_hom_dim(store.module(store.omega(id, t)), in.X));
      const bool ok = std::none_of(win.begin(), win.end(), [](std::size_t d) { return d == 0; });
      c.passed = c.passed && ok;
      c.data.push_back({{"dim", M.dim()}, {"window", win}, {"passed", ok}});
    }
    out.push_back(std::move(c));
  }

  std::vector<std::pair<std::size_t, Module>> xs;  // simple index, X_j
  for (std::size_t b = 0; b < bp.count(); ++b) {
    if (bp.defect_zero[b]) continue;
    auto mods = varieties::xi_modules(A, bp, in.u.value, b);
    for (std::size_t k = 0; k < mods.size(); ++k) xs.emplace_back(bp.blocks[b][k], std::move(mods[k]));
  }
  auto Y = [&](long i) { return varieties::character_module(in.chi, i); };
  auto iso = [&](const Module& M, const Module& N) {
    return M.dim() == N.dim() && rep::isomorphic_indecomposables(M, N);
  };

  {
    LemmaCheck c{p == 2 ? "omega_twist" : "omega2_twist", true, J::array()};
    for (const auto& [j, Xj] : xs) {
      const auto id = store.add(Xj);
      J row;
      row["simple"] = j;
      if (p == 2) {
        const long tmax = std::max<long>(3, order);
        std::vector<bool> ok;
        for (long t = 1; t <= tmax; ++t) {
          ok.push_back(iso(store.module(store.omega(id, static_cast<int>(t))), rep::tensor(Y(t), Xj)));
          c.passed = c.passed && ok.back();
        }
        row["omega_t_matches_Y_t"] = ok;
      } else {
        const bool ok = iso(store.module(store.omega(id, 2)), rep::tensor(Y(p), Xj));
        row["omega2_matches_Y_p"] = ok;
        c.passed = c.passed && ok;
      }
      // exponents e with Omega^2t(X_j) = Y_e (x) X_j
      J exps = J::array();
      for (long t = 1; t <= order; ++t) {
        const Module& Om = store.module(store.omega(id, static_cast<int>(2 * t)));
        J es = J::array();
        for (long e = 0; e < order; ++e) {
          if (iso(Om, rep::tensor(Y(e), Xj))) es.push_back(e);
        }
        exps.push_back({{"t", t}, {"e", es}, {"expected", (static_cast<long>(p) * t) % order}});
      }
      row["twist_exponents"] = exps;
      c.data.push_back(row);
    }
    out.push_back(std::move(c));
  }

  {
    LemmaCheck c{"linked_pims_stable_hom", true, J::array()};
    for (const auto& [i, Xi] : xs)
      for (const auto& [j, Xj] : xs) {
        if (bp.block_of_simple[i] != bp.block_of_simple[j]) continue;
        if (in.pair_block && bp.block_of_simple[i] != *in.pair_block) continue;
        if (rep::hom_dim(bp.pims[i], bp.pims[j]) == 0) continue;
        std::optional<std::pair<long, long>> witness;
        for (long k = 0; k < order && !witness; ++k)
          for (long l = 0; l < order && !witness; ++l) {
            if (A.stable_hom_dim(rep::tensor(Y(k), Xi), rep::tensor(Y(l), Xj)) > 0) witness = std::make_pair(k, l);
          }
        c.passed = c.passed && witness.has_value();
        c.data.push_back({{"pair", {i, j}},
                          {"witness", witness ? J{witness->first, witness->second} : J(nullptr)}});
      }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace modrep::extblocks
