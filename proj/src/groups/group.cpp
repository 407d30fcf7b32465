#include "modrep/groups/group.hpp"

#include <algorithm>
#include <map>

#include "modrep/error.hpp"

namespace modrep::groups {

GroupPtr Group::from_table(std::vector<Elem> table, std::vector<Elem> gens, std::string name) {
  std::size_t n = 0;
  while (n * n < table.size()) ++n;
  if (n == 0 || n * n != table.size()) throw InvalidArgument("Cayley table is not square");
  if (n > kMaxGroupOrder) throw InvalidArgument("group order exceeds " + std::to_string(kMaxGroupOrder));
  std::shared_ptr<Group> G(new Group());
  G->n_ = n;
  G->name_ = std::move(name);
  G->table_ = std::move(table);
  for (auto e : G->table_) {
    if (e >= n) throw InvalidArgument("Cayley table entry out of range");
  }
  for (auto g : gens) {
    if (g >= n) throw InvalidArgument("generator out of range");
  }
  G->gens_ = std::move(gens);

  // Latin square with identity 0.
  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    if (G->mul(0, a) != a || G->mul(a, 0) != a) throw InvalidArgument("index 0 is not the identity");
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (seen[G->mul(a, b)]++) throw InvalidArgument("Cayley table rows are not permutations");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (seen[G->mul(b, a)]++) throw InvalidArgument("Cayley table columns are not permutations");
    }
  }

  G->inv_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (G->mul(a, b) == 0) {
        if (G->mul(b, a) != 0) throw InvalidArgument("one-sided inverse in Cayley table");
        G->inv_[a] = b;
        break;
      }
    }
  }
  G->orders_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    std::uint64_t k = 1;
    for (Elem x = a; x != 0; x = G->mul(x, a)) ++k;
    G->orders_[a] = k;
  }

  G->parent_.assign(n, 0);
  G->via_.assign(n, 0);
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  G->bfs_.push_back(0);
  for (std::size_t head = 0; head < G->bfs_.size(); ++head) {
    const Elem cur = G->bfs_[head];
    for (std::size_t i = 0; i < G->gens_.size(); ++i) {
      const Elem nxt = G->mul(G->gens_[i], cur);
      if (reached[nxt]) continue;
      reached[nxt] = 1;
      G->parent_[nxt] = cur;
      G->via_[nxt] = i;
      G->bfs_.push_back(nxt);
    }
  }
  if (G->bfs_.size() != n) throw InvalidArgument("generators do not generate the group");
  // Light's test: associativity for each generator in the middle suffices
  // once the generators reach every element.
  for (auto g : G->gens_)
    for (Elem a = 0; a < n; ++a) {
      const Elem ag = G->mul(a, g);
      for (Elem c = 0; c < n; ++c) {
        if (G->mul(ag, c) != G->mul(a, G->mul(g, c))) throw InvalidArgument("Cayley table is not associative");
      }
    }
  return G;
}

Elem Group::pow(Elem a, long long k) const {
  const auto o = static_cast<long long>(orders_[a]);
  k %= o;
  if (k < 0) k += o;
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::vector<std::size_t> Group::word(Elem e) const {
  std::vector<std::size_t> w;
  for (; e != 0; e = parent_[e]) w.push_back(via_[e]);
  return w;
}

Elem Group::evaluate_word(const std::vector<std::size_t>& w) const {
  Elem r = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it >= gens_.size()) throw InvalidArgument("word uses an unknown generator");
    r = mul(gens_[*it], r);
  }
  return r;
}

bool Group::is_abelian() const noexcept {
  for (auto a : gens_)
    for (auto b : gens_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  return true;
}

GroupPtr group_from_generators(const std::vector<Perm>& perms, std::string name) {
  if (perms.empty()) return Group::from_table({0}, {}, std::move(name));
  const std::size_t d = perms[0].size();
  for (const auto& p : perms) {
    if (p.size() != d) throw InvalidArgument("permutations act on different sets");
    std::vector<char> hit(d, 0);
    for (auto x : p) {
      if (x >= d || hit[x]++) throw InvalidArgument("not a permutation");
    }
  }
  // (a*b)(i) = a(b(i)): apply b first.
  auto compose = [d](const Perm& a, const Perm& b) {
    Perm r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = a[b[i]];
    return r;
  };
  Perm id(d);
  for (std::size_t i = 0; i < d; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : perms) {
      Perm nxt = compose(g, elems[head]);
      if (index.count(nxt)) continue;
      if (elems.size() >= kMaxGroupOrder) throw InvalidArgument("group order exceeds " + std::to_string(kMaxGroupOrder));
      index.emplace(nxt, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(nxt));
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<Elem> gens;
  for (const auto& g : perms) gens.push_back(index.at(g));
  return Group::from_table(std::move(table), std::move(gens), std::move(name));
}

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group of order 0");
  if (n > kMaxGroupOrder) throw InvalidArgument("group order exceeds " + std::to_string(kMaxGroupOrder));
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return Group::from_table(std::move(table), std::move(gens), "C" + std::to_string(n));
}

GroupPtr elementary_abelian(std::uint32_t p, unsigned rank) {
  if (!ffla::is_prime(p)) throw InvalidArgument("elementary abelian group needs a prime");
  GroupPtr G = cyclic(1);
  for (unsigned i = 0; i < rank; ++i) G = i == 0 ? cyclic(p) : direct_product(G, cyclic(p));
  return G;
}

GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B) {
  const std::size_t na = A->order(), nb = B->order(), n = na * nb;
  if (n > kMaxGroupOrder) throw InvalidArgument("group order exceeds " + std::to_string(kMaxGroupOrder));
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem a = A->mul(static_cast<Elem>(x % na), static_cast<Elem>(y % na));
      const Elem b = B->mul(static_cast<Elem>(x / na), static_cast<Elem>(y / na));
      table[x * n + y] = static_cast<Elem>(a + na * b);
    }
  std::vector<Elem> gens;
  for (auto g : A->gens()) gens.push_back(g);
  for (auto g : B->gens()) gens.push_back(static_cast<Elem>(na * g));
  return Group::from_table(std::move(table), std::move(gens), A->name() + "x" + B->name());
}

GroupPtr semidirect(const GroupPtr& H, std::size_t m, const std::vector<Elem>& images) {
  if (m == 0) throw InvalidArgument("semidirect: m must be positive");
  const std::size_t nh = H->order(), n = nh * m;
  if (n > kMaxGroupOrder) throw InvalidArgument("group order exceeds " + std::to_string(kMaxGroupOrder));
  if (images.size() != H->gens().size()) throw InvalidArgument("semidirect: one image per generator of H");
  for (auto e : images) {
    if (e >= nh) throw InvalidArgument("semidirect: image out of range");
  }
  // phi(gen * parent) = phi(gen) * phi(parent) along the BFS tree.
  std::vector<Elem> phi(nh, 0);
  for (auto e : H->bfs_order()) {
    if (e != 0) phi[e] = H->mul(images[H->via(e)], phi[H->parent(e)]);
  }
  std::vector<char> hit(nh, 0);
  for (auto e : phi) {
    if (hit[e]++) throw InvalidArgument("semidirect: action is not bijective");
  }
  for (Elem a = 0; a < nh; ++a)
    for (Elem b = 0; b < nh; ++b) {
      if (phi[H->mul(a, b)] != H->mul(phi[a], phi[b])) throw InvalidArgument("semidirect: action is not a homomorphism");
    }
  std::vector<std::vector<Elem>> phis(m + 1, std::vector<Elem>(nh));
  for (Elem a = 0; a < nh; ++a) phis[0][a] = a;
  for (std::size_t c = 1; c <= m; ++c)
    for (Elem a = 0; a < nh; ++a) phis[c][a] = phi[phis[c - 1][a]];
  if (phis[m] != phis[0]) throw InvalidArgument("semidirect: order of the action does not divide m");

  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t h1 = x % nh, c1 = x / nh, h2 = y % nh, c2 = y / nh;
      const Elem h = H->mul(static_cast<Elem>(h1), phis[c1][h2]);
      table[x * n + y] = static_cast<Elem>(h + nh * ((c1 + c2) % m));
    }
  std::vector<Elem> gens = H->gens();
  if (m > 1) gens.push_back(static_cast<Elem>(nh));
  return Group::from_table(std::move(table), std::move(gens), H->name() + ":C" + std::to_string(m));
}

namespace {

std::vector<Elem> closure(const Group& G, const std::vector<Elem>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<Elem> elems{0};
  in[0] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto g : gens) {
      const Elem nxt = G.mul(g, elems[head]);
      if (!in[nxt]) {
        in[nxt] = 1;
        elems.push_back(nxt);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, const std::vector<Elem>& gens) : parent_(std::move(parent)) {
  for (auto g : gens) {
    if (g >= parent_->order()) throw InvalidArgument("subgroup generator out of range");
  }
  const Group& G = *parent_;
  elements_ = closure(G, gens);
  const std::size_t n = elements_.size();
  local_.assign(G.order(), -1);
  for (std::size_t i = 0; i < n; ++i) local_[elements_[i]] = static_cast<long>(i);
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>(local_[G.mul(elements_[a], elements_[b])]);
  std::vector<Elem> local_gens;
  for (auto g : gens) {
    if (g != 0) local_gens.push_back(static_cast<Elem>(local_[g]));
  }
  group_ = Group::from_table(std::move(table), std::move(local_gens));

  coset_.assign(G.order(), 0);
  part_.assign(G.order(), 0);
  std::vector<char> covered(G.order(), 0);
  for (Elem g = 0; g < G.order(); ++g) {
    if (covered[g]) continue;
    const std::size_t j = transversal_.size();
    transversal_.push_back(g);
    for (std::size_t s = 0; s < n; ++s) {
      const Elem x = G.mul(g, elements_[s]);
      covered[x] = 1;
      coset_[x] = j;
      part_[x] = static_cast<Elem>(s);
    }
  }
}

Elem Subgroup::to_local(Elem g) const {
  if (g >= local_.size() || local_[g] < 0) throw InvalidArgument("element is not in the subgroup");
  return static_cast<Elem>(local_[g]);
}

SubgroupPtr subgroup(const GroupPtr& G, const std::vector<Elem>& gens) {
  return std::make_shared<const Subgroup>(G, gens);
}

SubgroupPtr subgroup_of_elements(const GroupPtr& G, const std::vector<Elem>& elems) {
  std::vector<Elem> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Greedy generating set: add an element whenever it is not yet covered.
  std::vector<Elem> gens;
  std::vector<Elem> cur{0};
  for (auto e : sorted) {
    if (std::binary_search(cur.begin(), cur.end(), e)) continue;
    gens.push_back(e);
    cur = closure(*G, gens);
  }
  if (cur != sorted) throw InvalidArgument("element set is not a subgroup");
  return subgroup(G, gens);
}

SubgroupPtr centralizer(const GroupPtr& G, const Subgroup& S) {
  std::vector<Elem> c;
  for (Elem g = 0; g < G->order(); ++g) {
    bool ok = true;
    for (auto s : S.elements()) {
      if (G->mul(g, s) != G->mul(s, g)) {
        ok = false;
        break;
      }
    }
    if (ok) c.push_back(g);
  }
  return subgroup_of_elements(G, c);
}

SubgroupPtr normalizer(const GroupPtr& G, const Subgroup& S) {
  std::vector<Elem> nm;
  for (Elem g = 0; g < G->order(); ++g) {
    bool ok = true;
    for (auto s : S.elements()) {
      if (!S.contains(G->conj(g, s))) {
        ok = false;
        break;
      }
    }
    if (ok) nm.push_back(g);
  }
  return subgroup_of_elements(G, nm);
}

SubgroupPtr sylow(const GroupPtr& G, std::uint32_t p) {
  if (!ffla::is_prime(p)) throw InvalidArgument("sylow: p must be prime");
  std::size_t target = 1;
  for (std::size_t n = G->order(); n % p == 0; n /= p) target *= p;
  auto is_p_power = [p](std::uint64_t v) {
    while (v % p == 0) v /= p;
    return v == 1;
  };
  std::vector<Elem> gens;
  SubgroupPtr P = subgroup(G, gens);
  while (P->order() < target) {
    auto N = normalizer(G, *P);
    bool grown = false;
    for (auto g : N->elements()) {
      if (P->contains(g) || !is_p_power(G->element_order(g))) continue;
      gens.push_back(g);
      P = subgroup(G, gens);
      grown = true;
      break;
    }
    if (!grown) throw AssertionFailure("sylow: no p-element in the normalizer");
  }
  return P;
}

ElementaryAbelianBasis::ElementaryAbelianBasis(GroupPtr G, std::vector<Elem> basis, std::uint32_t p)
    : G_(std::move(G)), basis_(std::move(basis)), p_(p) {
  for (auto x : basis_) {
    if (x >= G_->order() || G_->element_order(x) != p_) throw InvalidArgument("basis element does not have order p");
    for (auto y : basis_) {
      if (G_->mul(x, y) != G_->mul(y, x)) throw InvalidArgument("basis elements do not commute");
    }
  }
  E_ = groups::subgroup(G_, basis_);
  std::size_t expected = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) expected *= p_;
  if (E_->order() != expected) throw InvalidArgument("basis elements are not independent");
  code_.assign(G_->order(), -1);
  for (std::size_t c = 0; c < expected; ++c) {
    std::vector<std::uint32_t> ex(basis_.size());
    std::size_t v = c;
    for (auto& e : ex) {
      e = static_cast<std::uint32_t>(v % p_);
      v /= p_;
    }
    code_[element(ex)] = static_cast<long>(c);
  }
}

std::vector<std::uint32_t> ElementaryAbelianBasis::exponents(Elem e) const {
  if (e >= code_.size() || code_[e] < 0) throw InvalidArgument("element is not in E");
  std::vector<std::uint32_t> ex(basis_.size());
  auto v = static_cast<std::size_t>(code_[e]);
  for (auto& x : ex) {
    x = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return ex;
}

Elem ElementaryAbelianBasis::element(const std::vector<std::uint32_t>& exps) const {
  if (exps.size() != basis_.size()) throw InvalidArgument("exponent vector has the wrong length");
  Elem r = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) r = G_->mul(r, G_->pow(basis_[i], exps[i]));
  return r;
}

ffla::Matrix conj_matrix_on_E(const ElementaryAbelianBasis& E, Elem g) {
  const Group& G = *E.group();
  for (auto x : E.basis()) {
    if (!E.subgroup()->contains(G.conj(g, x))) throw InvalidArgument("element does not normalize E");
  }
  auto Fp = ffla::Field::make(E.prime(), 1);
  const std::size_t r = E.rank();
  ffla::Matrix M(Fp, r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto ex = E.exponents(G.conj(g, E.basis()[i]));
    for (std::size_t j = 0; j < r; ++j) M(j, i) = ex[j];
  }
  return M;
}

}  // namespace modrep::groups
