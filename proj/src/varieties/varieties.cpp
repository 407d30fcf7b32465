#include "modrep/varieties/varieties.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "modrep/error.hpp"
#include "modrep/ffla/echelon.hpp"
#include "modrep/rep/decompose.hpp"

namespace modrep::varieties {

using ffla::Matrix;
using ffla::Vector;

namespace {

void require_same(const AlgebraElem& a, const AlgebraElem& b) {
  if (a.group != b.group || !ffla::same_field(a.field, b.field)) {
    throw InvalidArgument("group algebra elements over different groups or fields");
  }
}

// A alpha with the GF(p) entries of A read in the prime subfield of F.
std::vector<Scalar> act(const ffla::Field& F, const Matrix& A, const std::vector<Scalar>& alpha) {
  std::vector<Scalar> out(alpha.size(), 0);
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      out[j] = F.add(out[j], F.mul(F.from_int(A(j, i)), alpha[i]));
    }
  return out;
}

// Coefficients on E (local indices) or nullopt when the support leaves E.
std::optional<Vector> on_E(const EBasisPtr& E, const AlgebraElem& a) {
  const auto& S = *E->subgroup();
  Vector v(S.order(), 0);
  for (Elem g = 0; g < a.coeffs.size(); ++g) {
    if (!a.coeffs[g]) continue;
    if (!S.contains(g)) return std::nullopt;
    v[S.to_local(g)] = a.coeffs[g];
  }
  return v;
}

}  // namespace

Line::Line(EBasisPtr E, FieldPtr F, std::vector<Scalar> alpha) : E_(std::move(E)), F_(std::move(F)), alpha_(std::move(alpha)) {
  if (alpha_.size() != E_->rank()) throw InvalidArgument("line: alpha length differs from the rank of E");
  if (F_->characteristic() != E_->prime()) throw InvalidArgument("line: field characteristic differs from p");
  auto lead = std::find_if(alpha_.begin(), alpha_.end(), [](Scalar s) { return s != 0; });
  if (lead == alpha_.end()) throw InvalidArgument("line: alpha is zero");
  const Scalar s = F_->inv(*lead);
  for (auto& a : alpha_) a = F_->mul(a, s);
}

std::string Line::format() const {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (i) out += ", ";
    out += F_->format(alpha_[i]);
  }
  return out + ")";
}

std::vector<Line> sample_lines(const EBasisPtr& E, const FieldPtr& F, std::size_t limit) {
  const std::size_t r = E->rank();
  const std::uint64_t q = F->order();
  // lines with leading 1 at position lead: q^(r - 1 - lead) of them
  std::vector<std::uint64_t> counts(r);
  std::uint64_t total = 0;
  for (std::size_t lead = 0; lead < r; ++lead) {
    std::uint64_t c = 1;
    for (std::size_t i = lead + 1; i < r; ++i) c *= q;
    counts[lead] = c;
    total += c;
  }
  auto nth = [&](std::uint64_t k) {
    std::size_t lead = 0;
    while (k >= counts[lead]) k -= counts[lead++];
    std::vector<Scalar> alpha(r, 0);
    alpha[lead] = 1;
    for (std::size_t i = r; i-- > lead + 1;) {
      alpha[i] = static_cast<Scalar>(k % q);
      k /= q;
    }
    return Line(E, F, std::move(alpha));
  };
  std::vector<Line> out;
  const std::uint64_t n = std::min<std::uint64_t>(total, limit);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(nth(n == total ? i : i * total / n));
  return out;
}

Line parse_line(const EBasisPtr& E, const FieldPtr& F, std::string_view text) {
  std::vector<Scalar> alpha;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.empty()) throw InvalidArgument("line: empty coordinate in \"" + std::string(text) + "\"");
    alpha.push_back(F->parse(tok));
    pos = comma + 1;
  }
  return Line(E, F, std::move(alpha));
}

AlgebraElem AlgebraElem::operator*(const AlgebraElem& o) const {
  require_same(*this, o);
  const auto& K = *field;
  AlgebraElem out = algebra_zero(group, field);
  for (Elem a = 0; a < coeffs.size(); ++a) {
    if (!coeffs[a]) continue;
    for (Elem b = 0; b < o.coeffs.size(); ++b) {
      if (!o.coeffs[b]) continue;
      auto& c = out.coeffs[group->mul(a, b)];
      c = K.add(c, K.mul(coeffs[a], o.coeffs[b]));
    }
  }
  return out;
}

AlgebraElem AlgebraElem::operator+(const AlgebraElem& o) const {
  require_same(*this, o);
  AlgebraElem out = *this;
  for (std::size_t g = 0; g < coeffs.size(); ++g) out.coeffs[g] = field->add(coeffs[g], o.coeffs[g]);
  return out;
}

AlgebraElem AlgebraElem::operator-(const AlgebraElem& o) const { return *this + o.scaled(field->neg(1)); }

AlgebraElem AlgebraElem::scaled(Scalar s) const {
  AlgebraElem out = *this;
  for (auto& c : out.coeffs) c = field->mul(c, s);
  return out;
}

AlgebraElem AlgebraElem::power(unsigned e) const {
  AlgebraElem out = algebra_basis(group, field, 0);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

AlgebraElem AlgebraElem::conjugated(Elem g) const {
  AlgebraElem out = algebra_zero(group, field);
  for (Elem h = 0; h < coeffs.size(); ++h) out.coeffs[group->conj(g, h)] = coeffs[h];
  return out;
}

Scalar AlgebraElem::augmentation() const {
  Scalar s = 0;
  for (auto c : coeffs) s = field->add(s, c);
  return s;
}

bool AlgebraElem::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Scalar c) { return c == 0; });
}

AlgebraElem algebra_zero(const GroupPtr& G, const FieldPtr& F) { return {G, F, std::vector<Scalar>(G->order(), 0)}; }

AlgebraElem algebra_basis(const GroupPtr& G, const FieldPtr& F, Elem g) {
  auto out = algebra_zero(G, F);
  out.coeffs[g] = 1;
  return out;
}

AlgebraElem restrict_to(const AlgebraElem& a, const groups::Subgroup& S) {
  if (a.group == S.group()) return a;
  if (a.group != S.parent()) throw InvalidArgument("restrict_to: element is not over the parent group");
  auto out = algebra_zero(S.group(), a.field);
  for (Elem g = 0; g < a.coeffs.size(); ++g) {
    if (!a.coeffs[g]) continue;
    if (!S.contains(g)) throw InvalidArgument("restrict_to: support leaves the subgroup");
    out.coeffs[S.to_local(g)] = a.coeffs[g];
  }
  return out;
}

ShiftedElem shifted_unit(const Line& line) {
  const auto& K = *line.field();
  auto u = algebra_zero(line.E()->group(), line.field());
  for (std::size_t i = 0; i < line.alpha().size(); ++i) {
    const Scalar a = line.alpha()[i];
    auto& c = u.coeffs[line.E()->basis()[i]];
    c = K.add(c, a);
    u.coeffs[0] = K.sub(u.coeffs[0], a);
  }
  return {line.E(), std::move(u)};
}

bool in_rad_square(const EBasisPtr& E, const AlgebraElem& a) {
  auto v = on_E(E, a);
  if (!v) return false;
  const auto& S = *E->subgroup();
  const auto& SG = *S.group();
  const auto& K = *a.field;
  const std::size_t n = S.order();
  ffla::EchelonBasis eb(a.field, n);
  // (x - 1)(y - 1) = xy - x - y + 1
  for (Elem x = 1; x < n; ++x)
    for (Elem y = x; y < n; ++y) {
      Vector w(n, 0);
      w[SG.mul(x, y)] = K.add(w[SG.mul(x, y)], 1);
      w[x] = K.sub(w[x], 1);
      w[y] = K.sub(w[y], 1);
      w[0] = K.add(w[0], 1);
      eb.insert(w);
    }
  return eb.contains(*v);
}

bool fp_independent(const Line& line) {
  const auto& K = *line.field();
  const auto Fp = ffla::Field::make(K.characteristic(), 1);
  Matrix C(Fp, line.alpha().size(), K.degree());
  for (std::size_t i = 0; i < line.alpha().size(); ++i) {
    const auto digits = K.coefficients(line.alpha()[i]);
    for (std::size_t j = 0; j < digits.size() && j < K.degree(); ++j) C(i, j) = digits[j];
  }
  return ffla::rank(C) == line.alpha().size();
}

bool is_free_over(const Module& M, const AlgebraElem& u) {
  if (u.group != M.group() || !ffla::same_field(u.field, M.field())) {
    throw InvalidArgument("is_free_over: element and module live over different algebras");
  }
  const std::uint32_t p = M.field()->characteristic();
  if (M.dim() % p != 0) return false;
  if (M.dim() == 0) return true;
  const Matrix U = M.algebra_element(u.coeffs);
  return ffla::rank(ffla::power(U, p - 1)) * p == M.dim();
}

bool line_in_module_variety(const Module& M, const Line& line) {
  const auto u = shifted_unit(line).value;
  if (M.group() == u.group) return !is_free_over(M, u);
  return line_in_module_variety(M, line, *line.E()->subgroup());
}

bool line_in_module_variety(const Module& M, const Line& line, const groups::Subgroup& S) {
  if (M.group() != S.group()) throw InvalidArgument("line_in_module_variety: module is not over the subgroup");
  return !is_free_over(M, restrict_to(shifted_unit(line).value, S));
}

std::vector<Line> line_orbit(const Line& line) {
  const auto& E = *line.E();
  auto N = groups::normalizer(E.group(), *E.subgroup());
  std::set<Line> orbit;
  for (auto g : N->elements()) {
    orbit.insert(Line(line.E(), line.field(), act(*line.field(), groups::conj_matrix_on_E(E, g), line.alpha())));
  }
  return {orbit.begin(), orbit.end()};
}

groups::SubgroupPtr line_stabilizer(const Line& line) {
  const auto& E = *line.E();
  auto N = groups::normalizer(E.group(), *E.subgroup());
  std::vector<Elem> stab;
  for (auto g : N->elements()) {
    Line image(line.E(), line.field(), act(*line.field(), groups::conj_matrix_on_E(E, g), line.alpha()));
    if (image == line) stab.push_back(g);
  }
  return groups::subgroup_of_elements(E.group(), stab);
}

std::uint64_t Character::order() const {
  std::uint64_t o = 1;
  for (auto v : values) o = std::lcm(o, field->multiplicative_order(v));
  return o;
}

bool Character::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](Scalar v) { return v == 1; });
}

Character trivial_character(const GroupPtr& G, const FieldPtr& F) {
  return {G, F, std::vector<Scalar>(G->order(), 1)};
}

Character chi_from_line(const Line& line) {
  const auto& E = *line.E();
  const auto& G = E.group();
  const auto& K = *line.field();
  if (groups::normalizer(G, *E.subgroup())->order() != G->order()) {
    throw HypothesisViolation("chi_from_line: E is not normal in G");
  }
  if (!fp_independent(line)) throw HypothesisViolation("chi_from_line: alpha is dependent over the prime field");
  const std::size_t lead =
      static_cast<std::size_t>(std::find(line.alpha().begin(), line.alpha().end(), Scalar{1}) - line.alpha().begin());
  Character chi{G, line.field(), std::vector<Scalar>(G->order(), 0)};
  for (Elem g = 0; g < G->order(); ++g) {
    const auto image = act(K, groups::conj_matrix_on_E(E, g), line.alpha());
    const Scalar lambda = image[lead];
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (image[i] != K.mul(lambda, line.alpha()[i])) {
        throw HypothesisViolation("chi_from_line: line " + line.format() + " is not stable under G");
      }
    }
    chi.values[g] = lambda;
  }
  auto C = groups::centralizer(G, *E.subgroup());
  for (Elem g = 0; g < G->order(); ++g) {
    if ((chi.values[g] == 1) != C->contains(g)) throw AssertionFailure("chi_from_line: kernel differs from C_G(E)");
  }
  return chi;
}

ShiftedElem equivariant_lift(const Line& line, const Character& chi) {
  const auto& E = line.E();
  const auto& G = E->group();
  const auto& F = line.field();
  const auto& K = *F;
  if (chi.group != G) throw InvalidArgument("equivariant_lift: character of another group");
  auto C = groups::centralizer(G, *E->subgroup());
  const std::size_t m = C->index();
  if (m % K.characteristic() == 0) throw HypothesisViolation("equivariant_lift: p divides |G : C_G(E)|");
  for (auto c : C->elements()) {
    if (chi(c) != 1) throw InvalidArgument("equivariant_lift: character is nontrivial on C_G(E)");
  }
  const auto u0 = shifted_unit(line).value;
  auto u = algebra_zero(G, F);
  for (auto t : C->transversal()) u = u + u0.conjugated(t).scaled(K.inv(chi(t)));
  u = u.scaled(K.inv(K.from_int(static_cast<long long>(m))));

  for (Elem g = 0; g < G->order(); ++g) {
    if (!(u.conjugated(g) == u.scaled(chi(g)))) throw AssertionFailure("equivariant_lift: g u g^-1 != chi(g) u");
  }
  if (!in_rad_square(E, u - u0)) throw AssertionFailure("equivariant_lift: u is not u_alpha - 1 modulo Rad^2");
  if (!u.power(K.characteristic()).is_zero()) throw AssertionFailure("equivariant_lift: u^p != 0");
  if (in_rad_square(E, u)) throw AssertionFailure("equivariant_lift: u lies in Rad^2");
  return {E, std::move(u)};
}

Module cyclic_quotient_module(const AlgebraElem& u) {
  const auto& G = *u.group;
  const std::size_t n = G.order();
  Matrix R(u.field, n, n);  // right multiplication by u: e_h -> e_h u
  for (Elem h = 0; h < n; ++h)
    for (Elem x = 0; x < n; ++x) {
      if (u.coeffs[x]) R(G.mul(h, x), h) = u.coeffs[x];
    }
  const auto reg = rep::regular_module(u.group, u.field);
  Module X = rep::quotient(reg, ffla::column_space(R)).relabeled("X");
  if (X.dim() * u.field->characteristic() != n) {
    throw AssertionFailure("cyclic_quotient_module: kG is not free over <1 + u>");
  }
  return X;
}

std::vector<Module> xi_modules(const rep::GroupAlgebra& A, const blocks::BlockPartition& bp, const AlgebraElem& u,
                               std::size_t b) {
  if (u.group != A.group()) throw InvalidArgument("xi_modules: element is not over the group algebra");
  if (b >= bp.count()) throw InvalidArgument("xi_modules: no such block");
  std::vector<Module> out;
  for (auto i : bp.blocks[b]) {
    const Module& P = bp.pims[i];
    Matrix W = ffla::column_space(P.algebra_element(u.coeffs));
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < W.cols(); ++c) cols.push_back(W.column(c));
    if (rep::spin(P, cols).cols() != W.cols()) throw HypothesisViolation("xi_modules: u P is not a submodule");
    Module X = rep::quotient(P, W).relabeled("X" + std::to_string(i));
    const auto top = A.top_multiplicities(X);
    if (std::accumulate(top.begin(), top.end(), std::size_t{0}) != 1 || top[i] != 1) {
      throw AssertionFailure("xi_modules: top of X is not the simple of P");
    }
    if (A.is_projective(X)) throw AssertionFailure("xi_modules: X is projective");
    if (blocks::block_of(bp, A, X).block != b) throw AssertionFailure("xi_modules: X left its block");
    out.push_back(std::move(X));
  }
  return out;
}

Module character_module(const Character& chi, long i) {
  std::vector<Scalar> vals;
  for (auto g : chi.group->gens()) vals.push_back(chi.field->pow(chi(g), i));
  return rep::character_module(chi.group, chi.field, vals).relabeled("Y" + std::to_string(i));
}

}  // namespace modrep::varieties
