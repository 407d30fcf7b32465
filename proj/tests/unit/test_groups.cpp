#include <doctest.h>

#include <random>

#include "modrep/error.hpp"
#include "modrep/groups/catalog.hpp"
#include "modrep/groups/group.hpp"

using namespace modrep;
using namespace modrep::groups;

namespace {

void check_words(const Group& G) {
  for (Elem e = 0; e < G.order(); ++e) CHECK(G.evaluate_word(G.word(e)) == e);
}

void check_transversal(const Subgroup& S) {
  const Group& G = *S.parent();
  CHECK(G.order() % S.order() == 0);
  CHECK(S.transversal().size() == S.index());
  std::vector<int> hits(G.order(), 0);
  for (auto t : S.transversal())
    for (auto s : S.elements()) ++hits[G.mul(t, s)];
  for (auto h : hits) CHECK(h == 1);
  for (Elem g = 0; g < G.order(); ++g)
    CHECK(G.mul(S.transversal()[S.coset_of(g)], S.to_parent(S.coset_part(g))) == g);
}

}  // namespace

TEST_CASE("groups from permutations") {
  auto C7 = group_from_generators({{1, 2, 3, 4, 5, 6, 0}});
  CHECK(C7->order() == 7);
  auto V4 = group_from_generators({{1, 0, 3, 2}, {2, 3, 0, 1}});
  CHECK(V4->order() == 4);
  CHECK(V4->is_abelian());
  // C7 x| C3 on 0..6 glued with A4 on 7..10 along the common C3 quotient.
  Perm g{1, 2, 3, 4, 5, 6, 0, 7, 8, 9, 10};
  Perm x{0, 1, 2, 3, 4, 5, 6, 8, 7, 10, 9};
  Perm z{0, 2, 4, 6, 1, 3, 5, 7, 9, 10, 8};
  auto G = group_from_generators({g, x, z});
  CHECK(G->order() == 84);
  check_words(*G);
  CHECK_THROWS_AS(group_from_generators({{0, 0}}), InvalidArgument);
}

TEST_CASE("semidirect products") {
  auto G = g84();
  const Group& K = *G.group;
  CHECK(K.order() == 84);
  check_words(K);
  const Elem g = G.named("g"), x = G.named("x"), y = G.named("y"), z = G.named("z");
  CHECK(K.conj(z, g) == K.mul(g, g));
  CHECK(K.conj(z, x) == y);
  CHECK(K.conj(z, y) == K.mul(x, y));
  CHECK(K.element_order(z) == 3);
  CHECK(!K.is_abelian());

  auto H = direct_product(cyclic(7), cyclic(2));
  auto D = semidirect(H, 3, H->gens());
  CHECK(D->order() == 42);
  CHECK(D->is_abelian());

  CHECK(p3_group().group->order() == 90);
  CHECK(p5_group().group->order() == 150);
  CHECK(s3().group->order() == 6);

  auto C7 = cyclic(7);
  CHECK_THROWS_AS(semidirect(C7, 3, {0}), InvalidArgument);  // not bijective
  CHECK_THROWS_AS(semidirect(C7, 3, {3}), InvalidArgument);  // order 6 does not divide 3
  CHECK_NOTHROW(semidirect(C7, 6, {3}));
}

TEST_CASE("subgroups, centralizers and normalizers") {
  auto G = g84();
  const GroupPtr& K = G.group;
  auto E = subgroup(K, G.e_basis);
  CHECK(E->order() == 4);
  CHECK(E->index() == 21);
  check_transversal(*E);
  for (Elem a = 0; a < E->order(); ++a)
    for (Elem b = 0; b < E->order(); ++b)
      CHECK(E->to_parent(E->group()->mul(a, b)) == K->mul(E->to_parent(a), E->to_parent(b)));

  auto whole = subgroup(K, K->gens());
  CHECK(whole->order() == 84);
  CHECK(whole->transversal() == std::vector<Elem>{0});
  auto triv = subgroup(K, {});
  CHECK(triv->order() == 1);
  check_transversal(*triv);

  auto C = centralizer(K, *E);
  CHECK(C->order() == 28);
  check_transversal(*C);
  auto N = normalizer(K, *E);
  CHECK(N->order() == 84);
  for (auto c : C->elements()) CHECK(N->contains(c));

  auto A = direct_product(cyclic(6), cyclic(2));
  auto S = subgroup(A, {1});
  CHECK(centralizer(A, *S)->order() == 12);

  auto P = p3_group();
  auto E3 = subgroup(P.group, P.e_basis);
  CHECK(centralizer(P.group, *E3)->order() == 45);
}

TEST_CASE("sylow subgroups") {
  auto G = g84();
  CHECK(sylow(G.group, 2)->order() == 4);
  CHECK(sylow(G.group, 3)->order() == 3);
  CHECK(sylow(G.group, 7)->order() == 7);
  CHECK(sylow(p3_group().group, 3)->order() == 9);
  CHECK(sylow(p5_group().group, 5)->order() == 25);
  CHECK(sylow(cyclic(7), 2)->order() == 1);
}

TEST_CASE("conjugation matrices on E") {
  auto G = g84();
  const GroupPtr& K = G.group;
  ElementaryAbelianBasis E(K, G.e_basis, 2);
  auto Mz = conj_matrix_on_E(E, G.named("z"));
  CHECK(Mz == ffla::Matrix::from_rows(Mz.field(), {{0, 1}, {1, 1}}));
  CHECK(conj_matrix_on_E(E, G.named("g")).is_identity());
  auto C = centralizer(K, *E.subgroup());
  for (auto c : C->elements()) CHECK(conj_matrix_on_E(E, c).is_identity());

  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    Elem a = rng() % K->order(), b = rng() % K->order();
    CHECK(conj_matrix_on_E(E, K->mul(a, b)) == conj_matrix_on_E(E, a) * conj_matrix_on_E(E, b));
    // order of the matrix divides the order of a C_G(E)
    auto M = conj_matrix_on_E(E, a);
    std::uint64_t coset_order = 1;
    for (Elem w = a; !C->contains(w); w = K->mul(w, a)) ++coset_order;
    CHECK(ffla::power(M, coset_order).is_identity());
  }

  auto P = p3_group();
  ElementaryAbelianBasis E3(P.group, P.e_basis, 3);
  auto M3 = conj_matrix_on_E(E3, P.named("z"));
  CHECK(M3 == ffla::Matrix::from_rows(M3.field(), {{2, 0}, {0, 1}}));
  CHECK_THROWS_AS(ElementaryAbelianBasis(K, {G.named("x"), G.named("x")}, 2), InvalidArgument);

  // g outside the normalizer
  auto S3 = group_from_generators({{1, 0, 2}, {0, 2, 1}});
  ElementaryAbelianBasis T(S3, {S3->gens()[0]}, 2);
  CHECK_THROWS_AS(conj_matrix_on_E(T, S3->gens()[1]), InvalidArgument);
}
