#include <doctest.h>

#include "modrep/blocks/blocks.hpp"
#include "modrep/error.hpp"
#include "modrep/groups/catalog.hpp"

using namespace modrep;
using namespace modrep::blocks;
using ffla::Field;
using rep::hom_dim;

namespace {

void check_orthogonal(const BlockPartition& bp) {
  const std::size_t n = bp.simples.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (bp.block_of_simple[i] == bp.block_of_simple[j]) continue;
      CHECK(hom_dim(bp.pims[i], bp.simples[j]) == 0);
      CHECK(hom_dim(bp.pims[i], bp.pims[j]) == 0);
    }
}

std::size_t weighted_total(const BlockPartition& bp) {
  std::size_t t = 0;
  for (std::size_t i = 0; i < bp.simples.size(); ++i) t += bp.simples[i].dim() * bp.pims[i].dim() / bp.end_dims[i];
  return t;
}

}  // namespace

TEST_CASE("semisimple group algebras") {
  auto C3 = groups::cyclic(3);
  GroupAlgebra A4(C3, Field::make(2, 2));
  auto c = cartan_matrix(A4);
  CHECK(c == Naturals{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto bp = block_partition(A4);
  CHECK(bp.count() == 3);
  for (std::size_t b = 0; b < 3; ++b) CHECK(is_defect_zero(bp, b));

  GroupAlgebra A2(C3, Field::make(2, 1));
  CHECK_THROWS_AS(cartan_matrix(A2), NonSplitField);
  auto bp2 = block_partition(A2);
  CHECK_FALSE(bp2.split);
  CHECK(bp2.count() == 2);
  CHECK(weighted_total(bp2) == 3);
}

TEST_CASE("p-groups have one block of positive defect") {
  GroupAlgebra A(groups::elementary_abelian(2, 2), Field::make(2, 1));
  auto bp = block_partition(A);
  CHECK(bp.count() == 1);
  CHECK(bp.cartan == Naturals{{4}});
  CHECK_FALSE(is_defect_zero(bp, 0));
  CHECK_THROWS_AS(is_defect_zero(bp, 1), InvalidArgument);
}

TEST_CASE("blocks of C_G(E) in the order-84 group") {
  auto cg = groups::g84();
  auto H = groups::centralizer(cg.group, *groups::subgroup(cg.group, cg.e_basis));
  GroupAlgebra A(H->group(), Field::make(2, 3));
  auto c = cartan_matrix(A);
  REQUIRE(c.size() == 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK(c[i][j] == (i == j ? 4u : 0u));
  auto bp = block_partition(A);
  CHECK(bp.count() == 7);
  for (std::size_t b = 0; b < 7; ++b) {
    CHECK(bp.blocks[b].size() == 1);
    CHECK_FALSE(is_defect_zero(bp, b));
  }
  CHECK(weighted_total(bp) == 28);
  check_orthogonal(bp);
}

TEST_CASE("blocks of the order-84 group") {
  auto cg = groups::g84();
  SUBCASE("GF(64)") {
    GroupAlgebra A(cg.group, Field::make(2, 6));
    auto bp = block_partition(A);
    CHECK(bp.split);
    REQUIRE(bp.count() == 3);
    CHECK(bp.blocks[0] == std::vector<std::size_t>{0, 1, 2});
    CHECK(bp.cartan[0][0] == 2);
    CHECK(bp.cartan[0][1] == 1);
    CHECK(bp.cartan[1][2] == 1);
    for (std::size_t b = 1; b < 3; ++b) {
      REQUIRE(bp.blocks[b].size() == 1);
      const auto i = bp.blocks[b][0];
      CHECK(bp.simples[i].dim() == 3);
      CHECK(bp.cartan[i][i] == 4);
      CHECK(bp.simples_of_dim(b, 3) == 1);
      CHECK(block_of(bp, A, bp.simples[i]).block == b);
      CHECK(block_of(bp, A, bp.pims[i]).block == b);
    }
    CHECK(block_of(bp, A, A.trivial()).block == 0);
    auto mixed = block_of(bp, A, rep::direct_sum(A.trivial(), bp.simples[bp.blocks[1][0]]));
    CHECK_FALSE(mixed.block.has_value());
    CHECK(mixed.distribution == std::vector<std::size_t>{1, 1, 0});
    CHECK(weighted_total(bp) == 84);
    check_orthogonal(bp);

    auto j = bp.to_json();
    CHECK(j["blocks"].size() == 3);
    CHECK(j["blocks"][1]["pim_dims"][0] == 12);
    CHECK(j["blocks"][0]["defect_zero"] == false);
  }
  SUBCASE("GF(8)") {
    GroupAlgebra A(cg.group, Field::make(2, 3));
    CHECK_THROWS_AS(cartan_matrix(A), NonSplitField);
    auto bp = block_partition(A);
    CHECK_FALSE(bp.split);
    REQUIRE(bp.count() == 3);
    CHECK(bp.simples_of_dim(1, 3) == 1);
    CHECK(bp.simples_of_dim(2, 3) == 1);
    CHECK(weighted_total(bp) == 84);
    check_orthogonal(bp);
  }
}

TEST_CASE("blocks in characteristic 3") {
  auto cg = groups::p3_group();
  auto F = Field::make(3, 4);
  auto H = groups::centralizer(cg.group, *groups::subgroup(cg.group, cg.e_basis));
  GroupAlgebra AH(H->group(), F);
  CHECK(block_partition(AH).count() == 5);
  GroupAlgebra AG(cg.group, F);
  auto bp = block_partition(AG);
  CHECK(bp.count() == 3);
  CHECK(weighted_total(bp) == 90);
  check_orthogonal(bp);
}
