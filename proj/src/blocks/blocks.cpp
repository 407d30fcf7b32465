#include "modrep/blocks/blocks.hpp"

#include <algorithm>
#include <numeric>

#include "modrep/error.hpp"

namespace modrep::blocks {

namespace {

Naturals cartan_unchecked(const GroupAlgebra& A) {
  Naturals c;
  for (const auto& P : A.pims()) c.push_back(A.composition_multiplicities(P));
  return c;
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::size_t BlockPartition::simples_of_dim(std::size_t b, std::size_t d) const {
  return static_cast<std::size_t>(
      std::count_if(blocks[b].begin(), blocks[b].end(), [&](std::size_t i) { return simples[i].dim() == d; }));
}

nlohmann::ordered_json BlockPartition::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    nlohmann::ordered_json blk;
    blk["id"] = "B" + std::to_string(b);
    auto ss = nlohmann::ordered_json::array();
    auto pd = nlohmann::ordered_json::array();
    for (auto i : blocks[b]) {
      ss.push_back({{"dim", simples[i].dim()}, {"end_dim", end_dims[i]}});
      pd.push_back(pims[i].dim());
    }
    blk["simples"] = ss;
    blk["pim_dims"] = pd;
    blk["defect_zero"] = static_cast<bool>(defect_zero[b]);
    arr.push_back(blk);
  }
  nlohmann::ordered_json out;
  out["split"] = split;
  out["cartan"] = cartan;
  out["blocks"] = arr;
  return out;
}

Naturals cartan_matrix(const GroupAlgebra& A) {
  const auto& ed = A.simple_end_dims();
  for (std::size_t i = 0; i < ed.size(); ++i) {
    if (ed[i] != 1) {
      throw NonSplitField("non-split field: simple S" + std::to_string(i) + " of dimension " +
                          std::to_string(A.simples()[i].dim()) + " has End of dimension " + std::to_string(ed[i]));
    }
  }
  return cartan_unchecked(A);
}

BlockPartition block_partition(const GroupAlgebra& A) {
  BlockPartition bp;
  bp.simples = A.simples();
  bp.pims = A.pims();
  bp.end_dims = A.simple_end_dims();
  bp.split = A.is_split();
  bp.cartan = cartan_unchecked(A);
  const std::size_t n = bp.simples.size();

  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += bp.simples[i].dim() * bp.pims[i].dim() / bp.end_dims[i];
  if (total != A.group()->order()) throw AssertionFailure("block_partition: sum of dim S dim P / dim End(S) is not |G|");

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (bp.cartan[i][j] == 0) continue;
      const auto a = find(parent, i), b = find(parent, j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  // roots are the smallest member, so blocks come out ordered by it
  bp.block_of_simple.assign(n, 0);
  std::vector<long> id(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(parent, i);
    if (id[r] < 0) {
      id[r] = static_cast<long>(bp.blocks.size());
      bp.blocks.emplace_back();
    }
    bp.block_of_simple[i] = static_cast<std::size_t>(id[r]);
    bp.blocks[bp.block_of_simple[i]].push_back(i);
  }
  for (std::size_t b = 0; b < bp.blocks.size(); ++b) {
    bool dz = true;
    for (auto i : bp.blocks[b]) dz = dz && bp.pims[i].dim() == bp.simples[i].dim();
    bp.defect_zero.push_back(dz);
  }
  return bp;
}

Membership block_of(const BlockPartition& bp, const GroupAlgebra& A, const Module& M) {
  Membership out;
  out.distribution.assign(bp.blocks.size(), 0);
  const auto mult = A.composition_multiplicities(M);
  for (std::size_t i = 0; i < mult.size(); ++i) out.distribution[bp.block_of_simple[i]] += mult[i];
  std::size_t nonzero = 0;
  for (std::size_t b = 0; b < out.distribution.size(); ++b) {
    if (out.distribution[b]) {
      ++nonzero;
      out.block = b;
    }
  }
  if (nonzero != 1) out.block.reset();
  return out;
}

bool is_defect_zero(const BlockPartition& bp, std::size_t b) {
  if (b >= bp.blocks.size()) throw InvalidArgument("is_defect_zero: no such block");
  return bp.defect_zero[b];
}

}  // namespace modrep::blocks
