#include "modrep/groups/catalog.hpp"

#include "modrep/error.hpp"

namespace modrep::groups {

Elem CatalogGroup::named(const std::string& n) const {
  for (const auto& [k, v] : names) {
    if (k == n) return v;
  }
  throw InvalidArgument("unknown element name " + n);
}

namespace {

// H = C_a x C_b x C_b; generators at 1, a, a*b.
CatalogGroup twisted(std::size_t a, std::uint32_t b) {
  GroupPtr H = direct_product(direct_product(cyclic(a), cyclic(b)), cyclic(b));
  const Elem g1 = 1, g2 = static_cast<Elem>(a), g3 = static_cast<Elem>(a * b);
  const std::vector<Elem> images = {H->inv(g1), H->inv(g2), g3};
  CatalogGroup out;
  out.group = semidirect(H, 2, images);
  out.p = b;
  out.e_basis = {g2, g3};
  out.names = {{"a", g1}, {"b", g2}, {"c", g3}, {"z", static_cast<Elem>(H->order())}};
  return out;
}

}  // namespace

CatalogGroup g84() {
  GroupPtr H = direct_product(direct_product(cyclic(7), cyclic(2)), cyclic(2));
  const Elem g = 1, x = 7, y = 14;
  CatalogGroup out;
  out.group = semidirect(H, 3, {H->mul(g, g), y, H->mul(x, y)});
  out.p = 2;
  out.e_basis = {x, y};
  out.names = {{"g", g}, {"x", x}, {"y", y}, {"z", 28}};
  return out;
}

CatalogGroup p3_group() { return twisted(5, 3); }

CatalogGroup p5_group() { return twisted(3, 5); }

CatalogGroup s3() {
  GroupPtr C = cyclic(3);
  CatalogGroup out;
  out.group = semidirect(C, 2, {2});
  out.p = 3;
  out.e_basis = {1};
  out.names = {{"a", 1}, {"z", 3}};
  return out;
}

}  // namespace modrep::groups
