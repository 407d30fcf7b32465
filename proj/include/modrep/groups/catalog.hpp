#pragma once

#include <string>
#include <vector>

#include "modrep/groups/group.hpp"

namespace modrep::groups {

/// A group together with a distinguished elementary abelian p-subgroup E
/// and named elements.
struct CatalogGroup {
  GroupPtr group;
  std::uint32_t p = 0;
  /// Ordered basis of E.
  std::vector<Elem> e_basis;
  std::vector<std::pair<std::string, Elem>> names;

  Elem named(const std::string& n) const;
};

/// (C7 x C2^2) x| C3 with z g z^-1 = g^2, z x z^-1 = y, z y z^-1 = xy.
/// Names g, x, y, z; E = <x, y>, p = 2.
CatalogGroup g84();
/// (C5 x C3^2) x| C2, z inverting C5 and the first C3 and fixing the
/// second. Names a, b, c, z; E = <b, c>, p = 3.
CatalogGroup p3_group();
/// (C3 x C5^2) x| C2 with the analogous action. E = <b, c>, p = 5.
CatalogGroup p5_group();
/// C3 x| C2 = S3. Names a, z; E = <a>, p = 3.
CatalogGroup s3();

}  // namespace modrep::groups
