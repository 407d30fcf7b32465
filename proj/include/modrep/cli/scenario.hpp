#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modrep/error.hpp"
#include "modrep/groups/catalog.hpp"

namespace modrep::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr unsigned kDefaultStmodWindow = 2;

/// Scenario input error; line() is 0 when no single line is to blame.
class ScenarioError : public Error {
 public:
  ScenarioError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct FieldSpec {
  std::uint32_t p = 2;
  unsigned n = 1;
  /// Optional monic modulus, n + 1 little-endian coefficients.
  std::vector<std::uint32_t> modulus;
};

struct Options {
  std::uint64_t seed = kDefaultSeed;
  /// Defaults to 2 p |G : C_G(E)|.
  std::optional<unsigned> window;
  unsigned retries = 64;
  unsigned stmod_window = kDefaultStmodWindow;
};

/// Expected values; a check fails when its computed value differs.
struct Expectations {
  std::optional<std::size_t> kg_blocks;
  std::optional<std::size_t> kh_blocks;
  std::optional<std::size_t> orbit_size;
  std::optional<std::vector<std::size_t>> simple_dims;
  /// Ext-blocks met per kG-block, keyed "B0", "B1", ...
  std::optional<std::map<std::string, std::size_t>> ext_blocks;
};

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"blocks", "simples", "ext_blocks", "lemma_suite",
                                              "benson", "correspondence", "stmod"};
  return names;
}

struct Scenario {
  std::string name;
  FieldSpec field;
  /// "g84", "p3", "p5", "s3", "cyclic:N" or "elementary:P:R".
  std::string group;
  /// Basis of E by element names or indices; empty selects the catalog's E.
  std::vector<std::string> e_basis;
  /// Coordinates of the line, e.g. "1, g^3".
  std::string alpha;
  std::vector<std::string> checks;
  Options options;
  Expectations expect;
};

/// INI sections [scenario] [field] [group] [line] [checks] [options] [expect].
Scenario parse_scenario(std::istream& in, const std::string& source);
Scenario load_scenario(const std::string& path);
/// Inverse of parse_scenario.
std::string to_ini(const Scenario& s);

const std::vector<std::string>& builtin_names();
Scenario builtin(const std::string& name);

/// Group and distinguished data for a group spec; the prime is 0 for specs
/// outside the catalog.
groups::CatalogGroup resolve_group(const std::string& spec);
/// Element of G by catalog name or decimal index.
groups::Elem resolve_element(const groups::CatalogGroup& cg, const std::string& token);

}  // namespace modrep::cli
