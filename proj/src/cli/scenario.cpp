#include "modrep/cli/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace modrep::cli {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    auto t = trim(cur);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

template <class T>
std::optional<T> to_number(const std::string& s) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

// section -> key -> entry
using Ini = std::map<std::string, std::map<std::string, Entry>>;

Ini read_ini(std::istream& in, const std::string& source) {
  Ini ini;
  std::string line, section;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto cut = line.find_first_of(";#");
    if (cut != std::string::npos) line.erase(cut);
    const auto t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ScenarioError(source, lineno, "unterminated section header");
      section = trim(std::string_view(t).substr(1, t.size() - 2));
      if (ini.count(section)) throw ScenarioError(source, lineno, "duplicate section [" + section + "]");
      ini[section];
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ScenarioError(source, lineno, "expected key = value");
    if (section.empty()) throw ScenarioError(source, lineno, "key outside of a section");
    const auto key = trim(std::string_view(t).substr(0, eq));
    if (ini[section].count(key)) throw ScenarioError(source, lineno, "duplicate key " + key);
    ini[section][key] = {trim(std::string_view(t).substr(eq + 1)), lineno};
  }
  return ini;
}

class Reader {
 public:
  Reader(Ini ini, std::string source) : ini_(std::move(ini)), source_(std::move(source)) {}

  const Entry* get(const std::string& sec, const std::string& key) {
    used_.insert(sec + "." + key);
    auto s = ini_.find(sec);
    if (s == ini_.end()) return nullptr;
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  }
  const Entry& require(const std::string& sec, const std::string& key) {
    const Entry* e = get(sec, key);
    if (!e) throw ScenarioError(source_, 0, "missing " + key + " in [" + sec + "]");
    return *e;
  }
  template <class T>
  T number(const Entry& e) {
    auto v = to_number<T>(e.value);
    if (!v) throw ScenarioError(source_, e.line, "expected a non-negative integer, got \"" + e.value + "\"");
    return *v;
  }
  template <class T>
  std::vector<T> numbers(const Entry& e, char sep) {
    std::vector<T> out;
    for (const auto& tok : split(e.value, sep)) {
      auto v = to_number<T>(tok);
      if (!v) throw ScenarioError(source_, e.line, "expected integers, got \"" + e.value + "\"");
      out.push_back(*v);
    }
    return out;
  }
  void reject_unknown() {
    for (const auto& [sec, keys] : ini_)
      for (const auto& [key, e] : keys) {
        if (!used_.count(sec + "." + key)) throw ScenarioError(source_, e.line, "unknown key " + key + " in [" + sec + "]");
      }
  }
  const std::string& source() const { return source_; }

 private:
  Ini ini_;
  std::string source_;
  std::set<std::string> used_;
};

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v, const char* sep) {
  std::vector<std::string> s;
  for (auto x : v) s.push_back(std::to_string(x));
  return join(s, sep);
}

}  // namespace

Scenario parse_scenario(std::istream& in, const std::string& source) {
  Reader r(read_ini(in, source), source);
  Scenario s;
  if (auto e = r.get("scenario", "name")) s.name = e->value;

  s.field.p = r.number<std::uint32_t>(r.require("field", "p"));
  s.field.n = r.number<unsigned>(r.require("field", "n"));
  if (auto e = r.get("field", "modulus")) {
    s.field.modulus = r.numbers<std::uint32_t>(*e, ' ');
    if (s.field.modulus.size() != s.field.n + 1) throw ScenarioError(source, e->line, "modulus needs n + 1 coefficients");
  }

  const Entry& g = r.require("group", "spec");
  s.group = g.value;
  groups::CatalogGroup cg;
  try {
    cg = resolve_group(s.group);
  } catch (const Error& ex) {
    throw ScenarioError(source, g.line, ex.what());
  }
  if (auto e = r.get("group", "e_basis")) {
    s.e_basis = split(e->value, ',');
    for (const auto& tok : s.e_basis) {
      try {
        resolve_element(cg, tok);
      } catch (const Error& ex) {
        throw ScenarioError(source, e->line, ex.what());
      }
    }
  } else if (cg.e_basis.empty()) {
    throw ScenarioError(source, g.line, "group " + s.group + " needs e_basis");
  }

  const Entry& a = r.require("line", "alpha");
  s.alpha = a.value;
  const std::size_t rank = s.e_basis.empty() ? cg.e_basis.size() : s.e_basis.size();
  if (split(s.alpha, ',').size() != rank) throw ScenarioError(source, a.line, "alpha length differs from the rank of E");

  if (auto e = r.get("checks", "run")) {
    s.checks = split(e->value, ',');
    for (const auto& c : s.checks) {
      if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
        throw ScenarioError(source, e->line, "unknown check " + c);
      }
    }
  }

  if (auto e = r.get("options", "seed")) s.options.seed = r.number<std::uint64_t>(*e);
  if (auto e = r.get("options", "window")) s.options.window = r.number<unsigned>(*e);
  if (auto e = r.get("options", "retries")) s.options.retries = r.number<unsigned>(*e);
  if (auto e = r.get("options", "stmod_window")) s.options.stmod_window = r.number<unsigned>(*e);

  if (auto e = r.get("expect", "kg_blocks")) s.expect.kg_blocks = r.number<std::size_t>(*e);
  if (auto e = r.get("expect", "kh_blocks")) s.expect.kh_blocks = r.number<std::size_t>(*e);
  if (auto e = r.get("expect", "orbit_size")) s.expect.orbit_size = r.number<std::size_t>(*e);
  if (auto e = r.get("expect", "simple_dims")) s.expect.simple_dims = r.numbers<std::size_t>(*e, ',');
  if (auto e = r.get("expect", "ext_blocks")) {
    std::map<std::string, std::size_t> m;
    for (const auto& item : split(e->value, ',')) {
      const auto colon = item.find(':');
      auto count = colon == std::string::npos ? std::nullopt : to_number<std::size_t>(trim(item.substr(colon + 1)));
      if (!count) throw ScenarioError(source, e->line, "expected Bi:count items, got \"" + item + "\"");
      m[trim(item.substr(0, colon))] = *count;
    }
    s.expect.ext_blocks = std::move(m);
  }
  r.reject_unknown();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path, 0, "cannot open file");
  return parse_scenario(in, path);
}

std::string to_ini(const Scenario& s) {
  std::ostringstream os;
  os << "[scenario]\nname = " << s.name << "\n\n";
  os << "[field]\np = " << s.field.p << "\nn = " << s.field.n << "\n";
  if (!s.field.modulus.empty()) os << "modulus = " << join_numbers(s.field.modulus, " ") << "\n";
  os << "\n[group]\nspec = " << s.group << "\n";
  if (!s.e_basis.empty()) os << "e_basis = " << join(s.e_basis, ", ") << "\n";
  os << "\n[line]\nalpha = " << s.alpha << "\n\n";
  os << "[checks]\nrun = " << join(s.checks, ", ") << "\n\n";
  os << "[options]\nseed = " << s.options.seed << "\n";
  if (s.options.window) os << "window = " << *s.options.window << "\n";
  os << "retries = " << s.options.retries << "\nstmod_window = " << s.options.stmod_window << "\n";
  const auto& x = s.expect;
  if (x.kg_blocks || x.kh_blocks || x.orbit_size || x.simple_dims || x.ext_blocks) {
    os << "\n[expect]\n";
    if (x.kg_blocks) os << "kg_blocks = " << *x.kg_blocks << "\n";
    if (x.kh_blocks) os << "kh_blocks = " << *x.kh_blocks << "\n";
    if (x.orbit_size) os << "orbit_size = " << *x.orbit_size << "\n";
    if (x.simple_dims) os << "simple_dims = " << join_numbers(*x.simple_dims, ", ") << "\n";
    if (x.ext_blocks) {
      std::vector<std::string> items;
      for (const auto& [b, n] : *x.ext_blocks) items.push_back(b + ":" + std::to_string(n));
      os << "ext_blocks = " << join(items, ", ") << "\n";
    }
  }
  return os.str();
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"g84-unstable", "g84-stable", "p3", "p5", "s3-sanity"};
  return names;
}

Scenario builtin(const std::string& name) {
  Scenario s;
  s.name = name;
  const std::vector<std::string> all{"blocks", "simples", "ext_blocks", "benson", "correspondence", "stmod"};
  if (name == "g84-unstable") {
    s.field = {2, 3, {}};
    s.group = "g84";
    s.alpha = "1, g";
    s.checks = all;
    s.expect.kg_blocks = 3;
    s.expect.kh_blocks = 7;
    s.expect.orbit_size = 3;
    s.expect.simple_dims = std::vector<std::size_t>{1, 2, 3, 3};
    s.expect.ext_blocks = std::map<std::string, std::size_t>{{"B0", 1}, {"B1", 3}, {"B2", 3}};
  } else if (name == "g84-stable") {
    s.field = {2, 6, {}};
    s.group = "g84";
    s.alpha = "1, g^21";
    s.checks = all;
    s.checks.push_back("lemma_suite");
    s.expect.kg_blocks = 3;
    s.expect.kh_blocks = 3;
    s.expect.orbit_size = 1;
    s.expect.simple_dims = std::vector<std::size_t>{1, 1, 1, 3, 3};
    s.expect.ext_blocks = std::map<std::string, std::size_t>{{"B0", 1}, {"B1", 1}, {"B2", 1}};
  } else if (name == "p3") {
    s.field = {3, 4, {}};
    s.group = "p3";
    s.alpha = "1, g";
    s.checks = all;
    s.expect.kg_blocks = 3;
    s.expect.kh_blocks = 5;
    s.expect.orbit_size = 2;
    s.expect.ext_blocks = std::map<std::string, std::size_t>{{"B0", 1}, {"B1", 2}, {"B2", 2}};
  } else if (name == "p5") {
    s.field = {5, 2, {}};
    s.group = "p5";
    s.alpha = "1, g";
    s.checks = all;
    s.expect.kg_blocks = 2;
    s.expect.kh_blocks = 3;
    s.expect.orbit_size = 2;
    s.expect.ext_blocks = std::map<std::string, std::size_t>{{"B0", 1}, {"B1", 2}};
  } else if (name == "s3-sanity") {
    s.field = {3, 1, {}};
    s.group = "s3";
    s.alpha = "1";
    s.checks = {"blocks", "simples", "ext_blocks", "lemma_suite", "stmod"};
    s.expect.kg_blocks = 1;
    s.expect.orbit_size = 1;
    s.expect.simple_dims = std::vector<std::size_t>{1, 1};
    s.expect.ext_blocks = std::map<std::string, std::size_t>{{"B0", 1}};
  } else {
    std::string known;
    for (const auto& n : builtin_names()) known += " " + n;
    throw InvalidArgument("unknown builtin scenario \"" + name + "\"; known:" + known);
  }
  return s;
}

groups::CatalogGroup resolve_group(const std::string& spec) {
  if (spec == "g84") return groups::g84();
  if (spec == "p3") return groups::p3_group();
  if (spec == "p5") return groups::p5_group();
  if (spec == "s3") return groups::s3();
  const auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "cyclic") {
    if (auto n = to_number<std::size_t>(parts[1]); n && *n >= 1) return {groups::cyclic(*n), 0, {}, {}};
  }
  if (parts.size() == 3 && parts[0] == "elementary") {
    auto p = to_number<std::uint32_t>(parts[1]);
    auto r = to_number<unsigned>(parts[2]);
    if (p && r) {
      auto G = groups::elementary_abelian(*p, *r);
      return {G, *p, G->gens(), {}};
    }
  }
  throw InvalidArgument("unknown group spec \"" + spec + "\" (g84, p3, p5, s3, cyclic:N, elementary:P:R)");
}

groups::Elem resolve_element(const groups::CatalogGroup& cg, const std::string& token) {
  for (const auto& [n, e] : cg.names) {
    if (n == token) return e;
  }
  auto v = to_number<groups::Elem>(token);
  if (!v || *v >= cg.group->order()) throw InvalidArgument("unknown group element \"" + token + "\"");
  return *v;
}

}  // namespace modrep::cli
