#pragma once

// Gauss codes of alternating diagrams: per component, the sequence of
// crossings met with the pass type at each. Text form: "O1 U2 O3 U1 O2 U3",
// components separated by ';', case-insensitive.

#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "altknot/errors.hpp"
#include "altknot/knot_matrix.hpp"

namespace altknot {

enum class Pass { Over, Under };

struct Visit {
  int crossing = 0;  // 1-based
  Pass pass = Pass::Over;
  friend bool operator==(const Visit&, const Visit&) = default;
};

class GaussCode {
 public:
  GaussCode() = default;
  /// Validates both invariants; throws NonAlternating or BadCrossingUse.
  explicit GaussCode(std::vector<std::vector<Visit>> components) : components_(std::move(components)) {
    check();
  }

  const std::vector<std::vector<Visit>>& components() const { return components_; }
  std::size_t componentCount() const { return components_.size(); }
  std::size_t crossingCount() const {
    std::size_t n = 0;
    for (const auto& c : components_) n += c.size();
    return n / 2;
  }

  std::string toString() const {
    std::ostringstream out;
    for (std::size_t c = 0; c < components_.size(); ++c) {
      if (c) out << " ; ";
      for (std::size_t i = 0; i < components_[c].size(); ++i) {
        if (i) out << ' ';
        out << (components_[c][i].pass == Pass::Over ? 'O' : 'U') << components_[c][i].crossing;
      }
    }
    return out.str();
  }

  friend bool operator==(const GaussCode&, const GaussCode&) = default;

 private:
  void check() const {
    for (std::size_t c = 0; c < components_.size(); ++c) {
      const auto& comp = components_[c];
      if (comp.size() < 2)
        throw NonAlternating("component " + std::to_string(c + 1) + " has fewer than two visits");
      for (std::size_t i = 0; i < comp.size(); ++i) {
        const Visit& a = comp[i];
        const Visit& b = comp[(i + 1) % comp.size()];
        if (a.pass == b.pass) {
          std::ostringstream msg;
          msg << "component " << c + 1 << ": consecutive " << (a.pass == Pass::Over ? "Over" : "Under")
              << " passes at crossings " << a.crossing << " and " << b.crossing;
          throw NonAlternating(msg.str());
        }
      }
    }
    std::map<int, std::pair<int, int>> uses;  // id -> (#over, #under)
    for (const auto& comp : components_)
      for (const auto& v : comp) {
        if (v.crossing < 1) throw BadCrossingUse("crossing ids must be positive");
        auto& u = uses[v.crossing];
        (v.pass == Pass::Over ? u.first : u.second)++;
      }
    int expected = 1;
    for (const auto& [id, u] : uses) {
      if (id != expected)
        throw BadCrossingUse("crossing ids are not consecutive: missing " + std::to_string(expected));
      if (u.first != 1 || u.second != 1)
        throw BadCrossingUse("crossing " + std::to_string(id) + " is not used exactly once Over and once Under");
      ++expected;
    }
  }

  std::vector<std::vector<Visit>> components_;
};

/// Parses the text form. An empty string is the crossingless unknot.
inline GaussCode parseGaussCode(std::string_view text) {
  std::vector<std::vector<Visit>> comps;
  std::vector<Visit> current;
  bool sawSeparator = false;
  std::size_t i = 0;
  auto flush = [&](std::size_t at) {
    if (current.empty())
      throw SyntaxError("empty component before position " + std::to_string(at));
    comps.push_back(std::move(current));
    current.clear();
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == ';') {
      flush(i);
      sawSeparator = true;
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ';') ++i;
    const std::string token(text.substr(start, i - start));
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    bool digits = token.size() > 1;
    for (std::size_t d = 1; d < token.size(); ++d)
      digits = digits && std::isdigit(static_cast<unsigned char>(token[d]));
    if ((kind != 'O' && kind != 'U') || !digits || token.size() > 10)
      throw SyntaxError("malformed token '" + token + "'");
    current.push_back({std::stoi(token.substr(1)), kind == 'O' ? Pass::Over : Pass::Under});
  }
  if (!current.empty())
    comps.push_back(std::move(current));
  else if (sawSeparator)
    throw SyntaxError("trailing ';' without a component");
  return GaussCode(std::move(comps));
}

/// Each segment between consecutive visits becomes an edge from its Over
/// endpoint to its Under endpoint.
inline KnotMatrix toMatrix(const GaussCode& g) {
  KnotMatrix m(g.crossingCount());
  for (const auto& comp : g.components()) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Visit& a = comp[i];
      const Visit& b = comp[(i + 1) % comp.size()];
      const Visit& tail = a.pass == Pass::Over ? a : b;
      const Visit& head = a.pass == Pass::Over ? b : a;
      m(static_cast<std::size_t>(tail.crossing - 1), static_cast<std::size_t>(head.crossing - 1)) += 1;
    }
  }
  return m;
}

}  // namespace altknot
