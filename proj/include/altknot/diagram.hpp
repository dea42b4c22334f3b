#pragma once

// Combinatorial link diagrams as port graphs. Crossing c owns ports
// 4c+slot with slots in counterclockwise order NE, NW, SW, SE; a strand
// passing through the crossing uses opposite slots (port ^ 2). partner()
// is the fixed-point-free involution gluing ports along arcs.
//
// Over/under data is not stored: an alternating diagram is determined by
// its shadow up to mirror image, and assignAlternation() recovers it.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "altknot/errors.hpp"
#include "altknot/gauss_code.hpp"
#include "altknot/knot_matrix.hpp"
#include "altknot/polynomial.hpp"

namespace altknot {

using Port = std::size_t;

enum class Slot : std::uint8_t { NE = 0, NW = 1, SW = 2, SE = 3 };

constexpr Port portOf(std::size_t crossing, Slot s) { return 4 * crossing + static_cast<Port>(s); }
constexpr std::size_t crossingOf(Port p) { return p / 4; }
constexpr Port oppositePort(Port p) { return p ^ 2U; }

/// An arc between two crossing ports.
struct Arc {
  Port a = 0;
  Port b = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// One pass of a strand through a crossing, entering at `entry`.
struct StrandVisit {
  std::size_t crossing = 0;
  Port entry = 0;
};

class Diagram {
 public:
  /// The empty diagram (no crossings, no loops).
  Diagram() = default;

  static Diagram unknot() {
    Diagram d;
    d.freeLoops_ = 1;
    return d;
  }

  /// Builds from an explicit port gluing. Anchors are arcs that later
  /// compositions break first.
  static Diagram fromPorts(std::vector<Port> partner, std::size_t freeLoops = 0, std::vector<Arc> anchors = {}) {
    if (partner.size() % 4 != 0) throw InvalidArgument("Diagram: port count is not a multiple of 4");
    for (Port p = 0; p < partner.size(); ++p) {
      const Port q = partner[p];
      if (q >= partner.size() || q == p || partner[q] != p)
        throw InvalidArgument("Diagram: port gluing is not a fixed-point-free involution at port " +
                              std::to_string(p));
    }
    Diagram d;
    d.partner_ = std::move(partner);
    d.freeLoops_ = freeLoops;
    d.anchors_ = std::move(anchors);
    return d;
  }

  std::size_t crossingCount() const { return partner_.size() / 4; }
  std::size_t freeLoops() const { return freeLoops_; }
  Port partner(Port p) const { return partner_[p]; }
  const std::vector<Port>& ports() const { return partner_; }
  const std::vector<Arc>& anchors() const { return anchors_; }

  bool isUnknot() const { return partner_.empty() && freeLoops_ == 1; }
  bool isEmpty() const { return partner_.empty() && freeLoops_ == 0; }
  bool hasArc(const Arc& arc) const {
    return arc.a < partner_.size() && arc.b < partner_.size() && partner_[arc.a] == arc.b;
  }

  /// The arc a composition breaks: the first anchor still present, else
  /// the arc at port 0.
  Arc connectionArc() const {
    for (const Arc& arc : anchors_)
      if (hasArc(arc)) return arc;
    if (partner_.empty()) throw EmptyDiagram("diagram has no arcs");
    return {0, partner_[0]};
  }

  /// Strand traversal of every component that meets a crossing. Each new
  /// component starts at the lowest unused port, so the first component
  /// begins at crossing 0.
  std::vector<std::vector<StrandVisit>> strands() const {
    std::vector<std::vector<StrandVisit>> result;
    std::vector<char> used(partner_.size(), 0);
    for (Port start = 0; start < partner_.size(); ++start) {
      if (used[start]) continue;
      std::vector<StrandVisit> comp;
      Port entry = start;
      do {
        used[entry] = used[oppositePort(entry)] = 1;
        comp.push_back({crossingOf(entry), entry});
        entry = partner_[oppositePort(entry)];
      } while (entry != start);
      result.push_back(std::move(comp));
    }
    return result;
  }

  std::size_t componentCount() const { return strands().size() + freeLoops_; }

 private:
  friend class DiagramBuilder;
  std::vector<Port> partner_;
  std::size_t freeLoops_ = 0;
  std::vector<Arc> anchors_;
};

/// Picks Over for the first visit of crossing 0 on the first component and
/// propagates alternation along every strand. Crossings shared by two
/// components fix their relative choice; a component meeting no earlier
/// one starts with Over. Throws AlternationConflict when some crossing
/// would be passed Over twice or Under twice.
inline GaussCode assignAlternation(const Diagram& d) {
  const auto comps = d.strands();
  const std::size_t n = d.crossingCount();
  struct Loc {
    std::size_t comp, pos;
  };
  std::vector<std::vector<Loc>> where(n);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t i = 0; i < comps[c].size(); ++i) where[comps[c][i].crossing].push_back({c, i});

  // parity[c]: visit i of component c is Over iff (i + parity[c]) is even.
  std::vector<int> parity(comps.size(), -1);
  for (std::size_t root = 0; root < comps.size(); ++root) {
    if (parity[root] != -1) continue;
    parity[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t c = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < comps[c].size(); ++i) {
        const std::size_t x = comps[c][i].crossing;
        const auto& locs = where[x];
        const Loc other = (locs[0].comp == c && locs[0].pos == i) ? locs[1] : locs[0];
        const int want = static_cast<int>((i + static_cast<std::size_t>(parity[c]) + 1 + other.pos) % 2);
        if (parity[other.comp] == -1) {
          parity[other.comp] = want;
          queue.push_back(other.comp);
        } else if (parity[other.comp] != want) {
          throw AlternationConflict("crossing " + std::to_string(x + 1) +
                                    " would be passed the same way twice");
        }
      }
    }
  }

  std::vector<std::vector<Visit>> code(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t i = 0; i < comps[c].size(); ++i)
      code[c].push_back({static_cast<int>(comps[c][i].crossing + 1),
                         (i + static_cast<std::size_t>(parity[c])) % 2 == 0 ? Pass::Over : Pass::Under});
  return GaussCode(std::move(code));
}

/// The knot matrix of the alternating diagram with this shadow.
inline KnotMatrix diagramMatrix(const Diagram& d) { return toMatrix(assignAlternation(d)); }

/// Characteristic polynomial of a diagram; any crossingless circle makes
/// it zero (the unknot polynomial is 0 and split pieces multiply).
inline IntPolynomial diagramPoly(const Diagram& d) {
  if (d.freeLoops() > 0 || d.crossingCount() == 0) return {};
  return charPoly(diagramMatrix(d));
}

// ---------------------------------------------------------------------------
// Tangles

enum class Direction { Horizontal, Vertical };
enum class End : std::uint8_t { NW = 0, NE = 1, SW = 2, SE = 3 };

inline constexpr std::array<End, 4> kEnds{End::NW, End::NE, End::SW, End::SE};

/// Diagram fragment with four free ends. Nodes 0..4V-1 are crossing ports;
/// node 4V+e is free end e.
class Tangle {
 public:
  std::size_t crossingCount() const { return crossings_; }
  std::size_t freeLoops() const { return freeLoops_; }
  std::size_t endNode(End e) const { return 4 * crossings_ + static_cast<std::size_t>(e); }
  std::size_t partner(std::size_t node) const { return partner_[node]; }
  bool isEnd(std::size_t node) const { return node >= 4 * crossings_; }

  /// Chain of k crossings. Horizontal chains run West to East, vertical
  /// chains South to North; crossings are numbered along the chain.
  static Tangle ribbon(std::size_t k, Direction dir) {
    if (k == 0) throw InvalidArgument("ribbonTangle: a ribbon needs at least one crossing");
    Tangle t;
    t.crossings_ = k;
    t.partner_.assign(4 * k + 4, 0);
    for (std::size_t c = 0; c + 1 < k; ++c) {
      if (dir == Direction::Horizontal) {
        t.glue(portOf(c, Slot::NE), portOf(c + 1, Slot::NW));
        t.glue(portOf(c, Slot::SE), portOf(c + 1, Slot::SW));
      } else {
        t.glue(portOf(c, Slot::NW), portOf(c + 1, Slot::SW));
        t.glue(portOf(c, Slot::NE), portOf(c + 1, Slot::SE));
      }
    }
    if (dir == Direction::Horizontal) {
      t.glue(t.endNode(End::NW), portOf(0, Slot::NW));
      t.glue(t.endNode(End::SW), portOf(0, Slot::SW));
      t.glue(t.endNode(End::NE), portOf(k - 1, Slot::NE));
      t.glue(t.endNode(End::SE), portOf(k - 1, Slot::SE));
    } else {
      t.glue(t.endNode(End::SW), portOf(0, Slot::SW));
      t.glue(t.endNode(End::SE), portOf(0, Slot::SE));
      t.glue(t.endNode(End::NW), portOf(k - 1, Slot::NW));
      t.glue(t.endNode(End::NE), portOf(k - 1, Slot::NE));
    }
    return t;
  }

  /// Crossingless tangles: [0] joins NW-NE and SW-SE, [inf] joins NW-SW and NE-SE.
  static Tangle zero() { return crossingless(End::NE); }
  static Tangle infinity() { return crossingless(End::SW); }

 private:
  friend Tangle joinEW(const Tangle&, const Tangle&);
  friend Tangle joinNS(const Tangle&, const Tangle&);
  friend Diagram closeTangle(const Tangle&, End, End, End, End);

  static Tangle crossingless(End partnerOfNW) {
    Tangle t;
    t.partner_.assign(4, 0);
    t.glue(static_cast<std::size_t>(End::NW), static_cast<std::size_t>(partnerOfNW));
    std::vector<std::size_t> rest;
    for (End e : kEnds)
      if (e != End::NW && e != partnerOfNW) rest.push_back(static_cast<std::size_t>(e));
    t.glue(rest[0], rest[1]);
    return t;
  }
  void glue(std::size_t a, std::size_t b) {
    partner_[a] = b;
    partner_[b] = a;
  }

  std::size_t crossings_ = 0;
  std::size_t freeLoops_ = 0;
  std::vector<std::size_t> partner_;
};

namespace detail {

/// Shared scratch space for gluing tangles: the left operand's crossings,
/// then the right operand's, then free ends.
struct Gluing {
  std::vector<std::size_t> partner;
  std::vector<char> dead;
  std::size_t loops = 0;
  std::vector<std::pair<std::size_t, std::size_t>> fusedArcs;

  /// Joins free ends x and y: their neighbours become glued to each other.
  void fuse(std::size_t x, std::size_t y) {
    const std::size_t a = partner[x];
    const std::size_t b = partner[y];
    dead[x] = dead[y] = 1;
    if (a == y) {
      ++loops;
      return;
    }
    partner[a] = b;
    partner[b] = a;
    fusedArcs.emplace_back(a, b);
  }
};

}  // namespace detail

/// East of `left` glued to West of `right`.
inline Tangle joinEW(const Tangle& left, const Tangle& right) {
  const std::size_t vl = left.crossings_, vr = right.crossings_, v = vl + vr;
  detail::Gluing g;
  g.partner.assign(4 * v + 8, 0);
  g.dead.assign(4 * v + 8, 0);
  auto mapL = [&](std::size_t n) { return n < 4 * vl ? n : 4 * v + (n - 4 * vl); };
  auto mapR = [&](std::size_t n) { return n < 4 * vr ? 4 * vl + n : 4 * v + 4 + (n - 4 * vr); };
  for (std::size_t n = 0; n < left.partner_.size(); ++n) g.partner[mapL(n)] = mapL(left.partner_[n]);
  for (std::size_t n = 0; n < right.partner_.size(); ++n) g.partner[mapR(n)] = mapR(right.partner_[n]);
  auto L = [&](End e) { return 4 * v + static_cast<std::size_t>(e); };
  auto R = [&](End e) { return 4 * v + 4 + static_cast<std::size_t>(e); };
  g.fuse(L(End::NE), R(End::NW));
  g.fuse(L(End::SE), R(End::SW));
  const std::array<std::size_t, 4> ends{L(End::NW), R(End::NE), L(End::SW), R(End::SE)};

  Tangle t;
  t.crossings_ = v;
  t.freeLoops_ = left.freeLoops_ + right.freeLoops_ + g.loops;
  t.partner_.assign(4 * v + 4, 0);
  std::vector<std::size_t> remap(4 * v + 8, 0);
  for (std::size_t n = 0; n < 4 * v; ++n) remap[n] = n;
  for (std::size_t e = 0; e < 4; ++e) remap[ends[e]] = 4 * v + e;
  for (std::size_t n = 0; n < 4 * v + 8; ++n)
    if (!g.dead[n] && (n < 4 * v || std::find(ends.begin(), ends.end(), n) != ends.end()))
      t.partner_[remap[n]] = remap[g.partner[n]];
  return t;
}

/// North of `lower` glued to South of `upper`.
inline Tangle joinNS(const Tangle& lower, const Tangle& upper) {
  const std::size_t vl = lower.crossings_, vu = upper.crossings_, v = vl + vu;
  detail::Gluing g;
  g.partner.assign(4 * v + 8, 0);
  g.dead.assign(4 * v + 8, 0);
  auto mapL = [&](std::size_t n) { return n < 4 * vl ? n : 4 * v + (n - 4 * vl); };
  auto mapU = [&](std::size_t n) { return n < 4 * vu ? 4 * vl + n : 4 * v + 4 + (n - 4 * vu); };
  for (std::size_t n = 0; n < lower.partner_.size(); ++n) g.partner[mapL(n)] = mapL(lower.partner_[n]);
  for (std::size_t n = 0; n < upper.partner_.size(); ++n) g.partner[mapU(n)] = mapU(upper.partner_[n]);
  auto L = [&](End e) { return 4 * v + static_cast<std::size_t>(e); };
  auto U = [&](End e) { return 4 * v + 4 + static_cast<std::size_t>(e); };
  g.fuse(L(End::NW), U(End::SW));
  g.fuse(L(End::NE), U(End::SE));
  const std::array<std::size_t, 4> ends{U(End::NW), U(End::NE), L(End::SW), L(End::SE)};

  Tangle t;
  t.crossings_ = v;
  t.freeLoops_ = lower.freeLoops_ + upper.freeLoops_ + g.loops;
  t.partner_.assign(4 * v + 4, 0);
  std::vector<std::size_t> remap(4 * v + 8, 0);
  for (std::size_t n = 0; n < 4 * v; ++n) remap[n] = n;
  for (std::size_t e = 0; e < 4; ++e) remap[ends[e]] = 4 * v + e;
  for (std::size_t n = 0; n < 4 * v + 8; ++n)
    if (!g.dead[n] && (n < 4 * v || std::find(ends.begin(), ends.end(), n) != ends.end()))
      t.partner_[remap[n]] = remap[g.partner[n]];
  return t;
}

/// Fuses ends a1-b1 then a2-b2. The two arcs created become the diagram's
/// anchors, in that order.
inline Diagram closeTangle(const Tangle& t, End a1, End b1, End a2, End b2) {
  const std::size_t v = t.crossings_;
  detail::Gluing g;
  g.partner = t.partner_;
  g.dead.assign(t.partner_.size(), 0);
  g.fuse(t.endNode(a1), t.endNode(b1));
  g.fuse(t.endNode(a2), t.endNode(b2));
  if (t.freeLoops_ + g.loops > 0)
    throw ClosureDisconnected("tangle closure leaves a component without crossings");
  std::vector<Port> partner(g.partner.begin(), g.partner.begin() + static_cast<std::ptrdiff_t>(4 * v));
  std::vector<Arc> anchors;
  for (const auto& [a, b] : g.fusedArcs) anchors.push_back({a, b});
  return Diagram::fromPorts(std::move(partner), 0, std::move(anchors));
}

/// N(T): NW-NE and SW-SE.
inline Diagram numeratorClosure(const Tangle& t) { return closeTangle(t, End::NW, End::NE, End::SW, End::SE); }
/// D(T): NW-SW and NE-SE.
inline Diagram denominatorClosure(const Tangle& t) { return closeTangle(t, End::NW, End::SW, End::NE, End::SE); }

inline Tangle ribbonTangle(std::size_t k, Direction dir) { return Tangle::ribbon(k, dir); }

/// Which free ends carry an outgoing edge once alternation is assigned
/// with the NW end outgoing.
struct TangleOrientation {
  std::array<bool, 4> outgoing{};  // indexed by End
  bool determined = true;          // false if some end meets no crossing
  /// SE and NW outgoing, SW and NE incoming.
  bool conventional() const {
    return determined && outgoing[0] && !outgoing[1] && !outgoing[2] && outgoing[3];
  }
};

inline TangleOrientation tangleOrientation(const Tangle& t) {
  const std::size_t v = t.crossingCount();
  // Strands: open ones from each end, then closed ones.
  std::vector<std::vector<std::size_t>> strands;  // entry ports per visit
  std::vector<int> strandOfEnd(4, -1);
  std::vector<char> used(4 * v, 0);
  TangleOrientation result;
  for (End e : kEnds) {
    const std::size_t start = t.endNode(e);
    std::size_t node = t.partner(start);
    if (t.isEnd(node)) {
      result.determined = false;
      continue;
    }
    if (used[node]) continue;  // strand already walked from its other end
    std::vector<std::size_t> s;
    while (!t.isEnd(node)) {
      used[node] = used[oppositePort(node)] = 1;
      s.push_back(node);
      node = t.partner(oppositePort(node));
    }
    strandOfEnd[static_cast<std::size_t>(e)] = static_cast<int>(strands.size());
    strandOfEnd[node - 4 * v] = static_cast<int>(strands.size());
    strands.push_back(std::move(s));
  }
  for (std::size_t p = 0; p < 4 * v; ++p) {
    if (used[p]) continue;
    std::vector<std::size_t> s;
    std::size_t node = p;
    do {
      used[node] = used[oppositePort(node)] = 1;
      s.push_back(node);
      node = t.partner(oppositePort(node));
    } while (node != p);
    strands.push_back(std::move(s));
  }
  struct Loc {
    std::size_t strand, pos;
  };
  std::vector<std::vector<Loc>> where(v);
  for (std::size_t s = 0; s < strands.size(); ++s)
    for (std::size_t i = 0; i < strands[s].size(); ++i) where[crossingOf(strands[s][i])].push_back({s, i});
  std::vector<int> parity(strands.size(), -1);
  auto solveFrom = [&](std::size_t root, int rootParity) {
    parity[root] = rootParity;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t s = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < strands[s].size(); ++i) {
        const auto& locs = where[crossingOf(strands[s][i])];
        const Loc other = (locs[0].strand == s && locs[0].pos == i) ? locs[1] : locs[0];
        const int want = static_cast<int>((i + static_cast<std::size_t>(parity[s]) + 1 + other.pos) % 2);
        if (parity[other.strand] == -1) {
          parity[other.strand] = want;
          queue.push_back(other.strand);
        } else if (parity[other.strand] != want) {
          throw AlternationConflict("tangle admits no alternating assignment");
        }
      }
    }
  };
  const int nwStrand = strandOfEnd[static_cast<std::size_t>(End::NW)];
  if (nwStrand >= 0) {
    // NW end is outgoing iff the strand's visit next to it is Over. The
    // strand walked from NW has that visit at position 0; walked from the
    // other end it is the last visit.
    const auto& s = strands[static_cast<std::size_t>(nwStrand)];
    const bool fromNW = t.partner(t.endNode(End::NW)) == s.front();
    const std::size_t pos = fromNW ? 0 : s.size() - 1;
    solveFrom(static_cast<std::size_t>(nwStrand), static_cast<int>(pos % 2));
  }
  for (std::size_t s = 0; s < strands.size(); ++s)
    if (parity[s] == -1) solveFrom(s, 0);
  for (End e : kEnds) {
    const int s = strandOfEnd[static_cast<std::size_t>(e)];
    if (s < 0) continue;
    const auto& st = strands[static_cast<std::size_t>(s)];
    const std::size_t pos = t.partner(t.endNode(e)) == st.front() ? 0 : st.size() - 1;
    result.outgoing[static_cast<std::size_t>(e)] = (pos + static_cast<std::size_t>(parity[static_cast<std::size_t>(s)])) % 2 == 0;
  }
  return result;
}

inline bool checkOrientationConvention(const Tangle& t) { return tangleOrientation(t).conventional(); }

// ---------------------------------------------------------------------------
// Builders

/// Twisted circle: V crossings, two loops, V-1 bigons.
inline Diagram buildTwistChain(std::size_t v) {
  if (v < 1) throw InvalidArgument("buildTwistChain: need at least one crossing");
  return numeratorClosure(ribbonTangle(v, Direction::Vertical));
}

/// Closed two-strand chain of V crossings (torus links T(2,V)).
inline Diagram buildCyclicTorus(std::size_t v) {
  if (v < 1) throw InvalidArgument("buildCyclicTorus: need at least one crossing");
  return numeratorClosure(ribbonTangle(v, Direction::Horizontal));
}

inline void requireRibbonCounts(const std::vector<std::size_t>& a, std::size_t minLength, const char* who) {
  if (a.size() < minLength)
    throw InvalidArgument(std::string(who) + ": need at least " + std::to_string(minLength) + " ribbons");
  for (std::size_t x : a)
    if (x < 1) throw InvalidArgument(std::string(who) + ": ribbon crossing counts must be >= 1");
}

/// Vertical ribbons side by side, numerator closure.
inline Diagram buildPretzel(const std::vector<std::size_t>& a) {
  requireRibbonCounts(a, 2, "buildPretzel");
  Tangle t = ribbonTangle(a[0], Direction::Vertical);
  for (std::size_t i = 1; i < a.size(); ++i) t = joinEW(t, ribbonTangle(a[i], Direction::Vertical));
  return numeratorClosure(t);
}

/// Rational tangle for the continued fraction a1 + 1/(a2 + 1/(...)):
/// start from a horizontal ribbon a_N, then alternately stack vertical and
/// append horizontal ribbons down to a_1, and close so the determinant is
/// the numerator.
inline Diagram buildRational(const std::vector<std::size_t>& a) {
  requireRibbonCounts(a, 1, "buildRational");
  const std::size_t n = a.size();
  Tangle t = ribbonTangle(a[n - 1], Direction::Horizontal);
  bool lastHorizontal = true;
  for (std::size_t step = 1; step < n; ++step) {
    const std::size_t k = a[n - 1 - step];
    if (step % 2 == 1) {
      t = joinNS(t, ribbonTangle(k, Direction::Vertical));
      lastHorizontal = false;
    } else {
      t = joinEW(t, ribbonTangle(k, Direction::Horizontal));
      lastHorizontal = true;
    }
  }
  return lastHorizontal ? numeratorClosure(t) : denominatorClosure(t);
}

// ---------------------------------------------------------------------------
// Tangle expressions: N(V1+(H2*V3)) and the like. '+' is joinEW, '*' is
// joinNS (binds tighter), H<i>/V<i> is a ribbon of a_i crossings.

namespace detail {

class TangleExprParser {
 public:
  TangleExprParser(std::string_view text, const std::vector<std::size_t>& counts) : s_(text), a_(counts) {}

  Diagram parse() {
    skip();
    if (pos_ >= s_.size()) fail("empty tangle expression");
    const char closure = static_cast<char>(std::toupper(static_cast<unsigned char>(s_[pos_])));
    if (closure != 'N' && closure != 'D') fail("expected closure N(...) or D(...)");
    ++pos_;
    expect('(');
    Tangle t = sum();
    expect(')');
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return closure == 'N' ? numeratorClosure(t) : denominatorClosure(t);
  }

 private:
  Tangle sum() {
    Tangle t = product();
    while (peek('+')) {
      ++pos_;
      t = joinEW(t, product());
    }
    return t;
  }
  Tangle product() {
    Tangle t = atom();
    while (peek('*')) {
      ++pos_;
      t = joinNS(t, atom());
    }
    return t;
  }
  Tangle atom() {
    skip();
    if (peek('(')) {
      ++pos_;
      Tangle t = sum();
      expect(')');
      return t;
    }
    if (pos_ >= s_.size()) fail("unexpected end of tangle expression");
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(s_[pos_])));
    if (kind != 'H' && kind != 'V') fail("expected H<i>, V<i> or '('");
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("missing ribbon index");
    const std::size_t index = std::stoul(std::string(s_.substr(start, pos_ - start)));
    if (index < 1 || index > a_.size())
      throw ArityMismatch("tangle expression uses a" + std::to_string(index) + " but only " +
                          std::to_string(a_.size()) + " counts were given");
    return ribbonTangle(a_[index - 1], kind == 'H' ? Direction::Horizontal : Direction::Vertical);
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  const std::vector<std::size_t>& a_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Diagram buildFromTangleExpression(std::string_view expr, const std::vector<std::size_t>& counts) {
  requireRibbonCounts(counts, 0, "buildFromTangleExpression");
  return detail::TangleExprParser(expr, counts).parse();
}

// ---------------------------------------------------------------------------
// Operations on two diagrams

namespace detail {

struct Merged {
  std::vector<Port> partner;
  std::size_t offset = 0;  // first port of the right operand
  std::size_t loops = 0;
  std::vector<Arc> leftAnchors, rightAnchors;
};

inline Merged merge(const Diagram& d1, const Diagram& d2, std::size_t extraCrossings) {
  Merged m;
  m.offset = d1.ports().size();
  m.partner.resize(d1.ports().size() + d2.ports().size() + 4 * extraCrossings);
  for (Port p = 0; p < d1.ports().size(); ++p) m.partner[p] = d1.partner(p);
  for (Port p = 0; p < d2.ports().size(); ++p) m.partner[m.offset + p] = m.offset + d2.partner(p);
  m.loops = d1.freeLoops() + d2.freeLoops();
  for (const Arc& arc : d1.anchors()) m.leftAnchors.push_back(arc);
  for (const Arc& arc : d2.anchors()) m.rightAnchors.push_back({arc.a + m.offset, arc.b + m.offset});
  return m;
}

inline void glue(std::vector<Port>& partner, Port a, Port b) {
  partner[a] = b;
  partner[b] = a;
}

inline std::vector<Arc> liveAnchors(const std::vector<Port>& partner, const std::vector<Arc>& first,
                                    const std::vector<Arc>& second) {
  std::vector<Arc> out;
  for (const auto* list : {&first, &second})
    for (const Arc& arc : *list)
      if (arc.a < partner.size() && partner[arc.a] == arc.b &&
          std::find(out.begin(), out.end(), arc) == out.end())
        out.push_back(arc);
  return out;
}

/// Drops one crossingless circle from an operand that is used as a strand.
inline std::size_t consumeLoop(const Diagram& d) { return d.crossingCount() == 0 ? 1 : 0; }

}  // namespace detail

/// Side-by-side placement; the matrix is block diagonal.
inline Diagram disjointUnion(const Diagram& d1, const Diagram& d2) {
  auto m = detail::merge(d1, d2, 0);
  auto anchors = detail::liveAnchors(m.partner, m.leftAnchors, m.rightAnchors);
  return Diagram::fromPorts(std::move(m.partner), m.loops, std::move(anchors));
}

inline void requireNonEmpty(const Diagram& d, const char* who) {
  if (d.isEmpty()) throw EmptyDiagram(std::string(who) + ": operand has no crossings and no components");
}

/// Connected sum: the connection arc p-q of d1 and r-s of d2 are cut and
/// reconnected as p-r, q-s. The unknot is the identity.
inline Diagram composeKnots(const Diagram& d1, const Diagram& d2) {
  requireNonEmpty(d1, "composeKnots");
  requireNonEmpty(d2, "composeKnots");
  if (d2.crossingCount() == 0) {
    Diagram r = disjointUnion(d1, Diagram());
    return Diagram::fromPorts(r.ports(), d1.freeLoops() + d2.freeLoops() - 1, r.anchors());
  }
  if (d1.crossingCount() == 0) return composeKnots(d2, d1);
  const Arc a1 = d1.connectionArc();
  const Arc a2 = d2.connectionArc();
  auto m = detail::merge(d1, d2, 0);
  const Port p = a1.a, q = a1.b, r = a2.a + m.offset, s = a2.b + m.offset;
  detail::glue(m.partner, p, r);
  detail::glue(m.partner, q, s);
  auto anchors = detail::liveAnchors(m.partner, m.rightAnchors, m.leftAnchors);
  return Diagram::fromPorts(std::move(m.partner), m.loops, std::move(anchors));
}

/// Composition with a half twist on the two connecting strands: one new
/// crossing t with p-t.NE, t.SW-s, q-t.NW, t.SE-r.
inline Diagram twistComposition(const Diagram& d1, const Diagram& d2) {
  requireNonEmpty(d1, "twistComposition");
  requireNonEmpty(d2, "twistComposition");
  if (d1.crossingCount() == 0 && d2.crossingCount() > 0) return twistComposition(d2, d1);
  auto m = detail::merge(d1, d2, 1);
  const std::size_t t = (m.partner.size() / 4) - 1;
  const Port tNE = portOf(t, Slot::NE), tNW = portOf(t, Slot::NW), tSW = portOf(t, Slot::SW),
             tSE = portOf(t, Slot::SE);
  if (d1.crossingCount() == 0) {
    // Both operands are circles: a figure eight.
    detail::glue(m.partner, tNE, tNW);
    detail::glue(m.partner, tSW, tSE);
    return Diagram::fromPorts(std::move(m.partner), m.loops - 2, {});
  }
  const Arc a1 = d1.connectionArc();
  const Port p = a1.a, q = a1.b;
  detail::glue(m.partner, p, tNE);
  detail::glue(m.partner, q, tNW);
  std::size_t loops = m.loops;
  if (d2.crossingCount() == 0) {
    detail::glue(m.partner, tSW, tSE);
    loops -= 1;
  } else {
    const Arc a2 = d2.connectionArc();
    detail::glue(m.partner, tSW, a2.b + m.offset);
    detail::glue(m.partner, tSE, a2.a + m.offset);
  }
  auto anchors = detail::liveAnchors(m.partner, m.rightAnchors, m.leftAnchors);
  return Diagram::fromPorts(std::move(m.partner), loops, std::move(anchors));
}

/// The two connection arcs clasp, forming a new two-edge face: the d1
/// strand runs p, s1, s2, q and the d2 strand runs r, s2, s1, s.
inline Diagram linkComposition(const Diagram& d1, const Diagram& d2) {
  requireNonEmpty(d1, "linkComposition");
  requireNonEmpty(d2, "linkComposition");
  if (d1.crossingCount() == 0 && d2.crossingCount() > 0) return linkComposition(d2, d1);
  auto m = detail::merge(d1, d2, 2);
  const std::size_t s1 = (m.partner.size() / 4) - 2, s2 = s1 + 1;
  std::size_t loops = m.loops;
  // d1 strand: p -> s1 (NE..SW) -> s2 (NE..SW) -> q
  detail::glue(m.partner, portOf(s1, Slot::SW), portOf(s2, Slot::NE));
  if (d1.crossingCount() == 0) {
    detail::glue(m.partner, portOf(s2, Slot::SW), portOf(s1, Slot::NE));
    loops -= 1;
  } else {
    const Arc a1 = d1.connectionArc();
    detail::glue(m.partner, a1.a, portOf(s1, Slot::NE));
    detail::glue(m.partner, portOf(s2, Slot::SW), a1.b);
  }
  // d2 strand: r -> s2 (NW..SE) -> s1 (NW..SE) -> s
  detail::glue(m.partner, portOf(s2, Slot::SE), portOf(s1, Slot::NW));
  if (d2.crossingCount() == 0) {
    detail::glue(m.partner, portOf(s1, Slot::SE), portOf(s2, Slot::NW));
    loops -= 1;
  } else {
    const Arc a2 = d2.connectionArc();
    detail::glue(m.partner, a2.a + m.offset, portOf(s2, Slot::NW));
    detail::glue(m.partner, portOf(s1, Slot::SE), a2.b + m.offset);
  }
  auto anchors = detail::liveAnchors(m.partner, m.rightAnchors, m.leftAnchors);
  return Diagram::fromPorts(std::move(m.partner), loops, std::move(anchors));
}

/// The four diagrams related by link = (x+2) twist - (x+1) factor - x composition.
struct Quartet {
  Diagram factor, composition, twist, link;
};

inline Quartet makeQuartet(const Diagram& d1, const Diagram& d2) {
  return {disjointUnion(d1, d2), composeKnots(d1, d2), twistComposition(d1, d2), linkComposition(d1, d2)};
}

}  // namespace altknot
