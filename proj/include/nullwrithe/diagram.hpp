#pragma once

// Oriented link diagrams: crossing records, strand structure, and the two
// text encodings (pd-signed and gauss-signed).
//
// pd-signed:    `X+ a b c d ; X- a b c d ; ...` where `a` is the incoming
//               under arc and b, c, d follow counterclockwise (so `c` is the
//               outgoing under arc). For `X+` the over strand runs d -> b,
//               for `X-` it runs b -> d. The literals `unknot` and
//               `unlink <k>` add crossingless components.
// gauss-signed: one parenthesized group per component, e.g.
//               `(O1+ U2+ O3+ U1+ O2+ U3+)`; each crossing appears once as
//               `O` and once as `U` with the same sign.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nullwrithe/errors.hpp"

namespace nullwrithe {

/// Crossing sign under the right-hand rule.
enum class Sign : std::int8_t { negative = -1, positive = +1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}

/// Normalized arc label. Arcs of a Diagram are numbered densely from 0; the
/// text encodings print `index + 1`.
struct ArcId {
  std::uint32_t index = 0;

  constexpr std::uint32_t label() const noexcept { return index + 1; }
  friend constexpr auto operator<=>(ArcId, ArcId) = default;
};

struct Crossing {
  ArcId under_in;
  ArcId under_out;
  ArcId over_in;
  ArcId over_out;
  Sign sign = Sign::positive;

  /// Arc ends in counterclockwise order starting at the incoming under arc,
  /// i.e. the four numbers of the pd-signed record.
  constexpr std::array<ArcId, 4> ccw() const noexcept {
    return sign == Sign::positive
               ? std::array<ArcId, 4>{under_in, over_out, under_out, over_in}
               : std::array<ArcId, 4>{under_in, over_in, under_out, over_out};
  }

  friend constexpr bool operator==(const Crossing&, const Crossing&) = default;
};

enum class Format { pd_signed, gauss_signed };

/// One strand passing through a crossing.
struct Passage {
  std::size_t crossing = 0;
  bool over = false;

  friend constexpr bool operator==(Passage, Passage) = default;
};

/// A validated oriented link diagram. Immutable after construction.
class Diagram {
 public:
  /// Validates the crossing records. Arcs must be numbered 0..m-1 with every
  /// arc used exactly once as an incoming and once as an outgoing slot.
  /// `free_loops` counts crossingless components (unknot / unlink parts).
  Diagram(std::vector<Crossing> crossings, std::size_t free_loops)
      : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (crossings_.empty() && free_loops_ == 0)
      throw DegenerateError("diagram has no crossings and no components");
    validate_and_index();
  }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t arc_count() const noexcept { return head_.size(); }
  std::size_t free_loops() const noexcept { return free_loops_; }

  /// Component cycles of the strand-successor map, each starting at its
  /// smallest arc, ordered by that arc. Free loops are not listed.
  const std::vector<std::vector<ArcId>>& strand_cycles() const noexcept {
    return cycles_;
  }
  std::size_t component_count() const noexcept {
    return cycles_.size() + free_loops_;
  }
  /// Index into strand_cycles() of the component carrying `a`.
  std::size_t component_of(ArcId a) const { return component_.at(a.index); }

  /// Passage at which the arc ends / starts.
  Passage head(ArcId a) const { return head_.at(a.index); }
  Passage tail(ArcId a) const { return tail_.at(a.index); }

  /// under_in -> under_out and over_in -> over_out.
  ArcId strand_successor(ArcId a) const {
    const Passage p = head(a);
    const Crossing& x = crossings_[p.crossing];
    return p.over ? x.over_out : x.under_out;
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_;
  }

 private:
  void validate_and_index();

  std::vector<Crossing> crossings_;
  std::size_t free_loops_ = 0;
  std::vector<Passage> head_;
  std::vector<Passage> tail_;
  std::vector<std::vector<ArcId>> cycles_;
  std::vector<std::size_t> component_;
};

inline void Diagram::validate_and_index() {
  std::uint32_t max_index = 0;
  bool any = false;
  for (const Crossing& x : crossings_)
    for (ArcId a : {x.under_in, x.under_out, x.over_in, x.over_out}) {
      max_index = std::max(max_index, a.index);
      any = true;
    }
  const std::size_t m = any ? std::size_t{max_index} + 1 : 0;

  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> head_crossing(m, unset), tail_crossing(m, unset);
  head_.assign(m, Passage{});
  tail_.assign(m, Passage{});

  const bool single = crossings_.size() == 1;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const Crossing& x = crossings_[i];
    // Only the one-crossing kink may reuse an arc, and only by closing a
    // strand back onto the other strand of the same crossing.
    const bool distinct = x.under_in != x.under_out && x.under_in != x.over_in &&
                          x.under_in != x.over_out && x.under_out != x.over_in &&
                          x.under_out != x.over_out && x.over_in != x.over_out;
    if (!distinct) {
      const bool kink = single && x.under_in != x.under_out && x.over_in != x.over_out &&
                        x.under_in != x.over_in && x.under_out != x.over_out;
      if (!kink)
        throw ArcConsistencyError("crossing " + std::to_string(i + 1) +
                                  " repeats an arc label");
    }
    auto claim = [&](std::vector<std::size_t>& owner, std::vector<Passage>& slot, ArcId a,
                     bool over, const char* what) {
      if (owner[a.index] != unset)
        throw ArcConsistencyError("arc " + std::to_string(a.label()) + " is used twice as " +
                                  what + " (crossings " + std::to_string(owner[a.index] + 1) +
                                  " and " + std::to_string(i + 1) + ")");
      owner[a.index] = i;
      slot[a.index] = Passage{i, over};
    };
    claim(head_crossing, head_, x.under_in, false, "an incoming slot");
    claim(head_crossing, head_, x.over_in, true, "an incoming slot");
    claim(tail_crossing, tail_, x.under_out, false, "an outgoing slot");
    claim(tail_crossing, tail_, x.over_out, true, "an outgoing slot");
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (head_crossing[a] == unset || tail_crossing[a] == unset)
      throw ArcConsistencyError("arc " + std::to_string(a + 1) + " is not used exactly once in and once out");
  }

  component_.assign(m, unset);
  cycles_.clear();
  for (std::uint32_t start = 0; start < m; ++start) {
    if (component_[start] != unset) continue;
    std::vector<ArcId> cycle;
    ArcId a{start};
    while (component_[a.index] == unset) {
      component_[a.index] = cycles_.size();
      cycle.push_back(a);
      a = strand_successor(a);
    }
    cycles_.push_back(std::move(cycle));
  }
}

// ---------------------------------------------------------------------------
// Basic queries

inline std::vector<Sign> crossing_signs(const Diagram& d) {
  std::vector<Sign> out;
  out.reserve(d.crossing_count());
  for (const Crossing& x : d.crossings()) out.push_back(x.sign);
  return out;
}

/// Sum of all crossing signs.
inline int writhe(const Diagram& d) {
  int w = 0;
  for (const Crossing& x : d.crossings()) w += to_int(x.sign);
  return w;
}

inline std::size_t component_count(const Diagram& d) { return d.component_count(); }

/// Exchanges over and under at every crossing. Every sign flips; the arc
/// labels and the strand structure are preserved.
inline Diagram mirror(const Diagram& d) {
  std::vector<Crossing> out;
  out.reserve(d.crossing_count());
  for (const Crossing& x : d.crossings())
    out.push_back(Crossing{x.over_in, x.over_out, x.under_in, x.under_out, -x.sign});
  return Diagram(std::move(out), d.free_loops());
}

/// True iff passages strictly alternate over/under along every component.
inline bool is_alternating(const Diagram& d) {
  for (const auto& cycle : d.strand_cycles()) {
    if (cycle.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const ArcId next = cycle[(i + 1) % cycle.size()];
      if (d.head(cycle[i]).over == d.head(next).over) return false;
    }
  }
  return true;
}

/// Juxtaposes two diagrams; arcs of `b` are shifted past those of `a`.
inline Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  std::vector<Crossing> out = a.crossings();
  const auto shift = static_cast<std::uint32_t>(a.arc_count());
  for (Crossing x : b.crossings()) {
    for (ArcId* arc : {&x.under_in, &x.under_out, &x.over_in, &x.over_out}) arc->index += shift;
    out.push_back(x);
  }
  return Diagram(std::move(out), a.free_loops() + b.free_loops());
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
        ++pos_;
      } else if (text_.substr(pos_, 2) == "\xC2\xA0") {
        pos_ += 2;
      } else {
        break;
      }
    }
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  /// '+', '-', or U+2212 MINUS SIGN. Whitespace is not skipped.
  std::optional<Sign> sign_immediate() {
    if (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      return Sign::positive;
    }
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return Sign::negative;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return Sign::negative;
    }
    return std::nullopt;
  }
  std::optional<Sign> sign() {
    skip_space();
    return sign_immediate();
  }
  /// Positive decimal integer without sign.
  std::optional<std::uint32_t> number_immediate() {
    std::uint64_t v = 0;
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > std::numeric_limits<std::uint32_t>::max() / 2) fail("integer out of range");
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return static_cast<std::uint32_t>(v);
  }
  std::optional<std::uint32_t> number() {
    skip_space();
    return number_immediate();
  }
  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                                   (text_[pos_] >= 'A' && text_[pos_] <= 'Z')))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }
  std::size_t position() const noexcept { return pos_; }
  void rewind(std::size_t p) noexcept { pos_ = p; }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Maps arbitrary positive labels onto 0..m-1 preserving order.
inline std::map<std::uint32_t, std::uint32_t> normalize_labels(
    const std::vector<std::uint32_t>& labels) {
  std::map<std::uint32_t, std::uint32_t> out;
  for (std::uint32_t l : labels) out.emplace(l, 0);
  std::uint32_t next = 0;
  for (auto& [label, index] : out) index = next++;
  return out;
}

/// Reads `unknot` or `unlink <k>` if present; returns the number of loops.
inline std::optional<std::size_t> literal(Lexer& lex) {
  const std::size_t mark = lex.position();
  const std::string_view w = lex.word();
  if (w == "unknot") return 1;
  if (w == "unlink") {
    auto k = lex.number();
    if (!k || *k == 0) lex.fail("expected a positive component count after 'unlink'");
    return *k;
  }
  lex.rewind(mark);
  return std::nullopt;
}

inline Diagram parse_pd(std::string_view text) {
  struct Record {
    Sign sign;
    std::array<std::uint32_t, 4> slots;
    std::size_t statement;
  };
  Lexer lex(text);
  std::vector<Record> records;
  std::size_t loops = 0;
  std::size_t statement = 0;
  while (!lex.done()) {
    ++statement;
    if (lex.accept(';')) continue;
    if (auto k = literal(lex)) {
      loops += *k;
    } else if (lex.accept('X')) {
      auto s = lex.sign();
      if (!s) lex.fail("expected '+' or '-' after 'X' in statement " + std::to_string(statement));
      Record r{*s, {}, statement};
      for (auto& slot : r.slots) {
        auto v = lex.number();
        if (!v) lex.fail("expected four arc labels in statement " + std::to_string(statement));
        if (*v == 0) lex.fail("arc labels must be positive");
        slot = *v;
      }
      records.push_back(r);
    } else {
      lex.fail("unexpected token in statement " + std::to_string(statement));
    }
    if (!lex.done() && !lex.accept(';'))
      lex.fail("expected ';' after statement " + std::to_string(statement));
  }
  if (records.empty() && loops == 0)
    throw DegenerateError("no crossings; use the literal 'unknot' or 'unlink <k>'");

  std::vector<std::uint32_t> labels;
  for (const Record& r : records) labels.insert(labels.end(), r.slots.begin(), r.slots.end());

  // Check arc usage on the original labels so diagnostics name them.
  std::map<std::uint32_t, std::pair<int, int>> usage;
  for (const Record& r : records) {
    const auto [a, b, c, d] = r.slots;
    const std::uint32_t over_in = r.sign == Sign::positive ? d : b;
    const std::uint32_t over_out = r.sign == Sign::positive ? b : d;
    ++usage[a].first;
    ++usage[over_in].first;
    ++usage[c].second;
    ++usage[over_out].second;
  }
  for (const auto& [label, io] : usage) {
    if (io.first != 1 || io.second != 1)
      throw ArcConsistencyError("arc " + std::to_string(label) + " is used " +
                                std::to_string(io.first) + " time(s) as input and " +
                                std::to_string(io.second) +
                                " time(s) as output; expected once each");
  }

  const auto index = normalize_labels(labels);
  auto arc = [&](std::uint32_t l) { return ArcId{index.at(l)}; };
  std::vector<Crossing> crossings;
  crossings.reserve(records.size());
  for (const Record& r : records) {
    const auto [a, b, c, d] = r.slots;
    if (r.sign == Sign::positive)
      crossings.push_back(Crossing{arc(a), arc(c), arc(d), arc(b), r.sign});
    else
      crossings.push_back(Crossing{arc(a), arc(c), arc(b), arc(d), r.sign});
  }
  return Diagram(std::move(crossings), loops);
}

inline Diagram parse_gauss(std::string_view text) {
  struct Token {
    bool over;
    std::uint32_t crossing;
    Sign sign;
  };
  Lexer lex(text);
  std::vector<std::vector<Token>> components;
  std::size_t loops = 0;
  bool saw_literal = false;
  while (!lex.done()) {
    if (lex.accept(';') || lex.accept(',')) continue;
    if (auto k = literal(lex)) {
      loops += *k;
      saw_literal = true;
      continue;
    }
    if (!lex.accept('(')) lex.fail("expected '(' to open a component");
    std::vector<Token> seq;
    while (!lex.accept(')')) {
      if (lex.done()) lex.fail("unterminated component");
      if (lex.accept(',')) continue;
      const char c = lex.peek();
      if (c != 'O' && c != 'U') lex.fail("expected a passage token O<i><s> or U<i><s>");
      lex.accept(c);
      auto idx = lex.number_immediate();
      if (!idx || *idx == 0) lex.fail("expected a positive crossing index");
      auto s = lex.sign_immediate();
      if (!s) lex.fail("expected a sign after crossing index " + std::to_string(*idx));
      seq.push_back(Token{c == 'O', *idx, *s});
    }
    if (seq.empty())
      ++loops;
    else
      components.push_back(std::move(seq));
  }
  // An empty group alone is not an accepted spelling of the unknot.
  if (components.empty() && !saw_literal)
    throw DegenerateError("no crossings; use the literal 'unknot' or 'unlink <k>'");

  struct Ends {
    std::optional<std::pair<std::uint32_t, std::uint32_t>> under, over;  // (in, out)
    std::optional<Sign> sign;
  };
  std::map<std::uint32_t, Ends> ends;
  std::uint32_t next_arc = 0;
  for (const auto& seq : components) {
    const std::uint32_t first = next_arc;
    const auto len = static_cast<std::uint32_t>(seq.size());
    for (std::uint32_t j = 0; j < len; ++j) {
      const Token& t = seq[j];
      // Arc j leaves passage j; the passage is entered by arc j-1.
      const std::uint32_t in = first + (j + len - 1) % len;
      const std::uint32_t out = first + j;
      Ends& e = ends[t.crossing];
      auto& slot = t.over ? e.over : e.under;
      if (slot)
        throw ArcConsistencyError("crossing " + std::to_string(t.crossing) + " has two " +
                                  (t.over ? "over" : "under") + " passages");
      slot = std::make_pair(in, out);
      if (e.sign && *e.sign != t.sign)
        throw ArcConsistencyError("crossing " + std::to_string(t.crossing) +
                                  " has mismatched signs on its passages");
      e.sign = t.sign;
    }
    next_arc += len;
  }
  std::vector<Crossing> crossings;
  crossings.reserve(ends.size());
  for (const auto& [idx, e] : ends) {
    if (!e.over || !e.under)
      throw ArcConsistencyError("crossing " + std::to_string(idx) +
                                " needs exactly one O and one U passage");
    crossings.push_back(Crossing{ArcId{e.under->first}, ArcId{e.under->second},
                                 ArcId{e.over->first}, ArcId{e.over->second}, *e.sign});
  }
  return Diagram(std::move(crossings), loops);
}

}  // namespace detail

inline Diagram parse_diagram(std::string_view text, Format format = Format::pd_signed) {
  return format == Format::pd_signed ? detail::parse_pd(text) : detail::parse_gauss(text);
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {
inline std::string loops_literal(std::size_t loops) {
  return loops == 1 ? std::string("unknot") : "unlink " + std::to_string(loops);
}
}  // namespace detail

inline std::string to_pd_string(const Diagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const Crossing& x : d.crossings()) {
    if (!first) os << " ; ";
    first = false;
    os << (x.sign == Sign::positive ? "X+" : "X-");
    for (ArcId a : x.ccw()) os << ' ' << a.label();
  }
  if (d.free_loops() > 0) {
    if (!first) os << " ; ";
    os << detail::loops_literal(d.free_loops());
  }
  return os.str();
}

inline std::string to_gauss_string(const Diagram& d) {
  if (d.crossing_count() == 0) return detail::loops_literal(d.free_loops());
  std::ostringstream os;
  bool first = true;
  for (const auto& cycle : d.strand_cycles()) {
    if (!first) os << ' ';
    first = false;
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Passage p = d.tail(cycle[i]);
      if (i) os << ' ';
      os << (p.over ? 'O' : 'U') << p.crossing + 1
         << (d.crossings()[p.crossing].sign == Sign::positive ? '+' : '-');
    }
    os << ')';
  }
  for (std::size_t i = 0; i < d.free_loops(); ++i) os << " ()";
  return os.str();
}

inline std::string to_string(const Diagram& d, Format format) {
  return format == Format::pd_signed ? to_pd_string(d) : to_gauss_string(d);
}

}  // namespace nullwrithe
