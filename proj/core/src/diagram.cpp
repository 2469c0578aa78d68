#include "qinv/diagram.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "qinv/errors.hpp"

namespace qinv {

namespace {

std::optional<int> to_int(std::string_view token) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) out.push_back(text.substr(start, pos - start));
  }
  return out;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

// Incoming position -> outgoing position along the same strand.
int pass_through(const Crossing& c, int in_pos) {
  if (in_pos == 0) return 2;
  return in_pos == c.over_in() ? c.over_out() : -1;
}

struct End {
  std::size_t crossing;
  int pos;
};

// label -> where the arc ends (enters a crossing).
std::map<int, End> arc_heads(const std::vector<Crossing>& crossings) {
  std::map<int, End> heads;
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    heads[crossings[c].arcs[0]] = {c, 0};
    heads[crossings[c].arcs[crossings[c].over_in()]] = {c, crossings[c].over_in()};
  }
  return heads;
}

// Arc labels of every crossing-carrying component, walked in orientation order.
std::vector<std::vector<int>> trace_components(const std::vector<Crossing>& crossings) {
  const auto heads = arc_heads(crossings);
  std::set<int> seen;
  std::vector<std::vector<int>> cycles;
  for (const auto& crossing : crossings) {
    for (int start : crossing.arcs) {
      if (seen.count(start)) continue;
      std::vector<int> cycle;
      int cur = start;
      do {
        seen.insert(cur);
        cycle.push_back(cur);
        const End head = heads.at(cur);
        const Crossing& x = crossings[head.crossing];
        cur = x.arcs[pass_through(x, head.pos)];
      } while (cur != start);
      cycles.push_back(std::move(cycle));
    }
  }
  return cycles;
}

}  // namespace

void BraidWord::validate() const {
  if (strands < 1) throw RangeError("braid needs at least one strand");
  for (int letter : letters) {
    if (letter == 0 || std::abs(letter) >= strands) {
      throw RangeError("generator " + std::to_string(letter) + " out of range for " +
                       std::to_string(strands) + " strands");
    }
  }
}

std::string BraidWord::to_string() const {
  std::string out = "B" + std::to_string(strands);
  for (int letter : letters) out += " " + std::to_string(letter);
  return out;
}

BraidWord parse_braid(std::string_view text) {
  const auto tokens = split_ws(text);
  if (tokens.empty()) throw ParseError("empty braid text; expected \"B<n> j1 j2 ...\"");
  std::string_view header = tokens.front();
  if (header.size() < 2 || header.front() != 'B') {
    throw ParseError("braid must start with a header B<n>, got '" + std::string(header) + "'");
  }
  auto strands = to_int(header.substr(1));
  if (!strands || *strands < 1) throw ParseError("bad strand count in '" + std::string(header) + "'");

  BraidWord braid;
  braid.strands = *strands;
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    auto letter = to_int(tokens[t]);
    if (!letter || *letter == 0) {
      throw ParseError("braid letters are nonzero integers, got '" + std::string(tokens[t]) + "'");
    }
    braid.letters.push_back(*letter);
  }
  braid.validate();
  return braid;
}

LinkDiagram LinkDiagram::from_pd(const std::vector<std::array<int, 4>>& codes, int free_loops) {
  if (free_loops < 0) throw ValidityError("negative free-loop count");
  const std::size_t n = codes.size();
  const int max_label = static_cast<int>(2 * n);

  std::map<int, std::vector<End>> ends;
  for (std::size_t c = 0; c < n; ++c) {
    for (int pos = 0; pos < 4; ++pos) {
      const int label = codes[c][pos];
      if (label < 1 || label > max_label) {
        throw ValidityError("arc label " + std::to_string(label) + " outside 1.." +
                            std::to_string(max_label));
      }
      ends[label].push_back({c, pos});
    }
  }
  for (int label = 1; label <= max_label; ++label) {
    const std::size_t uses = ends.count(label) ? ends[label].size() : 0;
    if (uses != 2) {
      throw ValidityError("arc label " + std::to_string(label) + " used " + std::to_string(uses) +
                          " times; every label must appear exactly twice");
    }
  }

  // direction[c][pos]: 1 incoming, 0 outgoing, -1 unknown.
  std::vector<std::array<int, 4>> direction(n, {1, -1, 0, -1});
  std::vector<int> signs(n, 0);
  std::vector<End> queue;
  for (std::size_t c = 0; c < n; ++c) {
    queue.push_back({c, 0});
    queue.push_back({c, 2});
  }

  auto set_over = [&](std::size_t c, int sign) {
    signs[c] = sign;
    direction[c][1] = sign > 0 ? 1 : 0;
    direction[c][3] = sign > 0 ? 0 : 1;
    queue.push_back({c, 1});
    queue.push_back({c, 3});
  };

  std::size_t next_unresolved = 0;
  while (true) {
    while (!queue.empty()) {
      const End e = queue.back();
      queue.pop_back();
      const int label = codes[e.crossing][e.pos];
      const auto& pair = ends[label];
      const End other = (pair[0].crossing == e.crossing && pair[0].pos == e.pos) ? pair[1] : pair[0];
      const int want = 1 - direction[e.crossing][e.pos];
      const int have = direction[other.crossing][other.pos];
      if (have == want) continue;
      if (have != -1) {
        throw OrientationError("arc " + std::to_string(label) +
                               " would need to enter (or leave) crossings at both ends");
      }
      // Only over-strand positions can still be unknown.
      const bool pos1_in = (other.pos == 1) == (want == 1);
      set_over(other.crossing, pos1_in ? 1 : -1);
    }
    while (next_unresolved < n && signs[next_unresolved] != 0) ++next_unresolved;
    if (next_unresolved == n) break;
    // A component that only ever passes over: orient by label succession.
    const int j = codes[next_unresolved][1];
    const int l = codes[next_unresolved][3];
    set_over(next_unresolved, (l - j == 1 || j - l > 1) ? 1 : -1);
  }

  std::vector<Crossing> crossings(n);
  for (std::size_t c = 0; c < n; ++c) crossings[c] = {codes[c], signs[c]};
  return from_oriented(std::move(crossings), free_loops);
}

LinkDiagram LinkDiagram::from_oriented(std::vector<Crossing> crossings, int free_loops) {
  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.free_loops_ = free_loops;
  return d;
}

int LinkDiagram::sign(std::size_t index) const {
  if (index >= crossings_.size()) {
    throw RangeError("crossing index " + std::to_string(index) + " out of range (" +
                     std::to_string(crossings_.size()) + " crossings)");
  }
  return crossings_[index].sign;
}

std::string LinkDiagram::to_pd_string() const {
  std::string out;
  for (const auto& c : crossings_) {
    if (!out.empty()) out += ' ';
    out += "X(" + std::to_string(c.arcs[0]) + "," + std::to_string(c.arcs[1]) + "," +
           std::to_string(c.arcs[2]) + "," + std::to_string(c.arcs[3]) + ")";
  }
  return out;
}

nlohmann::json LinkDiagram::to_json() const {
  nlohmann::json crossings = nlohmann::json::array();
  nlohmann::json signs = nlohmann::json::array();
  for (const auto& c : crossings_) {
    crossings.push_back(c.arcs);
    signs.push_back(c.sign);
  }
  nlohmann::json out = {{"crossings", std::move(crossings)},
                        {"signs", std::move(signs)},
                        {"components", component_count(*this)}};
  if (free_loops_ > 0) out["free_loops"] = free_loops_;
  return out;
}

std::string LinkDiagram::key() const {
  std::string out;
  out.reserve(crossings_.size() * 12 + 4);
  for (const auto& c : crossings_) {
    for (int a : c.arcs) {
      out += std::to_string(a);
      out += ',';
    }
    out += c.sign > 0 ? '+' : '-';
  }
  out += '|';
  out += std::to_string(free_loops_);
  return out;
}

LinkDiagram parse_pd(std::string_view text) {
  std::vector<std::array<int, 4>> codes;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
      ++pos;
    }
  };
  auto expect = [&](char ch) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size() || text[pos] != ch) {
      throw ParseError(std::string("expected '") + ch + "' at offset " + std::to_string(pos) +
                       " in PD text");
    }
    ++pos;
  };
  skip();
  while (pos < text.size()) {
    expect('X');
    expect('(');
    std::array<int, 4> code{};
    for (int k = 0; k < 4; ++k) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-')) {
        ++pos;
      }
      auto value = to_int(text.substr(start, pos - start));
      if (!value) throw ParseError("bad arc label at offset " + std::to_string(start) + " in PD text");
      code[k] = *value;
      expect(k < 3 ? ',' : ')');
    }
    codes.push_back(code);
    skip();
  }
  return LinkDiagram::from_pd(codes);
}

LinkDiagram canonical_relabel(const LinkDiagram& d) {
  std::map<int, int> relabel;
  int next = 1;
  for (const auto& cycle : trace_components(d.crossings())) {
    for (int label : cycle) relabel[label] = next++;
  }
  std::vector<Crossing> crossings = d.crossings();
  for (auto& c : crossings) {
    for (int& a : c.arcs) a = relabel.at(a);
  }
  return LinkDiagram::from_oriented(std::move(crossings), d.free_loops());
}

LinkDiagram braid_closure(const BraidWord& braid) {
  braid.validate();
  const int n = braid.strands;
  std::vector<int> current(n);
  std::iota(current.begin(), current.end(), 0);
  int next_id = n;
  std::vector<Crossing> crossings;
  crossings.reserve(braid.letters.size());
  for (int letter : braid.letters) {
    const int left = std::abs(letter) - 1;
    const int a = current[left];
    const int b = current[left + 1];
    const int na = next_id++;
    const int nb = next_id++;
    if (letter > 0) {
      // Over-strand bottom-left -> top-right, under-strand bottom-right -> top-left.
      crossings.push_back({{b, a, na, nb}, 1});
    } else {
      crossings.push_back({{a, na, nb, b}, -1});
    }
    current[left] = na;
    current[left + 1] = nb;
  }

  UnionFind uf(static_cast<std::size_t>(next_id));
  int free_loops = 0;
  for (int p = 0; p < n; ++p) {
    if (current[p] == p) ++free_loops;
    uf.unite(static_cast<std::size_t>(current[p]), static_cast<std::size_t>(p));
  }
  for (auto& c : crossings) {
    for (int& a : c.arcs) a = static_cast<int>(uf.find(static_cast<std::size_t>(a)));
  }
  return canonical_relabel(LinkDiagram::from_oriented(std::move(crossings), free_loops));
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

int component_count(const LinkDiagram& d) {
  return static_cast<int>(trace_components(d.crossings()).size()) + d.free_loops();
}

LinkDiagram crossing_switch(const LinkDiagram& d, std::size_t index) {
  const int s = d.sign(index);
  std::vector<Crossing> crossings = d.crossings();
  const auto a = crossings[index].arcs;
  // The old over-strand becomes the under-strand; restart the cyclic list at its incoming end.
  if (s > 0) {
    crossings[index] = {{a[1], a[2], a[3], a[0]}, -1};
  } else {
    crossings[index] = {{a[3], a[0], a[1], a[2]}, 1};
  }
  return LinkDiagram::from_oriented(std::move(crossings), d.free_loops());
}

LinkDiagram crossing_smooth(const LinkDiagram& d, std::size_t index) {
  const int s = d.sign(index);
  const auto& all = d.crossings();
  std::map<int, std::size_t> slot;
  for (const auto& c : all) {
    for (int a : c.arcs) slot.try_emplace(a, slot.size());
  }
  std::vector<int> label_of(slot.size());
  for (const auto& [label, i] : slot) label_of[i] = label;

  UnionFind uf(slot.size());
  const auto& x = all[index].arcs;
  // Incoming under joins outgoing over; incoming over joins outgoing under.
  if (s > 0) {
    uf.unite(slot[x[0]], slot[x[3]]);
    uf.unite(slot[x[1]], slot[x[2]]);
  } else {
    uf.unite(slot[x[0]], slot[x[1]]);
    uf.unite(slot[x[3]], slot[x[2]]);
  }

  std::vector<Crossing> rest;
  std::set<std::size_t> used_roots;
  for (std::size_t c = 0; c < all.size(); ++c) {
    if (c == index) continue;
    Crossing copy = all[c];
    for (int& a : copy.arcs) {
      const std::size_t root = uf.find(slot[a]);
      used_roots.insert(root);
      a = label_of[root];
    }
    rest.push_back(copy);
  }
  std::set<std::size_t> closed;
  for (int a : x) {
    const std::size_t root = uf.find(slot[a]);
    if (!used_roots.count(root)) closed.insert(root);
  }
  return canonical_relabel(
      LinkDiagram::from_oriented(std::move(rest), d.free_loops() + static_cast<int>(closed.size())));
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) out = crossing_switch(out, i);
  return out;
}

}  // namespace qinv
