#pragma once

// Oriented link presentations: braid words and planar-diagram (PD) codes.
//
// PD convention: X(i,j,k,l) lists the four arcs at a crossing counterclockwise
// starting from the incoming under-strand i, so the under-strand runs i -> k.
// The crossing is positive when the over-strand runs j -> l (turning the
// under-strand counterclockwise lines it up with the over-strand) and negative
// when it runs l -> j. This matches the KnotTheory labelling, where arcs
// increase along the orientation and X(i,j,k,l) is positive iff l = j + 1.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace qinv {

struct BraidWord {
  int strands = 1;
  // +j is sigma_j, -j its inverse; 1 <= |j| <= strands - 1.
  std::vector<int> letters;

  // Throws RangeError on a bad letter.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// "B<n> j1 j2 ...". Throws ParseError or RangeError.
BraidWord parse_braid(std::string_view text);

struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  // Positions (0..3) of the incoming and outgoing ends of the over-strand.
  int over_in() const { return sign > 0 ? 1 : 3; }
  int over_out() const { return sign > 0 ? 3 : 1; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A validated, oriented link diagram. Components without crossings are kept
// as a count of free loops, since PD codes cannot express them.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  // Validates arc labels (exactly 1..2c, each used twice), solves the strand
  // orientation and derives every crossing sign. Throws ValidityError or
  // OrientationError.
  static LinkDiagram from_pd(const std::vector<std::array<int, 4>>& codes, int free_loops = 0);

  // Trusted constructor for diagrams whose signs are already consistent.
  static LinkDiagram from_oriented(std::vector<Crossing> crossings, int free_loops);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int free_loops() const { return free_loops_; }
  int sign(std::size_t index) const;
  bool empty() const { return crossings_.empty() && free_loops_ == 0; }

  std::string to_pd_string() const;
  // {"crossings": [[a,b,c,d],...], "signs": [...], "components": m}, plus
  // "free_loops" when nonzero.
  nlohmann::json to_json() const;

  // Stable key for memoization: same crossings, signs and free loops.
  std::string key() const;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
};

// Sequence of "X(a,b,c,d)" tokens; empty text is the empty diagram.
LinkDiagram parse_pd(std::string_view text);

// Trace closure of a braid drawn bottom to top, strand positions left to right.
// Crossing signs equal letter signs; arcs are numbered along traversal order.
LinkDiagram braid_closure(const BraidWord& braid);

int writhe(const LinkDiagram& d);
int component_count(const LinkDiagram& d);

// Exchanges over and under strands at one crossing; labels are unchanged.
LinkDiagram crossing_switch(const LinkDiagram& d, std::size_t index);

// Oriented smoothing at one crossing; arcs are renumbered along traversal.
LinkDiagram crossing_smooth(const LinkDiagram& d, std::size_t index);

// Switches every crossing.
LinkDiagram mirror(const LinkDiagram& d);

// Renumbers arcs 1..2c by walking components in crossing order.
LinkDiagram canonical_relabel(const LinkDiagram& d);

}  // namespace qinv
