#include "support.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>

#ifndef QINV_GOLDEN_DIR
#define QINV_GOLDEN_DIR "tests/golden"
#endif

namespace qtest {

namespace {

std::uint64_t g_seed = 20261016;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_u64(const char* text, std::uint64_t& out) {
  if (text == nullptr || *text == '\0') return false;
  char* end = nullptr;
  out = std::strtoull(text, &end, 10);
  return *end == '\0';
}

}  // namespace

std::uint64_t seed() { return g_seed; }
void set_seed(std::uint64_t s) { g_seed = s; }

bool consume_seed_flag(int& argc, char** argv) {
  int w = 1;
  bool ok = true;
  for (int r = 1; r < argc; ++r) {
    std::uint64_t value = 0;
    if (std::strcmp(argv[r], "--seed") == 0) {
      if (r + 1 < argc && parse_u64(argv[r + 1], value)) {
        set_seed(value);
        ++r;
      } else {
        ok = false;
      }
      continue;
    }
    if (std::strncmp(argv[r], "--seed=", 7) == 0) {
      if (parse_u64(argv[r] + 7, value)) {
        set_seed(value);
      } else {
        ok = false;
      }
      continue;
    }
    argv[w++] = argv[r];
  }
  argc = w;
  argv[argc] = nullptr;
  return ok;
}

std::mt19937_64 rng(std::string_view salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(g_seed), static_cast<std::uint32_t>(g_seed >> 32),
                    static_cast<std::uint32_t>(std::hash<std::string_view>{}(salt))};
  return std::mt19937_64(seq);
}

std::string golden_path(const std::string& name) { return std::string(QINV_GOLDEN_DIR) + "/" + name; }

std::vector<std::pair<std::string, std::string>> read_golden(const std::string& name) {
  std::ifstream in(golden_path(name));
  if (!in) throw std::runtime_error("cannot open golden file " + golden_path(name));
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw std::runtime_error("golden line without '|': " + line);
    rows.emplace_back(trim(line.substr(0, bar)), trim(line.substr(bar + 1)));
  }
  return rows;
}

void for_each_braid(int max_strands, int max_letters,
                    const std::function<void(const qinv::BraidWord&)>& fn) {
  for (int n = 1; n <= max_strands; ++n) {
    std::vector<int> alphabet;
    for (int j = 1; j < n; ++j) {
      alphabet.push_back(j);
      alphabet.push_back(-j);
    }
    qinv::BraidWord w;
    w.strands = n;
    fn(w);
    if (alphabet.empty()) continue;
    for (int len = 1; len <= max_letters; ++len) {
      std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
      while (true) {
        w.letters.resize(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) w.letters[i] = alphabet[digits[i]];
        fn(w);
        int pos = len - 1;
        while (pos >= 0 && ++digits[pos] == alphabet.size()) digits[pos--] = 0;
        if (pos < 0) break;
      }
    }
  }
}

std::vector<qinv::LinkDiagram> pd_corpus() {
  std::vector<qinv::LinkDiagram> out;
  for (const auto& [pd, braid] : read_golden("pd_corpus.txt")) out.push_back(qinv::parse_pd(pd));
  return out;
}

// ---- Temperley-Lieb oracle -------------------------------------------------

namespace {

// Points 0..n-1 on the bottom edge, n..2n-1 on the top edge; match[p] is the
// partner of p.
using Matching = std::vector<int>;

Matching tl_identity(int n) {
  Matching m(2 * n);
  for (int i = 0; i < n; ++i) {
    m[i] = n + i;
    m[n + i] = i;
  }
  return m;
}

// Cup-cap between positions j-1 and j (1-based j).
Matching tl_e(int n, int j) {
  Matching m = tl_identity(n);
  const int a = j - 1;
  const int b = j;
  m[a] = b;
  m[b] = a;
  m[n + a] = n + b;
  m[n + b] = n + a;
  return m;
}

// Stacks `above` on top of `below`; returns the product and the closed loops.
std::pair<Matching, int> stack(int n, const Matching& below, const Matching& above) {
  Matching out(2 * n, -1);
  std::vector<bool> middle_seen(n, false);
  // Walk from an outer point; `in_below` tracks which diagram we are inside.
  auto walk = [&](int start_point, bool start_below) {
    int p = start_point;
    bool in_below = start_below;
    while (true) {
      const int q = in_below ? below[p] : above[p];
      if (in_below && q < n) return q;                // bottom of the product
      if (!in_below && q >= n) return q;              // top of the product
      const int mid = in_below ? q - n : q;
      middle_seen[mid] = true;
      in_below = !in_below;
      p = in_below ? n + mid : mid;
    }
  };
  for (int i = 0; i < n; ++i) {
    if (out[i] == -1) {
      const int end = walk(i, true);
      out[i] = end;
      out[end] = i;
    }
    if (out[n + i] == -1) {
      const int end = walk(n + i, false);
      out[n + i] = end;
      out[end] = n + i;
    }
  }
  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (middle_seen[m]) continue;
    ++loops;
    int cur = m;
    do {
      middle_seen[cur] = true;
      const int up = above[cur];        // stays in the middle row
      middle_seen[up] = true;
      cur = below[n + up] - n;
    } while (cur != m);
  }
  return {out, loops};
}

int closure_loops(int n, const Matching& m) {
  std::vector<int> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = 2 * n;
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  };
  for (int p = 0; p < 2 * n; ++p) unite(p, m[p]);
  for (int i = 0; i < n; ++i) unite(i, n + i);
  return comps;
}

qinv::IntLaurent a_pow(int e, long c = 1) { return qinv::IntLaurent::monomial("A", e, qinv::Integer(c)); }

}  // namespace

qinv::IntLaurent tl_bracket(const qinv::BraidWord& b) {
  const int n = b.strands;
  const qinv::IntLaurent delta = a_pow(2, -1) + a_pow(-2, -1);
  std::map<Matching, qinv::IntLaurent> element{{tl_identity(n), a_pow(0)}};
  for (int letter : b.letters) {
    const int j = letter > 0 ? letter : -letter;
    const Matching e = tl_e(n, j);
    const qinv::IntLaurent id_coeff = letter > 0 ? a_pow(1) : a_pow(-1);
    const qinv::IntLaurent e_coeff = letter > 0 ? a_pow(-1) : a_pow(1);
    std::map<Matching, qinv::IntLaurent> next;
    for (const auto& [m, c] : element) {
      next[m] += c * id_coeff;
      auto [prod, loops] = stack(n, m, e);
      next[prod] += c * e_coeff * delta.pow(static_cast<unsigned>(loops));
    }
    element.clear();
    for (auto& [m, c] : next) {
      if (!c.is_zero()) element.emplace(m, std::move(c));
    }
  }
  qinv::IntLaurent total("A");
  for (const auto& [m, c] : element) {
    total += c * delta.pow(static_cast<unsigned>(closure_loops(n, m) - 1));
  }
  return total;
}

qinv::IntLaurent tl_jones(const qinv::BraidWord& b) {
  int w = 0;
  for (int letter : b.letters) w += letter > 0 ? 1 : -1;
  const qinv::IntLaurent f = a_pow(-3 * w, (w % 2 == 0) ? 1 : -1) * tl_bracket(b);
  qinv::IntLaurent v("s");
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0) throw std::logic_error("odd exponent in writhe-corrected bracket");
    v.add_term(-e / 2, c);
  }
  return v;
}

}  // namespace qtest
