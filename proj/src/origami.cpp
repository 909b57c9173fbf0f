#include "projaut/origami.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

namespace projaut {

Perm::Perm(std::vector<int> images) : map_(std::move(images)) {
  if (map_.empty()) fail(errc::bad_input, "permutations act on at least one point");
  std::vector<bool> seen(map_.size(), false);
  for (int x : map_) {
    if (x < 0 || x >= static_cast<int>(map_.size()) || seen[static_cast<size_t>(x)])
      fail(errc::bad_input, "not a permutation");
    seen[static_cast<size_t>(x)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) im[static_cast<size_t>(x)] = x;
  return Perm(std::move(im));
}

Perm Perm::from_cycles(int n, const std::string& text) {
  if (n < 1) fail(errc::bad_input, "need at least one square");
  std::vector<int> im(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) im[static_cast<size_t>(x)] = x;

  std::vector<int> cycle;
  bool in_cycle = false;
  std::string token;
  auto flush_token = [&]() {
    if (token.empty()) return;
    int label = std::stoi(token);
    token.clear();
    if (label < 1 || label > n)
      fail(errc::bad_input, "cycle label " + std::to_string(label) + " out of range 1.." +
                                std::to_string(n));
    cycle.push_back(label - 1);
  };
  for (char ch : text) {
    if (ch == '(') {
      if (in_cycle) fail(errc::bad_input, "nested '(' in cycle notation");
      in_cycle = true;
      cycle.clear();
    } else if (ch == ')') {
      if (!in_cycle) fail(errc::bad_input, "unmatched ')' in cycle notation");
      flush_token();
      for (size_t k = 0; k < cycle.size(); ++k) {
        int from = cycle[k];
        int to = cycle[(k + 1) % cycle.size()];
        im[static_cast<size_t>(from)] = to;
      }
      // guard against repeated labels across cycles
      std::vector<bool> seen(static_cast<size_t>(n), false);
      for (int x = 0; x < n; ++x) {
        if (seen[static_cast<size_t>(im[static_cast<size_t>(x)])])
          fail(errc::bad_input, "repeated label in cycle notation");
        seen[static_cast<size_t>(im[static_cast<size_t>(x)])] = true;
      }
      in_cycle = false;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!in_cycle) fail(errc::bad_input, "digits outside a cycle");
      token += ch;
    } else if (ch == ' ' || ch == ',' || ch == '\t') {
      flush_token();
    } else {
      fail(errc::bad_input, std::string("unexpected character '") + ch + "' in cycle notation");
    }
  }
  if (in_cycle) fail(errc::bad_input, "unterminated cycle");
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<int> im(map_.size());
  for (size_t x = 0; x < map_.size(); ++x) im[static_cast<size_t>(map_[x])] = static_cast<int>(x);
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (size_t x = 0; x < map_.size(); ++x)
    if (map_[x] != static_cast<int>(x)) return false;
  return true;
}

int Perm::cycle_count() const {
  std::vector<bool> seen(map_.size(), false);
  int cycles = 0;
  for (size_t x = 0; x < map_.size(); ++x) {
    if (seen[x]) continue;
    ++cycles;
    size_t y = x;
    while (!seen[y]) {
      seen[y] = true;
      y = static_cast<size_t>(map_[y]);
    }
  }
  return cycles;
}

std::string Perm::cycle_string() const {
  std::vector<bool> seen(map_.size(), false);
  std::ostringstream os;
  bool any = false;
  for (size_t x = 0; x < map_.size(); ++x) {
    if (seen[x] || map_[x] == static_cast<int>(x)) {
      seen[x] = true;
      continue;
    }
    any = true;
    os << '(';
    size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) os << ' ';
      first = false;
      os << (y + 1);
      y = static_cast<size_t>(map_[y]);
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) fail(errc::dimension_mismatch, "permutation sizes differ");
  std::vector<int> im(p.map_.size());
  for (size_t x = 0; x < p.map_.size(); ++x)
    im[x] = q.map_[static_cast<size_t>(p.map_[x])];
  return Perm(std::move(im));
}

std::uint64_t Perm::packed() const {
  if (map_.size() > 16) fail(errc::bad_input, "packing supports n <= 16");
  std::uint64_t key = 0;
  for (size_t x = 0; x < map_.size(); ++x)
    key |= static_cast<std::uint64_t>(map_[x]) << (4 * x);
  return key;
}

Origami::Origami(Perm h, Perm v) : right(std::move(h)), up(std::move(v)) {
  if (right.size() != up.size())
    fail(errc::dimension_mismatch, "the two permutations act on different square counts");
}

bool is_connected(const Origami& o) {
  int n = o.squares();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int visited = 1;
  const Perm hi = o.right.inverse(), vi = o.up.inverse();
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Perm* p : {&o.right, &o.up, &hi, &vi}) {
      int y = (*p)(x);
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = true;
        ++visited;
        stack.push_back(y);
      }
    }
  }
  return visited == n;
}

namespace {

void require_connected(const Origami& o) {
  if (!is_connected(o)) fail(errc::disconnected, "origami is not connected");
}

}  // namespace

Perm commutator(const Origami& o) {
  return o.right * o.up * o.right.inverse() * o.up.inverse();
}

int genus(const Origami& o) {
  require_connected(o);
  int n = o.squares();
  int cycles = commutator(o).cycle_count();
  // commutators are even, so n - cycles is even and g is integral
  if ((n - cycles) % 2 != 0) fail(errc::bad_input, "odd commutator defect; unreachable");
  return (n - cycles + 2) / 2;
}

std::vector<Perm> translation_group(const Origami& o) {
  require_connected(o);
  int n = o.squares();
  std::vector<Perm> group;
  const Perm hi = o.right.inverse(), vi = o.up.inverse();
  for (int target = 0; target < n; ++target) {
    // Try to extend square 0 -> target equivariantly along h and v.
    std::vector<int> im(static_cast<size_t>(n), -1);
    im[0] = target;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      const Perm* steps[2] = {&o.right, &o.up};
      for (const Perm* p : steps) {
        int y = (*p)(x);
        int expected = (*p)(im[static_cast<size_t>(x)]);
        if (im[static_cast<size_t>(y)] == -1) {
          im[static_cast<size_t>(y)] = expected;
          stack.push_back(y);
        } else if (im[static_cast<size_t>(y)] != expected) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    for (int x : im)
      if (x == -1) ok = false;  // transitivity should preclude this
    if (!ok) continue;
    Perm t(std::move(im));
    // Seeded propagation enforces t h = h t and t v = v t on the forward
    // orbit; verify both identities outright.
    if (t * o.right == o.right * t && t * o.up == o.up * t) group.push_back(std::move(t));
  }
  return group;
}

namespace {

long closure_order(const Origami& o, long cap, bool early_exit_at_regular) {
  int n = o.squares();
  std::unordered_set<std::uint64_t> seen;
  std::vector<Perm> frontier{Perm::identity(n)};
  seen.insert(frontier.front().packed());
  const Perm gens[2] = {o.right, o.up};
  while (!frontier.empty()) {
    Perm g = std::move(frontier.back());
    frontier.pop_back();
    for (const Perm& s : gens) {
      Perm next = g * s;
      if (seen.insert(next.packed()).second) {
        if (early_exit_at_regular && static_cast<long>(seen.size()) > n) return n + 1;
        if (static_cast<long>(seen.size()) > cap)
          fail(errc::group_too_large,
               "monodromy group exceeds the cap of " + std::to_string(cap));
        frontier.push_back(std::move(next));
      }
    }
  }
  return static_cast<long>(seen.size());
}

}  // namespace

long monodromy_group_order(const Origami& o, long cap) {
  require_connected(o);
  return closure_order(o, cap, false);
}

bool is_normal(const Origami& o) {
  require_connected(o);
  // The group is transitive, so its order is at least n; enumeration stops
  // as soon as it passes n.
  return closure_order(o, 1000000, true) == o.squares();
}

bool commutator_has_order_two(const Origami& o) {
  Perm c = commutator(o);
  for (int x = 0; x < o.squares(); ++x) {
    int y = c(x);
    if (y == x || c(y) != x) return false;
  }
  return true;
}

TranslationBoundReport check_hurwitz_translation_bound(const Origami& o) {
  int g = genus(o);
  if (g < 2)
    fail(errc::genus_too_small, "the translation bound is stated for genus >= 2");
  TranslationBoundReport r;
  r.genus = g;
  r.translation_order = static_cast<long>(translation_group(o).size());
  r.bound = 4L * (g - 1);
  r.normal = is_normal(o);
  if (r.translation_order > r.bound)
    fail(errc::bad_input, "translation bound violated; unreachable");
  r.tight = r.translation_order == r.bound;
  // Tightness needs more than normality: a regular cover has exactly n
  // translations while the bound is 2n(1 - 1/e) for branching order e, so
  // equality forces e = 2. The regular S3 origami on six squares is normal
  // with e = 3 and only 6 < 8 translations.
  if (r.tight && !r.normal)
    fail(errc::bad_input, "tight but not normal; unreachable");
  if (r.tight != (r.normal && commutator_has_order_two(o)))
    fail(errc::bad_input, "tightness characterization violated; unreachable");
  return r;
}

bool normal_origami_genus_condition(int g) {
  if (g < 2) fail(errc::genus_too_small, "condition applies to genus >= 2");
  return (g - 1) % 2 == 0 || (g - 1) % 3 == 0;
}

namespace {

// Deterministic relabeling of a connected pair by breadth-first traversal
// from a root, following h, v, h^{-1}, v^{-1} in that order; conjugate
// pairs rooted compatibly relabel identically, so the minimum encoding
// over all roots is a complete conjugation invariant.
std::vector<int> traversal_encoding(const Origami& o, int root) {
  int n = o.squares();
  const Perm hi = o.right.inverse(), vi = o.up.inverse();
  std::vector<int> new_label(static_cast<size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  new_label[static_cast<size_t>(root)] = 0;
  order.push_back(root);
  for (size_t head = 0; head < order.size(); ++head) {
    int x = order[head];
    for (const Perm* p : {&o.right, &o.up, &hi, &vi}) {
      int y = (*p)(x);
      if (new_label[static_cast<size_t>(y)] == -1) {
        new_label[static_cast<size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  std::vector<int> enc(static_cast<size_t>(2 * n));
  for (int x = 0; x < n; ++x) {
    enc[static_cast<size_t>(new_label[static_cast<size_t>(x)])] =
        new_label[static_cast<size_t>(o.right(x))];
    enc[static_cast<size_t>(n + new_label[static_cast<size_t>(x)])] =
        new_label[static_cast<size_t>(o.up(x))];
  }
  return enc;
}

std::vector<int> canonical_encoding(const Origami& o) {
  std::vector<int> best;
  for (int root = 0; root < o.squares(); ++root) {
    std::vector<int> enc = traversal_encoding(o, root);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

Origami decode(int n, const std::vector<int>& enc) {
  std::vector<int> h(enc.begin(), enc.begin() + n);
  std::vector<int> v(enc.begin() + n, enc.end());
  return Origami(Perm(std::move(h)), Perm(std::move(v)));
}

// One representative permutation per cycle type of S_n.
void partition_representatives(int n, std::vector<Perm>& out) {
  std::vector<int> parts;
  // enumerate partitions in non-increasing order
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      std::vector<int> im(static_cast<size_t>(n));
      int base = 0;
      for (int len : parts) {
        for (int k = 0; k < len; ++k)
          im[static_cast<size_t>(base + k)] = base + (k + 1) % len;
        base += len;
      }
      out.push_back(Perm(std::move(im)));
      return;
    }
    for (int next = std::min(remaining, largest); next >= 1; --next) {
      parts.push_back(next);
      rec(remaining - next, next);
      parts.pop_back();
    }
  };
  rec(n, n);
}

}  // namespace

std::vector<Origami> enumerate_origamis(int n_max) {
  if (n_max < 1) fail(errc::bad_input, "need at least one square");
  if (n_max > 8)
    fail(errc::bad_input, "exhaustive enumeration is limited to 8 squares");
  std::vector<Origami> result;
  for (int n = 1; n <= n_max; ++n) {
    std::set<std::vector<int>> canonical;
    // Every conjugation class contains a pair whose h is the standard
    // representative of its cycle type, so scanning (h_rep, v) over all v
    // covers every class.
    std::vector<Perm> reps;
    partition_representatives(n, reps);
    std::vector<int> v_images(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) v_images[static_cast<size_t>(x)] = x;
    for (const Perm& h : reps) {
      std::vector<int> im = v_images;
      std::sort(im.begin(), im.end());
      do {
        Origami o(h, Perm(std::vector<int>(im)));
        if (!is_connected(o)) continue;
        canonical.insert(canonical_encoding(o));
      } while (std::next_permutation(im.begin(), im.end()));
    }
    for (const std::vector<int>& enc : canonical) result.push_back(decode(n, enc));
  }
  return result;
}

std::vector<CensusRow> origami_census(int n_max) {
  std::vector<CensusRow> rows;
  for (const Origami& o : enumerate_origamis(n_max)) {
    CensusRow r;
    r.n = o.squares();
    r.h_cycles = o.right.cycle_string();
    r.v_cycles = o.up.cycle_string();
    r.genus = genus(o);
    r.translation_order = static_cast<long>(translation_group(o).size());
    r.normal = is_normal(o);
    if (r.genus >= 2) {
      TranslationBoundReport b = check_hurwitz_translation_bound(o);
      r.tight = b.tight;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace projaut
