#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projaut/errors.hpp"

namespace projaut {

// Permutation of {0..n-1}. Products read left to right: (p * q)(x) = q(p(x)).
class Perm {
public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  // Cycle notation with 1-based labels, e.g. "(1 2 3)(4 5)"; fixed points
  // may be omitted. The empty string or "()" is the identity.
  static Perm from_cycles(int n, const std::string& text);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int x) const { return map_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return map_; }

  Perm inverse() const;
  bool is_identity() const;
  int cycle_count() const;
  std::string cycle_string() const;  // 1-based, "()" for the identity

  friend Perm operator*(const Perm& p, const Perm& q);  // p first, then q
  friend bool operator==(const Perm& p, const Perm& q) { return p.map_ == q.map_; }
  friend bool operator!=(const Perm& p, const Perm& q) { return !(p == q); }

  // Packs n <= 16 images into 4-bit fields; used as a hash key.
  std::uint64_t packed() const;

private:
  std::vector<int> map_;
};

// Square-tiled translation surface: n unit squares with right-neighbor map
// h and top-neighbor map v. The surface is connected exactly when <h, v>
// acts transitively on the squares.
struct Origami {
  Perm right;  // h
  Perm up;     // v

  Origami(Perm h, Perm v);
  int squares() const { return right.size(); }
};

bool is_connected(const Origami& o);

// h v h^{-1} v^{-1}, words applied left to right; its cycles are the
// vertices of the square complex and carry the cone angles.
Perm commutator(const Origami& o);

// g = (n - cycles(commutator) + 2) / 2; integral because commutators are
// even permutations (asserted). Throws disconnected on disconnected input.
int genus(const Origami& o);

// All permutations commuting with both h and v. Transitivity pins such a
// permutation down by the image of one square, so candidates are seeded
// from the image of square 0 and propagated; the group acts freely and has
// at most n elements.
std::vector<Perm> translation_group(const Origami& o);

// Order of <h, v>, by closure enumeration; group_too_large above the cap.
long monodromy_group_order(const Origami& o, long cap = 1000000);

// True iff |<h, v>| equals the square count, i.e. the monodromy group is
// regular and the torus cover is Galois.
bool is_normal(const Origami& o);

struct TranslationBoundReport {
  int genus = 0;
  long translation_order = 0;
  long bound = 0;  // 4(g - 1)
  bool normal = false;
  bool tight = false;
};

// True when the commutator squares to the identity with no fixed points,
// i.e. the single branch point has ramification order 2 everywhere.
bool commutator_has_order_two(const Origami& o);

// Checks |Trans| <= 4(g-1) and reports tightness; genus_too_small for
// g <= 1 (fractional translations break the square-respecting model there).
// Tight surfaces are normal origamis, but not conversely: equality holds
// exactly for normal origamis whose branch point has ramification order 2,
// and both directions are cross-asserted.
TranslationBoundReport check_hurwitz_translation_bound(const Origami& o);

// Whether genus g is admissible for a normal origami: g - 1 divisible by 2
// or by 3.
bool normal_origami_genus_condition(int g);

// All connected origamis with up to n_max squares, one representative per
// simultaneous-conjugation class, in a deterministic order. Exhaustive mode
// is limited to n_max <= 8.
std::vector<Origami> enumerate_origamis(int n_max);

struct CensusRow {
  int n = 0;
  std::string h_cycles;
  std::string v_cycles;
  int genus = 0;
  long translation_order = 0;
  bool normal = false;
  std::optional<bool> tight;  // populated for genus >= 2 only
};

std::vector<CensusRow> origami_census(int n_max);

}  // namespace projaut
