#include "projaut/moebius.hpp"

#include <ostream>

namespace projaut {

MobiusMap::MobiusMap(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d)
    : a_(a), b_(b), c_(c), d_(d) {
  if ((a_ * d_ - b_ * c_).is_zero())
    fail(errc::singular_matrix, "moebius map needs ad - bc != 0");
  normalize();
}

void MobiusMap::normalize() {
  Scalar* entries[4] = {&a_, &b_, &c_, &d_};
  for (Scalar* e : entries) {
    if (!e->is_zero()) {
      Scalar inv = e->inverse();
      a_ *= inv;
      b_ *= inv;
      c_ *= inv;
      d_ *= inv;
      return;
    }
  }
}

MobiusMap MobiusMap::identity() { return MobiusMap(1, 0, 0, 1); }
MobiusMap MobiusMap::inversion() { return MobiusMap(0, 1, 1, 0); }
MobiusMap MobiusMap::translation(const Scalar& t) { return MobiusMap(1, t, 0, 1); }
MobiusMap MobiusMap::scaling(const Scalar& k) { return MobiusMap(k, 0, 0, 1); }

MobiusMap MobiusMap::inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
  return MobiusMap(f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_,
                   f.c_ * g.a_ + f.d_ * g.c_, f.c_ * g.b_ + f.d_ * g.d_);
}

bool operator==(const MobiusMap& f, const MobiusMap& g) {
  return f.a_ == g.a_ && f.b_ == g.b_ && f.c_ == g.c_ && f.d_ == g.d_;
}

SpherePoint MobiusMap::apply(const SpherePoint& p) const {
  if (p.is_infinity()) {
    if (c_.is_zero()) return SpherePoint::infinity();
    return SpherePoint(a_ / c_);
  }
  Scalar den = c_ * p.value() + d_;
  if (den.is_zero()) return SpherePoint::infinity();
  return SpherePoint((a_ * p.value() + b_) / den);
}

Series MobiusMap::taylor(const Scalar& center, int order) const {
  Scalar den = c_ * center + d_;
  if (den.is_zero())
    fail(errc::pole_at_center, "taylor expansion centered at the pole of the map");
  // f(center + w) = (A + a w) / (B + c w) with A = a*center + b, B != 0:
  // expand 1/(B + c w) as a geometric series.
  Scalar num0 = a_ * center + b_;
  Scalar inv_den = den.inverse();
  Scalar ratio = -(c_ * inv_den);
  std::vector<Scalar> geo(static_cast<size_t>(order) + 1);
  geo[0] = inv_den;
  for (int k = 1; k <= order; ++k)
    geo[static_cast<size_t>(k)] = geo[static_cast<size_t>(k - 1)] * ratio;
  std::vector<Scalar> out(static_cast<size_t>(order) + 1);
  out[0] = num0 * geo[0];
  for (int k = 1; k <= order; ++k)
    out[static_cast<size_t>(k)] =
        num0 * geo[static_cast<size_t>(k)] + a_ * geo[static_cast<size_t>(k - 1)];
  return Series(std::move(out));
}

std::string MobiusMap::str() const {
  return "[" + a_.str() + " " + b_.str() + "; " + c_.str() + " " + d_.str() + "]";
}

std::ostream& operator<<(std::ostream& os, const MobiusMap& f) { return os << f.str(); }

}  // namespace projaut
