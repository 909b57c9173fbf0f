#pragma once

#include <iosfwd>
#include <string>

#include "projaut/scalar.hpp"
#include "projaut/series.hpp"

namespace projaut {

// Point of the Riemann sphere C u {oo}. Infinity is a first-class value,
// not an error: Moebius maps permute the whole sphere.
class SpherePoint {
public:
  SpherePoint() : finite_(true) {}
  SpherePoint(const Scalar& value) : finite_(true), value_(value) {}  // NOLINT
  static SpherePoint infinity() {
    SpherePoint p;
    p.finite_ = false;
    return p;
  }

  bool is_infinity() const { return !finite_; }
  const Scalar& value() const {
    if (!finite_) fail(errc::bad_input, "the point at infinity has no finite value");
    return value_;
  }

  friend bool operator==(const SpherePoint& p, const SpherePoint& q) {
    if (p.finite_ != q.finite_) return false;
    return !p.finite_ || p.value_ == q.value_;
  }
  friend bool operator!=(const SpherePoint& p, const SpherePoint& q) { return !(p == q); }

  std::string str() const { return finite_ ? value_.str() : "oo"; }

private:
  bool finite_;
  Scalar value_;
};

// Projective-linear map z -> (az+b)/(cz+d) with ad - bc != 0, stored in a
// canonical normalization: the first nonzero entry in the order (a,b,c,d)
// is rescaled to 1, so equality in PSL2 is entrywise equality.
class MobiusMap {
public:
  MobiusMap(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

  static MobiusMap identity();
  static MobiusMap inversion();               // z -> 1/z
  static MobiusMap translation(const Scalar& t);  // z -> z + t
  static MobiusMap scaling(const Scalar& k);      // z -> k z, k != 0

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Scalar& d() const { return d_; }

  MobiusMap inverse() const;
  SpherePoint apply(const SpherePoint& p) const;

  // Coefficients of f(center + w) in w, exact to the given order;
  // pole_at_center when c*center + d = 0.
  Series taylor(const Scalar& center, int order) const;

  friend MobiusMap compose(const MobiusMap& f, const MobiusMap& g);  // f after g
  friend bool operator==(const MobiusMap&, const MobiusMap&);
  friend bool operator!=(const MobiusMap& f, const MobiusMap& g) { return !(f == g); }

  std::string str() const;

private:
  Scalar a_, b_, c_, d_;
  void normalize();
};

std::ostream& operator<<(std::ostream&, const MobiusMap&);

}  // namespace projaut
