#include "projaut/scalar.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace projaut {

const char* ring_name(Ring r) {
  switch (r) {
    case Ring::rational: return "rational";
    case Ring::gaussian: return "gaussian";
    case Ring::eisenstein: return "eisenstein";
    case Ring::bigfloat: return "bigfloat";
  }
  return "?";
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::incompatible_rings: return "IncompatibleRings";
    case errc::pole_at_center: return "PoleAtCenter";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::division_by_zero_constant_term: return "DivisionByZeroConstantTerm";
    case errc::nonzero_constant_term: return "NonzeroConstantTerm";
    case errc::not_invertible: return "NotInvertible";
    case errc::not_locally_injective: return "NotLocallyInjective";
    case errc::insufficient_order: return "InsufficientOrder";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::fuchsian_translation_nonzero: return "FuchsianTranslationNonzero";
    case errc::no_rotation_order: return "NoRotationOrder";
    case errc::unsupported_ring: return "UnsupportedRing";
    case errc::excluded_case: return "ExcludedCase";
    case errc::negative_dimension: return "NegativeDimension";
    case errc::not_hyperbolic: return "NotHyperbolic";
    case errc::unbounded_enumeration: return "UnboundedEnumeration";
    case errc::incompatible_multiplier: return "IncompatibleMultiplier";
    case errc::disconnected: return "Disconnected";
    case errc::genus_too_small: return "GenusTooSmall";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

mpq_class make_mpq(long num, long den) {
  if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

void Scalar::canonicalize() {
  if ((ring_ == Ring::gaussian || ring_ == Ring::eisenstein) && b_ == 0)
    ring_ = Ring::rational;
}

Scalar Scalar::rational(long num, long den) { return Scalar(make_mpq(num, den)); }

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
  Scalar s;
  s.ring_ = Ring::gaussian;
  s.a_ = re;
  s.b_ = im;
  s.canonicalize();
  return s;
}

Scalar Scalar::eisenstein(const mpq_class& a, const mpq_class& b) {
  Scalar s;
  s.ring_ = Ring::eisenstein;
  s.a_ = a;
  s.b_ = b;
  s.canonicalize();
  return s;
}

Scalar Scalar::bigfloat(const mpf_class& re, const mpf_class& im) {
  Scalar s;
  s.ring_ = Ring::bigfloat;
  auto payload = std::make_shared<BigComplex>();
  payload->re = mpf_class(re, kBigFloatPrecBits);
  payload->im = mpf_class(im, kBigFloatPrecBits);
  s.bf_ = std::move(payload);
  return s;
}

Scalar Scalar::root_of_unity(long k, long m) {
  if (m < 1) fail(errc::bad_input, "root order must be positive");
  long e = ((k % m) + m) % m;
  if (e == 0) return one();
  long g = std::gcd(e, m);
  long order = m / g;          // multiplicative order of zeta_m^e
  long step = e / g;           // zeta_m^e = zeta_order^step, gcd(step, order) = 1
  Scalar base;
  switch (order) {
    case 1: return one();
    case 2: base = Scalar(-1); break;
    case 3: base = omega(); break;
    case 4: base = i(); break;
    case 6: base = one() + omega(); break;  // primitive sixth root
    default:
      fail(errc::unsupported_ring,
           "root of unity of order " + std::to_string(order) +
               " is outside the supported exact rings");
  }
  Scalar r = one();
  for (long t = 0; t < step; ++t) r = r * base;
  return r;
}

bool Scalar::is_zero() const {
  if (ring_ == Ring::bigfloat) return bf_->re == 0 && bf_->im == 0;
  return a_ == 0 && b_ == 0;
}

const mpq_class& Scalar::basis_a() const {
  if (!is_exact()) fail(errc::incompatible_rings, "bigfloat has no exact coordinates");
  return a_;
}

const mpq_class& Scalar::basis_b() const {
  if (!is_exact()) fail(errc::incompatible_rings, "bigfloat has no exact coordinates");
  return b_;
}

const mpq_class& Scalar::rat() const {
  if (ring_ != Ring::rational)
    fail(errc::incompatible_rings, "value is not rational: " + str());
  return a_;
}

const BigComplex& Scalar::big() const {
  if (ring_ != Ring::bigfloat) fail(errc::incompatible_rings, "not a bigfloat value");
  return *bf_;
}

Scalar Scalar::to_bigfloat() const {
  if (ring_ == Ring::bigfloat) return *this;
  mpf_class re(a_, kBigFloatPrecBits);
  mpf_class im(0, kBigFloatPrecBits);
  if (ring_ == Ring::gaussian) {
    im = mpf_class(b_, kBigFloatPrecBits);
  } else if (ring_ == Ring::eisenstein) {
    // w = -1/2 + (sqrt(3)/2) i
    mpf_class bq(b_, kBigFloatPrecBits);
    mpf_class s3(3, kBigFloatPrecBits);
    s3 = sqrt(s3);
    re -= bq / 2;
    im = bq * s3 / 2;
  }
  return bigfloat(re, im);
}

Ring common_ring(const Scalar& x, const Scalar& y) {
  if (x.ring_ == y.ring_) return x.ring_;
  if (x.ring_ == Ring::bigfloat || y.ring_ == Ring::bigfloat)
    fail(errc::incompatible_rings,
         "bigfloat values never mix implicitly with exact values");
  if (x.ring_ == Ring::rational) return y.ring_;
  if (y.ring_ == Ring::rational) return x.ring_;
  fail(errc::incompatible_rings,
       std::string("cannot mix ") + ring_name(x.ring_) + " with " + ring_name(y.ring_));
}

namespace {

// u^2 = p + q*u for the quadratic rings: gaussian (p,q)=(-1,0),
// eisenstein (p,q)=(-1,-1).
void ring_square_rule(Ring r, long& p, long& q) {
  if (r == Ring::gaussian) {
    p = -1;
    q = 0;
  } else {
    p = -1;
    q = -1;
  }
}

}  // namespace

Scalar Scalar::operator-() const {
  if (ring_ == Ring::bigfloat) return bigfloat(-bf_->re, -bf_->im);
  Scalar s = *this;
  s.a_ = -s.a_;
  s.b_ = -s.b_;
  return s;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  Ring r = common_ring(x, y);
  if (r == Ring::bigfloat)
    return Scalar::bigfloat(x.bf_->re + y.bf_->re, x.bf_->im + y.bf_->im);
  Scalar s;
  s.ring_ = r;
  s.a_ = x.a_ + y.a_;
  s.b_ = x.b_ + y.b_;
  s.canonicalize();
  return s;
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  Ring r = common_ring(x, y);
  if (r == Ring::bigfloat)
    return Scalar::bigfloat(x.bf_->re * y.bf_->re - x.bf_->im * y.bf_->im,
                            x.bf_->re * y.bf_->im + x.bf_->im * y.bf_->re);
  Scalar s;
  s.ring_ = r;
  if (r == Ring::rational) {
    s.a_ = x.a_ * y.a_;
    return s;
  }
  long p, q;
  ring_square_rule(r, p, q);
  mpq_class bd = x.b_ * y.b_;
  s.a_ = x.a_ * y.a_ + p * bd;
  s.b_ = x.a_ * y.b_ + x.b_ * y.a_ + q * bd;
  s.canonicalize();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "division by zero");
  if (ring_ == Ring::bigfloat) {
    mpf_class n = bf_->re * bf_->re + bf_->im * bf_->im;
    return bigfloat(bf_->re / n, -bf_->im / n);
  }
  if (ring_ == Ring::rational) {
    Scalar s;
    s.a_ = 1 / a_;
    return s;
  }
  // conj(a + b*u): gaussian a - b*i; eisenstein (a - b) - b*w.
  // In both cases x * conj(x) = norm(x) is rational.
  Scalar conj;
  conj.ring_ = ring_;
  mpq_class norm;
  if (ring_ == Ring::gaussian) {
    conj.a_ = a_;
    conj.b_ = -b_;
    norm = a_ * a_ + b_ * b_;
  } else {
    conj.a_ = a_ - b_;
    conj.b_ = -b_;
    norm = a_ * a_ - a_ * b_ + b_ * b_;
  }
  conj.a_ /= norm;
  conj.b_ /= norm;
  conj.canonicalize();
  return conj;
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.ring_ == Ring::bigfloat || y.ring_ == Ring::bigfloat) {
    if (x.ring_ != y.ring_)
      fail(errc::incompatible_rings, "cannot compare exact value with bigfloat");
    return x.bf_->re == y.bf_->re && x.bf_->im == y.bf_->im;
  }
  if (x.ring_ != y.ring_ && x.ring_ != Ring::rational && y.ring_ != Ring::rational)
    return false;  // genuinely gaussian vs genuinely eisenstein
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string Scalar::str() const {
  if (ring_ == Ring::bigfloat) {
    std::ostringstream os;
    os << "bigfloat(" << bf_->re.get_d() << "," << bf_->im.get_d() << ")";
    return os.str();
  }
  if (ring_ == Ring::rational) return a_.get_str();
  const char* unit = ring_ == Ring::gaussian ? "i" : "w";
  std::string out;
  if (a_ != 0) out += a_.get_str();
  if (b_ > 0 && a_ != 0) out += "+";
  out += b_.get_str();
  out += "*";
  out += unit;
  return out;
}

std::string to_string(const Scalar& s) { return s.str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

bool valid_int_token(const std::string& t) {
  if (t.empty()) return false;
  size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (k == t.size()) return false;
  for (; k < t.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
  return true;
}

}  // namespace

mpq_class parse_mpq(const std::string& text) {
  std::string num = text, den = "1";
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_int_token(num) || !valid_int_token(den))
    fail(errc::bad_input, "invalid rational literal: '" + text + "'");
  if (num[0] == '+') num.erase(num.begin());
  if (den[0] == '+') den.erase(den.begin());
  mpq_class q(num + "/" + den);
  if (q.get_den() == 0) fail(errc::bad_input, "zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Scalar parse_scalar(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(errc::bad_input, "empty scalar literal");
  if (s.find('.') != std::string::npos)
    fail(errc::bad_input, "floating literals are not accepted: '" + text + "'");

  // Split into signed terms at top level.
  mpq_class rat_part = 0, unit_part = 0;
  char unit = 0;
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos > 0) {
      fail(errc::bad_input, "expected '+' or '-' in scalar literal: '" + text + "'");
    }
    size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) fail(errc::bad_input, "empty term in scalar literal: '" + text + "'");
    pos = end;

    char term_unit = 0;
    std::string coeff = term;
    if (term.back() == 'i' || term.back() == 'w') {
      term_unit = term.back();
      coeff = term.substr(0, term.size() - 1);
      if (!coeff.empty()) {
        if (coeff.back() != '*')
          fail(errc::bad_input, "expected '*' before unit: '" + text + "'");
        coeff.pop_back();
      }
      if (coeff.empty()) coeff = "1";
    }
    mpq_class value = parse_mpq(coeff) * sign;
    if (term_unit) {
      if (unit && unit != term_unit)
        fail(errc::bad_input, "cannot mix 'i' and 'w' in one literal: '" + text + "'");
      unit = term_unit;
      unit_part += value;
    } else {
      rat_part += value;
    }
  }
  if (!unit || unit_part == 0) return Scalar(rat_part);
  return unit == 'i' ? Scalar::gaussian(rat_part, unit_part)
                     : Scalar::eisenstein(rat_part, unit_part);
}

}  // namespace projaut
