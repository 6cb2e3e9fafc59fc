#include <locnorm/rational.hpp>

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace locnorm {

namespace {

__extension__ using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

Rational make(i128 num, i128 den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("rational overflow");
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational Rational::operator-() const { return make(-static_cast<i128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return make(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 l = static_cast<i128>(a.num_) * b.den_;
  i128 r = static_cast<i128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<Rational> Rational::from_double(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  if (std::fabs(x) > 1e15) return std::nullopt;
  // Continued-fraction convergents h/k of x.
  double rem = x;
  i128 h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(rem);
    i128 ai = static_cast<i128>(a);
    i128 h2 = ai * h0 + h1;
    i128 k2 = ai * k0 + k1;
    if (k2 > max_den || h2 > (i128(1) << 62) || h2 < -(i128(1) << 62)) return std::nullopt;
    h1 = h0;
    h0 = h2;
    k1 = k0;
    k0 = k2;
    if (static_cast<double>(h0) / static_cast<double>(k0) == x) return Rational(narrow(h0), narrow(k0));
    double frac = rem - a;
    if (frac == 0.0) return std::nullopt;
    rem = 1.0 / frac;
  }
  return std::nullopt;
}

ExactReal::ExactReal(double v) : value_(v), exact_(Rational::from_double(v)) {
  if (exact_) value_ = exact_->to_double();
}

ExactReal ExactReal::inexact(double v) {
  ExactReal r;
  r.value_ = v;
  r.exact_.reset();
  return r;
}

std::string ExactReal::str() const {
  if (exact_) return exact_->str();
  return std::to_string(value_);
}

ExactReal ExactReal::operator-() const {
  if (exact_) return ExactReal(-*exact_);
  return inexact(-value_);
}

namespace {

template <class ExactOp, class FloatOp>
ExactReal combine(const ExactReal& a, const ExactReal& b, ExactOp eop, FloatOp fop) {
  if (a.is_exact() && b.is_exact()) {
    try {
      return ExactReal(eop(*a.exact(), *b.exact()));
    } catch (const std::overflow_error&) {
    }
  }
  return ExactReal::inexact(fop(a.value(), b.value()));
}

}  // namespace

ExactReal operator+(const ExactReal& a, const ExactReal& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x + y; },
                 [](double x, double y) { return x + y; });
}

ExactReal operator-(const ExactReal& a, const ExactReal& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x - y; },
                 [](double x, double y) { return x - y; });
}

ExactReal operator*(const ExactReal& a, const ExactReal& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x * y; },
                 [](double x, double y) { return x * y; });
}

ExactReal operator/(const ExactReal& a, const ExactReal& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x / y; },
                 [](double x, double y) { return x / y; });
}

int compare(const ExactReal& a, const ExactReal& b, double tol) {
  if (a.is_exact() && b.is_exact()) {
    auto c = *a.exact() <=> *b.exact();
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  double d = a.value() - b.value();
  if (std::fabs(d) <= tol) return 0;
  return d < 0 ? -1 : 1;
}

bool approx_equal(const ExactReal& a, const ExactReal& b, double tol) { return compare(a, b, tol) == 0; }

}  // namespace locnorm
