#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace locnorm {

// Normalized int64 fraction. Every operation is overflow-checked and throws
// std::overflow_error rather than wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  std::int64_t floor() const;
  std::int64_t ceil() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Smallest-denominator fraction (den <= max_den) whose double is exactly x.
  static std::optional<Rational> from_double(double x, std::int64_t max_den = 1'000'000);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A real number that carries an exact rational value while one is available
// and silently degrades to a double once an operation overflows or an input
// is not a short fraction.
class ExactReal {
 public:
  ExactReal() : exact_(Rational(0)) {}
  ExactReal(Rational r) : value_(r.to_double()), exact_(r) {}
  explicit ExactReal(double v);
  ExactReal(int v) : ExactReal(Rational(v)) {}

  static ExactReal inexact(double v);

  double value() const { return value_; }
  const std::optional<Rational>& exact() const { return exact_; }
  bool is_exact() const { return exact_.has_value(); }
  std::string str() const;

  ExactReal operator-() const;
  friend ExactReal operator+(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator-(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator/(const ExactReal& a, const ExactReal& b);

  ExactReal& operator+=(const ExactReal& o) { return *this = *this + o; }
  ExactReal& operator-=(const ExactReal& o) { return *this = *this - o; }

 private:
  double value_ = 0.0;
  std::optional<Rational> exact_;
};

// Exact comparison when both sides are exact, |a-b| <= tol otherwise.
bool approx_equal(const ExactReal& a, const ExactReal& b, double tol = 1e-10);
// -1, 0, +1 with the same exact-or-tolerance rule.
int compare(const ExactReal& a, const ExactReal& b, double tol = 1e-10);

}  // namespace locnorm
