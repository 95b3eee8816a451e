#pragma once

// Exact arithmetic over the real quadratic field Q(sqrt 5).
//
// Every rotation matrix the library handles (cube group, icosahedral group and
// the pi-rotations built from their axes) has entries in this field, so
// equality of group elements is decided exactly, never up to a tolerance.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sldrep {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(sqrt5)") {}
};

class ZeroAxis : public std::invalid_argument {
 public:
  ZeroAxis() : std::invalid_argument("zero vector does not define an axis") {}
};

using Rational = mpq_class;

/// Parses "p" or "p/q" (q != 0) into a reduced rational.
Rational parse_rational(std::string_view text);
/// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

/// a + b*sqrt(5) with a, b rational.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : a_(v), b_(0) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational a, Rational b = 0);

  static ExactScalar sqrt5() { return {Rational(0), Rational(1)}; }
  /// (1 + sqrt5) / 2
  static ExactScalar golden_ratio();

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Exact sign of the real number a + b*sqrt5.
  int sign() const;
  ExactScalar conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 5 b^2.
  Rational norm() const { return a_ * a_ - 5 * b_ * b_; }

  ExactScalar operator-() const { return {-a_, -b_}; }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  /// Throws DivisionByZero.
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }

  /// Multiplicative inverse; nullopt for zero.
  std::optional<ExactScalar> inverse() const;

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Order of the real numbers.
  friend std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y);

  /// "p/q" or "p/q+r/s*r5" (see format_rational for p/q).
  std::string to_string() const;
  /// Inverse of to_string; also accepts "a-b*r5" and "r/s*r5".
  static ExactScalar parse(std::string_view text);

 private:
  Rational a_{0};
  Rational b_{0};
};

/// x / y, or nullopt when y is zero.
std::optional<ExactScalar> try_divide(const ExactScalar& x, const ExactScalar& y);

struct Vector3 {
  std::array<ExactScalar, 3> c{};

  Vector3() = default;
  Vector3(ExactScalar x, ExactScalar y, ExactScalar z) : c{std::move(x), std::move(y), std::move(z)} {}

  const ExactScalar& operator[](std::size_t i) const { return c[i]; }
  ExactScalar& operator[](std::size_t i) { return c[i]; }
  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  friend Vector3 operator+(const Vector3& u, const Vector3& v);
  friend Vector3 operator-(const Vector3& u, const Vector3& v);
  friend Vector3 operator*(const ExactScalar& s, const Vector3& v);
  friend bool operator==(const Vector3&, const Vector3&) = default;
  friend auto operator<=>(const Vector3&, const Vector3&) = default;

  std::string to_string() const;
};

ExactScalar dot(const Vector3& u, const Vector3& v);
Vector3 cross(const Vector3& u, const Vector3& v);
ExactScalar triple_product(const Vector3& u, const Vector3& v, const Vector3& w);

/// Row-major 3x3 matrix.
class Matrix3 {
 public:
  Matrix3() = default;
  explicit Matrix3(std::array<ExactScalar, 9> entries) : e_(std::move(entries)) {}

  static Matrix3 identity();
  static Matrix3 diagonal(const ExactScalar& a, const ExactScalar& b, const ExactScalar& c);
  static Matrix3 from_columns(const Vector3& c0, const Vector3& c1, const Vector3& c2);

  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return e_[3 * r + c]; }
  ExactScalar& operator()(std::size_t r, std::size_t c) { return e_[3 * r + c]; }
  const std::array<ExactScalar, 9>& entries() const { return e_; }

  Vector3 column(std::size_t c) const { return {e_[c], e_[3 + c], e_[6 + c]}; }
  Matrix3 transpose() const;
  ExactScalar determinant() const;
  ExactScalar trace() const { return e_[0] + e_[4] + e_[8]; }
  /// General inverse via the adjugate; nullopt when singular.
  std::optional<Matrix3> inverse() const;
  bool is_orthogonal() const;

  friend Matrix3 operator*(const Matrix3& m, const Matrix3& n);
  friend Vector3 operator*(const Matrix3& m, const Vector3& v);
  friend Matrix3 operator+(const Matrix3& m, const Matrix3& n);
  friend Matrix3 operator-(const Matrix3& m, const Matrix3& n);
  friend Matrix3 operator*(const ExactScalar& s, const Matrix3& m);
  friend bool operator==(const Matrix3&, const Matrix3&) = default;
  friend auto operator<=>(const Matrix3&, const Matrix3&) = default;

  std::string to_string() const;

 private:
  std::array<ExactScalar, 9> e_{};
};

/// Outer product v * v^T.
Matrix3 outer(const Vector3& u, const Vector3& v);

/// An unsigned line through the origin, stored by a canonical direction:
/// divided by its first nonzero coordinate, and when that leaves all
/// coordinates rational, rescaled to coprime integers. The first nonzero
/// coordinate is therefore positive.
class AxisLine {
 public:
  /// Throws ZeroAxis.
  explicit AxisLine(const Vector3& direction);

  const Vector3& direction() const { return dir_; }
  friend bool operator==(const AxisLine&, const AxisLine&) = default;
  friend auto operator<=>(const AxisLine&, const AxisLine&) = default;
  std::string to_string() const { return dir_.to_string(); }

 private:
  Vector3 dir_;
};

/// Canonical representative of the line spanned by v (throws ZeroAxis).
Vector3 canonical_direction(const Vector3& v);

bool is_perpendicular(const AxisLine& u, const AxisLine& v);
/// Unsigned lines at angle pi/4: 2 (u.v)^2 == (u.u)(v.v).
bool is_angle_pi_over_4(const AxisLine& u, const AxisLine& v);
bool is_coplanar(const AxisLine& u, const AxisLine& v, const AxisLine& w);

}  // namespace sldrep
