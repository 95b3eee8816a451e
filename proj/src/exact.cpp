#include "sldrep/exact.hpp"

#include <cctype>
#include <sstream>

namespace sldrep {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_text(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  std::string digits(s);
  if (digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ExactScalar::ExactScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

ExactScalar ExactScalar::golden_ratio() { return {Rational(1, 2), Rational(1, 2)}; }

int ExactScalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 5 b^2 wins.
  Rational lhs = a_ * a_;
  Rational rhs = 5 * b_ * b_;
  return cmp(lhs, rhs) > 0 ? sa : sb;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::optional<ExactScalar> ExactScalar::inverse() const {
  if (is_zero()) return std::nullopt;
  Rational n = norm();
  return ExactScalar(a_ / n, -b_ / n);
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  auto inv = o.inverse();
  if (!inv) throw DivisionByZero();
  return *this *= *inv;
}

std::optional<ExactScalar> try_divide(const ExactScalar& x, const ExactScalar& y) {
  auto inv = y.inverse();
  if (!inv) return std::nullopt;
  return x * *inv;
}

std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExactScalar::to_string() const {
  if (sgn(b_) == 0) return format_rational(a_);
  return format_rational(a_) + "+" + format_rational(b_) + "*r5";
}

ExactScalar ExactScalar::parse(std::string_view text) {
  constexpr std::string_view kRoot = "*r5";
  if (text.size() < kRoot.size() || text.substr(text.size() - kRoot.size()) != kRoot) {
    return {parse_rational(text), Rational(0)};
  }
  std::string_view body = text.substr(0, text.size() - kRoot.size());
  // Split at the last '+' or '-' that is not the leading sign and does not
  // directly follow another operator ("+-" form).
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '+' && body[i - 1] != '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), parse_rational(body)};
  Rational a = parse_rational(body.substr(0, split));
  std::string_view coeff = body.substr(split);
  if (coeff.size() > 1 && coeff[0] == '+') coeff.remove_prefix(1);
  return {a, parse_rational(coeff)};
}

Vector3 operator+(const Vector3& u, const Vector3& v) { return {u[0] + v[0], u[1] + v[1], u[2] + v[2]}; }
Vector3 operator-(const Vector3& u, const Vector3& v) { return {u[0] - v[0], u[1] - v[1], u[2] - v[2]}; }
Vector3 operator*(const ExactScalar& s, const Vector3& v) { return {s * v[0], s * v[1], s * v[2]}; }

std::string Vector3::to_string() const {
  return "(" + c[0].to_string() + "," + c[1].to_string() + "," + c[2].to_string() + ")";
}

ExactScalar dot(const Vector3& u, const Vector3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Vector3 cross(const Vector3& u, const Vector3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

ExactScalar triple_product(const Vector3& u, const Vector3& v, const Vector3& w) {
  return dot(u, cross(v, w));
}

Matrix3 Matrix3::identity() { return diagonal(1, 1, 1); }

Matrix3 Matrix3::diagonal(const ExactScalar& a, const ExactScalar& b, const ExactScalar& c) {
  Matrix3 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

Matrix3 Matrix3::from_columns(const Vector3& c0, const Vector3& c1, const Vector3& c2) {
  Matrix3 m;
  for (std::size_t r = 0; r < 3; ++r) {
    m(r, 0) = c0[r];
    m(r, 1) = c1[r];
    m(r, 2) = c2[r];
  }
  return m;
}

Matrix3 Matrix3::transpose() const {
  Matrix3 t;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactScalar Matrix3::determinant() const {
  const Matrix3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::optional<Matrix3> Matrix3::inverse() const {
  ExactScalar det = determinant();
  auto inv_det = det.inverse();
  if (!inv_det) return std::nullopt;
  const Matrix3& m = *this;
  Matrix3 adj;
  adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return *inv_det * adj;
}

bool Matrix3::is_orthogonal() const { return transpose() * (*this) == identity(); }

Matrix3 operator*(const Matrix3& m, const Matrix3& n) {
  Matrix3 p;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      ExactScalar acc;
      for (std::size_t k = 0; k < 3; ++k) {
        if (m(r, k).is_zero() || n(k, c).is_zero()) continue;
        acc += m(r, k) * n(k, c);
      }
      p(r, c) = std::move(acc);
    }
  }
  return p;
}

Vector3 operator*(const Matrix3& m, const Vector3& v) {
  return {dot({m(0, 0), m(0, 1), m(0, 2)}, v), dot({m(1, 0), m(1, 1), m(1, 2)}, v),
          dot({m(2, 0), m(2, 1), m(2, 2)}, v)};
}

Matrix3 operator+(const Matrix3& m, const Matrix3& n) {
  Matrix3 s;
  for (std::size_t i = 0; i < 9; ++i) s(i / 3, i % 3) = m.entries()[i] + n.entries()[i];
  return s;
}

Matrix3 operator-(const Matrix3& m, const Matrix3& n) {
  Matrix3 s;
  for (std::size_t i = 0; i < 9; ++i) s(i / 3, i % 3) = m.entries()[i] - n.entries()[i];
  return s;
}

Matrix3 operator*(const ExactScalar& s, const Matrix3& m) {
  Matrix3 r;
  for (std::size_t i = 0; i < 9; ++i) r(i / 3, i % 3) = s * m.entries()[i];
  return r;
}

std::string Matrix3::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < 9; ++i) {
    if (i) out << ' ';
    out << e_[i].to_string();
  }
  return out.str();
}

Matrix3 outer(const Vector3& u, const Vector3& v) {
  Matrix3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = u[r] * v[c];
  return m;
}

Vector3 canonical_direction(const Vector3& v) {
  std::size_t lead = 0;
  while (lead < 3 && v[lead].is_zero()) ++lead;
  if (lead == 3) throw ZeroAxis();
  Vector3 w = *v[lead].inverse() * v;
  if (!(w[0].is_rational() && w[1].is_rational() && w[2].is_rational())) return w;
  // Rational direction: clear denominators, divide out the content.
  mpz_class den = 1;
  mpz_class content = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    mpz_class d = w[i].rational_part().get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::array<mpz_class, 3> ints;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational scaled = w[i].rational_part() * Rational(den);
    ints[i] = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
  }
  for (auto& x : ints) x /= content;
  return {Rational(ints[0]), Rational(ints[1]), Rational(ints[2])};
}

AxisLine::AxisLine(const Vector3& direction) : dir_(canonical_direction(direction)) {}

bool is_perpendicular(const AxisLine& u, const AxisLine& v) {
  return dot(u.direction(), v.direction()).is_zero();
}

bool is_angle_pi_over_4(const AxisLine& u, const AxisLine& v) {
  const Vector3& a = u.direction();
  const Vector3& b = v.direction();
  ExactScalar d = dot(a, b);
  return ExactScalar(2) * d * d == dot(a, a) * dot(b, b);
}

bool is_coplanar(const AxisLine& u, const AxisLine& v, const AxisLine& w) {
  return triple_product(u.direction(), v.direction(), w.direction()).is_zero();
}

}  // namespace sldrep
