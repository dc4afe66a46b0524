#pragma once

// Exact arithmetic in the golden field Q(phi) and the cyclotomic ring Z[zeta5].
//
// Floating point appears only in the embed/to_double helpers; every predicate
// used for geometry (signs, orientation, collinearity) is decided exactly.

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace penrose {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kPhi = 1.6180339887498948482;
inline constexpr double kPi = 3.14159265358979323846;

/// a + b*phi with rational coefficients. cpp_rational keeps both in lowest
/// terms with a positive denominator, so equality is structural.
class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(Rational a, Rational b = Rational(0)) : a_(std::move(a)), b_(std::move(b)) {}
  GoldenNumber(long long a) : a_(a) {}
  GoldenNumber(long long a, long long b) : a_(a), b_(b) {}

  static GoldenNumber phi() { return {0LL, 1LL}; }
  /// phi^n for any integer n; phi^-1 = phi - 1.
  static GoldenNumber phi_power(int n);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// Galois conjugate phi -> 1 - phi.
  GoldenNumber conjugate() const { return {a_ + b_, -b_}; }
  /// Field norm x * conjugate(x) = a^2 + ab - b^2.
  Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
  GoldenNumber inverse() const;

  int sign() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_integer() const;
  double to_double() const;
  std::string to_string() const;

  GoldenNumber operator-() const { return {-a_, -b_}; }
  GoldenNumber& operator+=(const GoldenNumber& o);
  GoldenNumber& operator-=(const GoldenNumber& o);
  GoldenNumber& operator*=(const GoldenNumber& o);
  GoldenNumber& operator/=(const GoldenNumber& o);

  friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
  friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
  friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }
  friend GoldenNumber operator/(GoldenNumber x, const GoldenNumber& y) { return x /= y; }
  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

/// (a,b)(c,d) = (ac+bd, ad+bc+bd).
GoldenNumber gn_mul(const GoldenNumber& x, const GoldenNumber& y);
/// Exact sign of a+b*phi using integer arithmetic only.
int gn_sign(const GoldenNumber& x);

/// sign(a + b*phi) for integers: compares (2a+b)^2 with 5b^2.
int sign_a_plus_b_phi(const BigInt& a, const BigInt& b);
int sign_a_plus_b_phi(std::int64_t a, std::int64_t b);

BigInt floor(const GoldenNumber& x);
BigInt ceil(const GoldenNumber& x);
inline int compare(const GoldenNumber& x, const GoldenNumber& y) { return (x - y).sign(); }

/// Element a + b*phi of Z[phi]; the fast path for predicates on lattice points.
struct GoldenInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  int sign() const { return sign_a_plus_b_phi(a, b); }
  double to_double() const;
  GoldenNumber exact() const { return {static_cast<long long>(a), static_cast<long long>(b)}; }
  friend bool operator==(const GoldenInt&, const GoldenInt&) = default;
};

GoldenInt operator+(GoldenInt x, GoldenInt y);
GoldenInt operator-(GoldenInt x, GoldenInt y);
GoldenInt operator*(GoldenInt x, GoldenInt y);

/// c0 + c1*z + c2*z^2 + c3*z^3 with z = exp(2 pi i / 5). Coefficients are
/// 64-bit; every operation checks for overflow and throws ErrorCode::Overflow
/// rather than wrapping.
class Cyclotomic5 {
 public:
  using Coeffs = std::array<std::int64_t, 4>;

  constexpr Cyclotomic5() = default;
  constexpr explicit Cyclotomic5(const Coeffs& c) : c_(c) {}
  constexpr Cyclotomic5(std::int64_t c0, std::int64_t c1, std::int64_t c2, std::int64_t c3)
      : c_{c0, c1, c2, c3} {}

  static Cyclotomic5 integer(std::int64_t n) { return {n, 0, 0, 0}; }
  /// z^j for any integer j (z^4 = -1 - z - z^2 - z^3).
  static Cyclotomic5 zeta_power(int j);
  /// exp(i pi k / 5), the tenth roots of unity: (-1)^k z^(3k).
  static Cyclotomic5 unit(int k);
  /// phi = -z^2 - z^3 = 2 cos 36 deg.
  static Cyclotomic5 phi() { return {0, 0, -1, -1}; }
  static Cyclotomic5 from_golden(GoldenInt g) { return {g.a, 0, -g.b, -g.b}; }

  const Coeffs& coeffs() const { return c_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const { return c_ == Coeffs{}; }
  /// Real elements are exactly a + b*phi = (a, 0, -b, -b).
  bool is_real() const { return c_[1] == 0 && c_[2] == c_[3]; }
  GoldenInt real_value() const;

  Cyclotomic5 times_phi() const;
  /// Complex conjugation z -> z^4.
  Cyclotomic5 conj() const;
  /// Multiplication by exp(i pi k / 5).
  Cyclotomic5 rotated(int k) const;
  std::complex<double> embed() const;

  Cyclotomic5 operator-() const;
  Cyclotomic5& operator+=(const Cyclotomic5& o);
  Cyclotomic5& operator-=(const Cyclotomic5& o);
  friend Cyclotomic5 operator+(Cyclotomic5 x, const Cyclotomic5& y) { return x += y; }
  friend Cyclotomic5 operator-(Cyclotomic5 x, const Cyclotomic5& y) { return x -= y; }
  friend Cyclotomic5 operator*(const Cyclotomic5& x, const Cyclotomic5& y);
  friend Cyclotomic5 operator*(std::int64_t s, const Cyclotomic5& x);

  friend bool operator==(const Cyclotomic5&, const Cyclotomic5&) = default;
  friend auto operator<=>(const Cyclotomic5&, const Cyclotomic5&) = default;

  std::string to_string() const;

 private:
  Coeffs c_{};
};

Cyclotomic5 cyc_mul(const Cyclotomic5& u, const Cyclotomic5& v);
Cyclotomic5 phi_times(const Cyclotomic5& u);
Cyclotomic5 cyc_reflect(const Cyclotomic5& u);
std::pair<double, double> cyc_embed(const Cyclotomic5& u);

/// (a + b*phi) * u.
Cyclotomic5 scaled(const Cyclotomic5& u, GoldenInt g);

/// |u|^2 as an element of Z[phi].
GoldenInt norm2(const Cyclotomic5& u);
/// 2 Re(conj(u) v).
GoldenInt dot2(const Cyclotomic5& u, const Cyclotomic5& v);
/// Real element proportional to Im(conj(u) v):
///   Im(conj(u) v) = -cross_scaled(u, v) / (4 sin 72 deg).
GoldenInt cross_scaled(const Cyclotomic5& u, const Cyclotomic5& v);
/// sign(Im(conj(u) v)): +1 when v is counterclockwise of u.
int cross_sign(const Cyclotomic5& u, const Cyclotomic5& v);
/// Orientation of the triangle (a, b, c): +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const Cyclotomic5& a, const Cyclotomic5& b, const Cyclotomic5& c);
/// Converts a cross_scaled() sum into a plain signed area contribution.
double cross_scaled_to_double(const GoldenNumber& g);

struct Cyclotomic5Hash {
  std::size_t operator()(const Cyclotomic5& u) const noexcept;
};

inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace penrose
