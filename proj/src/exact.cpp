#include "penrose/exact.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "penrose/error.hpp"

namespace penrose {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "cyclotomic coefficient addition");
  return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "cyclotomic coefficient subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "cyclotomic coefficient product");
  return r;
}

int sign_of(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

constexpr std::int64_t kFastLimit = std::int64_t{1} << 60;

const std::array<std::complex<double>, 4>& zeta_table() {
  static const std::array<std::complex<double>, 4> table = [] {
    std::array<std::complex<double>, 4> t{};
    for (int j = 0; j < 4; ++j) t[j] = std::polar(1.0, 2.0 * kPi * j / 5.0);
    return t;
  }();
  return table;
}

}  // namespace

// ---------------------------------------------------------------------------
// Signs

int sign_a_plus_b_phi(const BigInt& a, const BigInt& b) {
  if (b == 0) return sign_of(a);
  // a + b*phi = (x + b*sqrt5) / 2 with x = 2a + b.
  const BigInt x = 2 * a + b;
  if (x >= 0 && b > 0) return 1;
  if (x <= 0 && b < 0) return -1;
  const BigInt lhs = x * x;
  const BigInt rhs = 5 * b * b;
  // sqrt5 is irrational, so lhs != rhs whenever b != 0.
  if (x > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

__extension__ typedef __int128 i128;

int sign_a_plus_b_phi(std::int64_t a, std::int64_t b) {
  if (std::llabs(a) >= kFastLimit || std::llabs(b) >= kFastLimit) {
    return sign_a_plus_b_phi(BigInt(a), BigInt(b));
  }
  if (b == 0) return a > 0 ? 1 : (a < 0 ? -1 : 0);
  const i128 x = 2 * static_cast<i128>(a) + b;
  if (x >= 0 && b > 0) return 1;
  if (x <= 0 && b < 0) return -1;
  const i128 lhs = x * x;
  const i128 rhs = 5 * static_cast<i128>(b) * b;
  if (x > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

// ---------------------------------------------------------------------------
// GoldenNumber

GoldenNumber GoldenNumber::phi_power(int n) {
  const GoldenNumber step = n >= 0 ? phi() : GoldenNumber(-1LL, 1LL);
  GoldenNumber result(1LL);
  for (int i = 0; i < std::abs(n); ++i) result *= step;
  return result;
}

GoldenNumber GoldenNumber::inverse() const {
  const Rational n = norm();
  if (n == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(phi)");
  GoldenNumber c = conjugate();
  return {c.a_ / n, c.b_ / n};
}

int GoldenNumber::sign() const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  // Scale by the positive product of denominators.
  const BigInt a = numerator(a_) * denominator(b_);
  const BigInt b = numerator(b_) * denominator(a_);
  return sign_a_plus_b_phi(a, b);
}

bool GoldenNumber::is_integer() const {
  return b_ == 0 && boost::multiprecision::denominator(a_) == 1;
}

double GoldenNumber::to_double() const {
  const double a = a_.convert_to<double>();
  const double b = b_.convert_to<double>();
  const double x = a + b * kPhi;
  // Large coefficients that nearly cancel: recover the value as norm / conjugate.
  if (std::abs(x) < 1e-3 * (std::abs(a) + std::abs(b))) {
    const double y = (a + b) - b * kPhi;
    if (y != 0.0) return norm().convert_to<double>() / y;
  }
  return x;
}

std::string GoldenNumber::to_string() const {
  std::ostringstream os;
  os << '(' << a_ << ", " << b_ << ')';
  return os.str();
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o) {
  const Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_ + bd;
  Rational nb = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

GoldenNumber& GoldenNumber::operator/=(const GoldenNumber& o) { return *this *= o.inverse(); }

GoldenNumber gn_mul(const GoldenNumber& x, const GoldenNumber& y) { return x * y; }

int gn_sign(const GoldenNumber& x) { return x.sign(); }

BigInt floor(const GoldenNumber& x) {
  if (x.is_rational()) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    BigInt q = numerator(x.a()) / denominator(x.a());
    if (q * denominator(x.a()) > numerator(x.a())) --q;
    return q;
  }
  BigInt n(static_cast<long long>(std::floor(x.to_double())));
  while (compare(x, GoldenNumber(Rational(n))) < 0) --n;
  while (compare(x, GoldenNumber(Rational(n + 1))) >= 0) ++n;
  return n;
}

BigInt ceil(const GoldenNumber& x) { return -floor(-x); }

// ---------------------------------------------------------------------------
// GoldenInt

double GoldenInt::to_double() const { return exact().to_double(); }

GoldenInt operator+(GoldenInt x, GoldenInt y) {
  return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

GoldenInt operator-(GoldenInt x, GoldenInt y) {
  return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

GoldenInt operator*(GoldenInt x, GoldenInt y) {
  const std::int64_t bd = checked_mul(x.b, y.b);
  return {checked_add(checked_mul(x.a, y.a), bd),
          checked_add(checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)), bd)};
}

// ---------------------------------------------------------------------------
// Cyclotomic5

Cyclotomic5 Cyclotomic5::zeta_power(int j) {
  switch (((j % 5) + 5) % 5) {
    case 0: return {1, 0, 0, 0};
    case 1: return {0, 1, 0, 0};
    case 2: return {0, 0, 1, 0};
    case 3: return {0, 0, 0, 1};
    default: return {-1, -1, -1, -1};
  }
}

Cyclotomic5 Cyclotomic5::unit(int k) {
  const int kk = ((k % 10) + 10) % 10;
  const Cyclotomic5 z = zeta_power(3 * kk);
  return (kk % 2 == 0) ? z : -z;
}

GoldenInt Cyclotomic5::real_value() const {
  if (!is_real()) throw Error(ErrorCode::InvalidArgument, "cyclotomic element " + to_string() + " is not real");
  return {c_[0], -c_[2]};
}

Cyclotomic5 Cyclotomic5::times_phi() const { return *this * phi(); }

Cyclotomic5 Cyclotomic5::conj() const {
  // z -> z^4 = -1 - z - z^2 - z^3, z^2 <-> z^3.
  return {checked_sub(c_[0], c_[1]), checked_sub(0, c_[1]), checked_sub(c_[3], c_[1]),
          checked_sub(c_[2], c_[1])};
}

Cyclotomic5 Cyclotomic5::rotated(int k) const { return *this * unit(k); }

std::complex<double> Cyclotomic5::embed() const {
  const auto& t = zeta_table();
  std::complex<double> s{0.0, 0.0};
  for (int j = 0; j < 4; ++j) s += static_cast<double>(c_[j]) * t[j];
  return s;
}

Cyclotomic5 Cyclotomic5::operator-() const {
  return {checked_sub(0, c_[0]), checked_sub(0, c_[1]), checked_sub(0, c_[2]), checked_sub(0, c_[3])};
}

Cyclotomic5& Cyclotomic5::operator+=(const Cyclotomic5& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

Cyclotomic5& Cyclotomic5::operator-=(const Cyclotomic5& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
  return *this;
}

Cyclotomic5 operator*(const Cyclotomic5& x, const Cyclotomic5& y) {
  std::array<std::int64_t, 7> p{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      p[i + j] = checked_add(p[i + j], checked_mul(x.c_[i], y.c_[j]));
    }
  }
  // z^5 = 1, z^6 = z, then z^4 = -(1 + z + z^2 + z^3).
  p[0] = checked_add(p[0], p[5]);
  p[1] = checked_add(p[1], p[6]);
  return {checked_sub(p[0], p[4]), checked_sub(p[1], p[4]), checked_sub(p[2], p[4]),
          checked_sub(p[3], p[4])};
}

Cyclotomic5 operator*(std::int64_t s, const Cyclotomic5& x) {
  return {checked_mul(s, x.c_[0]), checked_mul(s, x.c_[1]), checked_mul(s, x.c_[2]),
          checked_mul(s, x.c_[3])};
}

std::string Cyclotomic5::to_string() const {
  std::ostringstream os;
  os << '[' << c_[0] << ',' << c_[1] << ',' << c_[2] << ',' << c_[3] << ']';
  return os.str();
}

Cyclotomic5 cyc_mul(const Cyclotomic5& u, const Cyclotomic5& v) { return u * v; }

Cyclotomic5 phi_times(const Cyclotomic5& u) { return u.times_phi(); }

Cyclotomic5 cyc_reflect(const Cyclotomic5& u) { return u.conj(); }

std::pair<double, double> cyc_embed(const Cyclotomic5& u) {
  const auto z = u.embed();
  return {z.real(), z.imag()};
}

Cyclotomic5 scaled(const Cyclotomic5& u, GoldenInt g) {
  return g.a * u + g.b * u.times_phi();
}

GoldenInt norm2(const Cyclotomic5& u) { return (u * u.conj()).real_value(); }

GoldenInt dot2(const Cyclotomic5& u, const Cyclotomic5& v) {
  return (u.conj() * v + u * v.conj()).real_value();
}

GoldenInt cross_scaled(const Cyclotomic5& u, const Cyclotomic5& v) {
  // w = 2i Im(conj(u) v); eta = z - z^4 = 2i sin72; w * eta is real.
  static const Cyclotomic5 eta{1, 2, 1, 1};
  const Cyclotomic5 w = u.conj() * v - u * v.conj();
  return (w * eta).real_value();
}

int cross_sign(const Cyclotomic5& u, const Cyclotomic5& v) { return -cross_scaled(u, v).sign(); }

int orientation(const Cyclotomic5& a, const Cyclotomic5& b, const Cyclotomic5& c) {
  return cross_sign(b - a, c - a);
}

double cross_scaled_to_double(const GoldenNumber& g) {
  static const double four_sin72 = 4.0 * std::sin(2.0 * kPi / 5.0);
  return -g.to_double() / four_sin72;
}

std::size_t Cyclotomic5Hash::operator()(const Cyclotomic5& u) const noexcept {
  std::size_t seed = 0;
  for (std::size_t i = 0; i < 4; ++i) hash_combine(seed, std::hash<std::int64_t>{}(u[i]));
  return seed;
}

}  // namespace penrose
