#include <boost/multiprecision/cpp_dec_float.hpp>
#include <complex>
#include <random>

#include "doctest.h"
#include "penrose/error.hpp"
#include "penrose/exact.hpp"

using namespace penrose;
using Big = boost::multiprecision::cpp_dec_float_50;

namespace {

// Independent 50-digit oracle for a + b phi.
int oracle_sign(long long a, long long b) {
  const Big phi = (Big(1) + boost::multiprecision::sqrt(Big(5))) / 2;
  const Big v = Big(a) + Big(b) * phi;
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::complex<double> zeta_d(int j) { return std::polar(1.0, 2.0 * kPi * j / 5.0); }

Cyclotomic5 random_cyc(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return {d(rng), d(rng), d(rng), d(rng)};
}

bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace

TEST_CASE("gn_mul examples") {
  CHECK(gn_mul({0, 1}, {0, 1}) == GoldenNumber(1, 1));
  CHECK(gn_mul({1, 1}, {2, -1}) == GoldenNumber(1, 0));
  CHECK(std::abs(GoldenNumber(1, 1).to_double() * GoldenNumber(2, -1).to_double() - 1.0) < 1e-9);
  CHECK(gn_mul({7, -3}, {1, 0}) == GoldenNumber(7, -3));
}

TEST_CASE("gn_mul agrees with floating point") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> d(-1000, 1000);
  for (int i = 0; i < 500; ++i) {
    const GoldenNumber x(d(rng), d(rng)), y(d(rng), d(rng));
    const double want = x.to_double() * y.to_double();
    CHECK(std::abs(gn_mul(x, y).to_double() - want) <= 1e-9 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("gn_sign examples") {
  CHECK(gn_sign({1, 0}) == 1);
  CHECK(gn_sign({-8, 5}) == 1);
  CHECK(gn_sign({13, -8}) == 1);
  CHECK(gn_sign({-13, 8}) == -1);
  CHECK(gn_sign({0, 0}) == 0);
  CHECK(gn_sign(GoldenNumber(Rational(-1, 3), Rational(1, 5))) == oracle_sign(-5, 3));
}

TEST_CASE("gn_sign matches a 50-digit oracle and is never zero off the origin") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (int i = 0; i < 3000; ++i) {
    long long a = d(rng), b = d(rng);
    if (a == 0 && b == 0) a = 1;
    const int s = gn_sign({a, b});
    CHECK(s != 0);
    CHECK(s == oracle_sign(a, b));
    CHECK(sign_a_plus_b_phi(std::int64_t{a}, std::int64_t{b}) == s);
  }
  // Consecutive Fibonacci pairs are the hardest cases.
  long long f0 = 0, f1 = 1;
  for (int n = 0; n < 80; ++n) {
    CHECK(gn_sign({f0, -f1}) == oracle_sign(f0, -f1));
    CHECK(gn_sign({-f1, f0}) == oracle_sign(-f1, f0));
    const long long f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
    if (f1 > 1000000000000000000LL / 4) break;
  }
}

TEST_CASE("GoldenNumber field operations") {
  const GoldenNumber phi = GoldenNumber::phi();
  CHECK(phi.inverse() == GoldenNumber(-1, 1));
  CHECK(GoldenNumber::phi_power(-2) == GoldenNumber(2, -1));
  CHECK(GoldenNumber::phi_power(5) == GoldenNumber(3, 5));
  CHECK((GoldenNumber(3, 7) / GoldenNumber(2, -5)) * GoldenNumber(2, -5) == GoldenNumber(3, 7));
  CHECK_THROWS_AS(GoldenNumber(0LL).inverse(), Error);
  CHECK(floor(GoldenNumber(0, 1)) == 1);
  CHECK(ceil(GoldenNumber(0, 1)) == 2);
  CHECK(floor(GoldenNumber(-1, 0)) == -1);
  CHECK(ceil(GoldenNumber(Rational(7, 2), 0)) == 4);
  CHECK(floor(GoldenNumber(0, -1)) == -2);
  CHECK(GoldenNumber(Rational(2, 4), Rational(3, 1)).a() == Rational(1, 2));
}

TEST_CASE("cyc_mul examples") {
  const auto z = [](int j) { return Cyclotomic5::zeta_power(j); };
  CHECK(cyc_mul(z(2), z(3)) == Cyclotomic5(1, 0, 0, 0));
  CHECK(cyc_mul(z(1), z(3)) == Cyclotomic5(-1, -1, -1, -1));
  CHECK(cyc_mul(Cyclotomic5(1, 1, 0, 0), Cyclotomic5(1, 0, 0, 0) + z(4)) == Cyclotomic5(1, 0, -1, -1));
  CHECK(near(Cyclotomic5(1, 0, -1, -1).embed(), {kPhi + 1, 0.0}));
}

TEST_CASE("ring axioms and the embedding is a ring map") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_cyc(rng, 50), b = random_cyc(rng, 50), c = random_cyc(rng, 50);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(cyc_reflect(cyc_reflect(a)) == a);
    CHECK(cyc_reflect(a * b) == cyc_reflect(a) * cyc_reflect(b));
    CHECK(near((a * b).embed(), a.embed() * b.embed(), 1e-9));
    CHECK(near((a + b).embed(), a.embed() + b.embed(), 1e-9));
    CHECK(near(cyc_reflect(a).embed(), std::conj(a.embed()), 1e-9));
    CHECK(near(phi_times(a).embed(), kPhi * a.embed(), 1e-9));
    CHECK(phi_times(a) == cyc_mul(a, Cyclotomic5(0, 0, -1, -1)));
  }
}

TEST_CASE("phi_times, embed and reflect examples") {
  CHECK(phi_times(Cyclotomic5::integer(1)) == Cyclotomic5(0, 0, -1, -1));
  CHECK(phi_times(Cyclotomic5(0, 0, -1, -1)) == Cyclotomic5(1, 0, -1, -1));
  CHECK(phi_times(Cyclotomic5{}) == Cyclotomic5{});
  auto [x, y] = cyc_embed(Cyclotomic5(1, 0, 0, 0));
  CHECK(x == doctest::Approx(1.0));
  CHECK(y == doctest::Approx(0.0));
  std::tie(x, y) = cyc_embed(Cyclotomic5(0, 1, 0, 0));
  CHECK(x == doctest::Approx(0.309017).epsilon(1e-6));
  CHECK(y == doctest::Approx(0.951057).epsilon(1e-6));
  std::tie(x, y) = cyc_embed(Cyclotomic5(0, 0, -1, -1));
  CHECK(x == doctest::Approx(1.618034).epsilon(1e-6));
  CHECK(cyc_reflect(Cyclotomic5(0, 1, 0, 0)) == Cyclotomic5(-1, -1, -1, -1));
  CHECK(cyc_reflect(Cyclotomic5(1, 0, 0, 0)) == Cyclotomic5(1, 0, 0, 0));
  CHECK(cyc_reflect(Cyclotomic5(0, 0, -1, -1)) == Cyclotomic5(0, 0, -1, -1));
}

TEST_CASE("tenth roots of unity and rotations") {
  for (int k = 0; k < 10; ++k) {
    CHECK(near(Cyclotomic5::unit(k).embed(), std::polar(1.0, kPi * k / 5.0)));
    CHECK(Cyclotomic5::unit(k) * Cyclotomic5::unit(10 - k) == Cyclotomic5::integer(1));
    CHECK(Cyclotomic5(2, -1, 3, 0).rotated(k) == Cyclotomic5(2, -1, 3, 0) * Cyclotomic5::unit(k));
  }
  for (int j = -7; j < 8; ++j) CHECK(near(Cyclotomic5::zeta_power(j).embed(), zeta_d(j)));
}

TEST_CASE("real elements and exact predicates") {
  const GoldenInt g{3, -2};
  const auto c = Cyclotomic5::from_golden(g);
  CHECK(c.is_real());
  CHECK(c.real_value() == g);
  CHECK_FALSE(Cyclotomic5(0, 1, 0, 0).is_real());
  CHECK_THROWS_AS(Cyclotomic5(0, 1, 0, 0).real_value(), Error);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto u = random_cyc(rng, 20), v = random_cyc(rng, 20);
    const auto eu = u.embed(), ev = v.embed();
    CHECK(std::abs(norm2(u).to_double() - std::norm(eu)) < 1e-7 * std::max(1.0, std::norm(eu)));
    CHECK(std::abs(dot2(u, v).to_double() - 2 * (std::conj(eu) * ev).real()) < 1e-7 * std::max(1.0, std::abs(eu) * std::abs(ev)));
    const double cross = (std::conj(eu) * ev).imag();
    if (std::abs(cross) > 1e-6) CHECK(cross_sign(u, v) == (cross > 0 ? 1 : -1));
    const GoldenInt cs = cross_scaled(u, v);
    CHECK(std::abs(cross_scaled_to_double(cs.exact()) - cross) < 1e-7 * std::max(1.0, std::abs(cross)));
  }
  CHECK(orientation(Cyclotomic5{}, Cyclotomic5::integer(1), Cyclotomic5::zeta_power(1)) == 1);
  CHECK(orientation(Cyclotomic5{}, Cyclotomic5::zeta_power(1), Cyclotomic5::integer(1)) == -1);
  CHECK(orientation(Cyclotomic5{}, Cyclotomic5::integer(1), Cyclotomic5::phi()) == 0);
}

TEST_CASE("overflow is reported, not wrapped") {
  const Cyclotomic5 big(std::int64_t{1} << 62, 0, 0, 0);
  CHECK_THROWS_AS(big + big, Error);
  try {
    (void)(big * big);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}
