#include <doctest.h>

#include <cmath>
#include <random>

#include "hsk/error.hpp"
#include "hsk/scalar.hpp"

using namespace hsk;

namespace {

const std::vector<Params> kPairs = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {2, 3}};

Scalar random_scalar(const Params& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> power(0, p.m() - 1), coeff(-7, 7), den(1, 5);
  Scalar s = Scalar::zero(field_of(p));
  for (int t = 0; t < 5; ++t) s += zeta(p, power(rng)).times_integer(coeff(rng));
  return s * integer(p, den(rng)).inverse();
}

}  // namespace

TEST_SUITE("scalar") {
  TEST_CASE("params derive the cyclotomic order") {
    CHECK(Params(2, 2).m() == 16);
    CHECK(Params(3, 2).m() == 30);
    CHECK_THROWS_AS(Params(1, 2), DomainError);
    CHECK_THROWS_AS(Params(2, 0), DomainError);
  }

  TEST_CASE("cyclotomic field has the Euler totient degree") {
    CHECK(CyclotomicField::get(16).degree() == 8);
    CHECK(CyclotomicField::get(12).degree() == 4);
    CHECK(CyclotomicField::get(30).degree() == 8);
    const Params p(3, 1);
    CHECK(zeta(p, p.m()) == integer(p, 1));
    CHECK(zeta(p, -1) * zeta(p, 1) == integer(p, 1));
  }

  TEST_CASE("quantum integers") {
    for (const auto& p : kPairs) {
      CHECK(qint(p, 1) == integer(p, 1));
      CHECK(qint(p, 0).is_zero());
      CHECK(qint(p, p.N + p.K).is_zero());
      for (int j = 1; j < p.N + p.K; ++j) CHECK_FALSE(qint(p, j).is_zero());
    }
    const Params p(2, 2);
    CHECK(qint(p, 2) == zeta(p, 2) + zeta(p, -2));
    CHECK(std::abs(qint(p, 2).embed() - std::sqrt(2.0)) < 1e-12);
  }

  TEST_CASE("quantum factorials") {
    const Params p(3, 2);
    CHECK(qfact(p, 0) == integer(p, 1));
    CHECK(qfact(p, 3) == qint(p, 1) * qint(p, 2) * qint(p, 3));
    CHECK(std::abs(qfact(Params(2, 2), 2).embed() - 1.41421356) < 1e-6);
  }

  TEST_CASE("conjugation") {
    const Params p(2, 2);
    CHECK(integer(p, 1).conjugate() == integer(p, 1));
    CHECK(zeta(p, 1).conjugate() == zeta(p, p.m() - 1));
    for (int j = 0; j < 6; ++j) CHECK(qint(p, j).conjugate() == qint(p, j));
  }

  TEST_CASE("inverse") {
    const Params p(2, 2);
    CHECK(integer(p, 1).inverse() == integer(p, 1));
    CHECK(std::abs(qint(p, 2).inverse().embed() - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK_THROWS_AS(qint(p, 4).inverse(), DomainError);
    CHECK_THROWS_AS(Scalar::zero(field_of(p)).inverse(), DomainError);
  }

  TEST_CASE("embedding") {
    const Params p(2, 2);
    CHECK(std::abs(Scalar::zero(field_of(p)).embed()) == 0.0);
    CHECK(std::abs(zeta(p, 1).embed() - std::polar(1.0, 2 * M_PI / p.m())) < 1e-14);
  }

  TEST_CASE("field identities on random inputs") {
    std::mt19937_64 rng(7);
    for (const auto& p : kPairs) {
      for (int k = 0; k < 25; ++k) {
        const Scalar x = random_scalar(p, rng), y = random_scalar(p, rng), z = random_scalar(p, rng);
        CHECK(std::abs((x * y).embed() - x.embed() * y.embed()) < 1e-10 * (1 + std::abs(x.embed() * y.embed())));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        CHECK(x.conjugate().conjugate() == x);
        if (!x.is_zero()) CHECK(x * x.inverse() == integer(p, 1));
        CHECK(x - x == Scalar::zero(field_of(p)));
      }
    }
  }

  TEST_CASE("rational and integer views") {
    const Params p(3, 2);
    CHECK(integer(p, -4).to_integer() == -4);
    CHECK_FALSE(zeta(p, 1).to_integer().has_value());
    const Scalar half = integer(p, 1) / integer(p, 2);
    CHECK(half.is_rational());
    CHECK(*half.to_rational() == mpq_class(1, 2));
    CHECK_FALSE(half.to_integer().has_value());
  }
}
