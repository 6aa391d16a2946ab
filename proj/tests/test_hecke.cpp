#include <doctest.h>

#include <random>

#include "hsk/error.hpp"
#include "hsk/hecke.hpp"

using namespace hsk;

namespace {

PermIndex perm(std::initializer_list<int> one_line) {
  const OneLine w(one_line);
  return PermutationTable::get(static_cast<int>(w.size())).index_of(w);
}

HeckeElement T(const Params& p, std::initializer_list<int> one_line) {
  return HeckeElement::basis(p, static_cast<int>(one_line.size()), perm(one_line));
}

HeckeElement one(const Params& p, int n) { return HeckeElement::identity(p, n); }

}  // namespace

TEST_SUITE("hecke") {
  TEST_CASE("permutation tables") {
    const auto& t = PermutationTable::get(4);
    CHECK(t.size() == 24);
    CHECK(t.length(t.longest()) == 6);
    CHECK(t.one_line(0) == OneLine{1, 2, 3, 4});
    for (PermIndex w = 0; w < t.size(); ++w) {
      CHECK(t.inverse(t.inverse(w)) == w);
      CHECK(static_cast<int>(t.reduced_word(w).size()) == t.length(w));
    }
    CHECK_THROWS_AS(PermutationTable::get(9), LimitError);
  }

  TEST_CASE("braid words") {
    const Params p(2, 2);
    CHECK(from_braid(p, {3, {}}) == one(p, 3));
    const HeckeElement s = from_braid(p, {2, {1}});
    CHECK(s == T(p, {2, 1}) * sigma_scale(p));
    CHECK(sigma_scale(p) == -zeta(p, -(p.N - 1)));
    // sigma^2 = q^{1/N} - q^{1/2N}(q^{1/2} - q^{-1/2}) sigma
    CHECK(from_braid(p, {2, {1, 1}}) ==
          one(p, 2) * zeta(p, 2) - s * (zeta(p, 1) * (zeta(p, p.N) - zeta(p, -p.N))));
    CHECK_THROWS_AS(validate({2, {2}}), DomainError);
    CHECK_THROWS_AS(validate({3, {0}}), DomainError);
  }

  TEST_CASE("multiplication rules") {
    const Params p(3, 2);
    const Scalar q = q_power(p, 1);
    const HeckeElement t1 = T(p, {2, 1, 3});
    const HeckeElement t2 = T(p, {1, 3, 2});
    CHECK(t1 * t1 == t1 * (q - integer(p, 1)) + one(p, 3) * q);
    const HeckeElement t121 = t1 * t2 * t1;
    CHECK(t121.num_terms() == 1);
    CHECK(t121 == T(p, {3, 2, 1}));
    CHECK(one(p, 3) * t121 == t121);
    CHECK_THROWS_AS(multiply(one(p, 2), one(p, 3)), DomainError);
  }

  TEST_CASE("braid relations and inverses") {
    for (const Params& p : {Params(2, 1), Params(3, 2), Params(4, 1)}) {
      for (int n = 2; n <= 5; ++n) {
        for (int i = 1; i < n; ++i) {
          CHECK(from_braid(p, {n, {i, -i}}) == one(p, n));
          if (i + 1 < n) {
            CHECK(from_braid(p, {n, {i, i + 1, i}}) == from_braid(p, {n, {i + 1, i, i + 1}}));
          }
        }
      }
    }
  }

  TEST_CASE("star structure") {
    const Params p(2, 2);
    const Scalar qi = q_power(p, -1);
    CHECK(star(one(p, 2)) == one(p, 2));
    CHECK(star(T(p, {2, 1})) == T(p, {2, 1}) * qi + one(p, 2) * (qi - integer(p, 1)));
    for (int i = 1; i < 4; ++i) CHECK(star(e_idempotent(p, 4, i)) == e_idempotent(p, 4, i));
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
      const HeckeElement x = random_element(p, 4, rng), y = random_element(p, 4, rng);
      CHECK(star(x * y) == star(y) * star(x));
      CHECK(star(star(x)) == x);
    }
    CHECK(star(T(p, {2, 1})) * T(p, {2, 1}) == one(p, 2));
  }

  TEST_CASE("e_i") {
    const Params p(3, 2);
    const Scalar q = q_power(p, 1);
    for (int i = 1; i < 4; ++i) {
      const HeckeElement e = e_idempotent(p, 4, i);
      CHECK(e * e == e);
      const HeckeElement printed =
          (one(p, 4) * q + from_braid(p, {4, {i}}) * zeta(p, p.N - 1)) * (q + integer(p, 1)).inverse();
      CHECK(e == printed);
    }
    CHECK(e_idempotent(p, 4, 1) * e_idempotent(p, 4, 3) ==
          e_idempotent(p, 4, 3) * e_idempotent(p, 4, 1));
    CHECK_THROWS_AS(e_idempotent(p, 3, 3), DomainError);
  }

  TEST_CASE("Jones-Wenzl projectors") {
    const Params p(2, 2);
    CHECK(jones_wenzl(p, 1, JwKind::f) == one(p, 1));
    CHECK(jones_wenzl(p, 1, JwKind::g) == one(p, 1));
    // f_2 = (q^{1/2}/[2]) (1 + q^{-(1+N)/2N} sigma_1)
    const HeckeElement f2 = jones_wenzl(p, 2, JwKind::f);
    const HeckeElement expanded =
        (one(p, 2) + from_braid(p, {2, {1}}) * zeta(p, -(1 + p.N))) * (zeta(p, p.N) / qint(p, 2));
    CHECK(f2 == expanded);
    CHECK(from_braid(p, {2, {1}}) * f2 == f2 * zeta(p, 1 - p.N));
    const HeckeElement g2 = jones_wenzl(p, 2, JwKind::g);
    CHECK(from_braid(p, {2, {1}}) * g2 == g2 * -zeta(p, 1 + p.N));
    CHECK(f2 * f2 == f2);
    CHECK(g2 * g2 == g2);
    CHECK((f2 * g2).is_zero());
    CHECK(e_idempotent(p, 2, 1) * f2 == f2);
    CHECK((e_idempotent(p, 2, 1) * g2).is_zero());
    CHECK_THROWS_AS(jones_wenzl(p, 4, JwKind::f), DomainError);
  }

  TEST_CASE("Young idempotents") {
    const Params p(3, 2);
    const YoungIdempotent y1 = young_idempotent(p, YoungDiagram({1}));
    REQUIRE(y1.idem);
    CHECK(*y1.idem == one(p, 1));
    const YoungIdempotent y21 = young_idempotent(p, YoungDiagram({2, 1}));
    CHECK(y21.hook_product == qint(p, 3));
    CHECK(y21.quasi * y21.quasi == y21.quasi * qint(p, 3));
    REQUIRE(y21.idem);
    CHECK(*y21.idem * *y21.idem == *y21.idem);
    // One row is the T = q projector, one column the T = -1 projector.
    CHECK(*young_idempotent(p, YoungDiagram({2})).idem == jones_wenzl(p, 2, JwKind::g));
    CHECK(*young_idempotent(p, YoungDiagram({1, 1, 1})).idem == jones_wenzl(p, 3, JwKind::f));
    // A vanishing quantum hook leaves only the quasi-idempotent.
    const YoungIdempotent big = young_idempotent(Params(2, 1), YoungDiagram({2, 1}));
    CHECK_FALSE(big.idem.has_value());
  }

  TEST_CASE("quasi-idempotent law at |lambda| = 4") {
    for (const Params& p : {Params(2, 2), Params(3, 3)}) {
      for (const auto& d : partitions(4)) {
        if (!in_c_nk(p, d)) continue;
        const YoungIdempotent y = young_idempotent(p, d);
        CHECK(y.quasi * y.quasi == y.quasi * y.hook_product);
      }
    }
  }

  TEST_CASE("tensor embedding") {
    const Params p(2, 3);
    const HeckeElement s = from_braid(p, {2, {1}});
    CHECK(tensor_embed(s, one(p, 2)) == from_braid(p, {4, {1}}));
    CHECK(tensor_embed(one(p, 1), one(p, 1)) == one(p, 2));
    CHECK(tensor_embed(s, s) == from_braid(p, {4, {1, 3}}));
  }

  TEST_CASE("full twist is central") {
    const Params p(3, 1);
    const HeckeElement d2 = full_twist(p, 3);
    for (int i = 1; i < 3; ++i) {
      const HeckeElement s = from_braid(p, {3, {i}});
      CHECK(s * d2 == d2 * s);
    }
    CHECK(full_twist(p, 3) == from_braid(p, {3, {1, 2, 1, 1, 2, 1}}));
  }

  TEST_CASE("ratio detection") {
    const Params p(2, 2);
    const HeckeElement x = from_braid(p, {3, {1, 2}});
    const Scalar c = zeta(p, 5).times_integer(3);
    REQUIRE(((x * c).ratio_to(x)).has_value());
    CHECK(*(x * c).ratio_to(x) == c);
    CHECK_FALSE((x + one(p, 3)).ratio_to(x).has_value());
  }
}
