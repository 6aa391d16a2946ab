#include <doctest.h>

#include <random>

#include "hsk/diagrams.hpp"
#include "hsk/error.hpp"
#include "hsk/trace.hpp"

using namespace hsk;

namespace {

HeckeElement one(const Params& p, int n) { return HeckeElement::identity(p, n); }

std::uint64_t expected_rank(const Params& p, int n) {
  std::uint64_t s = 0;
  for (const auto& d : gamma_n(p, n)) s += path_count(p, n, d) * path_count(p, n, d);
  return s;
}

}  // namespace

TEST_SUITE("trace") {
  TEST_CASE("eta") {
    CHECK(eta(Params(2, 2)) == integer(Params(2, 2), 1) / integer(Params(2, 2), 2));
    CHECK(eta(Params(2, 1)) == integer(Params(2, 1), 1));
    const Params p(3, 1);
    const Scalar q = q_power(p, 1), qn = q_power(p, p.N), u = integer(p, 1);
    CHECK(eta(p) == (q - qn) / ((u + q) * (u - qn)));
    // The column weight [N-1]/([2][N]).
    for (const Params& r : {Params(3, 2), Params(4, 1), Params(2, 3)}) {
      CHECK(eta(r) == qint(r, r.N - 1) / (qint(r, 2) * qint(r, r.N)));
    }
  }

  TEST_CASE("Markov trace basics") {
    const Params p(3, 2);
    const Scalar e = eta(p);
    CHECK(markov_trace(one(p, 4)) == integer(p, 1));
    CHECK(markov_trace(e_idempotent(p, 3, 1)) == e);
    CHECK(markov_trace(e_idempotent(p, 3, 2)) == e);
    CHECK(markov_trace(e_idempotent(p, 3, 1) * e_idempotent(p, 3, 2)) == e * e);
    CHECK(markov_trace(one(p, 0)) == integer(p, 1));
  }

  TEST_CASE("trace and Markov properties on random elements") {
    std::mt19937_64 rng(11);
    for (const Params& p : {Params(2, 1), Params(3, 2)}) {
      for (int n = 2; n <= 4; ++n) {
        const HeckeElement e = e_idempotent(p, n, n - 1);
        for (int k = 0; k < 10; ++k) {
          const HeckeElement x = random_element(p, n, rng), y = random_element(p, n, rng);
          CHECK(markov_trace(x * y) == markov_trace(y * x));
          CHECK(markov_trace(star(x)) == markov_trace(x).conjugate());
          const HeckeElement a = random_element(p, n - 1, rng);
          const HeckeElement b = random_element(p, n - 1, rng);
          const HeckeElement ia = tensor_embed(a, one(p, 1)), ib = tensor_embed(b, one(p, 1));
          CHECK(markov_trace(ia * e * ib) == eta(p) * markov_trace(a * b));
        }
      }
    }
  }

  TEST_CASE("pairings") {
    const Params p(2, 2);
    CHECK(pairing(one(p, 2), one(p, 2), Form::bilinear) == integer(p, 1));
    CHECK(pairing(from_braid(p, {2, {1}}), from_braid(p, {2, {-1}}), Form::bilinear) ==
          integer(p, 1));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
      const HeckeElement x = random_element(p, 4, rng);
      const Scalar h = pairing(x, x, Form::hermitian);
      CHECK(h == h.conjugate());
      CHECK(h.embed().real() >= -1e-9);
    }
    CHECK_THROWS_AS(pairing(one(p, 2), one(p, 3), Form::bilinear), DomainError);
  }

  TEST_CASE("Gram ranks") {
    CHECK(gram(Params(2, 1), 2, Form::bilinear).rank == 1);
    const GramData g = gram(Params(2, 2), 3, Form::bilinear);
    CHECK(g.rank == 4);
    CHECK(g.kernel_basis.size() == 2);
    for (const Params& p : {Params(2, 1), Params(2, 2), Params(3, 1), Params(3, 2), Params(4, 1)}) {
      for (int n = 1; n <= 4; ++n) {
        const GramData b = gram(p, n, Form::bilinear);
        const GramData h = gram(p, n, Form::hermitian);
        CHECK(b.rank == static_cast<int>(expected_rank(p, n)));
        CHECK(h.rank == b.rank);
      }
    }
    CHECK_THROWS_AS(gram(Params(2, 2), 7, Form::bilinear), LimitError);
    CHECK_THROWS_AS(gram(Params(2, 2), 4, Form::bilinear, 3), LimitError);
  }

  TEST_CASE("Gram kernels lie in the radical") {
    const Params p(2, 2);
    for (Form f : {Form::bilinear, Form::hermitian}) {
      const GramData g = gram(p, 3, f);
      for (const auto& x : g.kernel_basis) {
        for (PermIndex w = 0; w < 6; ++w) {
          CHECK(markov_trace(HeckeElement::basis(p, 3, w) * x).is_zero());
        }
      }
    }
  }

  TEST_CASE("closure invariants") {
    const Params p(2, 2);
    CHECK(closure_invariant(p, {1, {}}) == qint(p, 2));
    CHECK(closure_invariant(p, {2, {}}) == qint(p, 2) * qint(p, 2));
    // sqrt(2) e^{6 pi i/16}
    CHECK(closure_invariant(p, {2, {-1}}) == qint(p, 2) * zeta(p, 3));
    CHECK(closure_invariant(p, {2, {1}}, Crossing::ribbon) == qint(p, 2) * zeta(p, 3));
  }

  TEST_CASE("curls") {
    for (const Params& p : {Params(2, 1), Params(2, 2), Params(3, 1), Params(3, 2), Params(3, 3)}) {
      for (Crossing c : {Crossing::hecke, Crossing::ribbon}) {
        CHECK(curl(p, 1, c) * curl(p, -1, c) == integer(p, 1));
        CHECK(closure_invariant(p, {2, {1}}, c) == curl(p, 1, c) * qint(p, p.N));
        CHECK(closure_invariant(p, {2, {-1}}, c) == curl(p, -1, c) * qint(p, p.N));
      }
      CHECK(framing_sign(p, Crossing::ribbon) == 1);
      if (p.N == p.K) {
        CHECK(framing_sign(p, Crossing::hecke) == -1);
      } else {
        CHECK_FALSE(framing_sign(p, Crossing::hecke).has_value());
      }
    }
    CHECK_THROWS_AS(curl(Params(2, 2), 0), DomainError);
  }

  TEST_CASE("stabilization") {
    const Params p(3, 2);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> gen(1, 2), sign(0, 1);
    for (int k = 0; k < 10; ++k) {
      BraidWord b{3, {}};
      for (int i = 0; i < 5; ++i) b.word.push_back(sign(rng) ? gen(rng) : -gen(rng));
      for (int s : {1, -1}) {
        BraidWord st{4, b.word};
        st.word.push_back(3 * s);
        for (Crossing c : {Crossing::hecke, Crossing::ribbon}) {
          CHECK(closure_invariant(p, st, c) == curl(p, s, c) * closure_invariant(p, b, c));
        }
      }
    }
  }
}
