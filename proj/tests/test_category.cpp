#include <doctest.h>

#include <filesystem>
#include <random>

#include "hsk/category.hpp"
#include "hsk/error.hpp"

using namespace hsk;

namespace {

YoungDiagram D(std::vector<int> rows) { return YoungDiagram(std::move(rows)); }
HeckeElement one(const Params& p, int n) { return HeckeElement::identity(p, n); }

const std::vector<Params> kPairs = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}};

std::filesystem::path temp_dir(const std::string& tag) {
  auto d = std::filesystem::temp_directory_path() /
           ("hsk-test-" + tag + "-" + std::to_string(std::random_device{}()));
  std::filesystem::remove_all(d);
  return d;
}

}  // namespace

TEST_SUITE("category") {
  TEST_CASE("purified dimensions") {
    Context a(Params(2, 1));
    CHECK(a.purified_dim(2).dim == 1);
    CHECK(a.purified_dim(2).radical_dim == 1);
    Context b(Params(2, 2));
    CHECK(b.purified_dim(3).dim == 4);
    CHECK(b.purified_dim(3).radical_dim == 2);
    for (const auto& p : kPairs) {
      Context c(p);
      CHECK(c.purified_dim(1).dim == 1);
      CHECK(c.purified_dim(1).radical_dim == 0);
    }
    Context lim(Params(2, 2), {3, {}});
    CHECK_THROWS_AS(lim.purified_dim(4), LimitError);
  }

  TEST_CASE("radical membership") {
    Context c(Params(2, 2));
    const GramData g = gram(Params(2, 2), 3, Form::bilinear);
    for (const auto& x : g.kernel_basis) {
      CHECK(c.in_radical(x));
      CHECK(c.equal_mod_radical(one(Params(2, 2), 3) + x, one(Params(2, 2), 3)));
      CHECK(c.reduce(x).is_zero());
    }
    CHECK_FALSE(c.in_radical(one(Params(2, 2), 3)));
    std::mt19937_64 rng(2);
    const HeckeElement y = random_element(Params(2, 2), 3, rng);
    CHECK(c.equal_mod_radical(c.reduce(y), y));
  }

  TEST_CASE("minimal idempotents") {
    const Params p(2, 2);
    Context c(p);
    CHECK(c.minimal_idempotent(1, D({1})) == one(p, 1));
    // The full column is the T = -1 projector in this library's convention.
    CHECK(c.minimal_idempotent(2, D({})) == jones_wenzl(p, 2, JwKind::f));
    const HeckeElement g2 = c.minimal_idempotent(2, D({2}));
    CHECK(g2 == jones_wenzl(p, 2, JwKind::g));
    CHECK(c.form_rank({g2}) == 1);
    Context c3(Params(3, 2));
    CHECK(c3.minimal_idempotent(3, D({})) == jones_wenzl(Params(3, 2), 3, JwKind::f));
    const HeckeElement e = c3.minimal_idempotent(4, D({1}));
    CHECK(e * e == e);
    CHECK_THROWS_AS(c.minimal_idempotent(2, D({1})), DomainError);
  }

  TEST_CASE("central idempotents at (2,2), n = 2") {
    const Params p(2, 2);
    Context c(p);
    const BlockData& b = c.blocks(2);
    REQUIRE(b.blocks.size() == 2);
    CHECK(b.blocks[0].label == D({}));
    CHECK(c.equal_mod_radical(b.blocks[0].z, jones_wenzl(p, 2, JwKind::f)));
    CHECK(b.blocks[1].label == D({2}));
    CHECK(c.equal_mod_radical(b.blocks[1].z, jones_wenzl(p, 2, JwKind::g)));
  }

  TEST_CASE("block structure") {
    for (const auto& p : kPairs) {
      Context c(p);
      for (int n = 1; n <= 4; ++n) {
        const BlockData& b = c.blocks(n);
        HeckeElement sum(p, n);
        int squares = 0;
        for (const auto& x : b.blocks) {
          sum += x.z;
          squares += x.dim * x.dim;
          CHECK(x.dim == static_cast<int>(path_count(p, n, x.label)));
          CHECK(c.equal_mod_radical(x.z * x.z, x.z));
          for (const auto& y : b.blocks) {
            if (y.label != x.label) CHECK(c.in_radical(x.z * y.z));
          }
        }
        CHECK(c.equal_mod_radical(sum, one(p, n)));
        CHECK(squares == c.purified_dim(n).dim);
        if (n >= 2) {
          for (const auto& x : b.blocks) {
            for (const auto& lower : branch(p, n, x.label)) {
              CHECK(c.restriction_multiplicity(n, x.label, lower) == 1);
            }
          }
        }
      }
    }
  }

  TEST_CASE("fusion examples") {
    Context c(Params(2, 2));
    CHECK(c.fusion(D({1}), D({1}), D({})) == 1);
    CHECK(c.fusion(D({1}), D({1}), D({2})) == 1);
    CHECK(c.fusion(D({2}), D({2}), D({2})) == 0);
    CHECK(c.fusion(D({2}), D({2}), D({})) == 1);
    CHECK(c.fusion_direct(D({2}), D({2}), D({})) == 1);
    for (const auto& l : labels(Params(2, 2))) {
      for (const auto& m : labels(Params(2, 2))) {
        CHECK(c.fusion(l, D({}), m) == (l == m ? 1 : 0));
      }
    }
    Context d(Params(2, 1));
    CHECK(d.fusion(D({1}), D({1}), D({2})) == 0);
    CHECK(d.fusion(D({1}), D({1}), D({})) == 1);
  }

  TEST_CASE("fusion reduces by Frobenius reciprocity") {
    // (2)(2) -> (2) would need 4 strands directly; the reduced count is 4 too
    // at (2,2), so a limit of 3 must refuse while (2)(1) -> (1) fits.
    Context c(Params(2, 2), {3, {}});
    CHECK_THROWS_AS(c.fusion_direct(D({2}), D({2}), D({})), LimitError);
    CHECK(c.fusion(D({2}), D({1}), D({1})) == 1);
    Context d(Params(3, 2), {3, {}});
    // |a|+|b| = 4 but |a^dag|+|c| = 1 + 1.
    CHECK(d.fusion(D({2, 1}), D({1, 1}), D({1})) == d.fusion(D({1, 1}), D({2, 1}), D({1})));
  }

  TEST_CASE("fusion tables") {
    for (const auto& p : {Params(2, 1), Params(2, 2), Params(3, 1)}) {
      Context c(p);
      const FusionTable t = c.fusion_table();
      const auto ls = labels(p);
      CHECK(t.entries.size() == ls.size() * ls.size() * ls.size());
      for (const auto& e : t.entries) {
        CHECK(e.n >= 0);
        CHECK(e.n == c.fusion(e.b, e.a, e.c));
        CHECK(e.n == c.fusion(dagger(p, e.a), e.c, e.b));
      }
    }
  }

  TEST_CASE("quantum dimensions") {
    for (const auto& p : kPairs) {
      Context c(p);
      CHECK(c.qdim(D({})) == integer(p, 1));
      CHECK(c.qdim(D({1})) == qint(p, p.N));
      for (const auto& l : labels(p)) CHECK(c.qdim(l) == c.qdim(dagger(p, l)));
    }
    Context c(Params(3, 2));
    CHECK(c.qdim(D({2, 1})) == qint(Params(3, 2), 3) * qint(Params(3, 2), 3) - integer(Params(3, 2), 1));
    CHECK_THROWS_AS(c.qdim(D({3})), DomainError);
  }

  TEST_CASE("twists") {
    for (const auto& p : kPairs) {
      Context c(p);
      CHECK(c.twist(D({})) == integer(p, 1));
      CHECK(c.twist(D({1})) == curl(p, 1, Crossing::ribbon));
      for (const auto& l : labels(p)) {
        CHECK(c.twist(l) == ribbon_twist_from_contents(p, l));
        CHECK(c.twist_raw(l) == full_twist_eigenvalue(p, l));
        CHECK(c.twist(l) == c.twist(dagger(p, l)));
      }
    }
  }

  TEST_CASE("S-matrix") {
    for (const auto& p : {Params(2, 1), Params(2, 2), Params(3, 1)}) {
      Context c(p);
      const Matrix s = c.s_matrix();
      const auto ls = labels(p);
      CHECK(s.at(0, 0) == integer(p, 1));
      for (std::size_t i = 0; i < ls.size(); ++i) {
        CHECK(s.at(0, static_cast<int>(i)) == c.qdim(ls[i]));
        for (std::size_t j = 0; j < ls.size(); ++j) {
          CHECK(s.at(static_cast<int>(i), static_cast<int>(j)) ==
                s.at(static_cast<int>(j), static_cast<int>(i)));
        }
      }
      CHECK_FALSE(determinant(s).is_zero());
    }
  }

  TEST_CASE("modular functor dimensions") {
    Context c(Params(2, 2));
    CHECK(c.mf_dim(0, {}) == 1);
    CHECK(c.mf_dim(0, {D({1}), D({1})}) == 1);
    CHECK(c.mf_dim(0, {D({1}), D({2})}) == 0);
    CHECK(c.mf_dim(0, {D({1}), D({1}), D({1}), D({1})}) == 2);
    CHECK(c.mf_dim(1, {}) == 3);
    CHECK(c.mf_dim(0, {D({1}), D({1}), D({2})}) == 1);
    CHECK(c.mf_dim(0, {D({2}), D({1}), D({1})}) == 1);
    Context d(Params(3, 1));
    CHECK(d.mf_dim(1, {}) == static_cast<long>(labels(Params(3, 1)).size()));
    CHECK(d.mf_dim(0, {D({1}), D({1, 1})}) == 1);
    CHECK(d.mf_dim(0, {D({1}), D({1})}) == 0);
    CHECK_THROWS_AS(c.mf_dim(-1, {}), DomainError);
  }

  TEST_CASE("disk cache is transparent") {
    const auto dir = temp_dir("cat");
    const Params p(2, 2);
    Context cold(p, {kDefaultGramLimit, dir});
    const int rank_cold = cold.analysis(4).rank();
    const Scalar z_cold = markov_trace(cold.blocks(4).blocks.front().z);
    CHECK(std::filesystem::exists(dir));
    CHECK_FALSE(std::filesystem::is_empty(dir));
    Context warm(p, {kDefaultGramLimit, dir});
    CHECK(warm.analysis(4).rank() == rank_cold);
    CHECK(warm.analysis(4).pivots == cold.analysis(4).pivots);
    CHECK(markov_trace(warm.blocks(4).blocks.front().z) == z_cold);
    Context none(p);
    CHECK(none.analysis(4).matrix == warm.analysis(4).matrix);
    std::filesystem::remove_all(dir);
  }
}
