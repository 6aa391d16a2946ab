#include <doctest.h>

#include "hsk/diagrams.hpp"
#include "hsk/error.hpp"

using namespace hsk;

namespace {

YoungDiagram D(std::vector<int> rows) { return YoungDiagram(std::move(rows)); }

}  // namespace

TEST_SUITE("diagrams") {
  TEST_CASE("invalid diagrams are rejected") {
    CHECK_THROWS_AS(D({1, 2}), DomainError);
    CHECK_THROWS_AS(D({2, 0}), DomainError);
  }

  TEST_CASE("statistics") {
    const YoungDiagram d = D({2, 1});
    CHECK(d.size() == 3);
    CHECK(d.transpose() == D({2, 1}));
    CHECK(D({3, 1}).transpose() == D({2, 1, 1}));
    CHECK(d.hooks() == std::vector<int>{3, 1, 1});
    CHECK(d.contents() == std::vector<int>{0, 1, -1});
    const Params p(3, 2);
    CHECK(quantum_hook_product(p, D({1})) == integer(p, 1));
    CHECK(quantum_hook_product(p, d) == qint(p, 3));
    const DiagramStats s = diagram_stats(Params(2, 2), D({3}));
    CHECK(s.in_c_nk);
    CHECK_FALSE(s.in_gamma);
    CHECK_FALSE(diagram_stats(Params(2, 2), D({4})).in_c_nk);
  }

  TEST_CASE("label sets") {
    CHECK(labels(Params(2, 1)) == std::vector<YoungDiagram>{D({}), D({1})});
    CHECK(labels(Params(2, 2)) == std::vector<YoungDiagram>{D({}), D({1}), D({2})});
    CHECK(labels(Params(3, 2)).size() == 6);
    CHECK(labels(Params(4, 1)).size() == 4);
  }

  TEST_CASE("dagger") {
    const Params p3(3, 2);
    CHECK(dagger(p3, D({})) == D({}));
    CHECK(dagger(p3, D({1})) == D({1, 1}));
    CHECK(dagger(p3, D({2, 1})) == D({2, 1}));
    CHECK_THROWS_AS(dagger(p3, D({3})), DomainError);
    for (const Params& p : {Params(2, 3), Params(3, 2), Params(4, 2)}) {
      for (const auto& d : labels(p)) CHECK(dagger(p, dagger(p, d)) == d);
    }
  }

  TEST_CASE("Gamma^n") {
    CHECK(gamma_n(Params(2, 1), 2) == std::vector<YoungDiagram>{D({})});
    CHECK(gamma_n(Params(2, 2), 3) == std::vector<YoungDiagram>{D({1})});
    CHECK(gamma_n(Params(2, 2), 2) == std::vector<YoungDiagram>{D({}), D({2})});
  }

  TEST_CASE("branching") {
    const Params p(2, 2);
    CHECK(branch(p, 3, D({1})) == std::vector<YoungDiagram>{D({}), D({2})});
    CHECK(branch(p, 1, D({1})) == std::vector<YoungDiagram>{D({})});
    CHECK(branch(p, 2, D({2})) == std::vector<YoungDiagram>{D({1})});
    CHECK_THROWS_AS(branch(p, 2, D({1})), DomainError);
    // N = 3: (1) at n = 4 also comes from (2,1), the padded (2,1,1) minus its last box.
    CHECK(branch(Params(3, 2), 4, D({1})) == std::vector<YoungDiagram>{D({}), D({2, 1})});
  }

  TEST_CASE("path counts") {
    CHECK(path_count(Params(2, 1), 2, D({})) == 1);
    CHECK(path_count(Params(2, 2), 3, D({1})) == 2);
    CHECK(path_count(Params(3, 2), 1, D({1})) == 1);
    CHECK(path_count(Params(2, 2), 2, D({1})) == 0);
    // Generic case: dimensions of S_4 irreducibles when the level does not truncate.
    const Params big(5, 5);
    CHECK(path_count(big, 4, D({2, 2})) == 2);
    CHECK(path_count(big, 4, D({2, 1, 1})) == 3);
  }

  TEST_CASE("padding") {
    const Params p(2, 2);
    CHECK(pad(p, D({1}), 1) == D({1}));
    CHECK(pad(p, D({}), 2) == D({1, 1}));
    CHECK(pad(p, D({1}), 3) == D({2, 1}));
    CHECK_THROWS_AS(pad(p, D({1}), 2), DomainError);
  }

  TEST_CASE("weights") {
    const Params p3(3, 2);
    const Weight w0 = weight(p3, D({}));
    CHECK(w0.coefficients == std::vector<int>{0, 0});
    CHECK(w0.level == 0);
    const Weight w = weight(p3, D({2, 1}));
    CHECK(w.coefficients == std::vector<int>{1, 1});
    CHECK(w.level == 2);
    CHECK(w.in_alcove);
    const Weight top = weight(Params(2, 3), D({3}));
    CHECK(top.coefficients == std::vector<int>{3});
    CHECK(top.level == 3);
    CHECK(top.in_alcove);
    CHECK_THROWS_AS(weight(p3, D({1, 1, 1, 1})), DomainError);
  }

  TEST_CASE("partitions") {
    CHECK(partitions(0).size() == 1);
    CHECK(partitions(5).size() == 7);
    CHECK(partitions(8).size() == 22);
  }
}
