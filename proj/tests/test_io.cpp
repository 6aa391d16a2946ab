#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "hsk/cache.hpp"
#include "hsk/error.hpp"
#include "hsk/json_io.hpp"

using namespace hsk;

namespace {

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() /
           ("hsk-io-" + std::to_string(std::random_device{}()));
  std::filesystem::remove_all(d);
  return d;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("scalar round trip") {
    const Params p(3, 2);
    const Scalar x = zeta(p, 7).times_integer(3) + integer(p, 5) / integer(p, 7);
    const Json j = to_json(x);
    CHECK(j.contains("den"));
    CHECK(j["num"].size() == 8);
    CHECK_FALSE(j.contains("embed"));
    CHECK(scalar_from_json(p, j) == x);
    const Json e = to_json(x, true);
    REQUIRE(e.contains("embed"));
    CHECK(std::abs(e["embed"][0].get<double>() - x.embed().real()) < 1e-12);
    CHECK(scalar_from_json(p, to_json(Scalar::zero(field_of(p)))).is_zero());
  }

  TEST_CASE("big integers are written as strings") {
    const mpz_class big("123456789012345678901234567890");
    const Json j = bigint_to_json(big);
    CHECK(j.is_string());
    CHECK(bigint_from_json(j) == big);
    CHECK(bigint_to_json(mpz_class(-42)).is_number_integer());
    CHECK(bigint_from_json(Json(-42)) == -42);
    CHECK_THROWS_AS(bigint_from_json(Json("12x")), UsageError);
    const Params p(2, 2);
    Scalar s = integer(p, 1);
    for (int i = 0; i < 30; ++i) s = s * integer(p, 1000);
    CHECK(scalar_from_json(p, to_json(s)) == s);
  }

  TEST_CASE("malformed scalars") {
    const Params p(2, 2);
    CHECK_THROWS_AS(scalar_from_json(p, Json::parse(R"({"num":[1]})")), UsageError);
    CHECK_THROWS_AS(scalar_from_json(p, Json::parse(R"({"den":0,"num":[1]})")), UsageError);
  }

  TEST_CASE("diagram round trip") {
    CHECK(to_json(YoungDiagram({2, 1})).dump() == "[2,1]");
    CHECK(to_json(YoungDiagram()).dump() == "[]");
    CHECK(diagram_from_json(Json::parse("[3,1,1]")) == YoungDiagram({3, 1, 1}));
    CHECK_THROWS_AS(diagram_from_json(Json::parse("[1,2]")), DomainError);
    CHECK_THROWS_AS(diagram_from_json(Json::parse("{\"a\":1}")), UsageError);
  }

  TEST_CASE("element round trip") {
    const Params p(2, 3);
    std::mt19937_64 rng(4);
    for (int k = 0; k < 5; ++k) {
      const HeckeElement x = random_element(p, 4, rng);
      const Json j = to_json(x);
      CHECK(j["n"] == 4);
      CHECK(j["terms"].size() == x.num_terms());
      CHECK(element_from_json(p, j) == x);
    }
    const Json id = to_json(HeckeElement::identity(p, 2));
    CHECK(id["terms"][0]["perm"].dump() == "[1,2]");
  }

  TEST_CASE("matrix round trip") {
    const Params p(2, 1);
    Matrix m(p, 2, 3);
    m.at(0, 1) = zeta(p, 3);
    m.at(1, 2) = integer(p, -2);
    CHECK(matrix_from_json(p, to_json(m)) == m);
  }

  TEST_CASE("disk cache") {
    const auto dir = temp_dir();
    DiskCache off;
    CHECK_FALSE(off.enabled());
    off.store("k", "v");
    CHECK_FALSE(off.load("k").has_value());

    DiskCache c(dir);
    CHECK_FALSE(c.load("alpha").has_value());
    c.store("alpha", "{\"x\":1}");
    REQUIRE(c.load("alpha").has_value());
    CHECK(*c.load("alpha") == "{\"x\":1}");
    CHECK_FALSE(c.load("beta").has_value());

    // Corrupt the payload: the checksum no longer matches.
    {
      std::ifstream in(c.path_for("alpha"));
      Json j = Json::parse(in);
      j["payload"] = "{\"x\":2}";
      std::ofstream out(c.path_for("alpha"), std::ios::trunc);
      out << j.dump();
    }
    CHECK_FALSE(c.load("alpha").has_value());

    // A file with a different stored key is ignored.
    c.store("gamma", "1");
    std::filesystem::copy_file(c.path_for("gamma"), c.path_for("delta"));
    CHECK_FALSE(c.load("delta").has_value());

    // Garbage is treated as absent.
    { std::ofstream(c.path_for("eps")) << "not json"; }
    CHECK_FALSE(c.load("eps").has_value());

    CHECK(crc32_of("123456789") == 0xCBF43926u);
    std::filesystem::remove_all(dir);
  }
}
