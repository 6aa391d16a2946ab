#include <doctest.h>

#include <algorithm>

#include "hsk/error.hpp"
#include "hsk/verify.hpp"

using namespace hsk;

namespace {

bool has_check(const VerifyReport& r, const std::string& name) {
  return std::any_of(r.checks.begin(), r.checks.end(),
                     [&](const CheckResult& c) { return c.name == name; });
}

std::string failures(const VerifyReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::fail) out += c.section + ": " + c.name + " (" + c.details + ")\n";
  }
  return out;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("full run at (2,1)") {
    Context ctx(Params(2, 1));
    const VerifyReport r = verify(ctx, {});
    INFO(failures(r));
    CHECK(r.passed());
    CHECK(r.count(CheckStatus::fail) == 0);
    CHECK(r.count(CheckStatus::pass) > 40);
    std::set<std::string> seen;
    for (const auto& c : r.checks) seen.insert(c.section);
    CHECK(seen.size() == verify_sections().size());
  }

  TEST_CASE("radical section at (2,2) up to n = 5") {
    Context ctx(Params(2, 2));
    VerifyOptions o;
    o.max_n = 5;
    o.sections = {"radical"};
    const VerifyReport r = verify(ctx, o);
    INFO(failures(r));
    CHECK(r.passed());
    CHECK(has_check(r, "gram rank n=3 equals 4"));
    for (const auto& c : r.checks) CHECK(c.section == "radical");
  }

  TEST_CASE("bad options") {
    Context ctx(Params(2, 2));
    VerifyOptions o;
    o.max_n = 9;
    CHECK_THROWS_AS(verify(ctx, o), UsageError);
    o.max_n = 0;
    CHECK_THROWS_AS(verify(ctx, o), UsageError);
    o.max_n = 3;
    o.sections = {"nonsense"};
    CHECK_THROWS_AS(verify(ctx, o), UsageError);
  }

  TEST_CASE("reports are deterministic") {
    VerifyOptions o;
    o.max_n = 3;
    o.seed = 17;
    o.sections = {"markov", "fusion", "skein"};
    Context a(Params(3, 1)), b(Params(3, 1));
    const std::string ja = to_json(verify(a, o)).dump();
    const std::string jb = to_json(verify(b, o)).dump();
    CHECK(ja == jb);
    const Json j = Json::parse(ja);
    CHECK(j["N"] == 3);
    CHECK(j["K"] == 1);
    CHECK(j["seed"] == 17);
    CHECK(j["status"] == "pass");
    CHECK_FALSE(j["checks"][0].contains("seconds"));
    CHECK(to_json(verify(a, o), true)["checks"][0].contains("seconds"));
  }
}
