#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <random>
#include <string>

using Json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

const std::filesystem::path& cache_dir() {
  static const std::filesystem::path d = [] {
    auto p = std::filesystem::temp_directory_path() /
             ("hsk-cli-" + std::to_string(std::random_device{}()));
    std::filesystem::remove_all(p);
    return p;
  }();
  return d;
}

Run run(const std::string& args, const std::string& cache = cache_dir().string()) {
  const std::string cmd =
      std::string(HSK_CLI_PATH) + " --cache '" + cache + "' " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json json_of(const Run& r) {
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("labels") {
    CHECK(json_of(run("labels --N 2 --K 2")) == Json::parse("[[],[1],[2]]"));
    CHECK(json_of(run("--N 3 --K 1 labels")).size() == 3);
  }

  TEST_CASE("scalars and diagrams") {
    const Json q = json_of(run("qint --N 2 --K 2 --j 2"));
    CHECK(q.contains("den"));
    CHECK(q.contains("num"));
    CHECK(json_of(run("dagger --N 3 --K 2 --diagram [1]")) == Json::parse("[1,1]"));
    CHECK(json_of(run("dagger --N 3 --K 2 --diagram 2,1")) == Json::parse("[2,1]"));
    CHECK(json_of(run("branch --N 2 --K 2 --n 3 --diagram [1]")) == Json::parse("[[],[2]]"));
    CHECK(json_of(run("paths --N 2 --K 2 --n 3 --diagram [1]")) == 2);
  }

  TEST_CASE("algebra, traces and Gram data") {
    const Json jw = json_of(run("jw --N 2 --K 2 --n 2 --kind f"));
    CHECK(jw["n"] == 2);
    const Json c = json_of(run("closure --N 2 --K 2 --strands 1 --braid ''"));
    CHECK(c["embed"][0].get<double>() == doctest::Approx(std::sqrt(2.0)));
    const Json t = json_of(run("trace --N 2 --K 2 --braid '1 -1 2'"));
    CHECK(t.contains("num"));
    CHECK(json_of(run("gram --N 2 --K 2 --n 3")) == Json::parse(R"({"n":3,"rank":4,"kernel_dim":2})"));
    CHECK(json_of(run("gram --N 2 --K 2 --n 2 --full")).contains("matrix"));
    CHECK(json_of(run("purify --N 2 --K 1 --n 2")) ==
          Json::parse(R"({"n":2,"dim":1,"radical_dim":1})"));
  }

  TEST_CASE("category") {
    CHECK(json_of(run("fusion --N 2 --K 2 --a [1] --b [1] --c [2]")) == 1);
    const Json table = json_of(run("fusion --N 2 --K 1"));
    CHECK(table["N"] == 2);
    CHECK(table["entries"].size() == 8);
    CHECK(json_of(run("qdim --N 2 --K 2 --diagram []")).contains("num"));
    CHECK(json_of(run("twist --N 2 --K 2 --diagram [1]")).contains("num"));
    CHECK(json_of(run("smatrix --N 2 --K 1"))["matrix"].size() == 2);
    CHECK(json_of(run("mfdim --N 2 --K 2 --genus 1")) == 3);
    CHECK(json_of(run("mfdim --N 2 --K 2 --genus 0 --marks '[[1],[1],[1],[1]]'")) == 2);
    CHECK(json_of(run("blocks --N 2 --K 2 --n 2"))["blocks"].size() == 2);
  }

  TEST_CASE("pretty output parses to the same document") {
    const Run a = run("labels --N 3 --K 2");
    const Run b = run("labels --N 3 --K 2 --pretty");
    CHECK(json_of(a) == json_of(b));
    CHECK(b.out.find('\n') < b.out.size() - 1);
  }

  TEST_CASE("exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("nonsense --N 2 --K 2").code == 2);
    CHECK(run("labels --N 2").code == 2);
    CHECK(run("labels --N 2 --K 2 --bogus").code == 2);
    CHECK(run("dagger --N 2 --K 2 --diagram '[1'").code == 2);
    CHECK(run("trace --N 2 --K 2 --braid 'x'").code == 2);
    CHECK(run("verify --N 2 --K 2 --max-n 9").code == 2);
    CHECK(run("dagger --N 3 --K 2 --diagram [3]").code == 1);
    CHECK(run("branch --N 2 --K 2 --n 2 --diagram [1]").code == 1);
    CHECK(run("trace --N 2 --K 2 --strands 2 --braid '3'").code == 1);
    CHECK(run("gram --N 2 --K 2 --n 7").code == 1);
  }

  TEST_CASE("verify") {
    const Json r = json_of(run("verify --N 2 --K 1 --max-n 3 --sections scalar,radical"));
    CHECK(r["status"] == "pass");
    CHECK(r["max_n"] == 3);
  }

  TEST_CASE("cache is transparent and output deterministic") {
    const auto fresh = std::filesystem::temp_directory_path() /
                       ("hsk-cli-fresh-" + std::to_string(std::random_device{}()));
    const std::string args = "blocks --N 2 --K 2 --n 4 --full";
    const Run cold = run(args, fresh.string());
    CHECK(std::filesystem::exists(fresh));
    const Run warm = run(args, fresh.string());
    CHECK(cold.code == 0);
    CHECK(cold.out == warm.out);
    std::filesystem::remove_all(fresh);
    const Run again = run(args, fresh.string());
    CHECK(again.out == cold.out);
    std::filesystem::remove_all(fresh);
    const std::string v = "verify --N 2 --K 2 --max-n 3 --seed 5 --sections markov,skein";
    CHECK(run(v).out == run(v).out);
  }
}
