// hsk: command-line front end. Talks to the library through the C API only.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsk/hsk.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageFailure {
  std::string message;
};

// "[2,1]", "2,1", "2 1" or "" (empty diagram).
std::string diagram_arg(const std::string& flag, const std::string& text) {
  std::string t = text;
  if (t.find_first_not_of(" \t") == std::string::npos) return "[]";
  if (t.front() == '[') return t;
  for (char& ch : t) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream is(t);
  Json rows = Json::array();
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      rows.push_back(v);
    } catch (const std::exception&) {
      throw UsageFailure{flag + ": cannot read '" + text + "' as a diagram"};
    }
  }
  return rows.dump();
}

// Whitespace-separated nonzero integers.
std::string braid_arg(const std::string& text, int strands) {
  std::istringstream is(text);
  std::vector<int> word;
  std::string tok;
  int widest = 0;
  while (is >> tok) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageFailure{"--braid: '" + tok + "' is not an integer"};
    }
    if (v == 0) throw UsageFailure{"--braid: generators are nonzero integers"};
    word.push_back(v);
    widest = std::max(widest, std::abs(v));
  }
  if (strands < 0) {
    if (word.empty()) throw UsageFailure{"--strands is required for an empty braid word"};
    strands = widest + 1;
  }
  return Json{{"strands", strands}, {"word", word}}.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke algebras at roots of unity and the SU(N) level-K skein category"};
  app.require_subcommand(1);
  app.fallthrough();

  int N = 0, K = 0;
  std::string cache;
  std::uint64_t seed = 1;
  bool pretty = false;
  int gram_limit = 0;
  app.add_option("--N", N, "rank parameter N >= 2")->required()->check(CLI::Range(2, 64));
  app.add_option("--K", K, "level K >= 1")->required()->check(CLI::Range(1, 256));
  app.add_option("--cache", cache, "cache directory (default $HSK_CACHE or ./.hsk-cache)");
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--gram-limit", gram_limit, "largest strand count for Gram computations")
      ->check(CLI::Range(1, 8));
  auto* json_flag = app.add_flag("--json", "compact JSON output (default)");
  app.add_flag("--pretty", pretty, "indented JSON output")->excludes(json_flag);

  // Each subcommand fills `call` with the C API request.
  std::function<hsk_status(hsk_context*, char**)> call;

  int j = 0, n = 0, genus = 0, max_n = 4, strands = -1;
  std::string diagram, kind, braid, crossing = "hecke", form = "bilinear", a, b, c, marks;
  std::string sections;
  bool full = false, raw = false, timings = false;
  bool has_c = false;

  auto* labels = app.add_subcommand("labels", "the label set Gamma_{N,K}");
  labels->callback([&] { call = [](hsk_context* x, char** o) { return hsk_labels(x, o); }; });

  auto* qint = app.add_subcommand("qint", "quantum integer [j]");
  qint->add_option("--j,j", j, "index")->required();
  qint->callback([&] { call = [&](hsk_context* x, char** o) { return hsk_qint(x, j, o); }; });

  auto* dag = app.add_subcommand("dagger", "dual label");
  dag->add_option("--diagram,diagram", diagram, "diagram, e.g. 2,1")->required();
  dag->callback([&] {
    const std::string d = diagram_arg("--diagram", diagram);
    call = [d](hsk_context* x, char** o) { return hsk_dagger(x, d.c_str(), o); };
  });

  auto* br = app.add_subcommand("branch", "branching set at n strands");
  br->add_option("--n", n, "strand count")->required();
  br->add_option("--diagram,diagram", diagram, "label")->required();
  br->callback([&] {
    const std::string d = diagram_arg("--diagram", diagram);
    call = [&, d](hsk_context* x, char** o) { return hsk_branch(x, n, d.c_str(), o); };
  });

  auto* paths = app.add_subcommand("paths", "number of branching paths to a label");
  paths->add_option("--n", n, "strand count")->required();
  paths->add_option("--diagram,diagram", diagram, "label")->required();
  paths->callback([&] {
    const std::string d = diagram_arg("--diagram", diagram);
    call = [&, d](hsk_context* x, char** o) { return hsk_paths(x, n, d.c_str(), o); };
  });

  auto* jw = app.add_subcommand("jw", "Jones-Wenzl projector");
  jw->add_option("--n", n, "strand count")->required();
  jw->add_option("--kind", kind, "f|sym (T = -1) or g|antisym (T = q)")->required();
  jw->callback([&] {
    call = [&](hsk_context* x, char** o) { return hsk_jw(x, n, kind.c_str(), o); };
  });

  auto* yid = app.add_subcommand("yidem", "Young quasi-idempotent and idempotent");
  yid->add_option("--diagram,diagram", diagram, "shape")->required();
  yid->callback([&] {
    const std::string d = diagram_arg("--diagram", diagram);
    call = [d](hsk_context* x, char** o) { return hsk_yidem(x, d.c_str(), o); };
  });

  auto* tr = app.add_subcommand("trace", "Markov trace of a braid");
  tr->add_option("--braid", braid, "generators, e.g. \"1 -2 1\"")->required();
  tr->add_option("--strands", strands, "strand count");
  tr->callback([&] {
    const std::string bw = braid_arg(braid, strands);
    call = [bw](hsk_context* x, char** o) { return hsk_trace(x, bw.c_str(), o); };
  });

  auto* cl = app.add_subcommand("closure", "framed invariant of the braid closure");
  cl->add_option("--braid", braid, "generators, e.g. \"1 -2 1\"")->required();
  cl->add_option("--strands", strands, "strand count");
  cl->add_option("--crossing", crossing, "hecke (default) or ribbon")
      ->check(CLI::IsMember({"hecke", "ribbon"}));
  cl->callback([&] {
    const std::string bw = braid_arg(braid, strands);
    call = [&, bw](hsk_context* x, char** o) {
      return hsk_closure(x, bw.c_str(), crossing.c_str(), o);
    };
  });

  auto* gr = app.add_subcommand("gram", "trace-form Gram matrix on H_n");
  gr->add_option("--n", n, "strand count")->required();
  gr->add_option("--form", form, "bilinear (default) or hermitian")
      ->check(CLI::IsMember({"bilinear", "hermitian"}));
  gr->add_flag("--full", full, "include the matrix");
  gr->callback([&] {
    call = [&](hsk_context* x, char** o) { return hsk_gram(x, n, form.c_str(), full, o); };
  });

  auto* pu = app.add_subcommand("purify", "dimension of H_n modulo the radical");
  pu->add_option("--n", n, "strand count")->required();
  pu->callback([&] { call = [&](hsk_context* x, char** o) { return hsk_purify(x, n, o); }; });

  auto* bl = app.add_subcommand("blocks", "central idempotents of the purified H_n");
  bl->add_option("--n", n, "strand count")->required();
  bl->add_flag("--full", full, "include idempotents");
  bl->callback([&] { call = [&](hsk_context* x, char** o) { return hsk_blocks(x, n, full, o); }; });

  auto* fu = app.add_subcommand("fusion", "fusion coefficients");
  fu->add_option("--a", a, "first label");
  fu->add_option("--b", b, "second label");
  auto* copt = fu->add_option("--c", c, "result label");
  fu->callback([&] {
    has_c = copt->count() > 0;
    const bool has_a = fu->get_option("--a")->count() > 0;
    const bool has_b = fu->get_option("--b")->count() > 0;
    if (has_a != has_b) throw UsageFailure{"fusion: give both --a and --b, or neither"};
    if (has_c && !has_a) throw UsageFailure{"fusion: --c needs --a and --b"};
    if (!has_a) {
      call = [](hsk_context* x, char** o) { return hsk_fusion(x, nullptr, nullptr, nullptr, o); };
      return;
    }
    const std::string da = diagram_arg("--a", a), db = diagram_arg("--b", b);
    const std::string dc = has_c ? diagram_arg("--c", c) : "";
    call = [&, da, db, dc](hsk_context* x, char** o) {
      return hsk_fusion(x, da.c_str(), db.c_str(), has_c ? dc.c_str() : nullptr, o);
    };
  });

  auto* qd = app.add_subcommand("qdim", "quantum dimension of a label");
  qd->add_option("--diagram,diagram", diagram, "label")->required();
  qd->callback([&] {
    const std::string d = diagram_arg("--diagram", diagram);
    call = [d](hsk_context* x, char** o) { return hsk_qdim(x, d.c_str(), o); };
  });

  auto* tw = app.add_subcommand("twist", "ribbon twist of a label");
  tw->add_option("--diagram,diagram", diagram, "label")->required();
  tw->add_flag("--raw", raw, "full-twist eigenvalue on y_lambda instead");
  tw->callback([&] {
    const std::string d = diagram_arg("--diagram", diagram);
    call = [&, d](hsk_context* x, char** o) { return hsk_twist(x, d.c_str(), raw, o); };
  });

  auto* sm = app.add_subcommand("smatrix", "Hopf-link S-matrix");
  sm->callback([&] { call = [](hsk_context* x, char** o) { return hsk_smatrix(x, o); }; });

  auto* mf = app.add_subcommand("mfdim", "modular-functor dimension");
  mf->add_option("--genus", genus, "genus")->check(CLI::NonNegativeNumber);
  mf->add_option("--marks", marks, "JSON array of labels, e.g. [[1],[1]]");
  mf->callback([&] {
    call = [&](hsk_context* x, char** o) {
      return hsk_mfdim(x, genus, marks.empty() ? "[]" : marks.c_str(), o);
    };
  });

  auto* ve = app.add_subcommand("verify", "run the self-check suite");
  ve->add_option("--max-n", max_n, "strand bound");
  ve->add_option("--sections", sections, "comma-separated section names");
  ve->add_flag("--timings", timings, "include elapsed seconds per check");
  ve->callback([&] {
    std::string secs;
    if (!sections.empty()) {
      Json arr = Json::array();
      std::string s = sections;
      for (char& ch : s) {
        if (ch == ',') ch = ' ';
      }
      std::istringstream is(s);
      std::string tok;
      while (is >> tok) arr.push_back(tok);
      secs = arr.dump();
    }
    call = [&, secs](hsk_context* x, char** o) {
      return hsk_verify(x, max_n, seed, secs.empty() ? nullptr : secs.c_str(), timings, o);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageFailure& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return kExitUsage;
  }

  if (cache.empty()) {
    const char* env = std::getenv("HSK_CACHE");
    cache = env && *env ? env : "./.hsk-cache";
  }

  hsk_context* ctx = nullptr;
  hsk_status st = hsk_context_new(N, K, cache.c_str(), gram_limit, &ctx);
  char* out = nullptr;
  if (st == HSK_OK) st = call(ctx, &out);
  const std::string err = hsk_last_error();
  hsk_context_free(ctx);

  if (st != HSK_OK) {
    std::cerr << (st == HSK_USAGE_ERROR ? "usage error: " : "error: ") << err << "\n";
    return st == HSK_USAGE_ERROR ? kExitUsage : kExitDomain;
  }
  const Json result = Json::parse(out);
  hsk_string_free(out);
  std::cout << (pretty ? result.dump(2) : result.dump()) << "\n";
  // A failed self-check is a domain failure, not a successful query.
  if (ve->parsed() && result.value("status", "") == "fail") return kExitDomain;
  return kExitOk;
}
