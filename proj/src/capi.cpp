#include "hsk/hsk.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "hsk/category.hpp"
#include "hsk/error.hpp"
#include "hsk/json_io.hpp"
#include "hsk/verify.hpp"

struct hsk_context {
  hsk::Params params;
  std::unique_ptr<hsk::Context> ctx;
};

namespace {

using hsk::Json;

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hsk_status fail(hsk_status code, const std::string& msg) {
  last_error = msg;
  return code;
}

// Runs body, which returns the JSON result, and maps exceptions to status codes.
template <class F>
hsk_status guarded(hsk_context* c, char** out, F&& body) {
  if (!out) return fail(HSK_USAGE_ERROR, "output pointer is null");
  *out = nullptr;
  if (!c) return fail(HSK_USAGE_ERROR, "context is null");
  try {
    Json j = body(*c->ctx);
    *out = dup(j.dump());
    last_error.clear();
    return HSK_OK;
  } catch (const hsk::UsageError& e) {
    return fail(HSK_USAGE_ERROR, e.what());
  } catch (const hsk::LimitError& e) {
    return fail(HSK_LIMIT_ERROR, e.what());
  } catch (const hsk::DomainError& e) {
    return fail(HSK_DOMAIN_ERROR, e.what());
  } catch (const hsk::InternalError& e) {
    return fail(HSK_INTERNAL_ERROR, e.what());
  } catch (const Json::exception& e) {
    return fail(HSK_USAGE_ERROR, std::string("bad JSON argument: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(HSK_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(HSK_INTERNAL_ERROR, e.what());
  }
}

Json parse(const char* text, const char* what) {
  if (!text) throw hsk::UsageError(std::string(what) + " is missing");
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw hsk::UsageError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

hsk::YoungDiagram diagram(const char* text) {
  return hsk::diagram_from_json(parse(text, "diagram"));
}

hsk::BraidWord braid(const char* text) {
  const Json j = parse(text, "braid");
  if (!j.is_object() || !j.contains("strands") || !j.contains("word")) {
    throw hsk::UsageError("braid must be {\"strands\": n, \"word\": [...]}");
  }
  hsk::BraidWord b;
  b.strands = j.at("strands").get<int>();
  if (b.strands < 0 || b.strands > hsk::kMaxStrands) {
    throw hsk::UsageError("strand count must lie in [0, " + std::to_string(hsk::kMaxStrands) + "]");
  }
  b.word = j.at("word").get<std::vector<int>>();
  hsk::validate(b);
  return b;
}

hsk::Crossing crossing(const char* text) {
  if (!text || std::strcmp(text, "hecke") == 0) return hsk::Crossing::hecke;
  if (std::strcmp(text, "ribbon") == 0) return hsk::Crossing::ribbon;
  throw hsk::UsageError(std::string("unknown crossing '") + text + "' (hecke|ribbon)");
}

Json scalar(const hsk::Scalar& s) { return hsk::to_json(s, true); }

void check_n(int n) {
  if (n < 0) throw hsk::UsageError("strand count must be non-negative");
  if (n > hsk::kMaxStrands) {
    throw hsk::LimitError("strand count " + std::to_string(n) + " above " +
                          std::to_string(hsk::kMaxStrands));
  }
}

}  // namespace

extern "C" {

const char* hsk_version(void) { return "0.1.0"; }

const char* hsk_last_error(void) { return last_error.c_str(); }

void hsk_string_free(char* s) { std::free(s); }

hsk_status hsk_context_new(int N, int K, const char* cache_dir, int gram_limit, hsk_context** out) {
  if (!out) return fail(HSK_USAGE_ERROR, "output pointer is null");
  *out = nullptr;
  try {
    auto c = std::make_unique<hsk_context>();
    c->params = hsk::Params(N, K);
    hsk::Context::Options opt;
    if (gram_limit > 0) opt.gram_limit = gram_limit;
    if (cache_dir && *cache_dir) opt.cache_dir = cache_dir;
    c->ctx = std::make_unique<hsk::Context>(c->params, opt);
    *out = c.release();
    last_error.clear();
    return HSK_OK;
  } catch (const hsk::UsageError& e) {
    return fail(HSK_USAGE_ERROR, e.what());
  } catch (const hsk::DomainError& e) {
    return fail(HSK_DOMAIN_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(HSK_INTERNAL_ERROR, e.what());
  }
}

void hsk_context_free(hsk_context* ctx) { delete ctx; }

hsk_status hsk_labels(hsk_context* c, char** out) {
  return guarded(c, out, [](hsk::Context& ctx) {
    Json j = Json::array();
    for (const auto& d : hsk::labels(ctx.params())) j.push_back(hsk::to_json(d));
    return j;
  });
}

hsk_status hsk_qint(hsk_context* c, int j, char** out) {
  return guarded(c, out, [j](hsk::Context& ctx) {
    if (j < 0) throw hsk::UsageError("qint needs j >= 0");
    return scalar(hsk::qint(ctx.params(), j));
  });
}

hsk_status hsk_dagger(hsk_context* c, const char* d, char** out) {
  return guarded(c, out, [d](hsk::Context& ctx) {
    return hsk::to_json(hsk::dagger(ctx.params(), diagram(d)));
  });
}

hsk_status hsk_branch(hsk_context* c, int n, const char* d, char** out) {
  return guarded(c, out, [n, d](hsk::Context& ctx) {
    if (n < 0) throw hsk::UsageError("n must be non-negative");
    Json j = Json::array();
    for (const auto& e : hsk::branch(ctx.params(), n, diagram(d))) j.push_back(hsk::to_json(e));
    return j;
  });
}

hsk_status hsk_paths(hsk_context* c, int n, const char* d, char** out) {
  return guarded(c, out, [n, d](hsk::Context& ctx) {
    if (n < 0) throw hsk::UsageError("n must be non-negative");
    return Json(hsk::path_count(ctx.params(), n, diagram(d)));
  });
}

hsk_status hsk_jw(hsk_context* c, int n, const char* kind, char** out) {
  return guarded(c, out, [n, kind](hsk::Context& ctx) {
    check_n(n);
    const std::string k = kind ? kind : "";
    hsk::JwKind jk;
    if (k == "f" || k == "sym") {
      jk = hsk::JwKind::f;
    } else if (k == "g" || k == "antisym") {
      jk = hsk::JwKind::g;
    } else {
      throw hsk::UsageError("unknown Jones-Wenzl kind '" + k + "' (f|sym|g|antisym)");
    }
    return hsk::to_json(hsk::jones_wenzl(ctx.params(), n, jk));
  });
}

hsk_status hsk_yidem(hsk_context* c, const char* d, char** out) {
  return guarded(c, out, [d](hsk::Context& ctx) {
    const hsk::YoungDiagram shape = diagram(d);
    check_n(shape.size());
    const hsk::YoungIdempotent y = hsk::young_idempotent(ctx.params(), shape);
    Json j;
    j["shape"] = hsk::to_json(y.shape);
    j["hook_product"] = scalar(y.hook_product);
    j["quasi"] = hsk::to_json(y.quasi);
    j["idem"] = y.idem ? hsk::to_json(*y.idem) : Json(nullptr);
    return j;
  });
}

hsk_status hsk_trace(hsk_context* c, const char* b, char** out) {
  return guarded(c, out, [b](hsk::Context& ctx) {
    return scalar(hsk::markov_trace(hsk::from_braid(ctx.params(), braid(b))));
  });
}

hsk_status hsk_closure(hsk_context* c, const char* b, const char* cr, char** out) {
  return guarded(c, out, [b, cr](hsk::Context& ctx) {
    return scalar(hsk::closure_invariant(ctx.params(), braid(b), crossing(cr)));
  });
}

hsk_status hsk_gram(hsk_context* c, int n, const char* form, int full, char** out) {
  return guarded(c, out, [n, form, full](hsk::Context& ctx) {
    const std::string f = form ? form : "bilinear";
    hsk::Form fm;
    if (f == "bilinear") {
      fm = hsk::Form::bilinear;
    } else if (f == "hermitian") {
      fm = hsk::Form::hermitian;
    } else {
      throw hsk::UsageError("unknown form '" + f + "' (bilinear|hermitian)");
    }
    if (n < 0) throw hsk::UsageError("n must be non-negative");
    const hsk::GramData g = hsk::gram(ctx.params(), n, fm, ctx.gram_limit());
    Json j;
    j["n"] = g.n;
    j["rank"] = g.rank;
    j["kernel_dim"] = g.kernel_basis.size();
    if (full) j["matrix"] = hsk::to_json(g.matrix);
    return j;
  });
}

hsk_status hsk_purify(hsk_context* c, int n, char** out) {
  return guarded(c, out, [n](hsk::Context& ctx) {
    if (n < 0) throw hsk::UsageError("n must be non-negative");
    if (n > ctx.gram_limit()) {
      throw hsk::LimitError("n=" + std::to_string(n) + " is above the Gram limit " +
                            std::to_string(ctx.gram_limit()));
    }
    const hsk::PurifiedDim d = ctx.purified_dim(n);
    Json j;
    j["n"] = n;
    j["dim"] = d.dim;
    j["radical_dim"] = d.radical_dim;
    return j;
  });
}

hsk_status hsk_blocks(hsk_context* c, int n, int full, char** out) {
  return guarded(c, out, [n, full](hsk::Context& ctx) {
    if (n < 0) throw hsk::UsageError("n must be non-negative");
    if (n > ctx.gram_limit()) {
      throw hsk::LimitError("n=" + std::to_string(n) + " is above the Gram limit " +
                            std::to_string(ctx.gram_limit()));
    }
    const hsk::BlockData& bd = ctx.blocks(n);
    Json j;
    j["N"] = ctx.params().N;
    j["K"] = ctx.params().K;
    j["n"] = n;
    Json blocks = Json::array();
    for (const auto& b : bd.blocks) {
      Json e;
      e["label"] = hsk::to_json(b.label);
      e["dim"] = b.dim;
      e["minimal_trace"] = scalar(b.minimal_trace);
      if (full) {
        e["z"] = hsk::to_json(b.z);
        e["minimal"] = hsk::to_json(b.minimal);
      }
      blocks.push_back(std::move(e));
    }
    j["blocks"] = std::move(blocks);
    return j;
  });
}

hsk_status hsk_fusion(hsk_context* c, const char* a, const char* b, const char* cc, char** out) {
  return guarded(c, out, [a, b, cc](hsk::Context& ctx) {
    if (!a && !b && !cc) {
      const hsk::FusionTable t = ctx.fusion_table();
      Json j;
      j["N"] = t.params.N;
      j["K"] = t.params.K;
      Json entries = Json::array();
      for (const auto& e : t.entries) {
        entries.push_back({{"a", hsk::to_json(e.a)},
                           {"b", hsk::to_json(e.b)},
                           {"c", hsk::to_json(e.c)},
                           {"n", e.n}});
      }
      j["entries"] = std::move(entries);
      return j;
    }
    if (!a || !b) throw hsk::UsageError("fusion needs both a and b, or neither");
    const hsk::YoungDiagram da = diagram(a), db = diagram(b);
    if (cc) return Json(ctx.fusion(da, db, diagram(cc)));
    Json j = Json::array();
    for (const auto& d : hsk::labels(ctx.params())) {
      const int m = ctx.fusion(da, db, d);
      if (m != 0) j.push_back({{"c", hsk::to_json(d)}, {"n", m}});
    }
    return j;
  });
}

hsk_status hsk_qdim(hsk_context* c, const char* d, char** out) {
  return guarded(c, out, [d](hsk::Context& ctx) { return scalar(ctx.qdim(diagram(d))); });
}

hsk_status hsk_twist(hsk_context* c, const char* d, int raw, char** out) {
  return guarded(c, out, [d, raw](hsk::Context& ctx) {
    const hsk::YoungDiagram l = diagram(d);
    return scalar(raw ? ctx.twist_raw(l) : ctx.twist(l));
  });
}

hsk_status hsk_smatrix(hsk_context* c, char** out) {
  return guarded(c, out, [](hsk::Context& ctx) {
    Json j;
    Json ls = Json::array();
    for (const auto& d : hsk::labels(ctx.params())) ls.push_back(hsk::to_json(d));
    j["labels"] = std::move(ls);
    j["matrix"] = hsk::to_json(ctx.s_matrix(), true);
    return j;
  });
}

hsk_status hsk_mfdim(hsk_context* c, int genus, const char* marks, char** out) {
  return guarded(c, out, [genus, marks](hsk::Context& ctx) {
    std::vector<hsk::YoungDiagram> ds;
    if (marks) {
      const Json j = parse(marks, "marks");
      if (!j.is_array()) throw hsk::UsageError("marks must be a JSON array of diagrams");
      for (const auto& e : j) ds.push_back(hsk::diagram_from_json(e));
    }
    if (genus < 0) throw hsk::UsageError("genus must be non-negative");
    return Json(ctx.mf_dim(genus, ds));
  });
}

hsk_status hsk_verify(hsk_context* c, int max_n, uint64_t seed, const char* sections, int timings,
                      char** out) {
  return guarded(c, out, [max_n, seed, sections, timings](hsk::Context& ctx) {
    hsk::VerifyOptions opt;
    opt.max_n = max_n;
    opt.seed = seed;
    if (sections) {
      const Json j = parse(sections, "sections");
      if (!j.is_array()) throw hsk::UsageError("sections must be a JSON array of names");
      for (const auto& s : j) opt.sections.insert(s.get<std::string>());
    }
    return hsk::to_json(hsk::verify(ctx, opt), timings != 0);
  });
}

}  // extern "C"
