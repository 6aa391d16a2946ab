#include "hsk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "hsk/error.hpp"

namespace hsk {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "fail";
}

const std::vector<std::string>& verify_sections() {
  static const std::vector<std::string> names = {
      "scalar", "diagrams", "convention", "young",  "orthogonality", "markov",
      "radical", "blocks",  "fusion",     "modular", "mf",           "skein"};
  return names;
}

bool VerifyReport::passed() const { return count(CheckStatus::fail) == 0; }

int VerifyReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [&](const CheckResult& c) { return c.status == s; }));
}

namespace {

struct Outcome {
  CheckStatus status = CheckStatus::pass;
  std::string details;
};

Outcome pass(std::string d = {}) { return {CheckStatus::pass, std::move(d)}; }
Outcome fail(std::string d) { return {CheckStatus::fail, std::move(d)}; }
Outcome skip(std::string d) { return {CheckStatus::skip, std::move(d)}; }

// Collects failures of one check; the first few messages are kept.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) messages_.push_back(what());
  }
  int total() const { return total_; }
  Outcome outcome(const std::string& summary) const {
    if (failed_ == 0) return pass(summary + " (" + std::to_string(total_) + " cases)");
    std::string d = std::to_string(failed_) + " of " + std::to_string(total_) + " failed";
    for (const auto& m : messages_) d += "; " + m;
    return fail(d);
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> messages_;
};

std::string str(const YoungDiagram& d) { return d.to_string(); }

bool close(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

YoungDiagram box() { return YoungDiagram({1}); }

class Runner {
 public:
  Runner(Context& ctx, const VerifyOptions& opt, std::vector<CheckResult>& out)
      : ctx_(ctx), p_(ctx.params()), opt_(opt), out_(out) {}

  void run_section(const std::string& name, std::size_t index) {
    section_ = name;
    rng_.seed(opt_.seed * 1000003ULL + index);
    if (name == "scalar") scalar();
    if (name == "diagrams") diagrams();
    if (name == "convention") convention();
    if (name == "young") young();
    if (name == "orthogonality") orthogonality();
    if (name == "markov") markov();
    if (name == "radical") radical();
    if (name == "blocks") blocks();
    if (name == "fusion") fusion();
    if (name == "modular") modular();
    if (name == "mf") mf();
    if (name == "skein") skein();
  }

 private:
  template <class F>
  void check(const std::string& name, F&& body) {
    CheckResult r;
    r.section = section_;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      r.status = o.status;
      r.details = std::move(o.details);
    } catch (const LimitError& e) {
      r.status = CheckStatus::skip;
      r.details = e.what();
    } catch (const std::exception& e) {
      r.status = CheckStatus::fail;
      r.details = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out_.push_back(std::move(r));
  }

  int cap(int limit) const { return std::min(opt_.max_n, limit); }

  Scalar random_scalar() {
    std::uniform_int_distribution<long> power(0, p_.m() - 1);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    Scalar s = Scalar::zero(field_of(p_));
    for (int t = 0; t < 4; ++t) s += zeta(p_, power(rng_)).times_integer(coeff(rng_));
    return s * integer(p_, den(rng_)).inverse();
  }

  HeckeElement random_hecke(int n) { return random_element(p_, n, rng_, 6); }

  BraidWord random_braid(int n, int max_len = 6) {
    BraidWord b{n, {}};
    if (n < 2) return b;
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    const int l = len(rng_);
    for (int k = 0; k < l; ++k) b.word.push_back(sign(rng_) ? gen(rng_) : -gen(rng_));
    return b;
  }

  HeckeElement sigma(int n, int i) { return from_braid(p_, {n, {i}}); }

  // ---------------------------------------------------------------- scalar
  void scalar() {
    check("embedding is multiplicative", [&] {
      Tally t;
      for (int k = 0; k < opt_.samples; ++k) {
        const Scalar x = random_scalar(), y = random_scalar();
        t.expect(close((x * y).embed(), x.embed() * y.embed(), 1e-10), [] { return "product"; });
        t.expect(close((x + y).embed(), x.embed() + y.embed(), 1e-10), [] { return "sum"; });
      }
      return t.outcome("random pairs");
    });
    check("conjugation is an involutive ring automorphism", [&] {
      Tally t;
      for (int k = 0; k < opt_.samples; ++k) {
        const Scalar x = random_scalar(), y = random_scalar();
        t.expect(x.conjugate().conjugate() == x, [] { return "involution"; });
        t.expect((x * y).conjugate() == x.conjugate() * y.conjugate(), [] { return "product"; });
        t.expect((x + y).conjugate() == x.conjugate() + y.conjugate(), [] { return "sum"; });
        t.expect(close(x.conjugate().embed(), std::conj(x.embed()), 1e-10),
                 [] { return "embedding"; });
      }
      for (int j = 0; j <= p_.N + p_.K; ++j) {
        t.expect(qint(p_, j).conjugate() == qint(p_, j),
                 [&] { return "[" + std::to_string(j) + "] not real"; });
      }
      return t.outcome("random scalars and quantum integers");
    });
    check("quantum integers vanish exactly at N+K", [&] {
      Tally t;
      for (int j = 1; j < p_.N + p_.K; ++j) {
        t.expect(!qint(p_, j).is_zero(), [&] { return "[" + std::to_string(j) + "] = 0"; });
      }
      t.expect(qint(p_, p_.N + p_.K).is_zero(), [] { return "[N+K] != 0"; });
      return t.outcome("j = 1 .. N+K");
    });
    check("inverse is exact", [&] {
      Tally t;
      const Scalar one = integer(p_, 1);
      for (int k = 0; k < opt_.samples; ++k) {
        const Scalar x = random_scalar();
        if (x.is_zero()) continue;
        t.expect(x * x.inverse() == one, [] { return "x / x != 1"; });
      }
      return t.outcome("random nonzero scalars");
    });
  }

  // -------------------------------------------------------------- diagrams
  void diagrams() {
    const auto ls = labels(p_);
    check("transpose is an involution", [&] {
      Tally t;
      for (int n = 0; n <= 8; ++n) {
        for (const auto& d : partitions(n)) {
          t.expect(d.transpose().transpose() == d && d.transpose().size() == n,
                   [&] { return str(d); });
        }
      }
      return t.outcome("partitions up to 8 boxes");
    });
    check("label count is binomial(N-1+K, K)", [&] {
      long b = 1;
      for (int i = 1; i <= p_.K; ++i) b = b * (p_.N - 1 + i) / i;
      if (static_cast<long>(ls.size()) != b) {
        return fail(std::to_string(ls.size()) + " labels, expected " + std::to_string(b));
      }
      return pass(std::to_string(b) + " labels");
    });
    check("dagger is an involution on the labels", [&] {
      Tally t;
      t.expect(dagger(p_, YoungDiagram()) == YoungDiagram(), [] { return "dagger of empty"; });
      for (const auto& d : ls) {
        const YoungDiagram e = dagger(p_, d);
        t.expect(in_gamma(p_, e) && dagger(p_, e) == d, [&] { return str(d); });
      }
      return t.outcome("all labels");
    });
    check("weights of labels fill the level-K alcove", [&] {
      std::set<std::vector<int>> image, alcove;
      for (const auto& d : ls) {
        const Weight w = weight(p_, d);
        if (!w.in_alcove || w.level != d.first_row()) {
          return fail("bad weight for " + str(d));
        }
        image.insert(w.coefficients);
      }
      std::vector<int> cur(p_.N - 1, 0);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == p_.N - 1) {
          alcove.insert(cur);
          return;
        }
        for (int c = 0; c <= left; ++c) {
          cur[i] = c;
          rec(i + 1, left - c);
        }
        cur[i] = 0;
      };
      rec(0, p_.K);
      if (image != alcove || image.size() != ls.size()) {
        return fail(std::to_string(image.size()) + " weights vs alcove of " +
                    std::to_string(alcove.size()));
      }
      return pass(std::to_string(alcove.size()) + " weights");
    });
    check("padding is a bijection onto n-box diagrams of bounded spread", [&] {
      Tally t;
      for (int n = 0; n <= 8; ++n) {
        std::set<YoungDiagram> padded, target;
        for (const auto& d : gamma_n(p_, n)) padded.insert(pad(p_, d, n));
        for (const auto& d : partitions(n)) {
          if (d.num_rows() <= p_.N && d.row(1) - d.row(p_.N) <= p_.K) target.insert(d);
        }
        t.expect(padded == target && padded.size() == gamma_n(p_, n).size(),
                 [&] { return "n=" + std::to_string(n); });
      }
      return t.outcome("n = 0 .. 8");
    });
    check("path counts satisfy the branching recursion", [&] {
      Tally t;
      for (int n = 1; n <= opt_.max_n; ++n) {
        for (const auto& d : gamma_n(p_, n)) {
          std::uint64_t sum = 0;
          for (const auto& e : branch(p_, n, d)) {
            t.expect(in_gamma_n(p_, n - 1, e), [&] { return str(e) + " not in Gamma^(n-1)"; });
            sum += path_count(p_, n - 1, e);
          }
          t.expect(sum == path_count(p_, n, d),
                   [&] { return str(d) + " at n=" + std::to_string(n); });
        }
      }
      return t.outcome("n <= " + std::to_string(opt_.max_n));
    });
    check("squared path counts sum to at most n!", [&] {
      Tally t;
      std::uint64_t fact = 1;
      for (int n = 1; n <= opt_.max_n; ++n) {
        fact *= static_cast<std::uint64_t>(n);
        std::uint64_t s = 0;
        for (const auto& d : gamma_n(p_, n)) s += path_count(p_, n, d) * path_count(p_, n, d);
        t.expect(s <= fact, [&] { return "n=" + std::to_string(n); });
      }
      return t.outcome("n <= " + std::to_string(opt_.max_n));
    });
  }

  // ------------------------------------------------------------ convention
  void convention() {
    const int top = cap(5);
    const Scalar q = q_power(p_, 1);
    const Scalar one = integer(p_, 1);
    check("printed e_i is idempotent and equals (q - T)/(q+1)", [&] {
      Tally t;
      for (int n = 2; n <= top; ++n) {
        for (int i = 1; i < n; ++i) {
          const HeckeElement e = e_idempotent(p_, n, i);
          const HeckeElement printed =
              (HeckeElement::identity(p_, n) * q + sigma(n, i) * zeta(p_, p_.N - 1)) *
              (q + one).inverse();
          t.expect(e * e == e, [&] { return "e_" + std::to_string(i) + "^2"; });
          t.expect(e == printed, [&] { return "formula for e_" + std::to_string(i); });
        }
      }
      return t.outcome("n <= " + std::to_string(top));
    });
    check("sigma_i is absorbed by f_n and g_n with the fixed eigenvalues", [&] {
      Tally t;
      const Scalar fval = zeta(p_, 1 - p_.N);
      const Scalar gval = -zeta(p_, 1 + p_.N);
      for (int n = 2; n <= top; ++n) {
        const HeckeElement f = jones_wenzl_unnormalized(p_, n, JwKind::f);
        const HeckeElement g = jones_wenzl_unnormalized(p_, n, JwKind::g);
        for (int i = 1; i < n; ++i) {
          const HeckeElement s = sigma(n, i);
          t.expect(s * f == f * fval && f * s == f * fval,
                   [&] { return "f_" + std::to_string(n) + " i=" + std::to_string(i); });
          t.expect(s * g == g * gval && g * s == g * gval,
                   [&] { return "g_" + std::to_string(n) + " i=" + std::to_string(i); });
        }
      }
      return t.outcome("n <= " + std::to_string(top));
    });
    check("e_i f_n = f_n e_i = f_n and e_i g_n = 0", [&] {
      Tally t;
      for (int n = 2; n <= top; ++n) {
        const HeckeElement f = jones_wenzl_unnormalized(p_, n, JwKind::f);
        const HeckeElement g = jones_wenzl_unnormalized(p_, n, JwKind::g);
        for (int i = 1; i < n; ++i) {
          const HeckeElement e = e_idempotent(p_, n, i);
          t.expect(e * f == f && f * e == f, [&] { return "f_" + std::to_string(n); });
          t.expect((e * g).is_zero() && (g * e).is_zero(), [&] { return "g_" + std::to_string(n); });
        }
      }
      return t.outcome("n <= " + std::to_string(top));
    });
    check("normalized Jones-Wenzl projectors are idempotent", [&] {
      Tally t;
      int undefined = 0;
      for (int n = 1; n <= top; ++n) {
        if (qfact(p_, n).is_zero()) {
          ++undefined;
          continue;
        }
        for (JwKind k : {JwKind::f, JwKind::g}) {
          const HeckeElement x = jones_wenzl(p_, n, k);
          t.expect(x * x == x, [&] { return "n=" + std::to_string(n); });
        }
      }
      return t.outcome("n <= " + std::to_string(top) + ", " + std::to_string(undefined) +
                       " sizes with vanishing [n]!");
    });
    check("braid relations", [&] {
      Tally t;
      for (int n = 2; n <= cap(6); ++n) {
        for (int i = 1; i < n; ++i) {
          t.expect(from_braid(p_, {n, {i, -i}}) == HeckeElement::identity(p_, n),
                   [&] { return "invertibility"; });
          if (i + 1 < n) {
            t.expect(from_braid(p_, {n, {i, i + 1, i}}) == from_braid(p_, {n, {i + 1, i, i + 1}}),
                     [&] { return "cubic, n=" + std::to_string(n); });
          }
          for (int j = i + 2; j < n; ++j) {
            t.expect(from_braid(p_, {n, {i, j}}) == from_braid(p_, {n, {j, i}}),
                     [&] { return "far commutation"; });
            t.expect(e_idempotent(p_, n, i) * e_idempotent(p_, n, j) ==
                         e_idempotent(p_, n, j) * e_idempotent(p_, n, i),
                     [&] { return "e_i e_j"; });
          }
        }
      }
      return t.outcome("n <= " + std::to_string(cap(6)));
    });
    check("skein relation q^{-1/2N} s - q^{1/2N} s^-1 = (q^{-1/2} - q^{1/2}) Id", [&] {
      const HeckeElement lhs = from_braid(p_, {2, {1}}) * zeta(p_, -1) -
                               from_braid(p_, {2, {-1}}) * zeta(p_, 1);
      const HeckeElement rhs = HeckeElement::identity(p_, 2) * (zeta(p_, -p_.N) - zeta(p_, p_.N));
      return lhs == rhs ? pass() : fail("relation does not hold");
    });
    check("star is a conjugate-linear anti-automorphism", [&] {
      Tally t;
      for (int n = 2; n <= top; ++n) {
        for (int k = 0; k < opt_.samples; ++k) {
          const HeckeElement x = random_hecke(n), y = random_hecke(n);
          const Scalar c = random_scalar();
          t.expect(star(x * y) == star(y) * star(x), [] { return "(xy)* != y* x*"; });
          t.expect(star(star(x)) == x, [] { return "x** != x"; });
          t.expect(star(x * c) == star(x) * c.conjugate(), [] { return "conjugate linearity"; });
        }
        for (int i = 1; i < n; ++i) {
          const HeckeElement e = e_idempotent(p_, n, i);
          t.expect(star(e) == e, [] { return "e_i* != e_i"; });
        }
      }
      const auto& table = PermutationTable::get(2);
      const HeckeElement ts = HeckeElement::basis(p_, 2, table.index_of({2, 1}));
      const Scalar qi = q.inverse();
      t.expect(star(ts) == ts * qi + HeckeElement::identity(p_, 2) * (qi - one),
               [] { return "T_s* formula"; });
      return t.outcome("n <= " + std::to_string(top));
    });
    if (opt_.max_n >= 4) {
      check("tensor embedding shifts generators", [&] {
        const HeckeElement s = sigma(2, 1);
        return tensor_embed(s, s) == from_braid(p_, {4, {1, 3}}) ? pass()
                                                                 : fail("s1 (x) s1 != s1 s3");
      });
    }
  }

  // ----------------------------------------------------------------- young
  void young() {
    const int top = cap(5);
    check("quasi-idempotent law y~^2 = (prod of quantum hooks) y~", [&] {
      Tally t;
      int outside = 0;
      for (int n = 1; n <= top; ++n) {
        for (const auto& d : partitions(n)) {
          if (!in_c_nk(p_, d)) {
            ++outside;
            continue;
          }
          const YoungIdempotent y = young_idempotent(p_, d);
          t.expect(!y.quasi.is_zero() && y.quasi * y.quasi == y.quasi * y.hook_product,
                   [&] { return str(d); });
        }
      }
      return t.outcome("|lambda| <= " + std::to_string(top) + ", " + std::to_string(outside) +
                       " diagrams outside C_NK");
    });
    check("one-row and one-column symmetrizers are Jones-Wenzl projectors", [&] {
      Tally t;
      for (int n = 1; n <= top; ++n) {
        if (qfact(p_, n).is_zero()) continue;
        const YoungDiagram row({n});
        const YoungDiagram col(std::vector<int>(n, 1));
        const YoungIdempotent yr = young_idempotent(p_, row);
        const YoungIdempotent yc = young_idempotent(p_, col);
        t.expect(yr.idem && *yr.idem == jones_wenzl(p_, n, JwKind::g), [&] { return str(row); });
        t.expect(yc.idem && *yc.idem == jones_wenzl(p_, n, JwKind::f), [&] { return str(col); });
      }
      return t.outcome("n <= " + std::to_string(top));
    });
  }

  // --------------------------------------------------------- orthogonality
  void orthogonality() {
    const int top = cap(4);
    check("y_lambda x y_mu = 0 and y_lambda x y_lambda is a multiple of y_lambda", [&] {
      Tally t;
      for (int n = 1; n <= top; ++n) {
        std::vector<YoungIdempotent> ys;
        for (const auto& d : partitions(n)) {
          if (in_c_nk(p_, d)) ys.push_back(young_idempotent(p_, d));
        }
        for (int k = 0; k < opt_.samples; ++k) {
          const HeckeElement x = random_hecke(n);
          for (const auto& a : ys) {
            const HeckeElement ax = *a.idem * x;
            for (const auto& b : ys) {
              const HeckeElement axb = ax * *b.idem;
              if (a.shape == b.shape) {
                t.expect(axb.is_zero() || axb.ratio_to(*a.idem).has_value(),
                         [&] { return "y x y for " + str(a.shape); });
              } else {
                t.expect(axb.is_zero(), [&] { return str(a.shape) + " vs " + str(b.shape); });
              }
            }
          }
        }
      }
      return t.outcome("|lambda| <= " + std::to_string(top));
    });
  }

  // ---------------------------------------------------------------- markov
  void markov() {
    const int top = cap(5);
    const Scalar et = eta(p_);
    const Scalar one = integer(p_, 1);
    check("Tr(1) = 1 and Tr(e_i) = eta", [&] {
      Tally t;
      for (int n = 1; n <= top; ++n) {
        t.expect(markov_trace(HeckeElement::identity(p_, n)) == one, [&] { return "Tr(1)"; });
        for (int i = 1; i < n; ++i) {
          t.expect(markov_trace(e_idempotent(p_, n, i)) == et,
                   [&] { return "Tr(e_" + std::to_string(i) + ")"; });
        }
      }
      return t.outcome("n <= " + std::to_string(top));
    });
    check("Tr(xy) = Tr(yx)", [&] {
      Tally t;
      for (int n = 2; n <= top; ++n) {
        for (int k = 0; k < opt_.samples; ++k) {
          const HeckeElement x = random_hecke(n), y = random_hecke(n);
          t.expect(markov_trace(x * y) == markov_trace(y * x),
                   [&] { return "n=" + std::to_string(n); });
        }
      }
      return t.outcome("random pairs, n <= " + std::to_string(top));
    });
    check("Markov property Tr(x e_{n-1}) = eta Tr(x)", [&] {
      Tally t;
      const HeckeElement strand = HeckeElement::identity(p_, 1);
      for (int n = 2; n <= top; ++n) {
        const HeckeElement e = e_idempotent(p_, n, n - 1);
        for (int k = 0; k < opt_.samples; ++k) {
          const HeckeElement x = random_hecke(n - 1), y = random_hecke(n - 1);
          const HeckeElement ix = tensor_embed(x, strand), iy = tensor_embed(y, strand);
          t.expect(markov_trace(ix * e) == et * markov_trace(x),
                   [&] { return "one-sided, n=" + std::to_string(n); });
          t.expect(markov_trace(ix * e * iy) == et * markov_trace(x * y),
                   [&] { return "two-sided, n=" + std::to_string(n); });
        }
      }
      return t.outcome("random elements, n <= " + std::to_string(top));
    });
    check("Tr(x*) is the conjugate of Tr(x) and Tr(x* x) >= 0", [&] {
      Tally t;
      for (int n = 1; n <= top; ++n) {
        for (int k = 0; k < opt_.samples; ++k) {
          const HeckeElement x = random_hecke(n);
          t.expect(markov_trace(star(x)) == markov_trace(x).conjugate(),
                   [&] { return "star, n=" + std::to_string(n); });
          const Scalar h = markov_trace(star(x) * x);
          t.expect(h == h.conjugate() && h.embed().real() >= -1e-8,
                   [&] { return "positivity, n=" + std::to_string(n); });
        }
      }
      return t.outcome("random elements, n <= " + std::to_string(top));
    });
  }

  // --------------------------------------------------------------- radical
  void radical() {
    const int top = cap(5);
    for (int n = 1; n <= top; ++n) {
      const std::string at = " n=" + std::to_string(n);
      std::uint64_t expected = 0;
      for (const auto& d : gamma_n(p_, n)) expected += path_count(p_, n, d) * path_count(p_, n, d);
      GramData bil, her;
      check("gram rank" + at + " equals " + std::to_string(expected), [&] {
        bil = gram(p_, n, Form::bilinear, ctx_.gram_limit());
        her = gram(p_, n, Form::hermitian, ctx_.gram_limit());
        const int pd = ctx_.purified_dim(n).dim;
        std::ostringstream os;
        os << "bilinear " << bil.rank << ", hermitian " << her.rank << ", purified " << pd;
        const bool ok = bil.rank == static_cast<int>(expected) && her.rank == bil.rank && pd == bil.rank &&
                        bil.rank + static_cast<int>(bil.kernel_basis.size()) == bil.matrix.rows();
        return ok ? pass(os.str()) : fail(os.str());
      });
      check("bilinear and hermitian radicals coincide" + at, [&] {
        if (bil.matrix.rows() == 0) return skip("gram unavailable");
        Tally t;
        t.expect(bil.kernel_basis.size() == her.kernel_basis.size(), [] { return "dimensions"; });
        for (const auto& x : bil.kernel_basis) {
          t.expect(ctx_.in_radical(x), [] { return "bilinear kernel vector"; });
        }
        for (const auto& x : her.kernel_basis) {
          t.expect(ctx_.in_radical(x), [] { return "hermitian kernel vector"; });
          // (x, T_v) = sum_u x_u H[u][v]
          bool zero = true;
          for (int v = 0; v < her.matrix.cols() && zero; ++v) {
            Scalar acc = Scalar::zero(field_of(p_));
            for (const auto& [u, c] : x.terms()) acc += c * her.matrix.at(static_cast<int>(u), v);
            zero = acc.is_zero();
          }
          t.expect(zero, [] { return "hermitian pairing"; });
        }
        return t.outcome(std::to_string(bil.kernel_basis.size()) + " kernel vectors");
      });
      check("hermitian Gram is positive semidefinite" + at, [&] {
        if (her.matrix.rows() == 0) return skip("gram unavailable");
        const Eigen::MatrixXcd h = her.matrix.embed();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
        const double lowest = solver.eigenvalues().minCoeff();
        const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
        std::ostringstream os;
        os << "min eigenvalue " << lowest;
        return lowest >= -1e-8 && asym <= 1e-9 ? pass(os.str()) : fail(os.str());
      });
      check("radical is the null cone of Tr(x* x)" + at, [&] {
        if (her.matrix.rows() == 0) return skip("gram unavailable");
        Tally t;
        std::vector<HeckeElement> cone;
        for (const auto& x : her.kernel_basis) cone.push_back(x);
        // Random combinations of kernel vectors stay in the cone.
        std::uniform_int_distribution<int> c(-3, 3);
        for (int k = 0; k < opt_.samples && !her.kernel_basis.empty(); ++k) {
          HeckeElement x(p_, n);
          for (const auto& v : her.kernel_basis) x += v * integer(p_, c(rng_));
          cone.push_back(x);
        }
        for (const auto& x : cone) {
          t.expect(std::abs(markov_trace(star(x) * x).embed()) <= 1e-8, [] { return "radical"; });
        }
        for (int k = 0; k < opt_.samples; ++k) {
          const HeckeElement x = random_hecke(n);
          const bool rad = ctx_.in_radical(x);
          const double v = markov_trace(star(x) * x).embed().real();
          t.expect(rad == (v <= 1e-8), [] { return "random element"; });
        }
        return t.outcome("kernel combinations and random elements");
      });
    }
  }

  // ---------------------------------------------------------------- blocks
  void blocks() {
    const int top = cap(5);
    for (int n = 1; n <= top; ++n) {
      const std::string at = " n=" + std::to_string(n);
      check("block count and dimensions" + at, [&] {
        const BlockData& bd = ctx_.blocks(n);
        const auto expected = gamma_n(p_, n);
        Tally t;
        t.expect(bd.blocks.size() == expected.size(), [] { return "block count"; });
        int sum = 0;
        for (std::size_t i = 0; i < bd.blocks.size() && i < expected.size(); ++i) {
          const Block& b = bd.blocks[i];
          t.expect(b.label == expected[i], [&] { return "label order"; });
          t.expect(static_cast<std::uint64_t>(b.dim) == path_count(p_, n, b.label),
                   [&] { return "dim of " + str(b.label); });
          sum += b.dim * b.dim;
        }
        t.expect(sum == ctx_.purified_dim(n).dim, [] { return "sum of squares"; });
        return t.outcome(std::to_string(bd.blocks.size()) + " blocks");
      });
      check("central idempotents sum to 1 modulo the radical" + at, [&] {
        const BlockData& bd = ctx_.blocks(n);
        HeckeElement sum(p_, n);
        for (const auto& b : bd.blocks) sum += b.z;
        return ctx_.equal_mod_radical(sum, HeckeElement::identity(p_, n)) ? pass()
                                                                          : fail("sum differs");
      });
      check("central idempotents are orthogonal and central" + at, [&] {
        const BlockData& bd = ctx_.blocks(n);
        Tally t;
        for (const auto& a : bd.blocks) {
          for (const auto& b : bd.blocks) {
            const HeckeElement target = a.label == b.label ? a.z : HeckeElement(p_, n);
            t.expect(ctx_.equal_mod_radical(a.z * b.z, target),
                     [&] { return str(a.label) + " " + str(b.label); });
          }
          for (int i = 1; i < n; ++i) {
            t.expect(ctx_.equal_mod_radical(a.z.left_generator(i), a.z.right_generator(i)),
                     [&] { return "centrality of " + str(a.label); });
          }
          t.expect(ctx_.equal_mod_radical(a.z * a.minimal, a.minimal),
                   [&] { return "support of " + str(a.label); });
        }
        return t.outcome("all pairs");
      });
      if (n >= 2) {
        check("restriction reproduces the branching sets" + at, [&] {
          const BlockData& bd = ctx_.blocks(n);
          Tally t;
          for (const auto& b : bd.blocks) {
            const auto br = branch(p_, n, b.label);
            for (const auto& l : gamma_n(p_, n - 1)) {
              const int m = ctx_.restriction_multiplicity(n, b.label, l);
              const bool in = std::find(br.begin(), br.end(), l) != br.end();
              t.expect(m == (in ? 1 : 0), [&] { return str(b.label) + " -> " + str(l); });
            }
          }
          return t.outcome("all label pairs");
        });
      }
      if (n <= 4) {
        check("minimal idempotents have one-dimensional compressions" + at, [&] {
          const BlockData& bd = ctx_.blocks(n);
          const GramAnalysis& g = ctx_.analysis(n);
          Tally t;
          for (const auto& b : bd.blocks) {
            t.expect(b.minimal * b.minimal == b.minimal, [&] { return "idempotency"; });
            std::vector<HeckeElement> span;
            for (int w : g.pivots) {
              span.push_back(b.minimal.right_basis(static_cast<PermIndex>(w)) * b.minimal);
            }
            t.expect(ctx_.form_rank(span) == 1, [&] { return "compression of " + str(b.label); });
          }
          return t.outcome("all blocks");
        });
      }
    }
  }

  // ---------------------------------------------------------------- fusion
  void fusion() {
    const auto ls = labels(p_);
    const YoungDiagram empty;
    check("the empty label is the unit", [&] {
      Tally t;
      for (const auto& a : ls) {
        for (const auto& c : ls) {
          const int d = a == c ? 1 : 0;
          t.expect(ctx_.fusion_direct(a, empty, c) == d && ctx_.fusion_direct(empty, a, c) == d,
                   [&] { return str(a) + " -> " + str(c); });
        }
      }
      return t.outcome("all labels");
    });
    check("fusion is symmetric", [&] {
      Tally t;
      for (const auto& a : ls) {
        for (const auto& b : ls) {
          if (b < a || a.size() + b.size() > opt_.max_n) continue;
          for (const auto& c : ls) {
            t.expect(ctx_.fusion_direct(a, b, c) == ctx_.fusion_direct(b, a, c),
                     [&] { return str(a) + " x " + str(b) + " -> " + str(c); });
          }
        }
      }
      return t.outcome("|a| + |b| <= " + std::to_string(opt_.max_n));
    });
    check("fusion with a box follows reversed branching", [&] {
      Tally t;
      for (const auto& a : ls) {
        const int n = a.size() + 1;
        if (n > opt_.max_n) continue;
        for (const auto& c : ls) {
          bool in = false;
          if (in_gamma_n(p_, n, c)) {
            const auto br = branch(p_, n, c);
            in = std::find(br.begin(), br.end(), a) != br.end();
          }
          t.expect(ctx_.fusion_direct(a, box(), c) == (in ? 1 : 0),
                   [&] { return str(a) + " x (1) -> " + str(c); });
        }
      }
      return t.outcome("|a| < " + std::to_string(opt_.max_n));
    });
    check("Frobenius reciprocity", [&] {
      Tally t;
      for (const auto& a : ls) {
        for (const auto& b : ls) {
          for (const auto& c : ls) {
            const YoungDiagram ad = dagger(p_, a), bd = dagger(p_, b);
            if (a.size() + b.size() > opt_.max_n || ad.size() + c.size() > opt_.max_n ||
                c.size() + bd.size() > opt_.max_n) {
              continue;
            }
            const int v = ctx_.fusion_direct(a, b, c);
            t.expect(v == ctx_.fusion_direct(ad, c, b) && v == ctx_.fusion_direct(c, bd, a),
                     [&] { return str(a) + " x " + str(b) + " -> " + str(c); });
          }
        }
      }
      return t.outcome("triples within " + std::to_string(opt_.max_n) + " strands");
    });
    check("fusion table pairs each label with its dagger", [&] {
      const FusionTable table = ctx_.fusion_table();
      Tally t;
      for (const auto& e : table.entries) {
        t.expect(e.n >= 0, [] { return "negative coefficient"; });
        if (e.c.empty()) {
          t.expect(e.n == (e.b == dagger(p_, e.a) ? 1 : 0),
                   [&] { return str(e.a) + " x " + str(e.b) + " -> ()"; });
        }
      }
      // Associativity of the fusion ring.
      for (const auto& a : ls) {
        for (const auto& b : ls) {
          for (const auto& c : ls) {
            for (const auto& d : ls) {
              long lhs = 0, rhs = 0;
              for (const auto& x : ls) {
                lhs += static_cast<long>(ctx_.fusion(a, b, x)) * ctx_.fusion(x, c, d);
                rhs += static_cast<long>(ctx_.fusion(b, c, x)) * ctx_.fusion(a, x, d);
              }
              t.expect(lhs == rhs, [&] { return "associativity"; });
            }
          }
        }
      }
      return t.outcome(std::to_string(table.entries.size()) + " entries");
    });
  }

  // --------------------------------------------------------------- modular
  void modular() {
    const auto ls = labels(p_);
    int widest = 0;
    for (const auto& d : ls) widest = std::max(widest, d.size());
    const Scalar loop = qint(p_, p_.N);
    check("quantum dimensions of the unit, the box and the full column", [&] {
      Tally t;
      t.expect(ctx_.qdim(YoungDiagram()) == integer(p_, 1), [] { return "qdim(())"; });
      t.expect(ctx_.qdim(box()) == loop, [] { return "qdim((1))"; });
      Scalar col = markov_trace(jones_wenzl(p_, p_.N, JwKind::f));
      for (int i = 0; i < p_.N; ++i) col *= loop;
      t.expect(col == integer(p_, 1), [] { return "full column"; });
      return t.outcome("unit, box, column");
    });
    check("qdim and twist are dagger invariant", [&] {
      Tally t;
      for (const auto& d : ls) {
        const YoungDiagram e = dagger(p_, d);
        t.expect(ctx_.qdim(d) == ctx_.qdim(e), [&] { return "qdim " + str(d); });
        t.expect(ctx_.twist(d) == ctx_.twist(e), [&] { return "twist " + str(d); });
      }
      return t.outcome("all labels");
    });
    check("full twist acts on y_lambda by the content eigenvalue", [&] {
      Tally t;
      for (const auto& d : ls) {
        t.expect(ctx_.twist_raw(d) == full_twist_eigenvalue(p_, d), [&] { return str(d); });
        t.expect(ctx_.twist(d) == ribbon_twist_from_contents(p_, d),
                 [&] { return "ribbon " + str(d); });
      }
      t.expect(ctx_.twist(box()) == printed_curl(p_), [] { return "box twist"; });
      t.expect(ctx_.twist(YoungDiagram()) == integer(p_, 1), [] { return "unit twist"; });
      return t.outcome("all labels");
    });
    if (2 * widest > kMaxStrands) {
      check("S-matrix", [&] {
        return skip("Hopf links need " + std::to_string(2 * widest) + " strands");
      });
      return;
    }
    Matrix s;
    check("S-matrix is symmetric with first row the quantum dimensions", [&] {
      s = ctx_.s_matrix();
      Tally t;
      const int size = static_cast<int>(ls.size());
      for (int i = 0; i < size; ++i) {
        t.expect(s.at(0, i) == ctx_.qdim(ls[i]), [&] { return "row () at " + str(ls[i]); });
        for (int j = 0; j < size; ++j) {
          t.expect(s.at(i, j) == s.at(j, i), [&] { return str(ls[i]) + " " + str(ls[j]); });
        }
      }
      return t.outcome(std::to_string(size) + "x" + std::to_string(size));
    });
    check("S-matrix is invertible", [&] {
      if (s.rows() == 0) return skip("S-matrix unavailable");
      const Scalar det = determinant(s);
      std::ostringstream os;
      os << "det ~ " << det.embed();
      return det.is_zero() ? fail(os.str()) : pass(os.str());
    });
    check("balancing: S = sum_nu N theta_nu qdim(nu) / (theta_a theta_b)", [&] {
      if (s.rows() == 0) return skip("S-matrix unavailable");
      Tally t;
      for (std::size_t i = 0; i < ls.size(); ++i) {
        for (std::size_t j = 0; j < ls.size(); ++j) {
          Scalar acc = Scalar::zero(field_of(p_));
          for (const auto& nu : ls) {
            const int m = ctx_.fusion(ls[i], ls[j], nu);
            if (m != 0) acc += ctx_.qdim(nu) * ctx_.twist(nu).times_integer(m);
          }
          t.expect(acc == s.at(static_cast<int>(i), static_cast<int>(j)) * ctx_.twist(ls[i]) *
                              ctx_.twist(ls[j]),
                   [&] { return str(ls[i]) + " " + str(ls[j]); });
        }
      }
      return t.outcome("all pairs");
    });
  }

  // -------------------------------------------------------------------- mf
  void mf() {
    const auto ls = labels(p_);
    check("sphere with no marks has dimension 1", [&] {
      return ctx_.mf_dim(0, {}) == 1 ? pass() : fail("dim != 1");
    });
    check("two-point spheres pair a label with its dagger", [&] {
      Tally t;
      for (const auto& a : ls) {
        for (const auto& b : ls) {
          t.expect(ctx_.mf_dim(0, {a, b}) == (b == dagger(p_, a) ? 1 : 0),
                   [&] { return str(a) + " " + str(b); });
        }
      }
      return t.outcome("all pairs");
    });
    check("three-point spheres are fusion coefficients", [&] {
      Tally t;
      for (const auto& a : ls) {
        for (const auto& b : ls) {
          for (const auto& c : ls) {
            t.expect(ctx_.mf_dim(0, {a, b, c}) == ctx_.fusion(a, b, dagger(p_, c)),
                     [&] { return str(a) + " " + str(b) + " " + str(c); });
          }
        }
      }
      return t.outcome("all triples");
    });
    check("torus dimensions", [&] {
      Tally t;
      t.expect(ctx_.mf_dim(1, {}) == static_cast<long>(ls.size()), [] { return "unmarked torus"; });
      for (const auto& a : ls) {
        long expected = 0;
        for (const auto& m : ls) expected += ctx_.fusion(a, m, m);
        t.expect(ctx_.mf_dim(1, {a}) == expected, [&] { return "one mark " + str(a); });
      }
      return t.outcome("genus one");
    });
    check("sphere with n boxes counts paths back to the empty label", [&] {
      Tally t;
      for (int n = 0; n <= std::max(opt_.max_n, 4); ++n) {
        const long d = ctx_.mf_dim(0, std::vector<YoungDiagram>(n, box()));
        t.expect(d == static_cast<long>(path_count(p_, n, YoungDiagram())),
                 [&] { return "n=" + std::to_string(n); });
      }
      return t.outcome("boxes");
    });
    check("dimension does not depend on the order of the marks", [&] {
      Tally t;
      std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
      for (int k = 0; k < std::min(opt_.samples, 10); ++k) {
        std::vector<YoungDiagram> marks;
        for (int i = 0; i < 4; ++i) marks.push_back(ls[pick(rng_)]);
        std::sort(marks.begin(), marks.end());
        const long ref = ctx_.mf_dim(0, marks);
        const long ref1 = ctx_.mf_dim(1, marks);
        do {
          t.expect(ctx_.mf_dim(0, marks) == ref && ctx_.mf_dim(1, marks) == ref1,
                   [] { return "permutation changes the dimension"; });
        } while (std::next_permutation(marks.begin(), marks.end()));
      }
      return t.outcome("random four-mark surfaces");
    });
  }

  // ----------------------------------------------------------------- skein
  void skein() {
    const Scalar loop = qint(p_, p_.N);
    check("trivial braid closes to [N]^n", [&] {
      Tally t;
      Scalar expected = integer(p_, 1);
      for (int n = 0; n <= opt_.max_n; ++n) {
        t.expect(closure_invariant(p_, {n, {}}) == expected,
                 [&] { return "n=" + std::to_string(n); });
        expected *= loop;
      }
      return t.outcome("n <= " + std::to_string(opt_.max_n));
    });
    check("single crossings close to mutually inverse curls", [&] {
      Tally t;
      for (Crossing c : {Crossing::hecke, Crossing::ribbon}) {
        const Scalar plus = curl(p_, 1, c), minus = curl(p_, -1, c);
        t.expect(plus * minus == integer(p_, 1), [] { return "curls not inverse"; });
        t.expect(closure_invariant(p_, {2, {1}}, c) == plus * loop, [] { return "positive"; });
        t.expect(closure_invariant(p_, {2, {-1}}, c) == minus * loop, [] { return "negative"; });
      }
      return t.outcome("both crossing normalizations");
    });
    check("ribbon crossing carries the curl q^{(N^2-1)/2N}", [&] {
      const auto ribbon = framing_sign(p_, Crossing::ribbon);
      const auto hecke = framing_sign(p_, Crossing::hecke);
      const std::optional<int> expected_hecke =
          p_.K == p_.N ? std::optional<int>(-1) : std::nullopt;
      if (ribbon != 1 || hecke != expected_hecke) return fail("unexpected framing signs");
      return pass(hecke ? "hecke crossing matches with sign -1" : "hecke crossing never matches");
    });
    check("ribbon crossings satisfy q^{1/2N} s - q^{-1/2N} s^-1 = (q^{1/2} - q^{-1/2}) Id", [&] {
      const Scalar r = ribbon_scale(p_);
      const HeckeElement s = from_braid(p_, {2, {1}}) * r;
      const HeckeElement si = from_braid(p_, {2, {-1}}) * r.inverse();
      const HeckeElement lhs = s * zeta(p_, 1) - si * zeta(p_, -1);
      const HeckeElement rhs = HeckeElement::identity(p_, 2) * (zeta(p_, p_.N) - zeta(p_, -p_.N));
      return lhs == rhs ? pass() : fail("relation does not hold");
    });
    check("stabilization multiplies the closure by a curl", [&] {
      Tally t;
      for (int k = 0; k < opt_.samples; ++k) {
        for (int n = 1; n <= cap(4); ++n) {
          const BraidWord b = random_braid(n);
          for (int sign : {1, -1}) {
            BraidWord s{n + 1, b.word};
            s.word.push_back(sign * n);
            for (Crossing c : {Crossing::hecke, Crossing::ribbon}) {
              t.expect(closure_invariant(p_, s, c) == curl(p_, sign, c) * closure_invariant(p_, b, c),
                       [&] { return "n=" + std::to_string(n); });
            }
          }
        }
      }
      return t.outcome("random braids, n <= " + std::to_string(cap(4)));
    });
    check("closure is invariant under conjugation", [&] {
      Tally t;
      for (int k = 0; k < opt_.samples; ++k) {
        const int n = std::max(2, cap(4));
        const BraidWord b = random_braid(n), a = random_braid(n, 3);
        BraidWord conj{n, a.word};
        conj.word.insert(conj.word.end(), b.word.begin(), b.word.end());
        for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) conj.word.push_back(-*it);
        t.expect(closure_invariant(p_, conj) == closure_invariant(p_, b), [] { return "conjugate"; });
      }
      return t.outcome("random braids");
    });
  }

  Context& ctx_;
  Params p_;
  const VerifyOptions& opt_;
  std::vector<CheckResult>& out_;
  std::string section_;
  std::mt19937_64 rng_;
};

}  // namespace

VerifyReport verify(Context& ctx, const VerifyOptions& options) {
  if (options.max_n < 1 || options.max_n > ctx.gram_limit()) {
    throw UsageError("--max-n must lie in [1, " + std::to_string(ctx.gram_limit()) + "], got " +
                     std::to_string(options.max_n));
  }
  if (options.samples < 1) throw UsageError("sample count must be positive");
  const auto& all = verify_sections();
  for (const auto& s : options.sections) {
    if (std::find(all.begin(), all.end(), s) == all.end()) {
      throw UsageError("unknown verify section '" + s + "'");
    }
  }
  VerifyReport r;
  r.params = ctx.params();
  r.max_n = options.max_n;
  r.seed = options.seed;
  Runner runner(ctx, options, r.checks);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (options.sections.empty() || options.sections.count(all[i])) runner.run_section(all[i], i);
  }
  return r;
}

Json to_json(const VerifyReport& r, bool timings) {
  Json j;
  j["N"] = r.params.N;
  j["K"] = r.params.K;
  j["max_n"] = r.max_n;
  j["seed"] = r.seed;
  j["status"] = r.passed() ? "pass" : "fail";
  j["counts"] = {{"pass", r.count(CheckStatus::pass)},
                 {"fail", r.count(CheckStatus::fail)},
                 {"skip", r.count(CheckStatus::skip)}};
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["section"] = c.section;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    e["details"] = c.details;
    if (timings) e["seconds"] = c.seconds;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace hsk
