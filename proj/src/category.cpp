#include "hsk/category.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hsk/error.hpp"
#include "hsk/json_io.hpp"

namespace hsk {

namespace {

int exact_sqrt(int v, const std::string& what) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) {
    throw InternalError(what + ": rank " + std::to_string(v) + " is not a perfect square");
  }
  return r;
}

std::string cache_key(const Params& p, const std::string& kind, int n) {
  std::ostringstream os;
  os << kCacheSchema << "-N" << p.N << "-K" << p.K << "-" << kind << "-n" << n;
  return os.str();
}

}  // namespace

Scalar full_twist_eigenvalue(const Params& p, const YoungDiagram& d) {
  const long n = d.size();
  long content = 0;
  for (int c : d.contents()) content += c;
  return zeta(p, n * (n - 1) + 2L * p.N * content);
}

Scalar ribbon_twist_from_contents(const Params& p, const YoungDiagram& d) {
  const long n = d.size();
  long content = 0;
  for (int c : d.contents()) content += c;
  // q^{x/2} = zeta^{N x}
  return zeta(p, static_cast<long>(p.N) * p.N * n + 2L * p.N * content - n * n);
}

Context::Context(const Params& p) : Context(p, Options{}) {}

Context::Context(const Params& p, Options options)
    : params_(p), options_(std::move(options)), cache_(options_.cache_dir) {
  if (options_.gram_limit < 0 || options_.gram_limit > kMaxStrands) {
    throw UsageError("Gram limit must lie in [0, " + std::to_string(kMaxStrands) + "]");
  }
}

void Context::check_label(const YoungDiagram& d) const {
  if (!in_gamma(params_, d)) {
    throw DomainError("label " + d.to_string() + " is not in Gamma_{" +
                      std::to_string(params_.N) + "," + std::to_string(params_.K) + "}");
  }
}

const YoungIdempotent& Context::young(const YoungDiagram& d) {
  auto it = young_.find(d);
  if (it == young_.end()) it = young_.emplace(d, young_idempotent(params_, d)).first;
  return it->second;
}

// Pivots of the Gram matrix found on a spanning set of H_n / radical.
// rad_{n-1} lies in rad_n and H_n = sum_k H_{n-1} T_{s_{n-1}} ... T_{s_k}, so
// the T_{pc} with p a pivot of H_{n-1} and c a minimal coset representative
// span the quotient. The Gram matrix on a spanning set of a space with a
// nondegenerate form has full rank equal to its dimension.
std::vector<int> Context::spanning_pivots(int n, const Matrix& g) {
  if (n <= 2) return row_reduce(g).pivots;
  const GramAnalysis& lower = analysis(n - 1);
  const auto& table = PermutationTable::get(n);
  const auto& sub = PermutationTable::get(n - 1);
  std::vector<int> span;
  for (int p : lower.pivots) {
    const OneLine& base = sub.one_line(static_cast<PermIndex>(p));
    for (int k = 1; k <= n; ++k) {
      OneLine w = base;
      w.insert(w.begin() + (k - 1), n);
      span.push_back(static_cast<int>(table.index_of(w)));
    }
  }
  std::sort(span.begin(), span.end());
  std::vector<int> pivots;
  for (int local : row_reduce(g.submatrix(span, span)).pivots) pivots.push_back(span[local]);
  return pivots;
}

const GramAnalysis& Context::analysis(int n) {
  if (auto it = analyses_.find(n); it != analyses_.end()) return *it->second;
  auto a = std::make_unique<GramAnalysis>();
  a->n = n;
  a->matrix = gram_matrix(params_, n, Form::bilinear, options_.gram_limit);
  const std::string key = cache_key(params_, "gram-analysis", n);
  bool loaded = false;
  if (auto payload = cache_.load(key)) {
    try {
      Json j = Json::parse(*payload);
      a->pivots = j.at("pivots").get<std::vector<int>>();
      a->pivot_inverse = matrix_from_json(params_, j.at("pivot_inverse"));
      loaded = a->pivot_inverse.rows() == a->rank();
    } catch (const std::exception&) {
      loaded = false;
    }
  }
  if (!loaded) {
    a->pivots = spanning_pivots(n, a->matrix);
    auto inv = inverse(a->matrix.submatrix(a->pivots, a->pivots));
    if (!inv) throw InternalError("Gram matrix restricted to its pivots is singular");
    a->pivot_inverse = std::move(*inv);
    Json j;
    j["pivots"] = a->pivots;
    j["pivot_inverse"] = to_json(a->pivot_inverse);
    cache_.store(key, j.dump());
  }
  return *analyses_.emplace(n, std::move(a)).first->second;
}

PurifiedDim Context::purified_dim(int n) {
  const GramAnalysis& a = analysis(n);
  return {a.rank(), a.matrix.rows() - a.rank()};
}

std::vector<Scalar> Context::trace_vector(const HeckeElement& x) {
  const GramAnalysis& a = analysis(x.strands());
  std::vector<Scalar> out(a.matrix.rows(), Scalar::zero(field_of(params_)));
  for (int u = 0; u < a.matrix.rows(); ++u) {
    for (const auto& [w, c] : x.terms()) {
      const Scalar& g = a.matrix.at(u, static_cast<int>(w));
      if (!g.is_zero()) out[u] += g * c;
    }
  }
  return out;
}

// H_n = span{T_p : p pivot} + radical, and the radical pairs to zero with
// everything, so the pivot rows suffice.
bool Context::in_radical(const HeckeElement& x) {
  const GramAnalysis& a = analysis(x.strands());
  for (int u : a.pivots) {
    Scalar acc = Scalar::zero(field_of(params_));
    for (const auto& [w, c] : x.terms()) {
      const Scalar& g = a.matrix.at(u, static_cast<int>(w));
      if (!g.is_zero()) acc += g * c;
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool Context::equal_mod_radical(const HeckeElement& x, const HeckeElement& y) {
  return in_radical(x - y);
}

HeckeElement Context::reduce(const HeckeElement& x) {
  const GramAnalysis& a = analysis(x.strands());
  std::vector<Scalar> pairings(a.rank(), Scalar::zero(field_of(params_)));
  for (int i = 0; i < a.rank(); ++i) {
    for (const auto& [w, c] : x.terms()) {
      const Scalar& g = a.matrix.at(a.pivots[i], static_cast<int>(w));
      if (!g.is_zero()) pairings[i] += g * c;
    }
  }
  const std::vector<Scalar> coords = a.pivot_inverse.apply(pairings);
  HeckeElement out(params_, x.strands());
  for (int i = 0; i < a.rank(); ++i) out.add_term(static_cast<PermIndex>(a.pivots[i]), coords[i]);
  return out;
}

int Context::form_rank(const std::vector<HeckeElement>& xs) {
  if (xs.empty()) return 0;
  const int n = xs.front().strands();
  const GramAnalysis& a = analysis(n);
  Matrix m(params_, static_cast<int>(xs.size()), a.rank());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].strands() != n) throw DomainError("form_rank needs elements of one H_n");
    for (int j = 0; j < a.rank(); ++j) {
      Scalar acc = Scalar::zero(field_of(params_));
      for (const auto& [w, c] : xs[i].terms()) {
        const Scalar& g = a.matrix.at(static_cast<int>(w), a.pivots[j]);
        if (!g.is_zero()) acc += g * c;
      }
      m.at(static_cast<int>(i), j) = acc;
    }
  }
  return rank(m);
}

HeckeElement Context::minimal_idempotent(int n, const YoungDiagram& label) {
  if (!in_gamma_n(params_, n, label)) {
    throw DomainError("label " + label.to_string() + " is not in Gamma^" + std::to_string(n));
  }
  const YoungIdempotent& y = young(label);
  if (!y.idem) throw InternalError("Young idempotent of a label has vanishing hook product");
  HeckeElement e = *y.idem;
  const int columns = (n - label.size()) / params_.N;
  if (columns > 0) {
    const HeckeElement column = jones_wenzl(params_, params_.N, JwKind::f);
    for (int c = 0; c < columns; ++c) e = tensor_embed(e, column);
  }
  return e;
}

const BlockData& Context::blocks(int n) {
  if (auto it = blocks_.find(n); it != blocks_.end()) return *it->second;
  const GramAnalysis& a = analysis(n);
  auto data = std::make_unique<BlockData>();
  data->params = params_;
  data->n = n;
  const std::vector<YoungDiagram> labels = gamma_n(params_, n);

  const std::string key = cache_key(params_, "blocks", n);
  std::map<YoungDiagram, std::pair<HeckeElement, int>> cached;
  if (auto payload = cache_.load(key)) {
    try {
      for (const auto& entry : Json::parse(*payload)) {
        cached.emplace(diagram_from_json(entry.at("label")),
                       std::make_pair(element_from_json(params_, entry.at("z")),
                                      entry.at("dim").get<int>()));
      }
    } catch (const std::exception&) {
      cached.clear();
    }
    if (cached.size() != labels.size()) cached.clear();
  }

  for (const auto& label : labels) {
    Block b;
    b.label = label;
    b.minimal = minimal_idempotent(n, label);
    b.minimal_trace = markov_trace(b.minimal);
    if (auto it = cached.find(label); it != cached.end()) {
      b.z = it->second.first;
      b.dim = it->second.second;
    } else {
      // Casimir element: for a block M_d with Tr = t * matrix trace,
      // sum_i b_i x b^i = (matrix trace of x / t) Id. With x minimal, t = Tr(x).
      // sum_i b_i e b^i = sum_j (sum_i Ginv_{ji} b_i e) b_j
      std::vector<HeckeElement> left;
      for (int i = 0; i < a.rank(); ++i) {
        left.push_back(b.minimal.left_basis(static_cast<PermIndex>(a.pivots[i])));
      }
      HeckeElement sum(params_, n);
      for (int j = 0; j < a.rank(); ++j) {
        std::vector<Scalar> acc(PermutationTable::get(n).size(), Scalar::zero(field_of(params_)));
        for (int i = 0; i < a.rank(); ++i) {
          const Scalar& g = a.pivot_inverse.at(j, i);
          if (g.is_zero()) continue;
          for (const auto& [w, c] : left[i].terms()) acc[w] += g * c;
        }
        HeckeElement f(params_, n);
        for (PermIndex w = 0; w < acc.size(); ++w) f.add_term(w, acc[w]);
        sum += f.right_basis(static_cast<PermIndex>(a.pivots[j]));
      }
      b.z = reduce(sum * b.minimal_trace);
      std::vector<HeckeElement> span;
      for (int i = 0; i < a.rank(); ++i) {
        span.push_back(b.z.right_basis(static_cast<PermIndex>(a.pivots[i])));
      }
      b.dim = exact_sqrt(form_rank(span), "block " + label.to_string());
    }
    data->blocks.push_back(std::move(b));
  }

  if (cached.empty()) {
    Json j = Json::array();
    for (const auto& b : data->blocks) {
      Json entry;
      entry["label"] = to_json(b.label);
      entry["z"] = to_json(b.z);
      entry["dim"] = b.dim;
      j.push_back(std::move(entry));
    }
    cache_.store(key, j.dump());
  }
  return *blocks_.emplace(n, std::move(data)).first->second;
}

namespace {

const Block& find_block(const BlockData& data, const YoungDiagram& label) {
  for (const auto& b : data.blocks) {
    if (b.label == label) return b;
  }
  throw DomainError("label " + label.to_string() + " is not in Gamma^" + std::to_string(data.n));
}

}  // namespace

int Context::restriction_multiplicity(int n, const YoungDiagram& upper,
                                      const YoungDiagram& lower) {
  if (n < 1) throw DomainError("restriction needs n >= 1");
  const Block& hi = find_block(blocks(n), upper);
  const Block& lo = find_block(blocks(n - 1), lower);
  const HeckeElement embedded = tensor_embed(lo.z, HeckeElement::identity(params_, 1));
  const Scalar t = markov_trace(hi.z * embedded);
  const Scalar m = t / (hi.minimal_trace * integer(params_, lo.dim));
  auto v = m.to_integer();
  if (!v || *v < 0) throw InternalError("restriction multiplicity is not a non-negative integer");
  return static_cast<int>(*v);
}

int Context::fusion_direct(const YoungDiagram& a, const YoungDiagram& b, const YoungDiagram& c) {
  check_label(a);
  check_label(b);
  const int n = a.size() + b.size();
  if (!in_gamma_n(params_, n, c)) return 0;
  if (n > options_.gram_limit) {
    throw LimitError("fusion " + a.to_string() + " x " + b.to_string() + " needs " +
                     std::to_string(n) + " strands, above the Gram limit " +
                     std::to_string(options_.gram_limit));
  }
  const HeckeElement pi = tensor_embed(*young(a).idem, *young(b).idem);
  const Block& block = find_block(blocks(n), c);
  const GramAnalysis& g = analysis(n);
  const HeckeElement zpi = block.z * pi;
  std::vector<HeckeElement> span;
  for (int i = 0; i < g.rank(); ++i) {
    span.push_back(zpi * pi.left_basis(static_cast<PermIndex>(g.pivots[i])));
  }
  const int mult = exact_sqrt(form_rank(span), "fusion " + a.to_string() + " x " +
                                                   b.to_string() + " -> " + c.to_string());
  // Tr(z_c pi) = N * Tr(minimal idempotent of c).
  const auto ratio = (markov_trace(zpi) / block.minimal_trace).to_integer();
  if (!ratio || *ratio != mult) {
    throw InternalError("fusion rank and trace ratio disagree for " + a.to_string() + " x " +
                        b.to_string() + " -> " + c.to_string());
  }
  return mult;
}

int Context::fusion(const YoungDiagram& a, const YoungDiagram& b, const YoungDiagram& c) {
  check_label(a);
  check_label(b);
  // A result diagram outside Gamma (e.g. truncated by the level) has
  // multiplicity zero; in_gamma_n covers that case.
  if (!in_gamma_n(params_, a.size() + b.size(), c)) return 0;
  const auto key = std::make_tuple(a, b, c);
  if (auto it = fusion_.find(key); it != fusion_.end()) return it->second;
  // Frobenius reciprocity: N_{ab}^c = N_{a^dag c}^b = N_{c b^dag}^a.
  std::vector<std::tuple<YoungDiagram, YoungDiagram, YoungDiagram>> forms = {
      {a, b, c}, {dagger(params_, a), c, b}, {c, dagger(params_, b), a}};
  std::stable_sort(forms.begin(), forms.end(), [](const auto& x, const auto& y) {
    return std::get<0>(x).size() + std::get<1>(x).size() <
           std::get<0>(y).size() + std::get<1>(y).size();
  });
  const auto& [x, y, z] = forms.front();
  const int value = fusion_direct(x, y, z);
  fusion_[key] = value;
  fusion_[std::make_tuple(b, a, c)] = value;
  return value;
}

FusionTable Context::fusion_table() {
  FusionTable t;
  t.params = params_;
  const auto ls = labels(params_);
  for (const auto& a : ls) {
    for (const auto& b : ls) {
      for (const auto& c : ls) t.entries.push_back({a, b, c, fusion(a, b, c)});
    }
  }
  return t;
}

Scalar Context::qdim(const YoungDiagram& label) {
  check_label(label);
  Scalar v = markov_trace(*young(label).idem);
  const Scalar loop = qint(params_, params_.N);
  for (int i = 0; i < label.size(); ++i) v *= loop;
  return v;
}

Scalar Context::twist_raw(const YoungDiagram& label) {
  check_label(label);
  const int n = label.size();
  const HeckeElement& y = *young(label).idem;
  const auto& table = PermutationTable::get(n);
  const PermIndex w0 = table.longest();
  // Delta^2 = a^{n(n-1)} T_{w0}^2; multiply on the right one generator at a time.
  HeckeElement prod = y.right_basis(w0).right_basis(w0);
  const Scalar scale = sigma_scale(params_);
  for (int k = 0; k < n * (n - 1); ++k) prod *= scale;
  auto c = prod.ratio_to(y);
  if (!c) throw InternalError("y_" + label.to_string() + " Delta^2 is not a multiple of y");
  return *c;
}

Scalar Context::twist(const YoungDiagram& label) {
  const int n = label.size();
  Scalar out = twist_raw(label);
  const Scalar scale = ribbon_scale(params_);
  for (int k = 0; k < n * (n - 1); ++k) out *= scale;
  const Scalar kink = curl(params_, 1, Crossing::ribbon);
  for (int i = 0; i < n; ++i) out *= kink;
  return out;
}

Scalar Context::s_entry(const YoungDiagram& a, const YoungDiagram& b) {
  check_label(a);
  check_label(b);
  const int na = a.size();
  const int nb = b.size();
  const int n = na + nb;
  if (n > kMaxStrands) {
    throw LimitError("S-matrix entry needs " + std::to_string(n) + " strands, above " +
                     std::to_string(kMaxStrands));
  }
  const auto& table = PermutationTable::get(n);
  OneLine swap(n);
  for (int i = 0; i < na; ++i) swap[i] = i + 1 + nb;
  for (int j = 0; j < nb; ++j) swap[na + j] = j + 1;
  const PermIndex pi = table.index_of(swap);
  const HeckeElement block = tensor_embed(*young(a).idem, *young(b).idem);
  HeckeElement prod = block.right_basis(table.inverse(pi)).right_basis(pi);
  const Scalar scale = sigma_scale(params_) * ribbon_scale(params_);
  for (int k = 0; k < 2 * na * nb; ++k) prod *= scale;
  Scalar v = markov_trace(prod);
  const Scalar loop = qint(params_, params_.N);
  for (int i = 0; i < n; ++i) v *= loop;
  return v;
}

Matrix Context::s_matrix() {
  const auto ls = labels(params_);
  const int size = static_cast<int>(ls.size());
  Matrix s(params_, size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) s.at(i, j) = s_entry(ls[i], ls[j]);
  }
  return s;
}

std::vector<std::vector<int>> Context::fusion_matrix(const YoungDiagram& a) {
  const auto ls = labels(params_);
  std::vector<std::vector<int>> m(ls.size(), std::vector<int>(ls.size(), 0));
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = 0; j < ls.size(); ++j) m[i][j] = fusion(a, ls[i], ls[j]);
  }
  return m;
}

long Context::mf_dim(int genus, const std::vector<YoungDiagram>& marks) {
  if (genus < 0) throw DomainError("genus must be non-negative");
  for (const auto& d : marks) check_label(d);
  const auto ls = labels(params_);
  const std::size_t size = ls.size();
  auto step = [&](const std::vector<long>& v, const std::vector<std::vector<int>>& m) {
    std::vector<long> out(size, 0);
    for (std::size_t i = 0; i < size; ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < size; ++j) out[j] += v[i] * m[i][j];
    }
    return out;
  };
  // Row vector at the empty label, pushed through a caterpillar of pants.
  std::vector<long> v(size, 0);
  v[0] = 1;
  for (const auto& d : marks) v = step(v, fusion_matrix(d));
  if (genus > 0) {
    // Handle operator: sum over mu of N_mu N_{mu^dag}.
    std::vector<std::vector<int>> handle(size, std::vector<int>(size, 0));
    for (const auto& mu : ls) {
      const auto a = fusion_matrix(mu);
      const auto b = fusion_matrix(dagger(params_, mu));
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t k = 0; k < size; ++k) {
          if (a[i][k] == 0) continue;
          for (std::size_t j = 0; j < size; ++j) handle[i][j] += a[i][k] * b[k][j];
        }
      }
    }
    for (int g = 0; g < genus; ++g) v = step(v, handle);
  }
  return v[0];
}

}  // namespace hsk
