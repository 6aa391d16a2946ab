#include "hsk/trace.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "hsk/error.hpp"

namespace hsk {

Scalar eta(const Params& p) {
  const Scalar one = integer(p, 1);
  const Scalar q = q_power(p, 1);
  const Scalar qn = q_power(p, p.N);
  const Scalar den = (one + q) * (one - qn);
  if (den.is_zero()) throw DomainError("eta undefined: degenerate denominator");
  return (q - qn) / den;
}

Scalar zeta_t(const Params& p) {
  const Scalar q = q_power(p, 1);
  return q - (q + integer(p, 1)) * eta(p);
}

namespace {

using TraceKey = std::tuple<int, int, int>;

std::vector<Scalar> compute_basis_traces(const Params& p, int n) {
  const auto& table = PermutationTable::get(n);
  if (n <= 1) return std::vector<Scalar>(table.size(), integer(p, 1));
  const auto& lower = basis_traces(p, n - 1);
  const auto& sub = PermutationTable::get(n - 1);
  const Scalar zt = zeta_t(p);
  std::vector<Scalar> out(table.size());
  for (PermIndex w = 0; w < table.size(); ++w) {
    OneLine u = table.one_line(w);
    const int k = static_cast<int>(std::find(u.begin(), u.end(), n) - u.begin()) + 1;
    if (k == n) {
      u.pop_back();
      out[w] = lower[sub.index_of(u)];
      continue;
    }
    // w = u (s_{n-1} ... s_k) with u in S_{n-1}; bubble n to the end.
    for (int j = k; j < n; ++j) std::swap(u[j - 1], u[j]);
    u.pop_back();
    HeckeElement x = HeckeElement::basis(p, n - 1, sub.index_of(u));
    for (int j = n - 2; j >= k; --j) x = x.right_generator(j);
    Scalar acc = Scalar::zero(field_of(p));
    for (const auto& [v, c] : x.terms()) acc += c * lower[v];
    out[w] = zt * acc;
  }
  return out;
}

}  // namespace

const std::vector<Scalar>& basis_traces(const Params& p, int n) {
  PermutationTable::get(n);
  static std::mutex mutex;
  static std::map<TraceKey, std::shared_ptr<const std::vector<Scalar>>> memo;
  const TraceKey key{p.N, p.K, n};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return *it->second;
  }
  // Computed outside the lock: the recursion re-enters for n-1.
  auto value = std::make_shared<const std::vector<Scalar>>(compute_basis_traces(p, n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = memo.emplace(key, std::move(value));
  return *it->second;
}

Scalar markov_trace(const HeckeElement& x) {
  const auto& tr = basis_traces(x.params(), x.strands());
  Scalar acc = Scalar::zero(field_of(x.params()));
  for (const auto& [w, c] : x.terms()) acc += c * tr[w];
  return acc;
}

Scalar pairing(const HeckeElement& x, const HeckeElement& y, Form form) {
  if (x.strands() != y.strands()) throw DomainError("pairing of elements with different strand counts");
  if (form == Form::bilinear) return markov_trace(x * y);
  return markov_trace(star(y) * x);
}

namespace {

void check_limit(int n, int limit) {
  if (n < 0) throw DomainError("strand count must be non-negative");
  if (n > limit || n > kMaxStrands) {
    throw LimitError("Gram matrix on " + std::to_string(n) +
                     " strands exceeds the strand limit " + std::to_string(limit));
  }
}

std::vector<PermIndex> by_length(const PermutationTable& table) {
  std::vector<PermIndex> order(table.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](PermIndex a, PermIndex b) {
    return table.length(a) < table.length(b);
  });
  return order;
}

// G[u][v] = Tr(T_u T_v). With u = s_i u', Tr(T_u T_v) = Tr(T_{u'} T_v T_{s_i}).
Matrix bilinear_gram(const Params& p, int n) {
  const auto& table = PermutationTable::get(n);
  const int size = static_cast<int>(table.size());
  const auto& tr = basis_traces(p, n);
  Matrix g(p, size, size);
  for (int v = 0; v < size; ++v) g.at(0, v) = tr[v];
  const long two_n = 2L * p.N;
  for (PermIndex u : by_length(table)) {
    if (u == 0) continue;
    int i = 1;
    while (table.left_ascent(i, u)) ++i;
    const PermIndex shorter = table.left(i, u);
    for (int v = 0; v < size; ++v) {
      const PermIndex vs = table.right(i, v);
      if (table.right_ascent(i, v)) {
        g.at(u, v) = g.at(shorter, vs);
      } else {
        const Scalar& a = g.at(shorter, v);
        g.at(u, v) = g.at(shorter, vs).times_zeta(two_n) + a.times_zeta(two_n) - a;
      }
    }
  }
  return g;
}

// M[v][u] = Tr(T_v^{-1} T_u). With v = v' s, Tr(T_v^{-1} T_u) = Tr(T_{v'}^{-1} T_u T_s^{-1}).
Matrix hermitian_gram(const Params& p, int n) {
  const auto& table = PermutationTable::get(n);
  const int size = static_cast<int>(table.size());
  const auto& tr = basis_traces(p, n);
  Matrix m(p, size, size);
  for (int u = 0; u < size; ++u) m.at(0, u) = tr[u];
  const long two_n = 2L * p.N;
  for (PermIndex v : by_length(table)) {
    if (v == 0) continue;
    int s = 1;
    while (table.right_ascent(s, v)) ++s;
    const PermIndex shorter = table.right(s, v);
    for (int u = 0; u < size; ++u) {
      const PermIndex us = table.right(s, u);
      if (!table.right_ascent(s, u)) {
        m.at(v, u) = m.at(shorter, us);
      } else {
        const Scalar& a = m.at(shorter, u);
        m.at(v, u) = m.at(shorter, us).times_zeta(-two_n) + a.times_zeta(-two_n) - a;
      }
    }
  }
  // H[u][v] = (T_u, T_v) = M[v][u].
  Matrix h(p, size, size);
  for (int u = 0; u < size; ++u) {
    for (int v = 0; v < size; ++v) h.at(u, v) = m.at(v, u);
  }
  return h;
}

}  // namespace

Matrix gram_matrix(const Params& p, int n, Form form, int limit) {
  check_limit(n, limit);
  return form == Form::bilinear ? bilinear_gram(p, n) : hermitian_gram(p, n);
}

GramData gram(const Params& p, int n, Form form, int limit) {
  GramData out;
  out.n = n;
  out.form = form;
  out.matrix = gram_matrix(p, n, form, limit);
  Echelon e = row_reduce(out.matrix);
  out.pivots = e.pivots;
  out.rank = e.rank();
  // H c = 0 with H hermitian gives (sum conj(c_w) T_w, T_v) = 0 for all v.
  const bool conj = form == Form::hermitian;
  for (const auto& vec : kernel(e)) {
    HeckeElement x(p, n);
    for (std::size_t w = 0; w < vec.size(); ++w) {
      x.add_term(static_cast<PermIndex>(w), conj ? vec[w].conjugate() : vec[w]);
    }
    out.kernel_basis.push_back(std::move(x));
  }
  return out;
}

Scalar ribbon_scale(const Params& p) { return -zeta(p, -2); }

Scalar closure_invariant(const Params& p, const BraidWord& b, Crossing crossing) {
  HeckeElement x = from_braid(p, b);
  Scalar value = markov_trace(x);
  const Scalar loop = qint(p, p.N);
  for (int i = 0; i < b.strands; ++i) value *= loop;
  if (crossing == Crossing::ribbon) {
    long writhe = 0;
    for (int letter : b.word) writhe += letter > 0 ? 1 : -1;
    value = value.times_zeta(-2 * writhe);
    if (writhe % 2 != 0) value = -value;
  }
  return value;
}

Scalar curl(const Params& p, int sign, Crossing crossing) {
  if (sign != 1 && sign != -1) throw DomainError("crossing sign must be +1 or -1");
  const long n2 = static_cast<long>(p.N) * p.N;
  if (crossing == Crossing::hecke) return -zeta(p, sign * (n2 + 1));
  return zeta(p, sign * (n2 - 1));
}

Scalar printed_curl(const Params& p) {
  return zeta(p, static_cast<long>(p.N) * p.N - 1);
}

std::optional<int> framing_sign(const Params& p, Crossing crossing) {
  const Scalar target = printed_curl(p);
  for (int sign : {1, -1}) {
    if (curl(p, sign, crossing) == target) return sign;
  }
  return std::nullopt;
}

}  // namespace hsk
