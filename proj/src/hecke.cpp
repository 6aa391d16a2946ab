#include "hsk/hecke.hpp"

#include <numeric>
#include <string>

#include "hsk/error.hpp"

namespace hsk {

namespace {

void check_same_algebra(const HeckeElement& a, const HeckeElement& b) {
  if (a.strands() != b.strands() || !(a.params() == b.params())) {
    throw DomainError("Hecke elements live in different algebras (" +
                      std::to_string(a.strands()) + " vs " +
                      std::to_string(b.strands()) + " strands)");
  }
}

void check_generator(int n, int i) {
  if (i < 1 || i >= n) {
    throw DomainError("generator index " + std::to_string(i) + " outside [1, " +
                      std::to_string(n - 1) + "]");
  }
}

// Dense accumulator over S_n, flushed into a sparse element.
class Accumulator {
 public:
  Accumulator(const Params& p, int n)
      : params_(p), n_(n), slots_(PermutationTable::get(n).size()) {}

  void add(PermIndex w, const Scalar& c) {
    if (c.is_zero()) return;
    slots_[w] += c;
  }

  HeckeElement finish() {
    HeckeElement out(params_, n_);
    for (PermIndex w = 0; w < slots_.size(); ++w) {
      if (!slots_[w].is_zero()) out.add_term(w, slots_[w]);
    }
    return out;
  }

 private:
  Params params_;
  int n_;
  std::vector<Scalar> slots_;
};

}  // namespace

HeckeElement::HeckeElement(const Params& p, int n) : params_(p), n_(n) {
  PermutationTable::get(n);  // validates the strand count
}

HeckeElement HeckeElement::identity(const Params& p, int n) {
  return basis(p, n, 0, integer(p, 1));
}

HeckeElement HeckeElement::basis(const Params& p, int n, PermIndex w) {
  return basis(p, n, w, integer(p, 1));
}

HeckeElement HeckeElement::basis(const Params& p, int n, PermIndex w,
                                 const Scalar& coeff) {
  HeckeElement e(p, n);
  if (w >= PermutationTable::get(n).size()) throw DomainError("permutation index out of range");
  e.add_term(w, coeff);
  return e;
}

Scalar HeckeElement::coefficient(PermIndex w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_of(params_)) : it->second;
}

void HeckeElement::add_term(PermIndex w, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& rhs) {
  check_same_algebra(*this, rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& rhs) {
  check_same_algebra(*this, rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  return a.n_ == b.n_ && a.params_ == b.params_ && a.terms_ == b.terms_;
}

HeckeElement HeckeElement::left_generator(int i) const {
  check_generator(n_, i);
  const auto& table = PermutationTable::get(n_);
  const long two_n = 2L * params_.N;
  HeckeElement out(params_, n_);
  for (const auto& [w, c] : terms_) {
    const PermIndex sw = table.left(i, w);
    if (table.length(sw) > table.length(w)) {
      out.add_term(sw, c);
    } else {
      // T_s T_w = (q-1) T_w + q T_{sw} when l(sw) < l(w).
      Scalar qc = c.times_zeta(two_n);
      out.add_term(w, qc - c);
      out.add_term(sw, qc);
    }
  }
  return out;
}

HeckeElement HeckeElement::right_generator(int i) const {
  check_generator(n_, i);
  const auto& table = PermutationTable::get(n_);
  const long two_n = 2L * params_.N;
  HeckeElement out(params_, n_);
  for (const auto& [w, c] : terms_) {
    const PermIndex ws = table.right(i, w);
    if (table.right_ascent(i, w)) {
      out.add_term(ws, c);
    } else {
      Scalar qc = c.times_zeta(two_n);
      out.add_term(w, qc - c);
      out.add_term(ws, qc);
    }
  }
  return out;
}

// T^{-1} = q^{-1} T + (q^{-1} - 1).
HeckeElement HeckeElement::left_generator_inverse(int i) const {
  const long two_n = 2L * params_.N;
  HeckeElement out = left_generator(i);
  for (auto& [w, c] : out.terms_) c = c.times_zeta(-two_n);
  for (const auto& [w, c] : terms_) out.add_term(w, c.times_zeta(-two_n) - c);
  return out;
}

HeckeElement HeckeElement::right_generator_inverse(int i) const {
  const long two_n = 2L * params_.N;
  HeckeElement out = right_generator(i);
  for (auto& [w, c] : out.terms_) c = c.times_zeta(-two_n);
  for (const auto& [w, c] : terms_) out.add_term(w, c.times_zeta(-two_n) - c);
  return out;
}

HeckeElement HeckeElement::left_basis(PermIndex w) const {
  const auto& word = PermutationTable::get(n_).reduced_word(w);
  HeckeElement out = *this;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = out.left_generator(*it);
  return out;
}

HeckeElement HeckeElement::right_basis(PermIndex w) const {
  HeckeElement out = *this;
  for (int i : PermutationTable::get(n_).reduced_word(w)) out = out.right_generator(i);
  return out;
}

std::optional<Scalar> HeckeElement::ratio_to(const HeckeElement& other) const {
  check_same_algebra(*this, other);
  if (other.is_zero()) {
    if (is_zero()) return Scalar::zero(field_of(params_));
    return std::nullopt;
  }
  const auto& [w, c] = *other.terms_.begin();
  Scalar r = coefficient(w) / c;
  if (other * r == *this) return r;
  return std::nullopt;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  check_same_algebra(a, b);
  Accumulator acc(a.params_, a.n_);
  if (a.num_terms() <= b.num_terms()) {
    for (const auto& [u, c] : a.terms_) {
      for (const auto& [w, d] : b.left_basis(u).terms_) acc.add(w, c * d);
    }
  } else {
    for (const auto& [v, d] : b.terms_) {
      for (const auto& [w, c] : a.right_basis(v).terms_) acc.add(w, c * d);
    }
  }
  return acc.finish();
}

HeckeElement multiply(const HeckeElement& x, const HeckeElement& y) { return x * y; }

void validate(const BraidWord& b) {
  if (b.strands < 0 || b.strands > kMaxStrands) {
    throw LimitError("braid strand count " + std::to_string(b.strands) +
                     " outside [0, " + std::to_string(kMaxStrands) + "]");
  }
  for (int letter : b.word) {
    const int i = letter < 0 ? -letter : letter;
    if (i < 1 || i >= b.strands) {
      throw DomainError("braid letter " + std::to_string(letter) + " invalid on " +
                        std::to_string(b.strands) + " strands");
    }
  }
}

Scalar sigma_scale(const Params& p) { return -zeta(p, -(p.N - 1)); }

HeckeElement from_braid(const Params& p, const BraidWord& b) {
  validate(b);
  const Scalar a = sigma_scale(p);
  const Scalar a_inv = a.inverse();
  HeckeElement x = HeckeElement::identity(p, b.strands);
  for (int letter : b.word) {
    if (letter > 0) {
      x = x.right_generator(letter) * a;
    } else {
      x = x.right_generator_inverse(-letter) * a_inv;
    }
  }
  return x;
}

HeckeElement positive_permutation_braid(const Params& p, int n, PermIndex w) {
  const auto& table = PermutationTable::get(n);
  Scalar c = integer(p, 1);
  const Scalar a = sigma_scale(p);
  for (int k = 0; k < table.length(w); ++k) c *= a;
  return HeckeElement::basis(p, n, w, c);
}

HeckeElement full_twist(const Params& p, int n) {
  const auto& table = PermutationTable::get(n);
  HeckeElement half = positive_permutation_braid(p, n, table.longest());
  return half * half;
}

HeckeElement basis_inverse(const Params& p, int n, PermIndex w) {
  const auto& word = PermutationTable::get(n).reduced_word(w);
  HeckeElement out = HeckeElement::identity(p, n);
  // (T_{i1} ... T_{ik})^{-1} = T_{ik}^{-1} ... T_{i1}^{-1}
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out = out.right_generator_inverse(*it);
  }
  return out;
}

HeckeElement star(const HeckeElement& x) {
  Accumulator acc(x.params(), x.strands());
  for (const auto& [w, c] : x.terms()) {
    const Scalar cc = c.conjugate();
    const HeckeElement inv = basis_inverse(x.params(), x.strands(), w);
    for (const auto& [v, d] : inv.terms()) {
      acc.add(v, cc * d);
    }
  }
  return acc.finish();
}

HeckeElement tensor_embed(const HeckeElement& x, const HeckeElement& y) {
  if (!(x.params() == y.params())) throw DomainError("tensor of elements with different parameters");
  const int a = x.strands();
  const int b = y.strands();
  const auto& tx = PermutationTable::get(a);
  const auto& ty = PermutationTable::get(b);
  const auto& tab = PermutationTable::get(a + b);
  HeckeElement out(x.params(), a + b);
  for (const auto& [u, c] : x.terms()) {
    for (const auto& [v, d] : y.terms()) {
      OneLine w = tx.one_line(u);
      for (int k : ty.one_line(v)) w.push_back(k + a);
      out.add_term(tab.index_of(w), c * d);
    }
  }
  return out;
}

HeckeElement e_idempotent(const Params& p, int n, int i) {
  check_generator(n, i);
  const Scalar q = q_power(p, 1);
  const Scalar inv = (q + integer(p, 1)).inverse();
  const auto& table = PermutationTable::get(n);
  OneLine s(n);
  std::iota(s.begin(), s.end(), 1);
  std::swap(s[i - 1], s[i]);
  HeckeElement out(p, n);
  out.add_term(0, q * inv);
  out.add_term(table.index_of(s), -inv);
  return out;
}

HeckeElement jones_wenzl_unnormalized(const Params& p, int n, JwKind kind) {
  const auto& table = PermutationTable::get(n);
  // q^{+-n(n-1)/4} = zeta^{+-N n(n-1)/2}
  const long scale_exp = static_cast<long>(p.N) * n * (n - 1) / 2;
  const Scalar scale = zeta(p, kind == JwKind::f ? scale_exp : -scale_exp);
  HeckeElement out(p, n);
  for (PermIndex w = 0; w < table.size(); ++w) {
    if (kind == JwKind::g) {
      out.add_term(w, scale);
    } else {
      // (-q^{-1})^{l(w)}
      const int len = table.length(w);
      Scalar c = scale.times_zeta(-2L * p.N * len);
      out.add_term(w, (len % 2) ? -c : c);
    }
  }
  return out;
}

HeckeElement jones_wenzl(const Params& p, int n, JwKind kind) {
  const Scalar fact = qfact(p, n);
  if (fact.is_zero()) {
    throw DomainError("Jones-Wenzl idempotent undefined: [" + std::to_string(n) +
                      "]! vanishes at N+K=" + std::to_string(p.N + p.K));
  }
  return jones_wenzl_unnormalized(p, n, kind) * fact.inverse();
}

namespace {

HeckeElement row_block(const Params& p, const std::vector<int>& sizes, JwKind kind) {
  HeckeElement out = HeckeElement::identity(p, 0);
  for (int s : sizes) out = tensor_embed(out, jones_wenzl_unnormalized(p, s, kind));
  return out;
}

}  // namespace

YoungIdempotent young_idempotent(const Params& p, const YoungDiagram& shape) {
  const int n = shape.size();
  const auto& table = PermutationTable::get(n);
  const YoungDiagram cols = shape.transpose();

  HeckeElement rows_part = row_block(p, shape.rows(), JwKind::g);
  HeckeElement cols_block = row_block(p, cols.rows(), JwKind::f);

  // w sends the k-th cell in column-major order to its row-major position.
  std::vector<int> row_start(shape.num_rows() + 1, 1);
  for (int i = 1; i <= shape.num_rows(); ++i) row_start[i] = row_start[i - 1] + shape.row(i);
  OneLine w;
  for (int j = 1; j <= shape.first_row(); ++j) {
    for (int i = 1; i <= cols.row(j); ++i) w.push_back(row_start[i - 1] + j - 1);
  }
  const PermIndex wi = table.index_of(w);
  HeckeElement cols_part =
      HeckeElement::basis(p, n, wi) * cols_block * basis_inverse(p, n, wi);

  YoungIdempotent out{shape, rows_part * cols_part, quantum_hook_product(p, shape), std::nullopt};
  if (!out.hook_product.is_zero()) out.idem = out.quasi * out.hook_product.inverse();
  return out;
}

HeckeElement random_element(const Params& p, int n, std::mt19937_64& rng, int terms) {
  const auto& table = PermutationTable::get(n);
  std::uniform_int_distribution<PermIndex> pick(0, static_cast<PermIndex>(table.size() - 1));
  std::uniform_int_distribution<int> coeff(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<long> power(0, p.m() - 1);
  HeckeElement x(p, n);
  for (int t = 0; t < terms; ++t) {
    const PermIndex w = pick(rng);
    const long c = sign(rng) ? coeff(rng) : -coeff(rng);
    x.add_term(w, zeta(p, power(rng)).times_integer(c));
  }
  return x;
}

}  // namespace hsk
