#pragma once

// The Hecke algebra H_n at q = exp(2 pi i/(N+K)) on the basis {T_w : w in S_n}
// with T_s^2 = (q-1) T_s + q. Braid generators map as
//   sigma_i -> -q^{-(N-1)/2N} T_{s_i},
// so sigma_i has eigenvalues q^{(1-N)/2N} and -q^{(1+N)/2N}. Under this map
//   q^{-1/2N} sigma_i - q^{1/2N} sigma_i^{-1} = (q^{-1/2} - q^{1/2}) Id
// and e_i = (q + q^{(N-1)/2N} sigma_i)/(q+1) = (q - T_{s_i})/(q+1).

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "hsk/diagrams.hpp"
#include "hsk/permutations.hpp"
#include "hsk/scalar.hpp"

namespace hsk {

class HeckeElement {
 public:
  using Terms = std::map<PermIndex, Scalar>;

  HeckeElement() = default;
  // Zero element of H_n.
  HeckeElement(const Params& p, int n);

  static HeckeElement identity(const Params& p, int n);
  static HeckeElement basis(const Params& p, int n, PermIndex w);
  static HeckeElement basis(const Params& p, int n, PermIndex w, const Scalar& coeff);

  const Params& params() const { return params_; }
  int strands() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(PermIndex w) const;

  // Adds coeff * T_w; zero coefficients are never stored.
  void add_term(PermIndex w, const Scalar& coeff);

  HeckeElement& operator+=(const HeckeElement& rhs);
  HeckeElement& operator-=(const HeckeElement& rhs);
  HeckeElement& operator*=(const Scalar& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const Scalar& c) { return a *= c; }
  friend HeckeElement operator*(const Scalar& c, HeckeElement a) { return a *= c; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

  // T_{s_i} * this and this * T_{s_i}.
  HeckeElement left_generator(int i) const;
  HeckeElement right_generator(int i) const;
  // T_{s_i}^{-1} * this and this * T_{s_i}^{-1}.
  HeckeElement left_generator_inverse(int i) const;
  HeckeElement right_generator_inverse(int i) const;
  // T_w * this and this * T_w.
  HeckeElement left_basis(PermIndex w) const;
  HeckeElement right_basis(PermIndex w) const;

  // If this = c * other for a scalar c, returns c.
  std::optional<Scalar> ratio_to(const HeckeElement& other) const;

 private:
  Params params_;
  int n_ = 0;
  Terms terms_;
};

// Throws DomainError on strand mismatch.
HeckeElement multiply(const HeckeElement& x, const HeckeElement& y);

struct BraidWord {
  int strands = 1;
  // Entry +i is sigma_i, -i is sigma_i^{-1}.
  std::vector<int> word;
};

// Throws DomainError for letters outside [1, strands-1].
void validate(const BraidWord& b);

// Scalar by which sigma_i multiplies T_{s_i}: -q^{-(N-1)/2N}.
Scalar sigma_scale(const Params& p);

HeckeElement from_braid(const Params& p, const BraidWord& b);
// Positive permutation braid w_pi = sigma_scale^{l(pi)} T_pi.
HeckeElement positive_permutation_braid(const Params& p, int n, PermIndex w);
// Delta^2, the positive full twist on n strands.
HeckeElement full_twist(const Params& p, int n);

// Conjugate-linear anti-automorphism with (T_w)* = T_w^{-1}.
HeckeElement star(const HeckeElement& x);
// T_w^{-1}.
HeckeElement basis_inverse(const Params& p, int n, PermIndex w);

// x on a strands, y on b strands, placed side by side on a+b strands.
HeckeElement tensor_embed(const HeckeElement& x, const HeckeElement& y);

HeckeElement e_idempotent(const Params& p, int n, int i);

// f_n absorbs sigma_i with q^{(1-N)/2N} (T = -1 eigenspace); g_n absorbs it
// with -q^{(1+N)/2N} (T = q eigenspace). The Markov trace weights f_2 by
// eta_{N,K}, so f_n are the column (antisymmetrizing) projectors of the SU(N)
// theory and g_n the row ones.
enum class JwKind { f, g };

// [n]! times the Jones-Wenzl idempotent; needs no division.
HeckeElement jones_wenzl_unnormalized(const Params& p, int n, JwKind kind);
// Throws DomainError when [n]! vanishes.
HeckeElement jones_wenzl(const Params& p, int n, JwKind kind);

struct YoungIdempotent {
  YoungDiagram shape;
  HeckeElement quasi;              // F_lambda G_lambda
  Scalar hook_product;             // prod_c [hook(c)]
  std::optional<HeckeElement> idem;  // quasi / hook_product when nonzero
};

// Cells are numbered row-major. Rows carry [lambda_i]! g_{lambda_i} on
// consecutive strands; columns carry [lambda^T_j]! f_{lambda^T_j} moved onto
// the column cells by conjugation with the positive permutation braid.
YoungIdempotent young_idempotent(const Params& p, const YoungDiagram& shape);

// Sparse test element: up to `terms` random basis elements with coefficients
// c * zeta^k, 1 <= |c| <= 3.
HeckeElement random_element(const Params& p, int n, std::mt19937_64& rng, int terms = 6);

}  // namespace hsk
