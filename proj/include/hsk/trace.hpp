#pragma once

// The Markov trace on the tower H_1 ⊂ H_2 ⊂ ..., trace forms, Gram matrices
// and braid-closure invariants.

#include <memory>
#include <optional>
#include <vector>

#include "hsk/hecke.hpp"
#include "hsk/linalg.hpp"

namespace hsk {

inline constexpr int kDefaultGramLimit = 6;

// eta = (q - q^N) / ((1+q)(1 - q^N)) = Tr(e_i).
Scalar eta(const Params& p);
// Tr(x T_{s_{n-1}}) / Tr(x) for x in H_{n-1}: q - (q+1) eta.
Scalar zeta_t(const Params& p);

// Tr(T_w) for every w in S_n, indexed like PermutationTable::get(n).
// Memoized per (N, K, n); thread-safe.
const std::vector<Scalar>& basis_traces(const Params& p, int n);

// Normalized so that Tr(1) = 1 on every H_n.
Scalar markov_trace(const HeckeElement& x);

enum class Form { bilinear, hermitian };

// bilinear: Tr(xy); hermitian: Tr(y* x).
Scalar pairing(const HeckeElement& x, const HeckeElement& y, Form form);

struct GramData {
  int n = 0;
  Form form = Form::bilinear;
  Matrix matrix;            // entry (u, v) = pairing(T_u, T_v)
  std::vector<int> pivots;  // first linearly independent columns
  int rank = 0;
  std::vector<HeckeElement> kernel_basis;
};

// Gram matrix of the form on the T_w basis, with exact rank and kernel.
// Throws LimitError when n exceeds limit.
GramData gram(const Params& p, int n, Form form, int limit = kDefaultGramLimit);
// Only the matrix; same limit rule.
Matrix gram_matrix(const Params& p, int n, Form form, int limit = kDefaultGramLimit);

// Normalization of a braid crossing.
//   hecke:  sigma_i exactly as in from_braid.
//   ribbon: sigma_i rescaled by -q^{-1/N}. This is the standard R-matrix
//           normalization; its kink factor is the ribbon twist q^{(N^2-1)/2N}
//           of the fundamental label for every (N, K), and it satisfies
//           q^{1/2N} s - q^{-1/2N} s^{-1} = (q^{1/2} - q^{-1/2}) Id.
enum class Crossing { hecke, ribbon };

// -q^{-1/N}: the ribbon crossing divided by the hecke crossing.
Scalar ribbon_scale(const Params& p);

// [N]^n Tr(b): the framed HOMFLY value of the closure of b.
Scalar closure_invariant(const Params& p, const BraidWord& b, Crossing c = Crossing::hecke);

// Kink factor of a crossing of the given sign: closing one strand of
// sigma_{n-1}^{+-1} multiplies the closure value by this scalar.
//   hecke:  -q^{+-(N^2+1)/2N}
//   ribbon:  q^{+-(N^2-1)/2N}
Scalar curl(const Params& p, int sign, Crossing c = Crossing::hecke);

// q^{(N^2-1)/2N}.
Scalar printed_curl(const Params& p);

// The crossing sign whose kink factor is q^{(N^2-1)/2N}, if any. For ribbon
// crossings this is +1. For hecke crossings it is -1 when K = N and there is
// none otherwise: -q^{-(N^2+1)/2N} = q^{(NK-1)/2N}.
std::optional<int> framing_sign(const Params& p, Crossing c);

}  // namespace hsk
