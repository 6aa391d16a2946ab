#pragma once

// The purified category at finite strand count: the semisimple quotient of
// H_n by the radical of the trace form, its blocks, and the derived modular
// data (fusion, quantum dimensions, twists, S-matrix, modular-functor
// dimensions).

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "hsk/cache.hpp"
#include "hsk/diagrams.hpp"
#include "hsk/hecke.hpp"
#include "hsk/linalg.hpp"
#include "hsk/trace.hpp"

namespace hsk {

// Bilinear Gram data in the form the quotient computations need.
struct GramAnalysis {
  int n = 0;
  Matrix matrix;            // Tr(T_u T_v)
  std::vector<int> pivots;  // T_w for w in pivots is a basis of H_n / radical
  Matrix pivot_inverse;     // inverse of matrix restricted to pivots x pivots
  int rank() const { return static_cast<int>(pivots.size()); }
};

struct PurifiedDim {
  int dim = 0;
  int radical_dim = 0;
};

struct Block {
  YoungDiagram label;
  HeckeElement z;        // central idempotent, pivot-basis representative
  int dim = 0;           // square root of the rank of the form on z H_n
  HeckeElement minimal;  // minimal idempotent y_label (x) f_N (x) ... (x) f_N
  Scalar minimal_trace;  // Tr(minimal)
};

struct BlockData {
  Params params;
  int n = 0;
  std::vector<Block> blocks;  // in the order of gamma_n
};

struct FusionEntry {
  YoungDiagram a, b, c;
  int n = 0;
};

struct FusionTable {
  Params params;
  std::vector<FusionEntry> entries;  // every triple of labels, canonical order
};

// Raw eigenvalue of Delta^2 on the generic irreducible of shape d:
// q^{-(N-1)n(n-1)/2N} q^{n(n-1)/2 + sum of contents}.
Scalar full_twist_eigenvalue(const Params& p, const YoungDiagram& d);
// Ribbon twist from contents: q^{(N|d| + 2 sum of contents - |d|^2/N)/2}.
Scalar ribbon_twist_from_contents(const Params& p, const YoungDiagram& d);

// Not thread-safe; use one Context per thread.
class Context {
 public:
  struct Options {
    int gram_limit = kDefaultGramLimit;
    std::filesystem::path cache_dir;  // empty: no disk cache
  };

  explicit Context(const Params& p);
  Context(const Params& p, Options options);

  const Params& params() const { return params_; }
  int gram_limit() const { return options_.gram_limit; }
  const DiskCache& cache() const { return cache_; }

  const GramAnalysis& analysis(int n);
  PurifiedDim purified_dim(int n);

  // (Tr(T_u x))_u; x lies in the radical iff this vanishes.
  std::vector<Scalar> trace_vector(const HeckeElement& x);
  bool in_radical(const HeckeElement& x);
  bool equal_mod_radical(const HeckeElement& x, const HeckeElement& y);
  // The unique combination of pivot basis elements congruent to x.
  HeckeElement reduce(const HeckeElement& x);
  // Rank of the trace form on span{x_i}, modulo the radical.
  int form_rank(const std::vector<HeckeElement>& xs);

  HeckeElement minimal_idempotent(int n, const YoungDiagram& label);
  const BlockData& blocks(int n);
  // Multiplicity of the (n-1)-block `lower` in the restriction of the n-block
  // `upper`.
  int restriction_multiplicity(int n, const YoungDiagram& upper, const YoungDiagram& lower);

  // N_{ab}^c. Computed from the compressed Gram rank on the smallest of the
  // Frobenius-equivalent strand counts |a|+|b|, |a^dag|+|c|, |c|+|b^dag|.
  int fusion(const YoungDiagram& a, const YoungDiagram& b, const YoungDiagram& c);
  // The rank computation on exactly |a|+|b| strands, with its trace-ratio
  // cross-check. Throws LimitError beyond the Gram limit.
  int fusion_direct(const YoungDiagram& a, const YoungDiagram& b, const YoungDiagram& c);
  FusionTable fusion_table();

  Scalar qdim(const YoungDiagram& label);
  // c with y_label Delta^2 = c y_label for the hecke full twist, exactly.
  Scalar twist_raw(const YoungDiagram& label);
  // Ribbon twist: the full-twist eigenvalue with ribbon crossings times the
  // ribbon kink q^{(N^2-1)/2N} per strand.
  Scalar twist(const YoungDiagram& label);
  // [N]^{|a|+|b|} Tr((y_a (x) y_b) beta), beta the square of the positive
  // block transposition with ribbon crossings: the Hopf link colored a, b.
  Scalar s_entry(const YoungDiagram& a, const YoungDiagram& b);
  // Rows and columns indexed by labels().
  Matrix s_matrix();

  // Dimension of the modular-functor space of a genus-g surface with the
  // given boundary labels.
  long mf_dim(int genus, const std::vector<YoungDiagram>& labels);

 private:
  void check_label(const YoungDiagram& d) const;
  std::vector<int> spanning_pivots(int n, const Matrix& g);
  const YoungIdempotent& young(const YoungDiagram& d);
  std::vector<std::vector<int>> fusion_matrix(const YoungDiagram& a);

  Params params_;
  Options options_;
  DiskCache cache_;
  std::map<int, std::unique_ptr<GramAnalysis>> analyses_;
  std::map<int, std::unique_ptr<BlockData>> blocks_;
  std::map<YoungDiagram, YoungIdempotent> young_;
  std::map<std::tuple<YoungDiagram, YoungDiagram, YoungDiagram>, int> fusion_;
};

}  // namespace hsk
