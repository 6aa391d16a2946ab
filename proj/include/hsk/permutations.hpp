#pragma once

// Tables for the symmetric group S_n, n <= kMaxStrands. Permutations are
// indexed by the rank of their one-line notation in lexicographic order, so
// index 0 is the identity. Products compose as functions: (uv)(x) = u(v(x)),
// hence w*s_i swaps positions i, i+1 and s_i*w swaps values i, i+1.

#include <array>
#include <cstdint>
#include <vector>

namespace hsk {

inline constexpr int kMaxStrands = 8;

using PermIndex = std::uint32_t;
using OneLine = std::vector<int>;  // 1-based images w(1..n)

class PermutationTable {
 public:
  // Thread-safe; tables are built once and then immutable.
  static const PermutationTable& get(int n);

  int strands() const { return n_; }
  std::size_t size() const { return perms_.size(); }

  const OneLine& one_line(PermIndex w) const { return perms_[w]; }
  PermIndex index_of(const OneLine& w) const;
  int length(PermIndex w) const { return length_[w]; }
  PermIndex inverse(PermIndex w) const { return inverse_[w]; }

  // Generators are 1-based: 1 <= i <= n-1.
  PermIndex left(int i, PermIndex w) const { return left_[i - 1][w]; }
  PermIndex right(int i, PermIndex w) const { return right_[i - 1][w]; }
  // l(s_i w) > l(w)
  bool left_ascent(int i, PermIndex w) const;
  // l(w s_i) > l(w)
  bool right_ascent(int i, PermIndex w) const;

  // A reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}.
  const std::vector<int>& reduced_word(PermIndex w) const { return words_[w]; }

  PermIndex longest() const { return longest_; }

 private:
  explicit PermutationTable(int n);

  int n_;
  std::vector<OneLine> perms_;
  std::vector<int> length_;
  std::vector<PermIndex> inverse_;
  std::vector<std::vector<PermIndex>> left_;
  std::vector<std::vector<PermIndex>> right_;
  std::vector<std::vector<int>> words_;
  PermIndex longest_ = 0;
};

// Index of w in S_{n+extra} acting as w on 1..n and fixing the rest.
PermIndex embed_left(int n, PermIndex w, int extra);
// Index of w in S_{extra+n} acting on strands extra+1..extra+n.
PermIndex embed_right(int n, PermIndex w, int extra);

}  // namespace hsk
