#include "hsk/permutations.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "hsk/error.hpp"

namespace hsk {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Lexicographic rank through the Lehmer code.
PermIndex lehmer_rank(const OneLine& w) {
  const int n = static_cast<int>(w.size());
  PermIndex rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (w[j] < w[i]) ++smaller;
    }
    rank += static_cast<PermIndex>(smaller * factorial(n - 1 - i));
  }
  return rank;
}

}  // namespace

PermutationTable::PermutationTable(int n) : n_(n) {
  OneLine w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    perms_.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));

  const std::size_t count = perms_.size();
  length_.resize(count);
  inverse_.resize(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    const OneLine& p = perms_[idx];
    int inv = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (p[a] > p[b]) ++inv;
      }
    }
    length_[idx] = inv;
    OneLine pinv(n);
    for (int a = 0; a < n; ++a) pinv[p[a] - 1] = a + 1;
    inverse_[idx] = lehmer_rank(pinv);
  }

  left_.assign(std::max(n - 1, 0), std::vector<PermIndex>(count));
  right_.assign(std::max(n - 1, 0), std::vector<PermIndex>(count));
  for (int i = 1; i < n; ++i) {
    for (std::size_t idx = 0; idx < count; ++idx) {
      OneLine r = perms_[idx];
      std::swap(r[i - 1], r[i]);
      right_[i - 1][idx] = lehmer_rank(r);
      OneLine l = perms_[idx];
      for (int& v : l) {
        if (v == i) {
          v = i + 1;
        } else if (v == i + 1) {
          v = i;
        }
      }
      left_[i - 1][idx] = lehmer_rank(l);
    }
  }

  // Reduced words by peeling right descents, in order of increasing length.
  std::vector<PermIndex> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](PermIndex a, PermIndex b) { return length_[a] < length_[b]; });
  words_.assign(count, {});
  for (PermIndex idx : order) {
    if (length_[idx] == 0) continue;
    const OneLine& p = perms_[idx];
    int descent = 1;
    while (p[descent - 1] < p[descent]) ++descent;
    const PermIndex shorter = right_[descent - 1][idx];
    words_[idx] = words_[shorter];
    words_[idx].push_back(descent);
  }
  longest_ = static_cast<PermIndex>(count - 1);
}

const PermutationTable& PermutationTable::get(int n) {
  if (n < 0 || n > kMaxStrands) {
    throw LimitError("strand count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxStrands) + "]");
  }
  static std::mutex mutex;
  static std::array<std::unique_ptr<PermutationTable>, kMaxStrands + 1> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[n];
  if (!slot) slot.reset(new PermutationTable(n));
  return *slot;
}

PermIndex PermutationTable::index_of(const OneLine& w) const {
  if (static_cast<int>(w.size()) != n_) throw DomainError("permutation has wrong size");
  std::vector<bool> seen(n_ + 1, false);
  for (int v : w) {
    if (v < 1 || v > n_ || seen[v]) throw DomainError("not a permutation");
    seen[v] = true;
  }
  return lehmer_rank(w);
}

bool PermutationTable::left_ascent(int i, PermIndex w) const {
  return length_[left_[i - 1][w]] > length_[w];
}

bool PermutationTable::right_ascent(int i, PermIndex w) const {
  const OneLine& p = perms_[w];
  return p[i - 1] < p[i];
}

PermIndex embed_left(int n, PermIndex w, int extra) {
  OneLine p = PermutationTable::get(n).one_line(w);
  for (int k = 1; k <= extra; ++k) p.push_back(n + k);
  return PermutationTable::get(n + extra).index_of(p);
}

PermIndex embed_right(int n, PermIndex w, int extra) {
  const OneLine& src = PermutationTable::get(n).one_line(w);
  OneLine p(extra + n);
  std::iota(p.begin(), p.begin() + extra, 1);
  for (int k = 0; k < n; ++k) p[extra + k] = src[k] + extra;
  return PermutationTable::get(extra + n).index_of(p);
}

}  // namespace hsk
