#pragma once

// Young-diagram combinatorics for the SU(N) level-K label sets.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hsk/scalar.hpp"

namespace hsk {

class YoungDiagram {
 public:
  YoungDiagram() = default;
  // Throws DomainError unless rows are positive and weakly decreasing.
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  // lambda_i with the convention lambda_i = 0 beyond the last row (1-based).
  int row(int i) const;
  int first_row() const { return rows_.empty() ? 0 : rows_.front(); }
  int size() const;
  bool empty() const { return rows_.empty(); }

  YoungDiagram transpose() const;
  // Hook length of every cell, row-major.
  std::vector<int> hooks() const;
  // Content (column - row) of every cell, row-major.
  std::vector<int> contents() const;

  std::string to_string() const;

  // Size first, then lexicographic on the row vector.
  friend std::strong_ordering operator<=>(const YoungDiagram& a, const YoungDiagram& b);
  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) = default;

 private:
  std::vector<int> rows_;
};

// All partitions of n, in the canonical order.
std::vector<YoungDiagram> partitions(int n);

struct DiagramStats {
  YoungDiagram transpose;
  int size = 0;
  std::vector<int> hooks;
  // prod over cells of [hook(c)].
  Scalar quantum_hook_product;
  bool in_gamma = false;      // lambda_1 <= K, fewer than N rows
  bool in_gamma_bar = false;  // lambda_1 <= K, at most N rows
  bool in_c_nk = false;       // lambda_1 + lambda^T_1 <= N + K
};

bool in_gamma(const Params& p, const YoungDiagram& d);
bool in_gamma_bar(const Params& p, const YoungDiagram& d);
bool in_c_nk(const Params& p, const YoungDiagram& d);

Scalar quantum_hook_product(const Params& p, const YoungDiagram& d);
DiagramStats diagram_stats(const Params& p, const YoungDiagram& d);

// Gamma_{N,K} in canonical order (includes the empty diagram).
std::vector<YoungDiagram> labels(const Params& p);

// Rotated complement of lambda inside the lambda_1 x N rectangle.
// Throws DomainError outside Gamma-bar.
YoungDiagram dagger(const Params& p, const YoungDiagram& d);

// Labels lambda with |lambda| <= n and N | (n - |lambda|).
std::vector<YoungDiagram> gamma_n(const Params& p, int n);
bool in_gamma_n(const Params& p, int n, const YoungDiagram& d);

// Labels at n-1 strands feeding into lambda at n strands: remove a corner, or
// (when n > |lambda|) add one box to each of the first N-1 rows. The latter is
// the padded diagram losing its box in row N.
std::vector<YoungDiagram> branch(const Params& p, int n, const YoungDiagram& d);

// Number of branching paths from the empty diagram at 0 strands to lambda at n;
// zero outside Gamma^n.
std::uint64_t path_count(const Params& p, int n, const YoungDiagram& d);

// Adds (n - |lambda|)/N full columns of height N.
YoungDiagram pad(const Params& p, const YoungDiagram& d, int n);

struct Weight {
  // Coefficients of the fundamental weights Lambda_1..Lambda_{N-1}.
  std::vector<int> coefficients;
  // (Lambda, theta) with theta the highest root, (theta, theta) = 2.
  int level = 0;
  bool in_alcove = false;  // 0 <= level <= K
};

// Throws DomainError for more than N rows.
Weight weight(const Params& p, const YoungDiagram& d);

}  // namespace hsk
