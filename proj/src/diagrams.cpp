#include "hsk/diagrams.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hsk/error.hpp"

namespace hsk {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw DomainError("Young diagram rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) {
      throw DomainError("Young diagram rows must be weakly decreasing");
    }
  }
}

int YoungDiagram::row(int i) const {
  return (i >= 1 && i <= num_rows()) ? rows_[i - 1] : 0;
}

int YoungDiagram::size() const {
  int s = 0;
  for (int r : rows_) s += r;
  return s;
}

YoungDiagram YoungDiagram::transpose() const {
  std::vector<int> cols;
  for (int j = 1; j <= first_row(); ++j) {
    int height = 0;
    while (height < num_rows() && rows_[height] >= j) ++height;
    cols.push_back(height);
  }
  return YoungDiagram(std::move(cols));
}

std::vector<int> YoungDiagram::hooks() const {
  const YoungDiagram t = transpose();
  std::vector<int> out;
  for (int i = 1; i <= num_rows(); ++i) {
    for (int j = 1; j <= row(i); ++j) {
      out.push_back((row(i) - j) + (t.row(j) - i) + 1);
    }
  }
  return out;
}

std::vector<int> YoungDiagram::contents() const {
  std::vector<int> out;
  for (int i = 1; i <= num_rows(); ++i) {
    for (int j = 1; j <= row(i); ++j) out.push_back(j - i);
  }
  return out;
}

std::string YoungDiagram::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << rows_[i];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.rows_ <=> b.rows_;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> partitions(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool in_gamma(const Params& p, const YoungDiagram& d) {
  return d.first_row() <= p.K && d.num_rows() < p.N;
}

bool in_gamma_bar(const Params& p, const YoungDiagram& d) {
  return d.first_row() <= p.K && d.num_rows() <= p.N;
}

bool in_c_nk(const Params& p, const YoungDiagram& d) {
  return d.first_row() + d.num_rows() <= p.N + p.K;
}

Scalar quantum_hook_product(const Params& p, const YoungDiagram& d) {
  Scalar acc = integer(p, 1);
  for (int h : d.hooks()) acc *= qint(p, h);
  return acc;
}

DiagramStats diagram_stats(const Params& p, const YoungDiagram& d) {
  DiagramStats s;
  s.transpose = d.transpose();
  s.size = d.size();
  s.hooks = d.hooks();
  s.quantum_hook_product = quantum_hook_product(p, d);
  s.in_gamma = in_gamma(p, d);
  s.in_gamma_bar = in_gamma_bar(p, d);
  s.in_c_nk = in_c_nk(p, d);
  return s;
}

namespace {

// Diagrams with at most max_rows rows and first row at most max_cols.
void boxed_rec(int max_rows, int max_cols, std::vector<int>& cur,
               std::vector<YoungDiagram>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == max_rows) return;
  const int limit = cur.empty() ? max_cols : cur.back();
  for (int r = 1; r <= limit; ++r) {
    cur.push_back(r);
    boxed_rec(max_rows, max_cols, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> labels(const Params& p) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  boxed_rec(p.N - 1, p.K, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

YoungDiagram dagger(const Params& p, const YoungDiagram& d) {
  if (!in_gamma_bar(p, d)) {
    throw DomainError("dagger needs a diagram in Gamma-bar, got " + d.to_string());
  }
  std::vector<int> rows;
  const int width = d.first_row();
  for (int i = 1; i <= p.N; ++i) {
    const int r = width - d.row(p.N + 1 - i);
    if (r > 0) rows.push_back(r);
  }
  return YoungDiagram(std::move(rows));
}

bool in_gamma_n(const Params& p, int n, const YoungDiagram& d) {
  const int s = d.size();
  return in_gamma(p, d) && n >= s && (n - s) % p.N == 0;
}

std::vector<YoungDiagram> gamma_n(const Params& p, int n) {
  if (n < 0) throw DomainError("strand count must be non-negative");
  std::vector<YoungDiagram> out;
  for (auto& d : labels(p)) {
    if (in_gamma_n(p, n, d)) out.push_back(d);
  }
  return out;
}

std::vector<YoungDiagram> branch(const Params& p, int n, const YoungDiagram& d) {
  if (!in_gamma_n(p, n, d)) {
    throw DomainError("branch needs lambda in Gamma^n, got " + d.to_string() +
                      " at n=" + std::to_string(n));
  }
  std::vector<YoungDiagram> out;
  const auto& rows = d.rows();
  // Remove a corner box.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool corner = (i + 1 == rows.size()) || rows[i + 1] < rows[i];
    if (!corner) continue;
    std::vector<int> r = rows;
    if (--r[i] == 0) r.pop_back();
    out.emplace_back(std::move(r));
  }
  // One box added to each of the first N-1 rows.
  if (n > d.size()) {
    std::vector<int> r(p.N - 1, 0);
    for (int i = 0; i < p.N - 1; ++i) r[i] = d.row(i + 1) + 1;
    YoungDiagram grown(std::move(r));
    if (in_gamma(p, grown)) out.push_back(std::move(grown));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t path_count(const Params& p, int n, const YoungDiagram& d) {
  if (!in_gamma_n(p, n, d)) return 0;
  std::map<YoungDiagram, std::uint64_t> counts{{YoungDiagram(), 1}};
  for (int k = 1; k <= n; ++k) {
    std::map<YoungDiagram, std::uint64_t> next;
    for (const auto& lambda : gamma_n(p, k)) {
      std::uint64_t c = 0;
      for (const auto& prev : branch(p, k, lambda)) {
        if (auto it = counts.find(prev); it != counts.end()) c += it->second;
      }
      next[lambda] = c;
    }
    counts = std::move(next);
  }
  auto it = counts.find(d);
  return it == counts.end() ? 0 : it->second;
}

YoungDiagram pad(const Params& p, const YoungDiagram& d, int n) {
  const int s = d.size();
  if (n < s || (n - s) % p.N != 0) {
    throw DomainError("pad needs N | (n - |lambda|) and n >= |lambda|");
  }
  const int columns = (n - s) / p.N;
  if (columns == 0) return d;
  if (d.num_rows() > p.N) throw DomainError("pad needs at most N rows");
  std::vector<int> rows(p.N, 0);
  for (int i = 0; i < p.N; ++i) rows[i] = d.row(i + 1) + columns;
  return YoungDiagram(std::move(rows));
}

Weight weight(const Params& p, const YoungDiagram& d) {
  if (d.num_rows() > p.N) {
    throw DomainError("weight needs at most N rows, got " + d.to_string());
  }
  Weight w;
  w.coefficients.resize(p.N - 1);
  for (int i = 1; i < p.N; ++i) w.coefficients[i - 1] = d.row(i) - d.row(i + 1);
  // theta = alpha_1 + ... + alpha_{N-1}; every comark of SU(N) is 1.
  for (int c : w.coefficients) w.level += c;
  w.in_alcove = w.level >= 0 && w.level <= p.K;
  return w;
}

}  // namespace hsk
