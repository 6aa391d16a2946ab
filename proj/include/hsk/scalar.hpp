#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta), zeta = exp(2 pi i / m),
// m = 2N(N+K). Every fractional power of q used by the library is a power of
// zeta: q^{1/2N} = zeta, q^{1/2} = zeta^N, q = zeta^{2N}.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace hsk {

struct Params {
  int N = 2;
  int K = 1;

  Params() = default;
  // Throws DomainError unless N >= 2 and K >= 1.
  Params(int n, int k);

  // Order of zeta.
  int m() const { return 2 * N * (N + K); }

  friend bool operator==(const Params&, const Params&) = default;
};

// Q(zeta_m) presented as Q[x] / Phi_m(x). Instances are interned per m and
// never destroyed, so Scalars may hold raw pointers to them.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int m);

  int order() const { return m_; }
  int degree() const { return phi_; }
  // Coefficients of Phi_m, lowest degree first; length degree()+1, monic.
  const std::vector<long>& cyclotomic_polynomial() const { return cyclo_; }
  // Canonical representation of zeta^j for 0 <= j < m (length degree()).
  const std::vector<long>& power(int j) const { return powers_[j]; }
  // Exponents k in [1, m) coprime to m; zeta -> zeta^k are the automorphisms.
  const std::vector<int>& units() const { return units_; }

 private:
  explicit CyclotomicField(int m);

  int m_;
  int phi_;
  std::vector<long> cyclo_;
  std::vector<std::vector<long>> powers_;
  std::vector<int> units_;
};

// Element (1/den) * sum_i num[i] zeta^i with deg < phi(m), den > 0 and
// gcd(den, num...) = 1. Zero has an empty numerator vector and may have no
// field attached; any binary operation adopts the field of its operands.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const CyclotomicField& f);
  static Scalar integer(const CyclotomicField& f, long value);
  static Scalar rational(const CyclotomicField& f, const mpq_class& value);
  // zeta^k, k taken modulo m (negative k allowed).
  static Scalar zeta_power(const CyclotomicField& f, long k);
  // Builds and normalizes (1/den) * sum num[i] zeta^i; num may be any length.
  static Scalar from_parts(const CyclotomicField& f, mpz_class den,
                           std::vector<mpz_class> num);

  const CyclotomicField* field() const { return field_; }
  bool is_zero() const { return num_.empty(); }
  const mpz_class& denominator() const { return den_; }
  // Length degree() for nonzero values, empty for zero.
  const std::vector<mpz_class>& numerators() const { return num_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
  }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // this * zeta^k without a general multiplication.
  Scalar times_zeta(long k) const;
  Scalar times_integer(long c) const;

  // Throws DomainError on zero.
  Scalar inverse() const;
  // Image under zeta -> zeta^{-1}; complex conjugation under embed().
  Scalar conjugate() const;
  // Image under zeta -> zeta^k, gcd(k, m) = 1.
  Scalar galois(int k) const;

  // Value at zeta = exp(2 pi i / m). Reporting and numerical checks only.
  std::complex<double> embed() const;

  bool is_rational() const;
  std::optional<mpq_class> to_rational() const;
  // Set when the value is an integer fitting in long.
  std::optional<long> to_integer() const;

  // Rough size measure (total bits of numerators and denominator).
  std::size_t bit_size() const;

 private:
  void normalize();
  void adopt_field(const Scalar& other);

  const CyclotomicField* field_ = nullptr;
  mpz_class den_ = 1;
  std::vector<mpz_class> num_;
};

// Field attached to the parameters.
const CyclotomicField& field_of(const Params& p);

// zeta^k for the parameter field; q^{a/2N} = zeta(p, a).
Scalar zeta(const Params& p, long k);
// q^{e} for integer e.
Scalar q_power(const Params& p, long e);
Scalar integer(const Params& p, long value);

// Balanced quantum integer [j] = q^{(j-1)/2} + q^{(j-3)/2} + ... + q^{-(j-1)/2}.
Scalar qint(const Params& p, int j);
// [n]! = [1][2]...[n], [0]! = 1.
Scalar qfact(const Params& p, int n);

}  // namespace hsk
