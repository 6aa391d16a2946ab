#include "hsk/scalar.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "hsk/error.hpp"

namespace hsk {

Params::Params(int n, int k) : N(n), K(k) {
  if (n < 2) throw DomainError("N must be at least 2, got " + std::to_string(n));
  if (k < 1) throw DomainError("K must be at least 1, got " + std::to_string(k));
}

namespace {

using Poly = std::vector<long>;

// Exact quotient of a by the monic polynomial b.
Poly divide_monic(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  Poly quotient(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const long c = a[i];
    quotient[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw InternalError("cyclotomic division left a remainder");
  }
  return quotient;
}

Poly cyclotomic(int m, std::map<int, Poly>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_monic(p, cyclotomic(d, memo));
  }
  memo[m] = p;
  return p;
}

}  // namespace

CyclotomicField::CyclotomicField(int m) : m_(m) {
  std::map<int, Poly> memo;
  cyclo_ = cyclotomic(m, memo);
  phi_ = static_cast<int>(cyclo_.size()) - 1;
  for (int k = 1; k < m; ++k) {
    if (std::gcd(k, m) == 1) units_.push_back(k);
  }
  if (m == 1) units_.push_back(0);

  powers_.assign(m, Poly(phi_, 0));
  Poly cur(phi_, 0);
  cur[0] = 1;
  for (int j = 0; j < m; ++j) {
    powers_[j] = cur;
    // cur *= x, then reduce the x^phi term with the monic Phi_m.
    const long top = cur[phi_ - 1];
    for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi_; ++i) cur[i] -= top * cyclo_[i];
    }
  }
}

const CyclotomicField& CyclotomicField::get(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard lock(mutex);
  auto& slot = fields[m];
  if (!slot) slot.reset(new CyclotomicField(m));
  return *slot;
}

namespace {

void add_scaled(mpz_class& target, const mpz_class& value, long c) {
  if (c > 0) {
    mpz_addmul_ui(target.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(c));
  } else if (c < 0) {
    mpz_submul_ui(target.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(-c));
  }
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Scalar Scalar::zero(const CyclotomicField& f) {
  Scalar s;
  s.field_ = &f;
  return s;
}

Scalar Scalar::integer(const CyclotomicField& f, long value) {
  Scalar s = zero(f);
  if (value == 0) return s;
  s.num_.assign(f.degree(), mpz_class(0));
  s.num_[0] = value;
  return s;
}

Scalar Scalar::rational(const CyclotomicField& f, const mpq_class& value) {
  Scalar s = zero(f);
  if (value == 0) return s;
  s.num_.assign(f.degree(), mpz_class(0));
  s.num_[0] = value.get_num();
  s.den_ = value.get_den();
  return s;
}

Scalar Scalar::zeta_power(const CyclotomicField& f, long k) {
  Scalar s = zero(f);
  const auto& rep = f.power(static_cast<int>(mod(k, f.order())));
  s.num_.assign(rep.begin(), rep.end());
  return s;
}

Scalar Scalar::from_parts(const CyclotomicField& f, mpz_class den,
                          std::vector<mpz_class> num) {
  if (den == 0) throw DomainError("scalar denominator must be nonzero");
  Scalar s = zero(f);
  const int phi = f.degree();
  s.num_.assign(phi, mpz_class(0));
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    if (static_cast<int>(i) < phi) {
      s.num_[i] += num[i];
    } else {
      const auto& rep = f.power(static_cast<int>(i % f.order()));
      for (int j = 0; j < phi; ++j) add_scaled(s.num_[j], num[i], rep[j]);
    }
  }
  if (den < 0) {
    den = -den;
    for (auto& c : s.num_) c = -c;
  }
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  bool all_zero = true;
  for (const auto& c : num_) {
    if (sgn(c) != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    num_.clear();
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  for (auto& c : num_) {
    if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

void Scalar::adopt_field(const Scalar& other) {
  if (field_ == nullptr) field_ = other.field_;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  adopt_field(rhs);
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    num_ = rhs.num_;
    den_ = rhs.den_;
    return *this;
  }
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), rhs.den_.get_mpz_t());
    const mpz_class a = rhs.den_ / g;
    const mpz_class b = den_ / g;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= a;
      mpz_addmul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), b.get_mpz_t());
    }
    den_ *= a;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  adopt_field(rhs);
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    *this = -rhs;
    return *this;
  }
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] -= rhs.num_[i];
  } else {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), rhs.den_.get_mpz_t());
    const mpz_class a = rhs.den_ / g;
    const mpz_class b = den_ / g;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= a;
      mpz_submul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), b.get_mpz_t());
    }
    den_ *= a;
  }
  normalize();
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.field_ = a.field_ ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return r;
  const CyclotomicField& f = *r.field_;
  const int phi = f.degree();

  thread_local std::vector<mpz_class> prod;
  if (static_cast<int>(prod.size()) < 2 * phi - 1) prod.resize(2 * phi - 1);
  for (int i = 0; i < 2 * phi - 1; ++i) prod[i] = 0;
  for (int i = 0; i < phi; ++i) {
    if (sgn(a.num_[i]) == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (sgn(b.num_[j]) == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  r.num_.assign(prod.begin(), prod.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& rep = f.power(k);
    for (int i = 0; i < phi; ++i) add_scaled(r.num_[i], prod[k], rep[i]);
  }
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  *this = *this * rhs;
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.den_ == b.den_ && a.num_ == b.num_;
}

Scalar Scalar::times_zeta(long k) const {
  if (is_zero()) return *this;
  const CyclotomicField& f = *field_;
  const int phi = f.degree();
  const long m = f.order();
  const long shift = mod(k, m);
  Scalar r = zero(f);
  r.num_.assign(phi, mpz_class(0));
  r.den_ = den_;
  for (int i = 0; i < phi; ++i) {
    if (sgn(num_[i]) == 0) continue;
    const long j = (i + shift) % m;
    if (j < phi) {
      r.num_[j] += num_[i];
    } else {
      const auto& rep = f.power(static_cast<int>(j));
      for (int t = 0; t < phi; ++t) add_scaled(r.num_[t], num_[i], rep[t]);
    }
  }
  r.normalize();
  return r;
}

Scalar Scalar::times_integer(long c) const {
  if (is_zero()) return *this;
  if (c == 0) return zero(*field_);
  Scalar r = *this;
  for (auto& v : r.num_) v *= c;
  r.normalize();
  return r;
}

Scalar Scalar::galois(int k) const {
  if (is_zero()) return *this;
  const CyclotomicField& f = *field_;
  const int phi = f.degree();
  const long m = f.order();
  Scalar r = zero(f);
  r.num_.assign(phi, mpz_class(0));
  r.den_ = den_;
  for (int i = 0; i < phi; ++i) {
    if (sgn(num_[i]) == 0) continue;
    const auto& rep = f.power(static_cast<int>(mod(static_cast<long>(k) * i, m)));
    for (int t = 0; t < phi; ++t) add_scaled(r.num_[t], num_[i], rep[t]);
  }
  r.normalize();
  return r;
}

Scalar Scalar::conjugate() const {
  if (is_zero()) return *this;
  return galois(field_->order() - 1);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero (vanishing scalar)");
  const CyclotomicField& f = *field_;
  // x^{-1} = prod_{k != 1} sigma_k(x) / Norm(x).
  Scalar others = integer(f, 1);
  for (int k : f.units()) {
    if (k == 1) continue;
    others *= galois(k);
  }
  const Scalar norm = *this * others;
  auto value = norm.to_rational();
  if (!value) throw InternalError("field norm is not rational");
  const mpq_class inv = 1 / *value;
  Scalar r = others;
  for (auto& c : r.num_) c *= inv.get_num();
  r.den_ *= inv.get_den();
  r.normalize();
  return r;
}

std::complex<double> Scalar::embed() const {
  if (is_zero()) return {0.0, 0.0};
  const double m = field_->order();
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (sgn(num_[i]) == 0) continue;
    const double c = mpq_class(num_[i], den_).get_d();
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / m;
    acc += c * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (sgn(num_[i]) != 0) return false;
  }
  return true;
}

std::optional<mpq_class> Scalar::to_rational() const {
  if (is_zero()) return mpq_class(0);
  if (!is_rational()) return std::nullopt;
  mpq_class q(num_[0], den_);
  q.canonicalize();
  return q;
}

std::optional<long> Scalar::to_integer() const {
  if (is_zero()) return 0L;
  if (!is_rational() || den_ != 1 || !num_[0].fits_slong_p()) return std::nullopt;
  return num_[0].get_si();
}

std::size_t Scalar::bit_size() const {
  std::size_t bits = mpz_sizeinbase(den_.get_mpz_t(), 2);
  for (const auto& c : num_) {
    if (sgn(c) != 0) bits += mpz_sizeinbase(c.get_mpz_t(), 2);
  }
  return bits;
}

const CyclotomicField& field_of(const Params& p) {
  return CyclotomicField::get(p.m());
}

Scalar zeta(const Params& p, long k) {
  return Scalar::zeta_power(field_of(p), k);
}

Scalar q_power(const Params& p, long e) {
  return zeta(p, 2L * p.N * e);
}

Scalar integer(const Params& p, long value) {
  return Scalar::integer(field_of(p), value);
}

Scalar qint(const Params& p, int j) {
  if (j < 0) throw DomainError("quantum integer needs j >= 0");
  Scalar acc = Scalar::zero(field_of(p));
  // q^{(j-1-2k)/2} = zeta^{N (j-1-2k)}
  for (int k = 0; k < j; ++k) acc += zeta(p, static_cast<long>(p.N) * (j - 1 - 2 * k));
  return acc;
}

Scalar qfact(const Params& p, int n) {
  if (n < 0) throw DomainError("quantum factorial needs n >= 0");
  Scalar acc = integer(p, 1);
  for (int j = 2; j <= n; ++j) acc *= qint(p, j);
  return acc;
}

}  // namespace hsk
