#include "eqrr/exact.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eqrr/error.hpp"

namespace eqrr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t checked_mul_sub(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_sub_overflow(acc, prod, &out)) {
    throw std::overflow_error("cyclotomic reduction table overflows int64");
  }
  return out;
}

// Per-conductor data: Phi_n and the reductions x^k mod Phi_n for 0 <= k < n.
struct Basis {
  int conductor = 1;
  int degree = 1;
  std::vector<std::int64_t> polynomial;
  std::vector<std::vector<std::int64_t>> power_mod;
};

std::vector<std::int64_t> compute_polynomial(int n);

class BasisCache {
 public:
  const Basis& get(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return *it->second;
    return *cache_.emplace(n, build(n)).first->second;
  }

 private:
  std::unique_ptr<Basis> build(int n) {
    auto basis = std::make_unique<Basis>();
    basis->conductor = n;
    basis->polynomial = polynomial_locked(n);
    basis->degree = static_cast<int>(basis->polynomial.size()) - 1;
    const int deg = basis->degree;
    basis->power_mod.reserve(n);
    std::vector<std::int64_t> row(deg, 0);
    row[0] = 1;
    for (int k = 0; k < n; ++k) {
      basis->power_mod.push_back(row);
      // Multiply by x and reduce the overflow coefficient by the monic Phi_n.
      std::int64_t top = row[deg - 1];
      for (int i = deg - 1; i > 0; --i) row[i] = row[i - 1];
      row[0] = 0;
      if (top != 0) {
        for (int i = 0; i < deg; ++i) {
          row[i] = checked_mul_sub(row[i], top, basis->polynomial[i]);
        }
      }
    }
    return basis;
  }

  // Called with mutex_ held.
  const std::vector<std::int64_t>& polynomial_locked(int n) {
    auto it = polynomials_.find(n);
    if (it != polynomials_.end()) return it->second;
    // x^n - 1 = prod_{d | n} Phi_d(x); divide out the proper divisors.
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      const std::vector<std::int64_t> divisor = polynomial_locked(d);
      const int dd = static_cast<int>(divisor.size()) - 1;
      const int dp = static_cast<int>(p.size()) - 1;
      std::vector<std::int64_t> q(dp - dd + 1, 0);
      for (int i = dp; i >= dd; --i) {
        const std::int64_t c = p[i];
        q[i - dd] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) p[i - dd + j] = checked_mul_sub(p[i - dd + j], c, divisor[j]);
      }
      p = std::move(q);
    }
    return polynomials_.emplace(n, std::move(p)).first->second;
  }

  std::mutex mutex_;
  std::map<int, std::unique_ptr<Basis>> cache_;
  std::map<int, std::vector<std::int64_t>> polynomials_;
};

BasisCache& basis_cache() {
  static BasisCache cache;
  return cache;
}

const Basis& basis(int n) { return basis_cache().get(n); }

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s(trim(text));
  if (s.empty()) throw ValidationError("empty rational literal");
  const auto slash = s.find('/');
  Rational q;
  try {
    if (slash == std::string::npos) {
      q = Rational(Integer(s, 10));
    } else {
      Integer num(s.substr(0, slash), 10);
      Integer den(s.substr(slash + 1), 10);
      if (den == 0) throw ValidationError("zero denominator in rational literal '" + s + "'");
      q = Rational(num, den);
      q.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed rational literal '" + s + "'");
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::optional<std::int64_t> to_int64(const Rational& q) {
  if (q.get_den() != 1) return std::nullopt;
  const Integer& num = q.get_num();
  if (!num.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(num.get_si());
}

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  if (n < 1) throw ValidationError("invalid conductor " + std::to_string(n));
  return basis(n).polynomial;
}

int totient(int n) {
  if (n < 1) throw ValidationError("invalid conductor " + std::to_string(n));
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(Rational value) : conductor_(1), coeffs_{std::move(value)} {}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::reduce(int n, const std::vector<Rational>& by_exponent) {
  const Basis& b = basis(n);
  std::vector<Rational> out(b.degree);
  Rational term;
  for (int k = 0; k < n; ++k) {
    const Rational& c = by_exponent[k];
    if (sgn(c) == 0) continue;
    const auto& row = b.power_mod[k];
    for (int i = 0; i < b.degree; ++i) {
      if (row[i] == 0) continue;
      if (row[i] == 1) {
        out[i] += c;
      } else if (row[i] == -1) {
        out[i] -= c;
      } else {
        term = c * static_cast<long>(row[i]);
        out[i] += term;
      }
    }
  }
  Cyclotomic result(n, std::move(out));
  result.shrink_if_rational();
  return result;
}

void Cyclotomic::shrink_if_rational() {
  if (conductor_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return;
  }
  Rational q = coeffs_.empty() ? Rational(0) : coeffs_[0];
  conductor_ = 1;
  coeffs_.assign(1, std::move(q));
}

Cyclotomic Cyclotomic::root_of_unity(int n, std::int64_t k) {
  if (n < 1) throw ValidationError("invalid conductor " + std::to_string(n));
  std::int64_t e = k % n;
  if (e < 0) e += n;
  const auto g = static_cast<int>(std::gcd<std::int64_t>(e, n));
  const int m = n / g;
  e /= g;
  std::vector<Rational> raw(m);
  raw[e] = 1;
  return reduce(m, raw);
}

Cyclotomic Cyclotomic::from_terms(int n, const std::vector<std::pair<std::int64_t, Rational>>& terms) {
  if (n < 1) throw ValidationError("invalid conductor " + std::to_string(n));
  std::vector<Rational> raw(n);
  for (const auto& [exp, q] : terms) {
    std::int64_t e = exp % n;
    if (e < 0) e += n;
    raw[e] += q;
  }
  return reduce(n, raw);
}

std::map<int, Rational> Cyclotomic::coefficient_map() const {
  std::map<int, Rational> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) out.emplace(static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::optional<Rational> Cyclotomic::to_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return std::nullopt;
  }
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::embed(int n) const {
  if (n < 1 || n % conductor_ != 0) {
    throw std::invalid_argument("cannot embed conductor " + std::to_string(conductor_) +
                                " into " + std::to_string(n));
  }
  if (n == conductor_) return *this;
  if (auto q = to_rational()) {
    // Rationals have the same representation at every conductor.
    std::vector<Rational> c(basis(n).degree);
    c[0] = *q;
    return Cyclotomic(n, std::move(c));
  }
  const int step = n / conductor_;
  std::vector<Rational> raw(n);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) raw[e * step] = coeffs_[e];
  Cyclotomic out = reduce(n, raw);
  return out;
}

Cyclotomic Cyclotomic::galois(std::int64_t u) const {
  const int n = conductor_;
  if (n == 1) return *this;
  std::int64_t uu = u % n;
  if (uu < 0) uu += n;
  if (std::gcd<std::int64_t>(uu, n) != 1) {
    throw std::invalid_argument("Galois exponent must be coprime to the conductor");
  }
  std::vector<Rational> raw(n);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (sgn(coeffs_[e]) == 0) continue;
    raw[(static_cast<std::int64_t>(e) * uu) % n] += coeffs_[e];
  }
  return reduce(n, raw);
}

Cyclotomic Cyclotomic::conjugate() const { return galois(-1); }

bool Cyclotomic::lies_in(int d) const {
  if (d < 1) throw ValidationError("invalid conductor " + std::to_string(d));
  if (conductor_ == 1 || d % conductor_ == 0) return true;
  const int n = lcm_conductor(conductor_, d);
  const Cyclotomic lifted = embed(n);
  for (int u = 1; u < n; u += d) {
    if (std::gcd(u, n) != 1) continue;
    if (!(lifted.galois(u) == lifted)) return false;
  }
  return true;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (conductor_ != other.conductor_) {
    const int n = lcm_conductor(conductor_, other.conductor_);
    if (n != conductor_) *this = embed(n);
    if (n != other.conductor_) return *this += other.embed(n);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  shrink_if_rational();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    *this = Cyclotomic();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (auto q = other.to_rational()) return *this *= *q;
  if (auto q = to_rational()) {
    Cyclotomic result = other;
    result *= *q;
    *this = std::move(result);
    return *this;
  }
  const int n = lcm_conductor(conductor_, other.conductor_);
  const Cyclotomic a = conductor_ == n ? std::move(*this) : embed(n);
  const Cyclotomic b = other.conductor_ == n ? other : other.embed(n);
  std::vector<Rational> raw(n);
  Rational term;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      term = a.coeffs_[i] * b.coeffs_[j];
      raw[(i + j) % n] += term;
    }
  }
  *this = reduce(n, raw);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const int n = lcm_conductor(a.conductor_, b.conductor_);
  return a.embed(n).coeffs_ == b.embed(n).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const Rational& c = coeffs_[e];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'z' << conductor_ << '^' << e;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace eqrr
