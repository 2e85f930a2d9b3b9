#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace modbranch {

/// Requested scalar does not exist in the field. When a finite extension
/// would contain it, suggested_degree holds the minimal degree that works;
/// otherwise it is 0.
class FieldError : public std::runtime_error {
 public:
  explicit FieldError(const std::string& msg, long long suggested = 0)
      : std::runtime_error(msg), suggested_degree(suggested) {}
  long long suggested_degree;
};

namespace detail {

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<long long> prime_factors(long long m) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) out.push_back(m);
  return out;
}

/// Order of a in the unit group mod m; pre: gcd(a, m) = 1.
inline long long multiplicative_order(long long a, long long m) {
  if (m == 1) return 1;
  long long v = ((a % m) + m) % m, ord = 1;
  while (v != 1) {
    v = (v * a) % m;
    ++ord;
  }
  return ord;
}

/// Remainder of a by monic b over Z/p; coefficients little-endian.
inline std::vector<long long> poly_rem(std::vector<long long> a,
                                       const std::vector<long long>& b,
                                       long long p) {
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) > db) {
    const long long lead = a.back() % p;
    const int shift = static_cast<int>(a.size()) - 1 - db;
    if (lead != 0)
      for (int j = 0; j <= db; ++j)
        a[shift + j] = ((a[shift + j] - lead * b[j]) % p + p) % p;
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

/// Trial division by every monic polynomial of degree <= deg(f)/2.
inline bool is_irreducible(const std::vector<long long>& f, long long p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<long long> g(d + 1, 0);
      long long t = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Monic irreducible of degree k over Z/p whose coefficient tuple
/// (c0, ..., c_{k-1}) is lexicographically smallest, constant term
/// compared first. Returns the k low coefficients.
inline std::vector<long long> smallest_irreducible(long long p, int k) {
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (long long n = 0; n < total; ++n) {
    std::vector<long long> f(k + 1, 0);
    long long t = n;
    for (int i = k - 1; i >= 0; --i) {
      f[i] = t % p;
      t /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p))
      return std::vector<long long>(f.begin(), f.begin() + k);
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace detail

/// The rational numbers with exact arithmetic.
class RationalField {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  long long characteristic() const { return 0; }
  int extension_degree() const { return 1; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  /// Only 1 and -1 are roots of unity in the rationals.
  Elem root_of_unity(long long m) const {
    if (m < 1) throw std::invalid_argument("order must be >= 1");
    if (m == 1) return one();
    if (m == 2) return Elem(-1);
    throw FieldError("the rationals contain no root of unity of order " +
                     std::to_string(m) + "; use a finite field");
  }

  std::string to_text(const Elem& a) const {
    return boost::multiprecision::numerator(a).str() + "/" +
           boost::multiprecision::denominator(a).str();
  }

  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// The finite field with p^k elements. Elements are packed base-p digit
/// strings (constant coefficient in the lowest digit) relative to a fixed
/// monic irreducible of degree k, chosen canonically at construction.
class PrimePowerField {
 public:
  using Elem = std::uint64_t;

  PrimePowerField(long long p, int k) : p_(p), k_(k) {
    if (!detail::is_prime(p))
      throw std::invalid_argument("characteristic must be prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < k; ++i) {
      if (q_ > (1LL << 31) / p)
        throw std::invalid_argument("field too large: p^k must stay below 2^31");
      q_ *= p;
    }
    if (k_ > 1) {
      poly_ = detail::smallest_irreducible(p, k);
      std::vector<long long> xk(k_);
      for (int j = 0; j < k_; ++j) xk[j] = (p_ - poly_[j]) % p_;
      xpow_.push_back(xk);
      for (int i = 1; i <= k_ - 2; ++i) {
        const auto prev = xpow_.back();
        std::vector<long long> cur(k_, 0);
        for (int j = k_ - 1; j >= 1; --j) cur[j] = prev[j - 1];
        for (int j = 0; j < k_; ++j) cur[j] = (cur[j] + prev[k_ - 1] * xk[j]) % p_;
        xpow_.push_back(cur);
      }
    }
  }

  long long characteristic() const { return p_; }
  int extension_degree() const { return k_; }
  long long order() const { return q_; }

  /// Low k coefficients of the monic defining polynomial; empty when k = 1.
  const std::vector<long long>& defining_polynomial() const { return poly_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    return static_cast<Elem>(((v % p_) + p_) % p_);
  }

  Elem add(Elem a, Elem b) const {
    auto da = digits(a);
    const auto db = digits(b);
    for (int i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return pack(da);
  }
  Elem neg(Elem a) const {
    auto da = digits(a);
    for (auto& d : da) d = (p_ - d) % p_;
    return pack(da);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (k_ == 1)
      return static_cast<Elem>(
          (static_cast<unsigned __int128>(a) * b) % static_cast<unsigned long long>(p_));
    const auto da = digits(a);
    const auto db = digits(b);
    std::vector<long long> c(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
      if (!da[i]) continue;
      for (int j = 0; j < k_; ++j) c[i + j] += da[i] * db[j];
    }
    for (auto& v : c) v %= p_;
    for (int i = 2 * k_ - 2; i >= k_; --i) {
      if (!c[i]) continue;
      const auto& xp = xpow_[i - k_];
      for (int j = 0; j < k_; ++j) c[j] = (c[j] + c[i] * xp[j]) % p_;
    }
    c.resize(k_);
    return pack(c);
  }

  Elem pow(Elem a, long long e) const {
    if (e < 0) throw std::invalid_argument("exponent must be >= 0");
    Elem r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return pow(a, q_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  /// Canonical enumeration of the field: index written base p with the
  /// constant coefficient as the most significant digit. Index 0 is 0.
  Elem element_at(long long index) const {
    if (index < 0 || index >= q_)
      throw std::invalid_argument("element index out of range");
    std::vector<long long> d(k_);
    for (int i = k_ - 1; i >= 0; --i) {
      d[i] = index % p_;
      index /= p_;
    }
    return pack(d);
  }

  /// First element of multiplicative order exactly m in enumeration order.
  Elem root_of_unity(long long m) const {
    if (m < 1) throw std::invalid_argument("order must be >= 1");
    if (m == 1) return one();
    if (m % p_ == 0)
      throw FieldError(
          "no root of unity of order divisible by the characteristic");
    if ((q_ - 1) % m != 0)
      throw FieldError(
          "GF(" + std::to_string(q_) + ") has no element of order " +
              std::to_string(m),
          detail::multiplicative_order(p_, m));
    const auto factors = detail::prime_factors(m);
    for (long long idx = 1; idx < q_; ++idx) {
      const Elem e = element_at(idx);
      if (!eq(pow(e, m), one())) continue;
      bool exact = true;
      for (long long f : factors)
        if (eq(pow(e, m / f), one())) {
          exact = false;
          break;
        }
      if (exact) return e;
    }
    throw std::logic_error("root of unity search failed");
  }

  /// k = 1: the residue as a decimal integer. k > 1: the coefficient list
  /// "[c0,c1,...]".
  std::string to_text(Elem a) const {
    if (k_ == 1) return std::to_string(a);
    const auto d = digits(a);
    std::string s = "[";
    for (int i = 0; i < k_; ++i) {
      if (i) s += ',';
      s += std::to_string(d[i]);
    }
    return s + "]";
  }

  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

  friend bool operator==(const PrimePowerField& a, const PrimePowerField& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  std::vector<long long> digits(Elem e) const {
    std::vector<long long> d(k_);
    for (int i = 0; i < k_; ++i) {
      d[i] = static_cast<long long>(e % static_cast<Elem>(p_));
      e /= static_cast<Elem>(p_);
    }
    return d;
  }

  Elem pack(const std::vector<long long>& d) const {
    Elem e = 0;
    for (int i = k_ - 1; i >= 0; --i)
      e = e * static_cast<Elem>(p_) + static_cast<Elem>(d[i]);
    return e;
  }

  long long p_;
  int k_;
  long long q_ = 1;
  std::vector<long long> poly_;
  std::vector<std::vector<long long>> xpow_;  // x^k .. x^{2k-2} mod the poly
};

using Field = std::variant<RationalField, PrimePowerField>;

/// p = 0 (with k = 1) gives the rationals; prime p gives GF(p^k).
inline Field make_field(long long p, int k) {
  if (p == 0) {
    if (k != 1)
      throw std::invalid_argument("k must be 1 when p = 0");
    return RationalField{};
  }
  return PrimePowerField(p, k);
}

template <class F>
typename F::Elem root_of_unity(const F& f, long long m) {
  return f.root_of_unity(m);
}

}  // namespace modbranch
