#include "whopf/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>

namespace whopf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

void trim_zeros(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// Polynomial helpers over Q, lowest degree first, trimmed.
using Poly = std::vector<Rational>;

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim_zeros(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim_zeros(r);
  return r;
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim_zeros(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational lead_inv = b.back().inverse();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const Rational f = a[k] * lead_inv;
    q[k - b.size() + 1] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k - b.size() + 1 + j] -= f * b[j];
  }
  trim_zeros(q);
  trim_zeros(a);
  return {q, a};
}

Rational horner(const Poly& p, const Rational& x) {
  Rational acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Positive divisors of |n| (n nonzero) by trial division.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000000000"))
    throw Error(ErrorCode::Undecidable, "rational root search: coefficient too large to factor");
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::cyclotomic(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  if (n <= 2) return rational();
  return {FieldKind::Cyclotomic, n};
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("Q") : "Q(zeta_" + std::to_string(order) + ")";
}

FieldSpec join(const FieldSpec& a, const FieldSpec& b) {
  if (a.is_rational()) return b;
  if (b.is_rational() || a.order == b.order) return a;
  throw Error(ErrorCode::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials where the divisor is monic.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (std::size_t k = num.size(); k-- >= den.size();) {
    const long f = num[k];
    q[k - den.size() + 1] = f;
    for (std::size_t j = 0; j < den.size(); ++j) num[k - den.size() + 1 + j] -= f * den[j];
  }
  return q;
}

const std::vector<long>& cyclotomic_locked(int n, std::map<int, std::vector<long>>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = divide_monic(num, cyclotomic_locked(d, cache));
  return cache[n] = num;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<long>> cache;
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mutex);
  return cyclotomic_locked(n, cache);
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const { return v_.get_str(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  const mpz_class d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  mpq_class v(mpz_class{std::string(num)}, d);
  v.canonicalize();
  if (negative) v = -v;
  return Rational(v);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------- Cyclotomic

Cyclotomic::Cyclotomic(const Rational& r) {
  if (!r.is_zero()) c_.push_back(r);
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  normalize();
}

void Cyclotomic::normalize() {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  // phi is monic with integer coefficients: reduce from the top.
  for (std::size_t k = c_.size(); k-- > deg;) {
    if (c_[k].is_zero()) continue;
    const Rational f = c_[k];
    for (std::size_t j = 0; j < deg; ++j)
      if (phi[j] != 0) c_[k - deg + j] -= f * Rational(phi[j]);
    c_[k] = Rational();
  }
  trim_zeros(c_);
  if (order_ <= 2) order_ = 1;
}

Cyclotomic Cyclotomic::zeta(int order, long power) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  long k = power % order;
  if (k < 0) k += order;
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  c[static_cast<std::size_t>(k)] = Rational(1);
  return Cyclotomic(order, std::move(c));
}

namespace {

int common_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == b.order()) return a.order();
  if (a.order() == 1 || a.is_rational()) {
    if (b.order() == 1 || b.is_rational()) return std::max(a.order(), b.order());
    return b.order();
  }
  if (b.order() == 1 || b.is_rational()) return a.order();
  throw Error(ErrorCode::FieldMismatch,
              "Q(zeta_" + std::to_string(a.order()) + ") vs Q(zeta_" + std::to_string(b.order()) + ")");
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  order_ = common_order(*this, o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim_zeros(c_);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  order_ = common_order(*this, o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim_zeros(c_);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  order_ = common_order(*this, o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  if (o.c_.size() == 1) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (c_.size() == 1) {
    const Rational f = c_[0];
    c_ = o.c_;
    for (auto& x : c_) x *= f;
    return *this;
  }
  c_ = poly_mul(c_, o.c_);
  normalize();
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.c_ != b.c_) return false;
  if (a.order_ != b.order_ && !a.is_rational() && a.order_ != 1 && b.order_ != 1)
    throw Error(ErrorCode::FieldMismatch, "comparing elements of different cyclotomic fields");
  return true;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
  if (is_rational()) {
    Cyclotomic r(c_[0].inverse());
    r.order_ = order_;
    return r;
  }
  // Extended Euclid: find s with s*a = 1 mod Phi.
  const auto& phi_int = cyclotomic_polynomial(order_);
  Poly phi;
  for (long v : phi_int) phi.emplace_back(v);
  Poly r0 = phi, r1 = c_;
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Phi is irreducible.
  if (r0.size() != 1) throw Error(ErrorCode::DivisionByZero, "element not invertible modulo Phi");
  const Rational inv = r0[0].inverse();
  for (auto& x : s0) x *= inv;
  return Cyclotomic(order_, std::move(s0));
}

Cyclotomic Cyclotomic::embedded(int target) const {
  if (order_ == target || is_rational()) {
    Cyclotomic r = *this;
    r.order_ = target <= 2 ? 1 : target;
    return r;
  }
  if (target % order_ != 0)
    throw Error(ErrorCode::FieldMismatch, "Q(zeta_" + std::to_string(order_) + ") does not embed in Q(zeta_" +
                                              std::to_string(target) + ")");
  const std::size_t step = static_cast<std::size_t>(target / order_);
  std::vector<Rational> c((c_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i * step] = c_[i];
  return Cyclotomic(target, std::move(c));
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (is_rational()) return *this;
  long kk = k % order_;
  if (kk < 0) kk += order_;
  if (std::gcd(kk, static_cast<long>(order_)) != 1)
    throw Error(ErrorCode::InvalidArgument, "Galois exponent must be a unit modulo the order");
  Cyclotomic r;
  r.order_ = order_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    r += Cyclotomic(c_[i]) * zeta(order_, static_cast<long>(i) * kk);
  }
  r.order_ = order_;
  return r;
}

std::string Cyclotomic::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    std::string term;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (i == 0) {
      term = mag.to_string();
    } else {
      const std::string power = i == 1 ? "z" : "z^" + std::to_string(i);
      term = mag.is_one() ? power : mag.to_string() + "*" + power;
    }
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? "-" : "+") + term;
  }
  return out;
}

Cyclotomic Cyclotomic::parse(std::string_view text, int order) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw Error(ErrorCode::ParseError, "expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term = trim(s.substr(pos, end - pos));
    pos = end;
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + std::string(text) + "'");
    Rational coeff(1);
    std::size_t power = 0;
    const auto zpos = term.find('z');
    if (zpos == std::string_view::npos) {
      coeff = Rational::parse(term);
    } else {
      std::string_view head = trim(term.substr(0, zpos));
      std::string_view tail = trim(term.substr(zpos + 1));
      if (!head.empty()) {
        if (head.back() != '*') throw Error(ErrorCode::ParseError, "expected '*' before z in '" + std::string(text) + "'");
        head.remove_suffix(1);
        coeff = Rational::parse(head);
      }
      power = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') throw Error(ErrorCode::ParseError, "expected '^' after z in '" + std::string(text) + "'");
        tail = trim(tail.substr(1));
        if (!all_digits(tail) || tail.size() > 9)
          throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(text) + "'");
        power = std::stoul(std::string(tail));
      }
    }
    if (negative) coeff = -coeff;
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += coeff;
  }
  return Cyclotomic(std::max(order, 1), std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

// ---------------------------------------------------------------- roots

std::vector<Rational> rational_roots(const std::vector<Rational>& poly_in) {
  Poly p = poly_in;
  trim_zeros(p);
  if (p.empty()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  std::vector<Rational> roots;
  // Factor out x.
  std::size_t shift = 0;
  while (shift < p.size() && p[shift].is_zero()) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (p.size() <= 1) return roots;
  // Clear denominators.
  mpz_class den = 1;
  for (const auto& c : p) den = lcm(den, c.denominator());
  std::vector<mpz_class> ip;
  for (const auto& c : p) ip.push_back(mpz_class(c.value() * den));
  mpz_class g = 0;
  for (const auto& c : ip) g = gcd(g, c);
  for (auto& c : ip) c /= g;
  if (p.size() == 2) {
    roots.push_back(Rational(mpq_class(-ip[0], ip[1])));
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const auto pd = divisors(ip.front());
  const auto qd = divisors(ip.back());
  std::set<Rational> found;
  for (const auto& num : pd) {
    for (const auto& d : qd) {
      for (int sign : {1, -1}) {
        const Rational cand(mpq_class(sign * num, d));
        if (found.count(cand)) continue;
        if (horner(p, cand).is_zero()) found.insert(cand);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

Rational FieldOps<Rational>::parse(std::string_view text, const FieldSpec& field) {
  if (!field.is_rational()) throw Error(ErrorCode::FieldMismatch, "rational scalar type for " + field.to_string());
  return Rational::parse(text);
}

Rational FieldOps<Rational>::root_of_unity(const FieldSpec& field, int n) {
  if (!field.is_rational()) throw Error(ErrorCode::FieldMismatch, "rational scalar type for " + field.to_string());
  if (n == 1) return Rational(1);
  if (n == 2) return Rational(-1);
  throw Error(ErrorCode::FieldTooSmall, "Q has no primitive " + std::to_string(n) + "-th root of unity");
}

std::vector<Rational> FieldOps<Rational>::roots(const std::vector<Rational>& poly, const FieldSpec&) {
  return rational_roots(poly);
}

Cyclotomic FieldOps<Cyclotomic>::parse(std::string_view text, const FieldSpec& field) {
  return Cyclotomic::parse(text, field.is_rational() ? 1 : field.order);
}

bool FieldOps<Cyclotomic>::belongs(const Cyclotomic& x, const FieldSpec& field) {
  if (x.is_rational()) return true;
  return !field.is_rational() && x.order() == field.order;
}

Cyclotomic FieldOps<Cyclotomic>::root_of_unity(const FieldSpec& field, int n) {
  const int m = field.is_rational() ? 1 : field.order;
  const long L = lcm_long(2, m);
  if (n < 1 || L % n != 0)
    throw Error(ErrorCode::FieldTooSmall,
                field.to_string() + " has no primitive " + std::to_string(n) + "-th root of unity");
  // A primitive L-th root of unity expressed in Q(zeta_m).
  Cyclotomic zeta_l;
  if (L == m)
    zeta_l = Cyclotomic::zeta(m, 1);
  else if (m == 1)
    zeta_l = Cyclotomic(-1);
  else
    zeta_l = -Cyclotomic::zeta(m, (m + 1) / 2);
  Cyclotomic r(1);
  for (long k = 0; k < L / n; ++k) r *= zeta_l;
  return m > 2 ? r.embedded(m) : r;
}

std::vector<Cyclotomic> FieldOps<Cyclotomic>::roots(const std::vector<Cyclotomic>& poly_in,
                                                     const FieldSpec& field) {
  std::vector<Cyclotomic> poly = poly_in;
  while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
  if (poly.empty()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  const int m = field.is_rational() ? 1 : field.order;
  const long L = lcm_long(2, m);
  const Cyclotomic zeta_l = root_of_unity(field, static_cast<int>(L));
  const std::size_t width = static_cast<std::size_t>(totient(std::max(m, 1)));
  std::vector<Cyclotomic> out;
  Cyclotomic twist(1);  // zeta_l^k
  for (long k = 0; k < L; ++k, twist *= zeta_l) {
    // q(X) = p(twist * X), split into rational component polynomials.
    std::vector<Poly> components(width);
    Cyclotomic power(1);
    for (std::size_t i = 0; i < poly.size(); ++i, power *= twist) {
      const Cyclotomic c = poly[i] * power;
      for (std::size_t j = 0; j < width; ++j) {
        Rational v = j < c.coefficients().size() ? c.coefficients()[j] : Rational();
        if (components[j].size() <= i) components[j].resize(i + 1);
        components[j][i] = v;
      }
    }
    for (auto& comp : components) trim_zeros(comp);
    const Poly* driver = nullptr;
    for (const auto& comp : components)
      if (!comp.empty()) {
        driver = &comp;
        break;
      }
    if (driver == nullptr) continue;
    for (const Rational& r : rational_roots(*driver)) {
      bool all = true;
      for (const auto& comp : components)
        if (!comp.empty() && !horner(comp, r).is_zero()) {
          all = false;
          break;
        }
      if (!all) continue;
      const Cyclotomic root = Cyclotomic(r) * twist;
      if (std::find(out.begin(), out.end(), root) == out.end()) out.push_back(root);
    }
  }
  return out;
}

}  // namespace whopf
