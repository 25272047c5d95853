#pragma once

// Exact base fields: arbitrary precision rationals and cyclotomic fields Q(zeta_n).

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "whopf/error.hpp"

namespace whopf {

enum class FieldKind { Rational, Cyclotomic };

/// Which exact field an algebra lives over. Q(zeta_1) and Q(zeta_2) are both Q and
/// are canonicalized to the rational kind.
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  int order = 1;

  static FieldSpec rational() { return {}; }
  static FieldSpec cyclotomic(int n);

  bool is_rational() const { return kind == FieldKind::Rational; }
  std::string to_string() const;
  bool operator==(const FieldSpec&) const = default;
};

/// Smallest common field of two specs; throws FieldMismatch when neither contains the other.
FieldSpec join(const FieldSpec& a, const FieldSpec& b);

/// Euler phi.
int totient(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& v) : v_(v) {}
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" or "p/q" in lowest terms.
  std::string to_string() const;
  /// Accepts "p", "p/q" with optional sign and surrounding whitespace.
  static Rational parse(std::string_view text);

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// An element of Q(zeta_n), stored as its residue modulo the n-th cyclotomic polynomial
/// (coefficients in the power basis 1, z, ..., z^(phi(n)-1), trailing zeros trimmed).
///
/// Values built from integers or rationals have order 1 and act as constants in every
/// cyclotomic field: mixing them with an order-n value promotes them. Mixing two
/// different orders > 1 raises FieldMismatch.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(const Rational& r);
  /// Reduces the given polynomial in z modulo Phi_order.
  Cyclotomic(int order, std::vector<Rational> coeffs);

  /// zeta_n^k in Q(zeta_n).
  static Cyclotomic zeta(int order, long power = 1);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_rational() const { return c_.size() <= 1; }
  /// Constant term; only meaningful when is_rational().
  Rational rational_part() const { return c_.empty() ? Rational() : c_[0]; }
  Cyclotomic inverse() const;
  /// Re-express in Q(zeta_target) where order() divides the target (or is 1).
  Cyclotomic embedded(int target) const;
  /// Image under the Galois automorphism zeta -> zeta^k, gcd(k, order) = 1.
  Cyclotomic galois(long k) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Polynomial in z, e.g. "-1-z", "1/2*z^2", "3".
  std::string to_string() const;
  /// Grammar: sum of terms "c", "c*z^k", "z^k", "z", where c is "p" or "p/q".
  /// Exponents at or above phi(n) are reduced modulo Phi_n.
  static Cyclotomic parse(std::string_view text, int order);

 private:
  void normalize();
  int order_ = 1;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

/// Field-dependent operations the generic algorithms need.
template <class S>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static Rational parse(std::string_view text, const FieldSpec& field);
  static std::string format(const Rational& x) { return x.to_string(); }
  static bool belongs(const Rational&, const FieldSpec& field) { return field.is_rational(); }
  /// Primitive n-th root of unity; throws FieldTooSmall for n > 2.
  static Rational root_of_unity(const FieldSpec& field, int n);
  /// Distinct roots in the field of a polynomial (coefficients lowest degree first).
  static std::vector<Rational> roots(const std::vector<Rational>& poly, const FieldSpec& field);
};

template <>
struct FieldOps<Cyclotomic> {
  static Cyclotomic parse(std::string_view text, const FieldSpec& field);
  static std::string format(const Cyclotomic& x) { return x.to_string(); }
  static bool belongs(const Cyclotomic& x, const FieldSpec& field);
  /// Primitive n-th root of unity; needs n | lcm(2, field order).
  static Cyclotomic root_of_unity(const FieldSpec& field, int n);
  /// Roots of the form r * zeta^k (r rational) of a polynomial over the field. Roots of
  /// other shapes are not found; callers treat a short root list as non-splitting.
  static std::vector<Cyclotomic> roots(const std::vector<Cyclotomic>& poly, const FieldSpec& field);
};

/// Divisors-based rational root search for a polynomial with rational coefficients.
std::vector<Rational> rational_roots(const std::vector<Rational>& poly);

}  // namespace whopf

namespace Eigen {

template <>
struct NumTraits<whopf::Rational> : GenericNumTraits<whopf::Rational> {
  using Real = whopf::Rational;
  using NonInteger = whopf::Rational;
  using Nested = whopf::Rational;
  using Literal = whopf::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<whopf::Cyclotomic> : GenericNumTraits<whopf::Cyclotomic> {
  using Real = whopf::Cyclotomic;
  using NonInteger = whopf::Cyclotomic;
  using Nested = whopf::Cyclotomic;
  using Literal = whopf::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
