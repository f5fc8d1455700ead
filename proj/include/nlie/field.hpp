#ifndef NLIE_FIELD_HPP
#define NLIE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace nlie {

enum class FieldKind { rationals, prime_field };

// The coefficient field: the rationals or GF(p) for a prime p < 2^31.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }
  static FieldSpec gf(std::uint32_t p);  // checks primality by trial division

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == FieldKind::prime_field; }
  std::uint32_t prime() const { return p_; }

  // nullopt means infinite.
  std::optional<std::uint64_t> cardinality() const {
    if (kind_ == FieldKind::rationals) return std::nullopt;
    return std::uint64_t{p_};
  }

  bool operator==(const FieldSpec&) const = default;
  std::string str() const;

 private:
  FieldSpec(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

// An exact field element.  Rationals are kept in canonical reduced form
// (denominator positive, gcd 1); GF(p) values as residues in [0, p).
// Equality is representation equality.
class Scalar {
 public:
  static Scalar zero(const FieldSpec& f) { return of(f, 0); }
  static Scalar one(const FieldSpec& f) { return of(f, 1); }
  static Scalar of(const FieldSpec& f, long value);
  static Scalar rational(long num, long den);
  // Accepts "a", "-a" or "a/b" over Q; a residue "r" in [0,p) over GF(p).
  static Scalar parse(const FieldSpec& f, const std::string& text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  // Total order within one field; used for canonical sorting only.
  std::strong_ordering compare(const Scalar& o) const;

  std::string str() const;

  // Test hooks for the canonical-form invariant over Q.
  const mpq_class& rational_value() const;

 private:
  struct Residue {
    std::uint32_t v;
    std::uint32_t p;
    bool operator==(const Residue&) const = default;
  };
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(Residue r) : v_(r) {}
  void check_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> v_;
};

using Vec = std::vector<Scalar>;

Vec vec_zero(const FieldSpec& f, std::size_t n);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
void vec_add_scaled(Vec& acc, const Scalar& c, const Vec& v);
Vec basis_vec(const FieldSpec& f, std::size_t n, std::size_t i);

}  // namespace nlie

#endif
