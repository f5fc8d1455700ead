#include "nlie/field.hpp"

#include <stdexcept>

namespace nlie {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid; p prime, a != 0 mod p
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    std::int64_t q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

FieldSpec FieldSpec::gf(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("GF(p): p out of range");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("GF(p): p is not prime");
  return FieldSpec(FieldKind::prime_field, p);
}

std::string FieldSpec::str() const {
  if (kind_ == FieldKind::rationals) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::of(const FieldSpec& f, long value) {
  if (f.kind() == FieldKind::rationals) return Scalar(mpq_class(value));
  std::int64_t p = f.prime();
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint32_t>(r), f.prime()});
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (f.kind() == FieldKind::rationals) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  std::size_t pos = 0;
  unsigned long v = std::stoul(text, &pos, 10);
  if (pos != text.size() || v >= f.prime())
    throw std::invalid_argument("bad residue mod " + std::to_string(f.prime()) + ": " + text);
  return Scalar(Residue{static_cast<std::uint32_t>(v), f.prime()});
}

FieldSpec Scalar::field() const {
  if (std::holds_alternative<mpq_class>(v_)) return FieldSpec::rationals();
  return FieldSpec::gf(std::get<Residue>(v_).p);
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<Residue>(v_).v == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<Residue>(v_).v == 1;
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  auto r = std::get<Residue>(v_);
  return Scalar(Residue{r.v == 0 ? 0 : r.p - r.v, r.p});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
  auto r = std::get<Residue>(v_);
  return Scalar(Residue{mod_inverse(r.v, r.p), r.p});
}

void Scalar::check_same_field(const Scalar& o) const {
  if (v_.index() != o.v_.index()) throw std::invalid_argument("field mismatch");
  if (const auto* r = std::get_if<Residue>(&v_))
    if (r->p != std::get<Residue>(o.v_).p) throw std::invalid_argument("modulus mismatch");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q += std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    r.v = static_cast<std::uint32_t>((std::uint64_t{r.v} + std::get<Residue>(o.v_).v) % r.p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q -= std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    r.v = static_cast<std::uint32_t>((std::uint64_t{r.v} + r.p - std::get<Residue>(o.v_).v) % r.p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q *= std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    r.v = static_cast<std::uint32_t>(std::uint64_t{r.v} * std::get<Residue>(o.v_).v % r.p);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == std::get<mpq_class>(o.v_);
  return std::get<Residue>(v_) == std::get<Residue>(o.v_);
}

std::strong_ordering Scalar::compare(const Scalar& o) const {
  check_same_field(o);
  if (const auto* q = std::get_if<mpq_class>(&v_)) {
    int c = cmp(*q, std::get<mpq_class>(o.v_));
    return c <=> 0;
  }
  return std::get<Residue>(v_).v <=> std::get<Residue>(o.v_).v;
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<Residue>(v_).v);
}

const mpq_class& Scalar::rational_value() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw std::logic_error("rational_value on GF(p) scalar");
}

Vec vec_zero(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void vec_add_scaled(Vec& acc, const Scalar& c, const Vec& v) {
  if (acc.size() != v.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

Vec basis_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v = vec_zero(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

}  // namespace nlie
