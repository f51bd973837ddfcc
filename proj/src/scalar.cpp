#include "homlie/scalar.hpp"

#include <array>
#include <ostream>

namespace homlie {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::usage: return "usage";
    case ErrorKind::field_mismatch: return "field mismatch";
    case ErrorKind::division_by_zero: return "division by zero";
    case ErrorKind::reduction: return "reduction";
    case ErrorKind::ordering: return "ordering";
    case ErrorKind::duplicate: return "duplicate";
    case ErrorKind::shape: return "shape";
    case ErrorKind::singular: return "singular";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) noexcept {
  // extended Euclid on signed 128-bit to avoid overflow for p near 2^64
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a % p;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> small = {2, 3, 5, 7, 11, 13,
                                                          17, 19, 23, 29, 31, 37};
  for (auto q : small) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // these twelve bases are a deterministic witness set below 3.3e24
  for (auto a : small) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!homlie::is_prime(p)) {
    throw Error(ErrorKind::usage, "field modulus " + std::to_string(p) + " is not prime");
  }
  return trusted_prime(p);
}

FieldSpec FieldSpec::trusted_prime(std::uint64_t p) noexcept {
  FieldSpec f;
  f.kind_ = FieldKind::prime;
  f.p_ = p;
  return f;
}

std::string FieldSpec::describe() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

namespace {

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(p));
}

Error mismatch(const FieldSpec& a, const FieldSpec& b) {
  return Error(ErrorKind::field_mismatch,
               "field mismatch: " + a.describe() + " vs " + b.describe());
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& field) {
  if (field.is_rational()) return Scalar{};
  return Scalar(Residue{0, field.modulus()});
}

Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long value) {
  return from_mpz(field, mpz_class(value));
}

Scalar Scalar::from_mpz(const FieldSpec& field, const mpz_class& value) {
  if (field.is_rational()) return Scalar(mpq_class(value));
  return Scalar(Residue{reduce_mpz(value, field.modulus()), field.modulus()});
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::division_by_zero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::rational(long num, long den) {
  return rational(mpz_class(num), mpz_class(den));
}

Scalar Scalar::residue(const FieldSpec& field, std::uint64_t value) {
  if (!field.is_prime()) throw Error(ErrorKind::usage, "residue requires a prime field");
  return Scalar(Residue{value % field.modulus(), field.modulus()});
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view literal) {
  const std::string original(literal);
  std::string_view body = literal;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!is_digits(num_text) || (slash != std::string_view::npos && !is_digits(den_text))) {
    throw Error(ErrorKind::parse, "malformed scalar literal \"" + original + "\"");
  }
  mpz_class num(std::string(num_text), 10);
  if (negative) num = -num;
  if (field.is_prime()) {
    if (slash != std::string_view::npos) {
      throw Error(ErrorKind::parse,
                  "prime-field literal must be an integer: \"" + original + "\"");
    }
    return from_mpz(field, num);
  }
  mpz_class den = 1;
  if (slash != std::string_view::npos) den = mpz_class(std::string(den_text), 10);
  if (den == 0) {
    throw Error(ErrorKind::parse, "zero denominator in literal \"" + original + "\"");
  }
  return rational(num, den);
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return FieldSpec::trusted_prime(r->p);
  return FieldSpec::rational();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return std::get<mpq_class>(rep_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 1 % r->p;
  return std::get<mpq_class>(rep_) == 1;
}

const mpq_class& Scalar::as_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
  throw Error(ErrorKind::field_mismatch, "scalar is not rational");
}

std::uint64_t Scalar::as_residue() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value;
  throw Error(ErrorKind::field_mismatch, "scalar is not a residue");
}

const Scalar::Residue& Scalar::residue_checked(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&rep_);
  const auto* b = std::get_if<Residue>(&other.rep_);
  if (a == nullptr || b == nullptr || a->p != b->p) throw mismatch(field(), other.field());
  return *b;
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::division_by_zero, "inverse of zero");
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return Scalar(Residue{inv_mod(r->value, r->p), r->p});
  }
  return Scalar(mpq_class(1 / std::get<mpq_class>(rep_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (auto* a = std::get_if<mpq_class>(&rep_)) {
    const auto* b = std::get_if<mpq_class>(&rhs.rep_);
    if (b == nullptr) throw mismatch(field(), rhs.field());
    *a += *b;
    return *this;
  }
  const auto& b = residue_checked(rhs);
  auto& a = std::get<Residue>(rep_);
  a.value += b.value;
  if (a.value >= a.p || a.value < b.value) a.value -= a.p;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (auto* a = std::get_if<mpq_class>(&rep_)) {
    const auto* b = std::get_if<mpq_class>(&rhs.rep_);
    if (b == nullptr) throw mismatch(field(), rhs.field());
    *a *= *b;
    return *this;
  }
  const auto& b = residue_checked(rhs);
  auto& a = std::get<Residue>(rep_);
  a.value = mul_mod(a.value, b.value, a.p);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.field() != field()) throw mismatch(field(), rhs.field());
  return *this *= rhs.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  if (const auto* ra = std::get_if<Scalar::Residue>(&a.rep_)) {
    const auto& rb = std::get<Scalar::Residue>(b.rep_);
    return ra->p == rb.p && ra->value == rb.value;
  }
  return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
  return std::get<mpq_class>(rep_).get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar scalar_inv(const Scalar& a) { return a.inv(); }

Scalar reduce_mod(const Scalar& a, std::uint64_t p) {
  const FieldSpec target = FieldSpec::prime(p);
  if (!a.field().is_rational()) {
    throw Error(ErrorKind::field_mismatch, "reduce_mod expects a rational scalar");
  }
  const mpq_class& q = a.as_rational();
  const std::uint64_t den = reduce_mpz(q.get_den(), p);
  if (den == 0) {
    throw Error(ErrorKind::reduction,
                "denominator of " + a.to_string() + " is divisible by " + std::to_string(p));
  }
  const std::uint64_t num = reduce_mpz(q.get_num(), p);
  return Scalar::residue(target, mul_mod(num, inv_mod(den, p), p));
}

}  // namespace homlie
