#include "entwine/scalar.hpp"

#include <limits>
#include <ostream>

#include "entwine/errors.hpp"

namespace entwine {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_signed(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

bool parse_integer(const std::string& text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') return false;
  return out.set_str(text[0] == '+' ? text.substr(1) : text, 10) == 0;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InputError("field characteristic " + std::to_string(p) +
                     " is not a prime below 2^31");
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
  return Scalar(reduce_signed(v, p_), p_);
}

Scalar FieldSpec::from_fraction(long long num, long long den) const {
  if (den == 0) throw DomainError("zero denominator");
  return from_int(num) / from_int(den);
}

Scalar FieldSpec::parse(const std::string& text) const {
  if (is_rational()) {
    const auto slash = text.find('/');
    mpz_class num, den(1);
    if (!parse_integer(text.substr(0, slash), num) ||
        (slash != std::string::npos && !parse_integer(text.substr(slash + 1), den)))
      throw InputError("malformed rational scalar \"" + text + "\"");
    if (den == 0) throw InputError("zero denominator in \"" + text + "\"");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  mpz_class v;
  if (!parse_integer(text, v))
    throw InputError("malformed F_" + std::to_string(p_) + " scalar \"" + text + "\"");
  if (v < 0 || v >= p_)
    throw InputError("F_" + std::to_string(p_) + " scalar \"" + text + "\" outside [0,p)");
  return Scalar(static_cast<std::uint32_t>(v.get_ui()), p_);
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar(mpq_class q) {
  q.canonicalize();
  *this = normalized(std::move(q));
}

Scalar::Scalar(std::uint32_t residue, std::uint32_t p) : v_(Residue{residue % p, p}) {}

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces num/den (den > 0) in place; true if the result fits a Small.
bool reduce(i128& num, i128& den) {
  const u128 g = gcd128(num < 0 ? -static_cast<u128>(num) : static_cast<u128>(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  return num <= kMax && num >= -kMax && den <= kMax;
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  const u128 m = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(m >> 64));
  mpz_class out = (hi << 64) + mpz_class(static_cast<unsigned long>(m & ~std::uint64_t{0}));
  return neg ? mpz_class(-out) : out;
}

}  // namespace

Scalar Scalar::normalized(mpq_class q) {
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    const long num = q.get_num().get_si();
    if (num != std::numeric_limits<long>::min()) {
      Scalar s;
      s.v_ = Small{num, q.get_den().get_si()};
      return s;
    }
  }
  Scalar s;
  s.v_ = std::move(q);
  return s;
}

mpq_class Scalar::big() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
  const Small& s = std::get<Small>(v_);
  mpq_class q;
  mpq_set_si(q.get_mpq_t(), s.num, static_cast<unsigned long>(s.den));
  return q;
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return FieldSpec(FieldSpec::Kind::PrimeField, r->p);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* s = std::get_if<Small>(&v_)) return s->num == 0;
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return false;
}

bool Scalar::is_one() const {
  if (const auto* s = std::get_if<Small>(&v_)) return s->num == 1 && s->den == 1;
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
  return false;
}

void Scalar::require_same_field(const Scalar& o) const {
  const auto* a = std::get_if<Residue>(&v_);
  const auto* b = std::get_if<Residue>(&o.v_);
  if ((a == nullptr) != (b == nullptr) || (a && a->p != b->p))
    throw InputError("scalar field mismatch: " + field().name() + " vs " + o.field().name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&v_))
    return Scalar(mod_pow(r->value, r->p - 2, r->p), r->p);
  if (const auto* s = std::get_if<Small>(&v_)) {
    Scalar out;
    out.v_ = s->num < 0 ? Small{-s->den, -s->num} : Small{s->den, s->num};
    return out;
  }
  return normalized(1 / std::get<mpq_class>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(o.v_).value;
    r->value = static_cast<std::uint32_t>(s % r->p);
    return *this;
  }
  const auto* a = std::get_if<Small>(&v_);
  const auto* b = std::get_if<Small>(&o.v_);
  if (a && b) {
    std::int64_t sum;
    if (a->den == 1 && b->den == 1 && !__builtin_add_overflow(a->num, b->num, &sum) && sum != -kMax - 1) {
      v_ = Small{sum, 1};
      return *this;
    }
    i128 num = i128{a->num} * b->den + i128{b->num} * a->den, den = i128{a->den} * b->den;
    if (reduce(num, den)) v_ = Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
    else v_ = mpq_class(to_mpz(num), to_mpz(den));
    return *this;
  }
  *this = normalized(big() + o.big());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint64_t s = std::uint64_t{r->value} * std::get<Residue>(o.v_).value;
    r->value = static_cast<std::uint32_t>(s % r->p);
    return *this;
  }
  const auto* a = std::get_if<Small>(&v_);
  const auto* b = std::get_if<Small>(&o.v_);
  if (a && b) {
    std::int64_t prod;
    if (a->den == 1 && b->den == 1 && !__builtin_mul_overflow(a->num, b->num, &prod) && prod != -kMax - 1) {
      v_ = Small{prod, 1};
      return *this;
    }
    i128 num = i128{a->num} * b->num, den = i128{a->den} * b->den;
    if (reduce(num, den)) v_ = Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
    else v_ = mpq_class(to_mpz(num), to_mpz(den));
    return *this;
  }
  *this = normalized(big() * o.big());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&v_))
    return Scalar(r->value == 0 ? 0 : r->p - r->value, r->p);
  if (const auto* s = std::get_if<Small>(&v_)) {
    Scalar out;
    out.v_ = Small{-s->num, s->den};
    return out;
  }
  return normalized(-std::get<mpq_class>(v_));
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint64_t s = std::uint64_t{std::get<Residue>(a.v_).value} * std::get<Residue>(b.v_).value;
    r->value = static_cast<std::uint32_t>((s + r->value) % r->p);
    return;
  }
  Scalar t = a;
  t *= b;
  *this += t;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (const auto* s = std::get_if<Scalar::Small>(&a.v_)) return *s == std::get<Scalar::Small>(b.v_);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.v_)) return *r == std::get<Scalar::Residue>(b.v_);
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

std::string Scalar::str() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  if (const auto* s = std::get_if<Small>(&v_))
    return s->den == 1 ? std::to_string(s->num) : std::to_string(s->num) + "/" + std::to_string(s->den);
  return std::get<mpq_class>(v_).get_str();
}

mpq_class Scalar::rational() const {
  if (is_residue()) throw PreconditionError("rational() on a prime-field scalar");
  return big();
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value;
  throw PreconditionError("residue() on a rational scalar");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace entwine
