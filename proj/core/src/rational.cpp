#include "simplex_cover/rational.hpp"

#include <gmpxx.h>

#include <charconv>
#include <numeric>
#include <ostream>
#include <utility>

namespace simplex_cover {

struct Rational::Big {
  mpq_class q;
};

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

// Inline values keep |num| and den strictly below 2^62, so every product of
// two of them fits in 124 bits and a sum of two such products in 125.
constexpr std::int64_t kLimit = std::int64_t{1} << 62;

bool fits(i128 v) { return v > -kLimit && v < kLimit; }

u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void assign(mpz_class& z, i128 v) {
  const u128 m = uabs(v);
  mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(m >> 64));
  mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), 64);
  mpz_add_ui(z.get_mpz_t(), z.get_mpz_t(),
             static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  if (v < 0) mpz_neg(z.get_mpz_t(), z.get_mpz_t());
}

bool fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && fits(static_cast<i128>(z.get_si()));
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

struct RationalOps {
  // n/d already in lowest terms with d > 0.
  static Rational reduced(i128 n, i128 d) {
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    Rational::Big b;
    assign(b.q.get_num(), n);
    assign(b.q.get_den(), d);
    Rational r;
    r.big_ = std::make_shared<const Rational::Big>(std::move(b));
    return r;
  }

  static Rational make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rational{};
    const u128 g = gcd128(uabs(n), uabs(d));
    if (g != 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    return reduced(n, d);
  }

  static Rational add_small(const Rational& a, const Rational& b) {
    const i128 an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (ad == bd) {
      if (ad == 1) return reduced(an + bn, 1);
      return make(an + bn, ad);
    }
    // Knuth 4.5.1: reduce by gcd of the denominators first.
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(a.den_),
                                     static_cast<std::uint64_t>(b.den_));
    if (g == 1) return reduced(an * bd + bn * ad, ad * bd);
    const i128 t = an * (bd / g) + bn * (ad / g);
    if (t == 0) return Rational{};
    const std::uint64_t g2 =
        std::gcd(static_cast<std::uint64_t>(uabs(t) % g), g);
    return reduced(t / g2, (ad / g) * (bd / g2));
  }

  static Rational mul_small(const Rational& a, const Rational& b) {
    if (a.num_ == 0 || b.num_ == 0) return Rational{};
    const auto abs64 = [](std::int64_t v) {
      return static_cast<std::uint64_t>(v < 0 ? -v : v);
    };
    const std::uint64_t g1 = std::gcd(abs64(a.num_), static_cast<std::uint64_t>(b.den_));
    const std::uint64_t g2 = std::gcd(abs64(b.num_), static_cast<std::uint64_t>(a.den_));
    const i128 n = i128(a.num_ / static_cast<std::int64_t>(g1)) *
                   i128(b.num_ / static_cast<std::int64_t>(g2));
    const i128 d = i128(a.den_ / static_cast<std::int64_t>(g2)) *
                   i128(b.den_ / static_cast<std::int64_t>(g1));
    return reduced(n, d);
  }

  static Rational add(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) return add_small(a, b);
    return Rational::from_big({a.to_big().q + b.to_big().q});
  }

  static Rational mul(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) return mul_small(a, b);
    return Rational::from_big({a.to_big().q * b.to_big().q});
  }

  static Rational reciprocal(const Rational& a) {
    if (a.sign() == 0) throw std::domain_error("rational division by zero");
    if (a.is_small()) {
      const i128 n = a.num_;
      const i128 d = a.den_;
      return n < 0 ? reduced(-d, -n) : reduced(d, n);
    }
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), a.big_->q.get_mpq_t());
    return Rational::from_big({std::move(inv)});
  }
};

Rational::Rational(std::int64_t value) {
  if (fits(value)) {
    num_ = value;
  } else {
    *this = RationalOps::reduced(value, 1);
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = RationalOps::make(num, den);
}

Rational Rational::from_big(Big value) {
  value.q.canonicalize();
  if (fits_small(value.q.get_num()) && fits_small(value.q.get_den())) {
    Rational r;
    r.num_ = value.q.get_num().get_si();
    r.den_ = value.q.get_den().get_si();
    return r;
  }
  Rational r;
  r.big_ = std::make_shared<const Big>(std::move(value));
  return r;
}

Rational::Big Rational::to_big() const {
  if (big_) return *big_;
  Big b;
  b.q.get_num() = static_cast<long>(num_);
  b.q.get_den() = static_cast<long>(den_);
  return b;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  const bool negative = !body.empty() && body.front() == '-';
  if (negative) body.remove_prefix(1);
  std::string_view num_digits = body;
  std::string_view den_digits = "1";
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    num_digits = body.substr(0, slash);
    den_digits = body.substr(slash + 1);
  }
  if (!is_digits(num_digits) || !is_digits(den_digits)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  if (den_digits.find_first_not_of('0') == std::string_view::npos) {
    throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
  }

  if (num_digits.size() <= 18 && den_digits.size() <= 18) {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::from_chars(num_digits.data(), num_digits.data() + num_digits.size(), n);
    std::from_chars(den_digits.data(), den_digits.data() + den_digits.size(), d);
    return Rational(negative ? -n : n, d);
  }
  Big b;
  b.q.get_num().set_str(std::string(num_digits), 10);
  b.q.get_den().set_str(std::string(den_digits), 10);
  if (negative) b.q.get_num() = -b.q.get_num();
  return from_big(std::move(b));
}

std::string Rational::str() const {
  if (big_) {
    std::string out = big_->q.get_num().get_str();
    if (big_->q.get_den() != 1) out += "/" + big_->q.get_den().get_str();
    return out;
  }
  std::string out = std::to_string(num_);
  if (den_ != 1) out += "/" + std::to_string(den_);
  return out;
}

int Rational::sign() const noexcept {
  if (big_) return sgn(big_->q);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const noexcept {
  if (big_) return big_->q.get_den() == 1;
  return den_ == 1;
}

double Rational::to_double() const {
  if (big_) return big_->q.get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::int64_t Rational::floor() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), big_->q.get_num_mpz_t(), big_->q.get_den_mpz_t());
  if (!mpz_fits_slong_p(q.get_mpz_t())) {
    throw std::overflow_error("floor of rational exceeds 64 bits");
  }
  return q.get_si();
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_big({-big_->q});
}

Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

Rational operator+(const Rational& a, const Rational& b) { return RationalOps::add(a, b); }
Rational operator-(const Rational& a, const Rational& b) { return RationalOps::add(a, -b); }
Rational operator*(const Rational& a, const Rational& b) { return RationalOps::mul(a, b); }
Rational operator/(const Rational& a, const Rational& b) {
  return RationalOps::mul(a, RationalOps::reciprocal(b));
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (a.is_small() != b.is_small()) return false;
  if (a.is_small()) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.big_->q == b.big_->q;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  if (a.is_small() && b.is_small()) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const i128 lhs = i128(a.num_) * b.den_;
    const i128 rhs = i128(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
         : lhs > rhs ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
  }
  const int c = cmp(a.to_big().q, b.to_big().q);
  return c < 0 ? std::strong_ordering::less
       : c > 0 ? std::strong_ordering::greater
               : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace simplex_cover
