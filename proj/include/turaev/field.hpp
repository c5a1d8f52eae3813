#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "turaev/error.hpp"

namespace turaev {

/// Which exact coefficient field a computation runs over.
///
/// Every scalar in one computation lives in a single field: either the
/// rationals (characteristic 0) or a prime field GF(p). Floating point is
/// never used anywhere in this library.
struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  std::uint64_t characteristic = 0;  // 0 for the rationals, p otherwise

  /// "q" for the rationals, "gf:<p>" for a prime field.
  std::string name() const {
    if (kind == Kind::rationals) return "q";
    return "gf:" + std::to_string(characteristic);
  }

  /// Parses "q" or "gf:<p>". Throws ParseError on anything else.
  static FieldSpec parse(const std::string& s);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "q") return {Kind::rationals, 0};
  if (s.rfind("gf:", 0) == 0) {
    const std::string digits = s.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad field spec: " + s);
    std::uint64_t p = 0;
    try {
      p = std::stoull(digits);
    } catch (const std::exception&) {
      throw ParseError("bad field spec: " + s);
    }
    if (!is_prime(p)) throw ParseError("field characteristic must be prime: " + s);
    return {Kind::prime_field, p};
  }
  throw ParseError("bad field spec: " + s + " (expected q or gf:<p>)");
}

namespace detail {

// Accepts an optional sign, digits, and an optional /digits part.
inline bool scalar_syntax_ok(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace detail

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Thin value wrapper around GMP's mpq_class; the
/// wrapper exists to guarantee canonical form at every construction site
/// (mpq_class itself does not canonicalize constructor arguments).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}
  Rational(long long num, long long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
  }

  /// Parses "a" or "a/b" with arbitrary-size integers. "1/0" is a ParseError.
  static Rational parse(const std::string& s) {
    if (!detail::scalar_syntax_ok(s)) throw ParseError("bad scalar: '" + s + "'");
    Rational r;
    r.v_ = mpq_class(s);
    if (r.v_.get_den() == 0) throw ParseError("bad scalar (zero denominator): '" + s + "'");
    r.v_.canonicalize();
    return r;
  }

  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Element of GF(p), stored as a residue in [0, p).
///
/// The modulus is a process-wide context (set_modulus) chosen once before
/// any computation starts, mirroring how the field flag works on the command
/// line. Values themselves are immutable; changing the modulus while values
/// are alive is a usage error.
class PrimeField {
 public:
  static void set_modulus(std::uint64_t p) {
    if (!is_prime(p)) throw Error("prime field modulus must be prime, got " + std::to_string(p));
    if (p >> 31) throw Error("prime field modulus must fit in 31 bits");
    p_ = p;
  }
  static std::uint64_t modulus() {
    if (p_ == 0) throw Error("prime field modulus not set");
    return p_;
  }

  PrimeField() : v_(0) {}
  PrimeField(long long n) {
    const std::uint64_t p = modulus();
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    v_ = static_cast<std::uint64_t>(r);
  }

  static PrimeField parse(const std::string& s) {
    if (!detail::scalar_syntax_ok(s)) throw ParseError("bad scalar: '" + s + "'");
    const auto slash = s.find('/');
    const PrimeField num = parse_integer(s.substr(0, slash));
    if (slash == std::string::npos) return num;
    const PrimeField den = parse_integer(s.substr(slash + 1));
    if (den.is_zero()) throw ParseError("bad scalar (zero denominator): '" + s + "'");
    return num / den;
  }

  std::string str() const { return std::to_string(v_); }

  bool is_zero() const { return v_ == 0; }
  std::uint64_t residue() const { return v_; }

  PrimeField operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
  PrimeField& operator+=(const PrimeField& o) {
    v_ += o.v_;
    if (v_ >= modulus()) v_ -= modulus();
    return *this;
  }
  PrimeField& operator-=(const PrimeField& o) {
    v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + modulus() - o.v_;
    return *this;
  }
  PrimeField& operator*=(const PrimeField& o) {
    v_ = (v_ * o.v_) % modulus();
    return *this;
  }
  PrimeField& operator/=(const PrimeField& o) { return *this *= o.inverse(); }

  PrimeField inverse() const {
    if (v_ == 0) throw Error("prime field division by zero");
    // Fermat: v^(p-2) mod p.
    std::uint64_t base = v_, result = 1, e = modulus() - 2;
    while (e) {
      if (e & 1) result = result * base % modulus();
      base = base * base % modulus();
      e >>= 1;
    }
    return raw(result);
  }

  friend PrimeField operator+(PrimeField a, const PrimeField& b) { return a += b; }
  friend PrimeField operator-(PrimeField a, const PrimeField& b) { return a -= b; }
  friend PrimeField operator*(PrimeField a, const PrimeField& b) { return a *= b; }
  friend PrimeField operator/(PrimeField a, const PrimeField& b) { return a /= b; }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  static PrimeField raw(std::uint64_t v) {
    PrimeField x;
    x.v_ = v;
    return x;
  }
  static PrimeField parse_integer(const std::string& s) {
    // Horner over the digits; exact for any length.
    PrimeField acc;
    bool negative = false;
    for (char ch : s) {
      if (ch == '-') { negative = true; continue; }
      if (ch == '+') continue;
      acc = acc * PrimeField(10) + PrimeField(ch - '0');
    }
    return negative ? -acc : acc;
  }

  std::uint64_t v_;
  inline static std::uint64_t p_ = 0;
};

/// Exact coefficient field, as used by every container in this library.
template <class K>
concept Field = requires(K a, K b, const std::string& s) {
  K();
  K(1);
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  { K::parse(s) } -> std::convertible_to<K>;
};

template <Field K>
FieldSpec field_spec_of();

template <>
inline FieldSpec field_spec_of<Rational>() {
  return {FieldSpec::Kind::rationals, 0};
}
template <>
inline FieldSpec field_spec_of<PrimeField>() {
  return {FieldSpec::Kind::prime_field, PrimeField::modulus()};
}

}  // namespace turaev
