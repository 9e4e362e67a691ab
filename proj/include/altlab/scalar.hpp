#pragma once

// Coefficient fields: exact rationals (GMP-backed) and a word-size prime field.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace altlab {

/// Raised for contract violations by the caller (bad sizes, out-of-range
/// parameters). The CLI maps it to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Expression templates off: Eigen's generic kernels assign intermediate
// results to Scalar and do not cope with gmp expression types.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Integers modulo a fixed prime P < 2^32.
template <std::uint32_t P>
class Zp {
 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Zp() = default;
  constexpr Zp(long long v)  // NOLINT(google-explicit-constructor)
      : v_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}
  Zp(long long num, long long den) : Zp(Zp(num) / Zp(den)) {}

  constexpr std::uint32_t value() const { return v_; }

  friend constexpr Zp operator+(Zp a, Zp b) {
    std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    return raw(static_cast<std::uint32_t>(s >= P ? s - P : s));
  }
  friend constexpr Zp operator-(Zp a, Zp b) {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (P - b.v_));
  }
  friend constexpr Zp operator*(Zp a, Zp b) {
    return raw(static_cast<std::uint32_t>((std::uint64_t{a.v_} * b.v_) % P));
  }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  constexpr Zp operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  Zp& operator/=(Zp b) { return *this = *this / b; }
  friend constexpr bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }

  Zp inverse() const {
    if (v_ == 0) throw std::domain_error("Zp: division by zero");
    return pow(P - 2);
  }
  Zp pow(std::uint64_t e) const {
    Zp base = *this, acc = raw(1);
    for (; e; e >>= 1) {
      if (e & 1) acc *= base;
      base *= base;
    }
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

 private:
  static constexpr Zp raw(std::uint32_t v) {
    Zp z;
    z.v_ = v;
    return z;
  }
  std::uint32_t v_ = 0;
};

using Fp31 = Zp<2147483647u>;  // 2^31 - 1

// Uniform access to the handful of field operations the algorithms need.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static std::string name() { return "exact"; }
  static bool is_zero(const Rational& s) { return s.is_zero(); }
  static Rational from_ratio(long long num, long long den) { return Rational(num, den); }
  static std::string to_string(const Rational& s) { return s.str(); }
  static Rational parse(std::string_view text) {
    try {
      return Rational(std::string(text));
    } catch (const std::exception&) {
      throw UsageError("not a rational number: '" + std::string(text) + "'");
    }
  }
  static bool is_negative(const Rational& s) { return s.sign() < 0; }
  static bool is_one(const Rational& s) { return s == 1; }
};

template <std::uint32_t P>
struct ScalarTraits<Zp<P>> {
  static constexpr bool exact = false;
  static std::string name() { return "prime:" + std::to_string(P); }
  static bool is_zero(Zp<P> s) { return s.value() == 0; }
  static Zp<P> from_ratio(long long num, long long den) { return Zp<P>(num, den); }
  static std::string to_string(Zp<P> s) { return std::to_string(s.value()); }
  static Zp<P> parse(std::string_view text) {
    auto slash = text.find('/');
    auto to_ll = [&](std::string_view t) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(std::string(t), &used);
        if (used != t.size()) throw std::invalid_argument("trailing");
        return v;
      } catch (const std::exception&) {
        throw UsageError("not a field element: '" + std::string(text) + "'");
      }
    };
    if (slash == std::string_view::npos) return Zp<P>(to_ll(text));
    return Zp<P>(to_ll(text.substr(0, slash)), to_ll(text.substr(slash + 1)));
  }
  static bool is_negative(Zp<P>) { return false; }
  static bool is_one(Zp<P> s) { return s.value() == 1; }
};

template <class S>
bool is_zero(const S& s) {
  return ScalarTraits<S>::is_zero(s);
}

}  // namespace altlab

namespace Eigen {
template <std::uint32_t P>
struct NumTraits<altlab::Zp<P>> : GenericNumTraits<altlab::Zp<P>> {
  using Real = altlab::Zp<P>;
  using NonInteger = altlab::Zp<P>;
  using Nested = altlab::Zp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
