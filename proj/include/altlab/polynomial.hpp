#pragma once

// Sparse multivariate polynomials in x_1..x_n, y_1..y_n over a field S,
// with the (x-degree, y-degree) bigrading.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "altlab/scalar.hpp"

namespace altlab {

struct BiDegree {
  int dx = 0;
  int dy = 0;

  friend BiDegree operator+(BiDegree a, BiDegree b) { return {a.dx + b.dx, a.dy + b.dy}; }
  friend BiDegree operator-(BiDegree a, BiDegree b) { return {a.dx - b.dx, a.dy - b.dy}; }
  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
  bool nonnegative() const { return dx >= 0 && dy >= 0; }
  /// Componentwise a <= b.
  bool fits_in(BiDegree box) const { return dx <= box.dx && dy <= box.dy; }
  std::string str() const { return "(" + std::to_string(dx) + "," + std::to_string(dy) + ")"; }
};

/// Exponent vector (x_1..x_n, y_1..y_n). Ordered lexicographically on the
/// concatenated vector; that order is the global term order.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(int n) : e_(2 * static_cast<std::size_t>(n), 0) {}
  Monomial(std::span<const int> xexp, std::span<const int> yexp) {
    if (xexp.size() != yexp.size()) throw UsageError("Monomial: xexp/yexp length mismatch");
    e_.reserve(2 * xexp.size());
    for (int v : xexp) e_.push_back(checked(v));
    for (int v : yexp) e_.push_back(checked(v));
  }

  int nvars() const { return static_cast<int>(e_.size() / 2); }
  Exponent x(int i) const { return e_[i]; }
  Exponent y(int i) const { return e_[nvars() + i]; }
  Exponent& x(int i) { return e_[i]; }
  Exponent& y(int i) { return e_[nvars() + i]; }
  std::span<const Exponent> raw() const { return e_; }

  BiDegree bidegree() const {
    BiDegree d;
    const int n = nvars();
    for (int i = 0; i < n; ++i) {
      d.dx += e_[i];
      d.dy += e_[n + i];
    }
    return d;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t t = 0; t < r.e_.size(); ++t) r.e_[t] = static_cast<Exponent>(r.e_[t] + b.e_[t]);
    return r;
  }

  /// Image under the diagonal action: variable index i goes to perm[i].
  Monomial permuted(std::span<const int> perm) const {
    Monomial r(nvars());
    const int n = nvars();
    for (int i = 0; i < n; ++i) {
      r.e_[perm[i]] = e_[i];
      r.e_[n + perm[i]] = e_[n + i];
    }
    return r;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  static Exponent checked(int v) {
    if (v < 0 || v > 0xFFFF) throw UsageError("Monomial: exponent out of range");
    return static_cast<Exponent>(v);
  }
  std::vector<Exponent> e_;
};

template <class S>
class Polynomial {
 public:
  using Scalar = S;
  using TermMap = std::map<Monomial, S>;

  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) {}
  Polynomial(const Monomial& m, const S& c) : n_(m.nvars()) {
    if (!altlab::is_zero(c)) terms_.emplace(m, c);
  }

  static Polynomial constant(int n, const S& c) { return Polynomial(Monomial(n), c); }
  static Polynomial x(int n, int i) { return var(n, i, false); }
  static Polynomial y(int n, int i) { return var(n, i, true); }

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// Adds c*m in place, pruning a cancelled term.
  void add_term(const Monomial& m, const S& c) {
    if (altlab::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (altlab::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& q) {
    require_same(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    require_same(q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  Polynomial operator-() const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.require_same(q);
    Polynomial r(p.n_);
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    return r;
  }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend Polynomial operator*(const S& s, const Polynomial& p) {
    Polynomial r(p.n_);
    if (altlab::is_zero(s)) return r;
    for (const auto& [m, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), m, s * c);
    return r;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.n_ == q.n_ && p.terms_ == q.terms_;
  }

  /// Components keyed by bidegree; their sum is *this.
  std::map<BiDegree, Polynomial> bigrade_split() const {
    std::map<BiDegree, Polynomial> parts;
    for (const auto& [m, c] : terms_) {
      auto [it, _] = parts.try_emplace(m.bidegree(), Polynomial(n_));
      it->second.terms_.emplace(m, c);
    }
    return parts;
  }

  bool is_bihomogeneous(BiDegree d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.bidegree() == d; });
  }

  S evaluate(std::span<const S> xs, std::span<const S> ys) const {
    if (static_cast<int>(xs.size()) != n_ || static_cast<int>(ys.size()) != n_)
      throw UsageError("evaluate: point has wrong length");
    S total(0);
    for (const auto& [m, c] : terms_) {
      S v = c;
      for (int i = 0; i < n_; ++i) {
        for (int e = 0; e < m.x(i); ++e) v *= xs[i];
        for (int e = 0; e < m.y(i); ++e) v *= ys[i];
      }
      total += v;
    }
    return total;
  }

  /// Diagonal S_n action: x_i -> x_{perm[i]}, y_i -> y_{perm[i]}.
  Polynomial permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw UsageError("permuted: wrong permutation size");
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.permuted(perm), c);
    return r;
  }

  /// Canonical text, e.g. "3/2*x1^2*y3 - y1". Terms in descending term order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      const bool neg = ScalarTraits<S>::is_negative(c);
      const S mag = neg ? S(-c) : c;
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      first = false;
      const std::string mono = monomial_str(m);
      if (mono.empty())
        out += ScalarTraits<S>::to_string(mag);
      else if (ScalarTraits<S>::is_one(mag))
        out += mono;
      else
        out += ScalarTraits<S>::to_string(mag) + "*" + mono;
    }
    return out;
  }

  static std::string monomial_str(const Monomial& m) {
    std::string s;
    auto factor = [&](char v, int i, int e) {
      if (e == 0) return;
      if (!s.empty()) s += '*';
      s += v;
      s += std::to_string(i + 1);
      if (e > 1) s += "^" + std::to_string(e);
    };
    for (int i = 0; i < m.nvars(); ++i) factor('x', i, m.x(i));
    for (int i = 0; i < m.nvars(); ++i) factor('y', i, m.y(i));
    return s;
  }

  /// Inverse of str(); accepts any term order and repeated variables.
  static Polynomial parse(std::string_view text, int n) {
    Polynomial p(n);
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw UsageError("parse: empty polynomial text");
    std::size_t pos = 0;
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (pos != 0) {
        throw UsageError("parse: expected '+' or '-' in '" + s + "'");
      }
      std::size_t end = s.find_first_of("+-", pos);
      if (end == std::string::npos) end = s.size();
      p.add_term_text(std::string_view(s).substr(pos, end - pos), sign);
      pos = end;
    }
    return p;
  }

 private:
  static Polynomial var(int n, int i, bool is_y) {
    if (i < 0 || i >= n) throw UsageError("variable index out of range");
    Monomial m(n);
    (is_y ? m.y(i) : m.x(i)) = 1;
    return Polynomial(m, S(1));
  }

  void require_same(const Polynomial& q) const {
    if (n_ != q.n_) throw UsageError("polynomial arithmetic on mismatched variable counts");
  }

  void add_term_text(std::string_view term, int sign) {
    if (term.empty()) throw UsageError("parse: empty term");
    Monomial m(n_);
    S coeff(sign);
    std::size_t pos = 0;
    while (pos <= term.size()) {
      std::size_t end = term.find('*', pos);
      if (end == std::string_view::npos) end = term.size();
      std::string_view f = term.substr(pos, end - pos);
      if (f.empty()) throw UsageError("parse: empty factor in '" + std::string(term) + "'");
      if (f[0] == 'x' || f[0] == 'y') {
        std::size_t caret = f.find('^');
        int idx = parse_int(f.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
        int e = caret == std::string_view::npos ? 1 : parse_int(f.substr(caret + 1));
        if (idx < 1 || idx > n_) throw UsageError("parse: variable index out of range in '" + std::string(f) + "'");
        auto& slot = f[0] == 'x' ? m.x(idx - 1) : m.y(idx - 1);
        slot = static_cast<Monomial::Exponent>(slot + e);
      } else {
        coeff *= ScalarTraits<S>::parse(f);
      }
      pos = end + 1;
    }
    add_term(m, coeff);
  }

  static int parse_int(std::string_view t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw UsageError("parse: bad integer '" + std::string(t) + "'");
    return std::stoi(std::string(t));
  }

  int n_ = 0;
  TermMap terms_;
};

/// Power of a polynomial by repeated multiplication.
template <class S>
Polynomial<S> pow(const Polynomial<S>& p, int e) {
  Polynomial<S> r = Polynomial<S>::constant(p.nvars(), S(1));
  for (int t = 0; t < e; ++t) r *= p;
  return r;
}

}  // namespace altlab
