#pragma once

// Exact points of the almost commuting scheme {(X,Y,i,j) : [X,Y] + ij = 0},
// stratum samplers, Krylov dimensions, Jacobian rank, and the determinant
// functions psi_f / phi_f evaluated at points.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "altlab/linalg.hpp"
#include "altlab/random.hpp"

namespace altlab {

/// Raised when the stratum sampler cannot produce a verified point.
class SamplerFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
Matrix<S> moment_residual(const Matrix<S>& x, const Matrix<S>& y, const Vector<S>& i, const RowVector<S>& j) {
  return Matrix<S>(x * y - y * x + i * j);
}

/// A tuple (X, Y, i, j); i is a column vector, j a row vector. The
/// on-variety flag is computed once, exactly, at construction.
template <class S>
class MPoint {
 public:
  MPoint(Matrix<S> x, Matrix<S> y, Vector<S> i, RowVector<S> j)
      : x_(std::move(x)), y_(std::move(y)), i_(std::move(i)), j_(std::move(j)) {
    const auto n = x_.rows();
    if (x_.cols() != n || y_.rows() != n || y_.cols() != n || i_.size() != n || j_.size() != n)
      throw UsageError("MPoint: inconsistent dimensions");
    on_variety_ = is_zero_matrix(moment_residual(x_, y_, i_, j_));
  }

  int n() const { return static_cast<int>(x_.rows()); }
  const Matrix<S>& X() const { return x_; }
  const Matrix<S>& Y() const { return y_; }
  const Vector<S>& i() const { return i_; }
  const RowVector<S>& j() const { return j_; }
  bool on_variety() const { return on_variety_; }

  friend bool operator==(const MPoint& a, const MPoint& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.i_ == b.i_ && a.j_ == b.j_;
  }

 private:
  Matrix<S> x_, y_;
  Vector<S> i_;
  RowVector<S> j_;
  bool on_variety_ = false;
};

template <class S>
bool on_variety(const MPoint<S>& p) {
  return p.on_variety();
}

/// The point (diag x, diag y, (1,...,1), 0).
template <class S>
MPoint<S> restriction_point(const std::vector<S>& xs, const std::vector<S>& ys) {
  const auto n = static_cast<Eigen::Index>(xs.size());
  if (static_cast<Eigen::Index>(ys.size()) != n) throw UsageError("restriction_point: length mismatch");
  Matrix<S> x = zero_matrix<S>(n, n), y = zero_matrix<S>(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    x(a, a) = xs[static_cast<std::size_t>(a)];
    y(a, a) = ys[static_cast<std::size_t>(a)];
  }
  return MPoint<S>(x, y, Vector<S>::Constant(n, S(1)), RowVector<S>::Constant(n, S(0)));
}

/// Word over {x, y}; evaluates to the ordered product of X and Y factors.
class NCWord {
 public:
  NCWord() = default;
  explicit NCWord(std::string letters) : letters_(std::move(letters)) {
    if (letters_.find_first_not_of("xy") != std::string::npos)
      throw UsageError("NCWord: letters must be 'x' or 'y', got '" + letters_ + "'");
  }
  const std::string& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  int x_count() const { return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'x')); }
  int y_count() const { return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'y')); }
  friend auto operator<=>(const NCWord&, const NCWord&) = default;

 private:
  std::string letters_;
};

using NCTuple = std::vector<NCWord>;

template <class S>
Matrix<S> eval_word(const Matrix<S>& x, const Matrix<S>& y, const NCWord& w) {
  Matrix<S> m = identity_matrix<S>(x.rows());
  for (char c : w.letters()) m = Matrix<S>(m * (c == 'x' ? x : y));
  return m;
}

struct KrylovSaturation {
  std::size_t dim = 0;
  int rounds = 0;
  std::vector<std::size_t> dims;  // dimension after each round
};

/// Smallest subspace containing `start` and stable under a and b.
template <class S>
KrylovSaturation saturate(const Matrix<S>& a, const Matrix<S>& b, const Vector<S>& start) {
  KrylovSaturation out;
  RowEchelon<S> span(start.size());
  std::vector<Vector<S>> frontier;
  if (span.insert(start)) frontier.push_back(start);
  out.dims.push_back(span.rank());
  while (!frontier.empty()) {
    std::vector<Vector<S>> next;
    for (const auto& v : frontier) {
      for (const Matrix<S>* m : {&a, &b}) {
        Vector<S> w = *m * v;
        if (span.insert(w)) next.push_back(std::move(w));
      }
    }
    ++out.rounds;
    out.dims.push_back(span.rank());
    frontier = std::move(next);
  }
  out.dim = span.rank();
  return out;
}

/// dim C[X,Y] i.
template <class S>
std::size_t krylov_col_dim(const MPoint<S>& p) {
  return saturate<S>(p.X(), p.Y(), p.i()).dim;
}

/// dim j C[X,Y], computed on transposes.
template <class S>
std::size_t krylov_row_dim(const MPoint<S>& p) {
  return saturate<S>(p.X().transpose(), p.Y().transpose(), p.j().transpose()).dim;
}

/// A point of stratum r: on the variety, Y diagonal with distinct
/// eigenvalues, dim C[X,Y]i = n - r, dim jC[X,Y] = r. Every returned point
/// has been verified; after 100 rejected draws SamplerFailure is thrown.
template <class S>
MPoint<S> sample_stratum(int n, int r, std::uint64_t seed) {
  if (n < 1) throw UsageError("sample_stratum: n must be >= 1");
  if (r < 0 || r > n) throw UsageError("sample_stratum: stratum r must lie in 0..n");
  constexpr int budget = 100;
  Rng rng(seed);
  const long long window = 3LL * n;
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<long long> eig;
    while (static_cast<int>(eig.size()) < n) {
      long long v = rng.uniform(-window, window);
      if (std::find(eig.begin(), eig.end(), v) == eig.end()) eig.push_back(v);
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int t = 0; t < n - 1; ++t) std::swap(order[t], order[rng.uniform(t, n - 1)]);
    std::vector<bool> in_r(static_cast<std::size_t>(n), false);
    for (int t = 0; t < r; ++t) in_r[order[t]] = true;

    Vector<S> i = zero_vector<S>(n);
    RowVector<S> j = RowVector<S>::Constant(n, S(0));
    for (int a = 0; a < n; ++a) {
      if (in_r[a])
        j(a) = S(rng.nonzero(-3, 3));
      else
        i(a) = S(rng.nonzero(-3, 3));
    }
    Matrix<S> y = zero_matrix<S>(n, n), x = zero_matrix<S>(n, n);
    for (int a = 0; a < n; ++a) {
      y(a, a) = S(eig[a]);
      x(a, a) = S(rng.uniform(-3, 3));
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) x(a, b) = i(a) * j(b) / (y(a, a) - y(b, b));

    MPoint<S> p(x, y, i, j);
    if (p.on_variety() && krylov_col_dim(p) == static_cast<std::size_t>(n - r) &&
        krylov_row_dim(p) == static_cast<std::size_t>(r))
      return p;
  }
  throw SamplerFailure("sample_stratum: no verified point for n=" + std::to_string(n) + ", r=" +
                       std::to_string(r) + " within " + std::to_string(budget) + " draws");
}

/// Partial derivatives of the n^2 entries of [X,Y]+ij (rows, row-major
/// (a,b)) against the coordinates X (row-major), Y (row-major), i, j.
template <class S>
Matrix<S> jacobian(const MPoint<S>& p) {
  const int n = p.n();
  const int nn = n * n;
  Matrix<S> jac = zero_matrix<S>(nn, 2 * nn + 2 * n);
  const auto& x = p.X();
  const auto& y = p.Y();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int row = a * n + b;
      for (int t = 0; t < n; ++t) {
        // d/dX_{a t}: Y_{t b};  d/dX_{t b}: -Y_{a t}
        jac(row, a * n + t) += y(t, b);
        jac(row, t * n + b) -= y(a, t);
        // d/dY_{t b}: X_{a t};  d/dY_{a t}: -X_{t b}
        jac(row, nn + t * n + b) += x(a, t);
        jac(row, nn + a * n + t) -= x(t, b);
      }
      jac(row, 2 * nn + a) += p.j()(b);
      jac(row, 2 * nn + n + b) += p.i()(a);
    }
  }
  return jac;
}

template <class S>
std::size_t jacobian_rank(const MPoint<S>& p) {
  if (!p.on_variety()) throw UsageError("jacobian_rank: point is not on the variety");
  return static_cast<std::size_t>(bareiss_rank(jacobian(p)));
}

/// det of the matrix whose column m is f_m(X,Y) i (standard volume form).
template <class S>
S psi_eval(const MPoint<S>& p, const NCTuple& f) {
  if (static_cast<int>(f.size()) != p.n()) throw UsageError("psi_eval: tuple length must equal n");
  Matrix<S> cols(p.n(), p.n());
  for (int m = 0; m < p.n(); ++m) cols.col(m) = eval_word(p.X(), p.Y(), f[m]) * p.i();
  return bareiss_determinant(cols);
}

/// det of the matrix whose row m is j f_m(X,Y).
template <class S>
S phi_eval(const MPoint<S>& p, const NCTuple& f) {
  if (static_cast<int>(f.size()) != p.n()) throw UsageError("phi_eval: tuple length must equal n");
  Matrix<S> rows(p.n(), p.n());
  for (int m = 0; m < p.n(); ++m) rows.row(m) = p.j() * eval_word(p.X(), p.Y(), f[m]);
  return bareiss_determinant(rows);
}

/// Coefficients (c_{n-1}, ..., c_0) of det(t - Y) = t^n + c_{n-1} t^{n-1} + ... + c_0
/// (Faddeev-LeVerrier).
template <class S>
std::vector<S> char_poly_coeffs(const MPoint<S>& p) {
  const int n = p.n();
  const Matrix<S>& y = p.Y();
  std::vector<S> coeffs;
  Matrix<S> m = zero_matrix<S>(n, n);
  S c(1);
  for (int k = 1; k <= n; ++k) {
    m = Matrix<S>(y * m);
    for (int t = 0; t < n; ++t) m(t, t) += c;
    Matrix<S> ym = y * m;
    S tr(0);
    for (int t = 0; t < n; ++t) tr += ym(t, t);
    c = -tr / S(k);
    coeffs.push_back(c);
  }
  return coeffs;
}

/// g acting by (gXg^-1, gYg^-1, g i, j g^-1); throws UsageError if g is singular.
template <class S>
MPoint<S> g_translate(const MPoint<S>& p, const Matrix<S>& g) {
  if (g.rows() != p.n() || g.cols() != p.n()) throw UsageError("g_translate: g has wrong size");
  const Matrix<S> ginv = inverse(g);
  return MPoint<S>(Matrix<S>(g * p.X() * ginv), Matrix<S>(g * p.Y() * ginv), Vector<S>(g * p.i()),
                   RowVector<S>(p.j() * ginv));
}

inline NCWord random_word(Rng& rng, int max_length) {
  const auto len = rng.uniform(0, max_length);
  std::string s;
  for (long long t = 0; t < len; ++t) s += rng.uniform(0, 1) ? 'y' : 'x';
  return NCWord(s);
}

inline NCTuple random_nctuple(Rng& rng, int n, int max_length) {
  NCTuple f;
  for (int m = 0; m < n; ++m) f.push_back(random_word(rng, max_length));
  return f;
}

/// Integer matrix with entries in [-range, range], redrawn until invertible.
template <class S>
Matrix<S> random_invertible(Rng& rng, int n, int range = 3) {
  for (;;) {
    Matrix<S> g(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g(a, b) = S(rng.uniform(-range, range));
    if (!is_zero(bareiss_determinant(g))) return g;
  }
}

}  // namespace altlab
