#pragma once

// S_n machinery and the bigraded pieces of A (alternating polynomials) and
// A^k (span of k-fold products of alternating polynomials).

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "altlab/linalg.hpp"
#include "altlab/parallel.hpp"
#include "altlab/polynomial.hpp"

namespace altlab {

struct Permutation {
  std::vector<int> images;
  int sign = 1;
};

/// All of S_n in lexicographic order of image vectors.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inversions += p[a] > p[b];
    out.push_back({p, inversions % 2 ? -1 : 1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// The monomials of one bidegree, in descending term order; this is the
/// column order of every coefficient row of that bidegree.
class MonomialBasis {
 public:
  MonomialBasis(int n, BiDegree bd) : n_(n), bd_(bd) {
    if (n < 1 || !bd.nonnegative()) throw UsageError("MonomialBasis: bad arguments");
    std::vector<std::vector<int>> xs, ys;
    compositions(bd.dx, n, xs);
    compositions(bd.dy, n, ys);
    for (const auto& xe : xs)
      for (const auto& ye : ys) monomials_.emplace_back(xe, ye);
    std::sort(monomials_.begin(), monomials_.end(), std::greater<>());
    for (std::size_t t = 0; t < monomials_.size(); ++t) index_.emplace(monomials_[t], static_cast<Eigen::Index>(t));
  }

  int nvars() const { return n_; }
  BiDegree bidegree() const { return bd_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(monomials_.size()); }
  const Monomial& operator[](Eigen::Index t) const { return monomials_[static_cast<std::size_t>(t)]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  Eigen::Index index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw UsageError("monomial outside bidegree " + bd_.str());
    return it->second;
  }

  template <class S>
  Vector<S> encode(const Polynomial<S>& p) const {
    Vector<S> v = zero_vector<S>(size());
    for (const auto& [m, c] : p.terms()) v(index_of(m)) = c;
    return v;
  }

  template <class S>
  Polynomial<S> decode(const Vector<S>& v) const {
    Polynomial<S> p(n_);
    for (Eigen::Index t = 0; t < size(); ++t) p.add_term((*this)[t], v(t));
    return p;
  }

 private:
  static void compositions(int total, int parts, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int slot, int left) {
      if (slot == parts - 1) {
        cur[slot] = left;
        out.push_back(cur);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur[slot] = v;
        rec(slot + 1, left - v);
      }
    };
    rec(0, total);
  }

  int n_;
  BiDegree bd_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, Eigen::Index> index_;
};

struct BiExponent {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const BiExponent&, const BiExponent&) = default;
};

/// n pairwise distinct exponent pairs, sorted ascending.
class BiExponentSet {
 public:
  explicit BiExponentSet(std::vector<BiExponent> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    if (std::adjacent_find(entries_.begin(), entries_.end()) != entries_.end())
      throw UsageError("BiExponentSet: duplicate biexponent");
    for (const auto& e : entries_)
      if (e.p < 0 || e.q < 0) throw UsageError("BiExponentSet: negative exponent");
  }

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<BiExponent>& entries() const { return entries_; }
  BiDegree bidegree() const {
    BiDegree d;
    for (const auto& e : entries_) d = d + BiDegree{e.p, e.q};
    return d;
  }
  std::string str() const {
    std::string s = "{";
    for (std::size_t t = 0; t < entries_.size(); ++t)
      s += (t ? "," : "") + std::string("(") + std::to_string(entries_[t].p) + "," + std::to_string(entries_[t].q) + ")";
    return s + "}";
  }
  friend auto operator<=>(const BiExponentSet&, const BiExponentSet&) = default;

 private:
  std::vector<BiExponent> entries_;
};

/// All n-element biexponent sets whose column sums are componentwise <= box
/// (exact == box when `exact`), in ascending order.
inline std::vector<BiExponentSet> biexponent_sets(int n, BiDegree box, bool exact = true) {
  std::vector<BiExponent> points;
  for (int p = 0; p <= box.dx; ++p)
    for (int q = 0; q <= box.dy; ++q) points.push_back({p, q});
  std::vector<BiExponentSet> out;
  std::vector<BiExponent> cur;
  std::function<void(std::size_t, BiDegree)> rec = [&](std::size_t from, BiDegree left) {
    if (static_cast<int>(cur.size()) == n) {
      if (!exact || (left.dx == 0 && left.dy == 0)) out.emplace_back(cur);
      return;
    }
    for (std::size_t t = from; t < points.size(); ++t) {
      const auto& pt = points[t];
      if (pt.p > left.dx || pt.q > left.dy) continue;
      cur.push_back(pt);
      rec(t + 1, left - BiDegree{pt.p, pt.q});
      cur.pop_back();
    }
  };
  rec(0, box);
  std::sort(out.begin(), out.end());
  return out;
}

/// Sum over S_n of sgn(σ)·σ(m).
template <class S>
Polynomial<S> antisymmetrize(const Monomial& m) {
  Polynomial<S> p(m.nvars());
  for (const auto& perm : all_permutations(m.nvars())) p.add_term(m.permuted(perm.images), S(perm.sign));
  return p;
}

/// Sum over S_n of σ(m).
template <class S>
Polynomial<S> symmetrize(const Monomial& m) {
  Polynomial<S> p(m.nvars());
  for (const auto& perm : all_permutations(m.nvars())) p.add_term(m.permuted(perm.images), S(1));
  return p;
}

/// det[x_i^{p_j} y_i^{q_j}] with columns in the set's sorted order.
template <class S>
Polynomial<S> delta(const BiExponentSet& d) {
  const int n = d.size();
  Polynomial<S> p(n);
  for (const auto& perm : all_permutations(n)) {
    // Term of the Leibniz expansion: row perm[j] paired with column j.
    Monomial m(n);
    for (int j = 0; j < n; ++j) {
      m.x(perm.images[j]) = static_cast<Monomial::Exponent>(d.entries()[j].p);
      m.y(perm.images[j]) = static_cast<Monomial::Exponent>(d.entries()[j].q);
    }
    p.add_term(m, S(perm.sign));
  }
  return p;
}

template <class S>
Polynomial<S> elementary_symmetric_y(int n, int d) {
  if (d < 1 || d > n) throw UsageError("elementary_symmetric_y: degree out of range");
  Polynomial<S> p(n);
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.end() - d, pick.end(), true);
  do {
    Monomial m(n);
    for (int i = 0; i < n; ++i) m.y(i) = pick[i] ? 1 : 0;
    p.add_term(m, S(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return p;
}

/// Polarized power sum Σ_i x_i^a y_i^b.
template <class S>
Polynomial<S> power_sum(int n, int a, int b) {
  Polynomial<S> p(n);
  for (int i = 0; i < n; ++i) {
    Monomial m(n);
    m.x(i) = static_cast<Monomial::Exponent>(a);
    m.y(i) = static_cast<Monomial::Exponent>(b);
    p.add_term(m, S(1));
  }
  return p;
}

/// Row-reduced basis of a subspace of one bidegree, with the label of the
/// spanning element that introduced each pivot.
template <class S>
class GradedBasis {
 public:
  GradedBasis(int n, BiDegree bd)
      : monomials_(std::make_shared<const MonomialBasis>(n, bd)), echelon_(monomials_->size()) {}

  BiDegree bidegree() const { return monomials_->bidegree(); }
  int nvars() const { return monomials_->nvars(); }
  std::size_t dim() const { return echelon_.rank(); }
  bool full() const { return echelon_.full(); }
  const MonomialBasis& monomials() const { return *monomials_; }
  const RowEchelon<S>& echelon() const { return echelon_; }

  /// Adds p to the span; false when p was already in it.
  bool offer(const Polynomial<S>& p, const std::string& label) {
    if (!p.is_bihomogeneous(bidegree())) throw UsageError("GradedBasis: polynomial not of bidegree " + bidegree().str());
    auto before = echelon_.pivots();
    if (!echelon_.insert(monomials_->encode(p))) return false;
    const auto& after = echelon_.pivots();
    auto pos = std::mismatch(before.begin(), before.end(), after.begin()).second - after.begin();
    provenance_.insert(provenance_.begin() + pos, label);
    return true;
  }

  bool contains(const Polynomial<S>& p) const {
    return p.is_bihomogeneous(bidegree()) && echelon_.contains(monomials_->encode(p));
  }

  std::vector<Polynomial<S>> vectors() const {
    std::vector<Polynomial<S>> out;
    for (const auto& row : echelon_.rows()) out.push_back(monomials_->decode(row));
    return out;
  }
  const std::vector<std::string>& provenance() const { return provenance_; }

 private:
  std::shared_ptr<const MonomialBasis> monomials_;
  RowEchelon<S> echelon_;
  std::vector<std::string> provenance_;
};

/// Calls f(factors) for every nondecreasing k-tuple of biexponent sets
/// whose bidegrees sum to bd.
template <class F>
void for_each_delta_product(int n, int k, BiDegree bd, F&& f) {
  const auto sets = biexponent_sets(n, bd, /*exact=*/false);
  std::vector<const BiExponentSet*> cur;
  std::function<void(std::size_t, BiDegree)> rec = [&](std::size_t from, BiDegree left) {
    if (static_cast<int>(cur.size()) == k) {
      if (left == BiDegree{0, 0}) f(std::as_const(cur));
      return;
    }
    for (std::size_t t = from; t < sets.size(); ++t) {
      const BiDegree d = sets[t].bidegree();
      if (!d.fits_in(left)) continue;
      cur.push_back(&sets[t]);
      rec(t, left - d);
      cur.pop_back();
    }
  };
  rec(0, bd);
}

/// Memo of (A^k)_bd bases keyed by (n, k, bd). Entries are written once;
/// concurrent builders of the same key produce identical values and the
/// first insertion wins.
template <class S>
class AkBasisCache {
 public:
  using Key = std::tuple<int, int, int, int>;

  std::shared_ptr<const GradedBasis<S>> get(int k, BiDegree bd, int n) {
    if (k < 1) throw UsageError("a_k_basis: k must be >= 1");
    if (n < 1 || !bd.nonnegative()) throw UsageError("a_k_basis: bad arguments");
    const Key key{n, k, bd.dx, bd.dy};
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto built = std::make_shared<const GradedBasis<S>>(build(k, bd, n));
    std::lock_guard lock(mutex_);
    return memo_.emplace(key, std::move(built)).first->second;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
  }

 private:
  // A^1 is spanned by the Δ-determinants; A^k by products of a basis of
  // A^(k-1) with Δ-determinants (bilinearity).
  GradedBasis<S> build(int k, BiDegree bd, int n) {
    GradedBasis<S> basis(n, bd);
    if (k == 1) {
      for (const auto& d : biexponent_sets(n, bd)) {
        if (basis.full()) break;
        basis.offer(delta<S>(d), "delta" + d.str());
      }
      return basis;
    }
    for (int a = 0; a <= bd.dx && !basis.full(); ++a) {
      for (int b = 0; b <= bd.dy && !basis.full(); ++b) {
        const BiDegree head{a, b};
        const auto sets = biexponent_sets(n, bd - head);
        if (sets.empty()) continue;
        const auto lower = get(k - 1, head, n);
        if (lower->dim() == 0) continue;
        const auto lower_vectors = lower->vectors();
        std::vector<Polynomial<S>> deltas;
        for (const auto& d : sets) deltas.push_back(delta<S>(d));
        for (std::size_t r = 0; r < lower_vectors.size() && !basis.full(); ++r) {
          for (std::size_t t = 0; t < sets.size() && !basis.full(); ++t) {
            basis.offer(lower_vectors[r] * deltas[t],
                        "A" + std::to_string(k - 1) + head.str() + "[" + std::to_string(r) + "]*delta" + sets[t].str());
          }
        }
      }
    }
    return basis;
  }

  mutable std::mutex mutex_;
  std::map<Key, std::shared_ptr<const GradedBasis<S>>> memo_;
};

template <class S>
std::shared_ptr<const GradedBasis<S>> a_k_basis(int k, BiDegree bd, int n, AkBasisCache<S>& cache) {
  return cache.get(k, bd, n);
}

template <class S>
GradedBasis<S> a_k_basis(int k, BiDegree bd, int n) {
  AkBasisCache<S> cache;
  return *cache.get(k, bd, n);
}

/// Fills the cache for every bidegree of the window, level by level so
/// each level's lookups hit the cache; cells within a level run in parallel.
template <class S>
void warm_cache(int k, int n, BiDegree cutoff, AkBasisCache<S>& cache, const Parallelism& par = {}) {
  std::vector<BiDegree> cells;
  for (int a = 0; a <= cutoff.dx; ++a)
    for (int b = 0; b <= cutoff.dy; ++b) cells.push_back({a, b});
  for (int level = 1; level <= k; ++level)
    parallel_for(cells.size(), par, [&](std::size_t t) { cache.get(level, cells[t], n); });
}

/// dim (A^k)_(a,b) for every (a,b) <= cutoff.
template <class S>
std::map<BiDegree, std::size_t> hilbert_table(int k, int n, BiDegree cutoff, AkBasisCache<S>& cache,
                                              const Parallelism& par = {}) {
  if (k < 1) throw UsageError("hilbert_table: k must be >= 1");
  if (!cutoff.nonnegative()) throw UsageError("hilbert_table: negative cutoff");
  warm_cache(k, n, cutoff, cache, par);
  std::map<BiDegree, std::size_t> table;
  for (int a = 0; a <= cutoff.dx; ++a)
    for (int b = 0; b <= cutoff.dy; ++b) table[{a, b}] = cache.get(k, {a, b}, n)->dim();
  return table;
}

template <class S>
std::map<BiDegree, std::size_t> hilbert_table(int k, int n, BiDegree cutoff, const Parallelism& par = {}) {
  AkBasisCache<S> cache;
  return hilbert_table(k, n, cutoff, cache, par);
}

}  // namespace altlab
