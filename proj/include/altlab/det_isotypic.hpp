#pragma once

// Pullback of determinant-twisted functions along the restriction map
// (x, y) -> (diag x, diag y, (1,...,1), 0), and the checks that this map
// identifies the det^k-semi-invariants with A^k (and invariants with
// diagonal S_n-invariants when k = 0).

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "altlab/acv_geometry.hpp"
#include "altlab/alternants.hpp"

namespace altlab {

/// n commutative polynomials in the two variables (x, y), stored as
/// one-variable-pair Polynomials (x1, y1).
template <class S>
using CommTuple = std::vector<Polynomial<S>>;

template <class S>
Polynomial<S> abelianize(const NCWord& w) {
  Monomial m(1);
  m.x(0) = static_cast<Monomial::Exponent>(w.x_count());
  m.y(0) = static_cast<Monomial::Exponent>(w.y_count());
  return Polynomial<S>(m, S(1));
}

template <class S>
CommTuple<S> abelianize(const NCTuple& f) {
  CommTuple<S> out;
  for (const auto& w : f) out.push_back(abelianize<S>(w));
  return out;
}

/// The word x^p y^q, a lift of the commutative monomial.
inline NCWord lift_monomial(int p, int q) {
  return NCWord(std::string(static_cast<std::size_t>(p), 'x') + std::string(static_cast<std::size_t>(q), 'y'));
}

inline NCTuple lift_set(const BiExponentSet& d) {
  NCTuple f;
  for (const auto& e : d.entries()) f.push_back(lift_monomial(e.p, e.q));
  return f;
}

/// f(x, y) rewritten in the variables (x_i, y_i) of the n-pair ring.
template <class S>
Polynomial<S> place_in_slot(const Polynomial<S>& f, int n, int i) {
  if (f.nvars() != 1) throw UsageError("CommTuple entries must be polynomials in one (x, y) pair");
  Polynomial<S> out(n);
  for (const auto& [m, c] : f.terms()) {
    Monomial mm(n);
    mm.x(i) = m.x(0);
    mm.y(i) = m.y(0);
    out.add_term(mm, c);
  }
  return out;
}

/// det[f_j(x_i, y_i)]: the pullback of psi_f along the restriction map.
template <class S>
Polynomial<S> pullback_psi(const CommTuple<S>& f) {
  const int n = static_cast<int>(f.size());
  if (n < 1) throw UsageError("pullback_psi: empty tuple");
  std::vector<std::vector<Polynomial<S>>> slot(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) slot[j].push_back(place_in_slot(f[j], n, i));
  Polynomial<S> out(n);
  for (const auto& perm : all_permutations(n)) {
    Polynomial<S> term = Polynomial<S>::constant(n, S(perm.sign));
    for (int j = 0; j < n && !term.is_zero(); ++j) term *= slot[j][perm.images[j]];
    out += term;
  }
  return out;
}

template <class S>
std::vector<S> random_scalars(Rng& rng, int n, long long range) {
  std::vector<S> v;
  for (int t = 0; t < n; ++t) v.push_back(S(rng.uniform(-range, range)));
  return v;
}

/// psi_f at the restricted point equals the pullback polynomial evaluated at
/// (x, y), and phi_f vanishes there, for `trials` random points.
template <class S>
bool wedge_identity_check(const NCTuple& f, int trials, std::uint64_t seed) {
  const int n = static_cast<int>(f.size());
  const Polynomial<S> pulled = pullback_psi(abelianize<S>(f));
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto xs = random_scalars<S>(rng, n, 9);
    const auto ys = random_scalars<S>(rng, n, 9);
    const auto point = restriction_point(xs, ys);
    if (psi_eval(point, f) != pulled.evaluate(xs, ys)) return false;
    if (!is_zero(phi_eval(point, f))) return false;
  }
  return true;
}

/// A product psi_{f^(1)} ... psi_{f^(k)} with monomial entries.
template <class S>
struct PsiProduct {
  std::vector<CommTuple<S>> factors;
  std::vector<NCTuple> lifts;
  std::string label;

  Polynomial<S> pullback() const {
    Polynomial<S> out = pullback_psi(factors.front());
    for (std::size_t m = 1; m < factors.size(); ++m) out *= pullback_psi(factors[m]);
    return out;
  }
};

/// Monomial-entry psi-products of total bidegree bd. Entries are sorted and
/// distinct within a tuple (other tuples agree up to sign or vanish), and
/// factors are taken in nondecreasing order.
template <class S>
std::vector<PsiProduct<S>> psi_products(int n, int k, BiDegree bd) {
  if (k < 1) throw UsageError("psi_products: k must be >= 1");
  std::vector<PsiProduct<S>> out;
  for_each_delta_product(n, k, bd, [&](const std::vector<const BiExponentSet*>& sets) {
    PsiProduct<S> prod;
    for (const auto* d : sets) {
      NCTuple f = lift_set(*d);
      prod.factors.push_back(abelianize<S>(f));
      prod.lifts.push_back(std::move(f));
      prod.label += (prod.label.empty() ? "" : "*") + std::string("psi") + d->str();
    }
    out.push_back(std::move(prod));
  });
  return out;
}

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct SurjectivityReport {
  int n = 0, k = 0;
  BiDegree bidegree;
  std::size_t candidates = 0;
  std::size_t span_dim = 0;
  std::size_t target_dim = 0;
  bool contained = true;
  bool pass = false;
};

template <class S>
SurjectivityReport surjectivity_check(int k, BiDegree bd, int n, AkBasisCache<S>& cache) {
  SurjectivityReport rep{n, k, bd};
  const auto target = cache.get(k, bd, n);
  GradedBasis<S> span(n, bd);
  for (const auto& prod : psi_products<S>(n, k, bd)) {
    ++rep.candidates;
    const Polynomial<S> img = prod.pullback();
    if (!target->contains(img)) rep.contained = false;
    if (!span.full()) span.offer(img, prod.label);
  }
  rep.span_dim = span.dim();
  rep.target_dim = target->dim();
  rep.pass = rep.contained && rep.span_dim == rep.target_dim;
  return rep;
}

struct InjectivityReport {
  int n = 0, k = 0;
  BiDegree bidegree;
  std::size_t candidates = 0;
  std::size_t points = 0;
  std::size_t eval_rank = 0;
  std::size_t image_rank = 0;
  bool twist_consistent = true;
  Verdict verdict = Verdict::Inconclusive;
};

/// Evaluates every psi-product at `points` translates g·(diag x, diag y, 1, 0)
/// (rescaled by det(g)^-k) and compares the rank of those evaluations with
/// the rank of the pullbacks in A^k coordinates. Equal ranks: no nonzero
/// combination of psi-products dies under pullback while living on the
/// translates. Fewer evaluation rank: more points needed (inconclusive).
template <class S>
InjectivityReport injectivity_evidence(int k, BiDegree bd, int n, int points, std::uint64_t seed,
                                       AkBasisCache<S>& cache, bool translate = true) {
  if (k < 1) throw UsageError("injectivity_evidence: k must be >= 1");
  if (points < 0) throw UsageError("injectivity_evidence: negative point count");
  InjectivityReport rep{n, k, bd};
  rep.points = static_cast<std::size_t>(points);
  const auto products = psi_products<S>(n, k, bd);
  rep.candidates = products.size();
  const auto target = cache.get(k, bd, n);

  const auto cols = static_cast<Eigen::Index>(products.size());
  Matrix<S> w = zero_matrix<S>(static_cast<Eigen::Index>(target->dim()), cols);
  std::vector<Polynomial<S>> images;
  for (Eigen::Index c = 0; c < cols; ++c) {
    images.push_back(products[static_cast<std::size_t>(c)].pullback());
    auto coords = target->echelon().coordinates(target->monomials().encode(images.back()));
    if (!coords) {
      rep.verdict = Verdict::Fail;
      return rep;
    }
    w.col(c) = *coords;
  }
  rep.image_rank = static_cast<std::size_t>(bareiss_rank(w));

  Matrix<S> e = zero_matrix<S>(points, cols);
  for (int pt = 0; pt < points; ++pt) {
    Rng rng(seed, static_cast<std::uint64_t>(pt));
    const auto xs = random_scalars<S>(rng, n, 20);
    const auto ys = random_scalars<S>(rng, n, 20);
    const Matrix<S> g = translate ? random_invertible<S>(rng, n) : identity_matrix<S>(n);
    const auto point = g_translate(restriction_point(xs, ys), g);
    S untwist = S(1) / bareiss_determinant(g);
    S scale(1);
    for (int m = 0; m < k; ++m) scale *= untwist;
    std::map<std::vector<NCWord>, S> psi_memo;
    for (Eigen::Index c = 0; c < cols; ++c) {
      S value = scale;
      for (const auto& f : products[static_cast<std::size_t>(c)].lifts) {
        auto it = psi_memo.find(f);
        if (it == psi_memo.end()) it = psi_memo.emplace(f, psi_eval(point, f)).first;
        value *= it->second;
      }
      e(pt, c) = value;
      if (value != images[static_cast<std::size_t>(c)].evaluate(xs, ys)) rep.twist_consistent = false;
    }
  }
  rep.eval_rank = static_cast<std::size_t>(bareiss_rank(e));
  if (!rep.twist_consistent || rep.eval_rank > rep.image_rank)
    rep.verdict = Verdict::Fail;
  else if (rep.eval_rank < rep.image_rank)
    rep.verdict = Verdict::Inconclusive;
  else
    rep.verdict = Verdict::Pass;
  return rep;
}

struct K0Report {
  int n = 0;
  BiDegree bidegree;
  std::size_t words = 0;
  std::size_t span_dim = 0;
  std::size_t target_dim = 0;
  bool traces_consistent = true;
  bool contained = true;
  bool pass = false;
};

/// Products of trace functions tr w(X,Y) restricted to diagonal pairs,
/// against the diagonal S_n-invariants of bidegree bd.
template <class S>
K0Report k0_remark_check(BiDegree bd, int n, int max_word_len, std::uint64_t seed = 0) {
  if (n < 1 || !bd.nonnegative()) throw UsageError("k0_remark_check: bad arguments");
  K0Report rep{n, bd};

  // Each word restricts to the power sum p_{#x, #y}; check that numerically
  // on one diagonal point per word, and keep one factor per bidegree.
  Rng rng(seed);
  const auto xs = random_scalars<S>(rng, n, 9);
  const auto ys = random_scalars<S>(rng, n, 9);
  const auto point = restriction_point(xs, ys);
  std::map<BiDegree, Polynomial<S>> factors;
  std::function<void(std::string)> walk = [&](std::string w) {
    if (!w.empty()) {
      NCWord word(w);
      ++rep.words;
      const Matrix<S> m = eval_word(point.X(), point.Y(), word);
      S trace(0);
      for (int t = 0; t < n; ++t) trace += m(t, t);
      const auto ps = power_sum<S>(n, word.x_count(), word.y_count());
      if (trace != ps.evaluate(xs, ys)) rep.traces_consistent = false;
      const BiDegree d{word.x_count(), word.y_count()};
      if (d.fits_in(bd)) factors.try_emplace(d, ps);
    }
    if (static_cast<int>(w.size()) < max_word_len) {
      walk(w + 'x');
      walk(w + 'y');
    }
  };
  walk("");

  GradedBasis<S> target(n, bd);
  for (const auto& m : target.monomials().monomials()) {
    if (target.full()) break;
    target.offer(symmetrize<S>(m), "sym");
  }

  std::vector<std::pair<BiDegree, const Polynomial<S>*>> pool;
  for (const auto& [d, p] : factors) pool.emplace_back(d, &p);
  GradedBasis<S> span(n, bd);
  std::function<void(std::size_t, BiDegree, Polynomial<S>)> rec = [&](std::size_t from, BiDegree left,
                                                                      Polynomial<S> acc) {
    if (left == BiDegree{0, 0}) {
      if (!target.contains(acc)) rep.contained = false;
      if (!span.full()) span.offer(acc, "trace product");
      return;
    }
    for (std::size_t t = from; t < pool.size(); ++t)
      if (pool[t].first.fits_in(left)) rec(t, left - pool[t].first, acc * *pool[t].second);
  };
  rec(0, bd, Polynomial<S>::constant(n, S(1)));

  rep.span_dim = span.dim();
  rep.target_dim = target.dim();
  rep.pass = rep.traces_consistent && rep.contained && rep.span_dim == rep.target_dim;
  return rep;
}

}  // namespace altlab
