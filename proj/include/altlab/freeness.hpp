#pragma once

// Windowed freeness certification for bigraded modules over
// C[y]^{S_n} = C[e_1, ..., e_n] (e_d = elementary symmetric polynomial of
// degree d in y, acting with bidegree (0, d)).
//
// For a finitely generated graded module, freeness is equivalent to
// e_1, ..., e_n being a regular sequence. Inside a window (a <= cx, b <= cy)
// this module computes
//   * the kernel of e_d on M / (e_1..e_{d-1})M for every bidegree whose
//     target (a, b+d) is inside the window,
//   * the fiber M / (e_1..e_n)M and the Hilbert series identity
//     HS_M * prod_d (1 - t^d) = HS_fiber,
//   * lifted fiber bases and a check that {e-monomials} x {lifts} is a basis
//     of every piece of the window.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altlab/alternants.hpp"
#include "altlab/det_isotypic.hpp"

namespace altlab {

/// Bigraded module presented piece by piece inside a window: each piece is a
/// span of independent rows in an ambient coordinate space, optionally
/// modulo a relation subspace (a submodule), with e_d acting by `multiply`.
template <class S>
class GradedModule {
 public:
  virtual ~GradedModule() = default;
  virtual int n() const = 0;
  virtual BiDegree window() const = 0;
  virtual Eigen::Index ambient_dim(BiDegree bd) const = 0;
  virtual const std::vector<Vector<S>>& basis(BiDegree bd) const = 0;
  virtual std::vector<Vector<S>> relations(BiDegree) const { return {}; }
  /// e_d * v for v in the ambient space of `from`; result lives at from + (0, d).
  virtual Vector<S> multiply(int d, BiDegree from, const Vector<S>& v) const = 0;
  virtual std::string render(BiDegree, const Vector<S>& v) const {
    std::string s = "[";
    for (Eigen::Index t = 0; t < v.size(); ++t) s += (t ? ", " : "") + ScalarTraits<S>::to_string(v(t));
    return s + "]";
  }
  virtual std::string describe() const = 0;

 protected:
  static std::vector<BiDegree> cells(BiDegree window) {
    std::vector<BiDegree> out;
    for (int a = 0; a <= window.dx; ++a)
      for (int b = 0; b <= window.dy; ++b) out.push_back({a, b});
    return out;
  }
};

/// A^k with ambient coordinates over the monomials of each bidegree.
template <class S>
class AkModule final : public GradedModule<S> {
 public:
  AkModule(int n, int k, BiDegree window, AkBasisCache<S>& cache, const Parallelism& par = {})
      : n_(n), k_(k), window_(window) {
    if (k < 1) throw UsageError("AkModule: k must be >= 1");
    warm_cache(k, n, window, cache, par);
    for (const auto& bd : this->cells(window)) pieces_.emplace(bd, cache.get(k, bd, n));
    for (int d = 1; d <= n; ++d) e_.push_back(elementary_symmetric_y<S>(n, d));
  }

  int n() const override { return n_; }
  int k() const { return k_; }
  BiDegree window() const override { return window_; }
  Eigen::Index ambient_dim(BiDegree bd) const override { return piece(bd).monomials().size(); }
  const std::vector<Vector<S>>& basis(BiDegree bd) const override { return piece(bd).echelon().rows(); }

  Vector<S> multiply(int d, BiDegree from, const Vector<S>& v) const override {
    const Polynomial<S> p = piece(from).monomials().decode(v) * e_.at(static_cast<std::size_t>(d - 1));
    return piece(from + BiDegree{0, d}).monomials().encode(p);
  }

  std::string render(BiDegree bd, const Vector<S>& v) const override {
    return piece(bd).monomials().decode(v).str();
  }
  std::string describe() const override {
    return "A^" + std::to_string(k_) + " for n=" + std::to_string(n_);
  }

  const GradedBasis<S>& piece(BiDegree bd) const {
    auto it = pieces_.find(bd);
    if (it == pieces_.end()) throw UsageError("AkModule: bidegree " + bd.str() + " outside the window");
    return *it->second;
  }

 private:
  int n_, k_;
  BiDegree window_;
  std::map<BiDegree, std::shared_ptr<const GradedBasis<S>>> pieces_;
  std::vector<Polynomial<S>> e_;
};

template <class S>
class DirectSumModule final : public GradedModule<S> {
 public:
  DirectSumModule(std::shared_ptr<const GradedModule<S>> first, std::shared_ptr<const GradedModule<S>> second)
      : a_(std::move(first)), b_(std::move(second)) {
    if (a_->n() != b_->n() || a_->window() != b_->window())
      throw UsageError("DirectSumModule: summands must share n and window");
    for (const auto& bd : this->cells(window())) {
      std::vector<Vector<S>> rows;
      for (const auto& v : a_->basis(bd)) rows.push_back(join(bd, v, zero_vector<S>(b_->ambient_dim(bd))));
      for (const auto& v : b_->basis(bd)) rows.push_back(join(bd, zero_vector<S>(a_->ambient_dim(bd)), v));
      basis_.emplace(bd, std::move(rows));
    }
  }

  int n() const override { return a_->n(); }
  BiDegree window() const override { return a_->window(); }
  Eigen::Index ambient_dim(BiDegree bd) const override { return a_->ambient_dim(bd) + b_->ambient_dim(bd); }
  const std::vector<Vector<S>>& basis(BiDegree bd) const override { return basis_.at(bd); }

  std::vector<Vector<S>> relations(BiDegree bd) const override {
    std::vector<Vector<S>> rows;
    for (const auto& v : a_->relations(bd)) rows.push_back(join(bd, v, zero_vector<S>(b_->ambient_dim(bd))));
    for (const auto& v : b_->relations(bd)) rows.push_back(join(bd, zero_vector<S>(a_->ambient_dim(bd)), v));
    return rows;
  }

  Vector<S> multiply(int d, BiDegree from, const Vector<S>& v) const override {
    const auto na = a_->ambient_dim(from);
    const BiDegree to = from + BiDegree{0, d};
    return join(to, a_->multiply(d, from, v.head(na)), b_->multiply(d, from, v.tail(v.size() - na)));
  }

  std::string describe() const override { return "(" + a_->describe() + ") + (" + b_->describe() + ")"; }

 private:
  static Vector<S> join(BiDegree, const Vector<S>& x, const Vector<S>& y) {
    Vector<S> out(x.size() + y.size());
    out << x, y;
    return out;
  }

  std::shared_ptr<const GradedModule<S>> a_, b_;
  std::map<BiDegree, std::vector<Vector<S>>> basis_;
};

/// base[-shift]: the piece at bd is the base piece at bd - shift.
template <class S>
class ShiftedModule final : public GradedModule<S> {
 public:
  ShiftedModule(std::shared_ptr<const GradedModule<S>> base, BiDegree shift) : base_(std::move(base)), shift_(shift) {
    if (!shift.nonnegative()) throw UsageError("ShiftedModule: shift must be nonnegative");
  }

  int n() const override { return base_->n(); }
  BiDegree window() const override { return base_->window(); }
  Eigen::Index ambient_dim(BiDegree bd) const override {
    return inside(bd) ? base_->ambient_dim(bd - shift_) : 0;
  }
  const std::vector<Vector<S>>& basis(BiDegree bd) const override {
    return inside(bd) ? base_->basis(bd - shift_) : empty_;
  }
  std::vector<Vector<S>> relations(BiDegree bd) const override {
    return inside(bd) ? base_->relations(bd - shift_) : std::vector<Vector<S>>{};
  }
  Vector<S> multiply(int d, BiDegree from, const Vector<S>& v) const override {
    if (!inside(from)) return zero_vector<S>(ambient_dim(from + BiDegree{0, d}));
    return base_->multiply(d, from - shift_, v);
  }
  std::string render(BiDegree bd, const Vector<S>& v) const override {
    return inside(bd) ? base_->render(bd - shift_, v) : "[]";
  }
  std::string describe() const override { return base_->describe() + " shifted by " + shift_.str(); }

 private:
  bool inside(BiDegree bd) const { return (bd - shift_).nonnegative(); }

  std::shared_ptr<const GradedModule<S>> base_;
  BiDegree shift_;
  std::vector<Vector<S>> empty_;
};

/// base / (submodule generated by one element w at bidegree at).
template <class S>
class QuotientModule final : public GradedModule<S> {
 public:
  QuotientModule(std::shared_ptr<const GradedModule<S>> base, BiDegree at, const Vector<S>& w)
      : base_(std::move(base)), at_(at) {
    const BiDegree win = base_->window();
    // The generated submodule in each piece: span of e_c * (piece at bd - (0,c)).
    for (int a = 0; a <= win.dx; ++a) {
      for (int b = 0; b <= win.dy; ++b) {
        const BiDegree bd{a, b};
        std::vector<Vector<S>> rows;
        for (const auto& v : base_->relations(bd)) rows.push_back(v);
        if (bd == at) rows.push_back(w);
        for (int c = 1; c <= base_->n() && c <= b; ++c) {
          const BiDegree from{a, b - c};
          auto it = generated_.find(from);
          if (it == generated_.end()) continue;
          for (const auto& v : it->second.rows()) rows.push_back(base_->multiply(c, from, v));
        }
        RowEchelon<S> span(base_->ambient_dim(bd));
        span.insert_all(rows);
        if (span.rank() > 0) generated_.emplace(bd, std::move(span));
      }
    }
  }

  int n() const override { return base_->n(); }
  BiDegree window() const override { return base_->window(); }
  Eigen::Index ambient_dim(BiDegree bd) const override { return base_->ambient_dim(bd); }
  const std::vector<Vector<S>>& basis(BiDegree bd) const override { return base_->basis(bd); }
  std::vector<Vector<S>> relations(BiDegree bd) const override {
    auto it = generated_.find(bd);
    return it == generated_.end() ? std::vector<Vector<S>>{} : it->second.rows();
  }
  Vector<S> multiply(int d, BiDegree from, const Vector<S>& v) const override { return base_->multiply(d, from, v); }
  std::string render(BiDegree bd, const Vector<S>& v) const override { return base_->render(bd, v); }
  std::string describe() const override { return base_->describe() + " modulo one relation at " + at_.str(); }

 private:
  std::shared_ptr<const GradedModule<S>> base_;
  BiDegree at_;
  std::map<BiDegree, RowEchelon<S>> generated_;
};

/// Negative control: base ⊕ base[shift] modulo the relation e_1·v = 0, where
/// v is the first basis vector of the shifted copy at `plant`. Multiplication
/// by e_1 on stage 0 then has a nonzero kernel at `plant`.
template <class S>
std::shared_ptr<const GradedModule<S>> planted_torsion_module(std::shared_ptr<const GradedModule<S>> base,
                                                              BiDegree shift, BiDegree plant) {
  if (!plant.fits_in(base->window()) || plant.dy + 1 > base->window().dy)
    throw UsageError("planted torsion: plant bidegree " + plant.str() + " must leave room for e_1 inside the window");
  auto shifted = std::make_shared<ShiftedModule<S>>(base, shift);
  auto sum = std::make_shared<DirectSumModule<S>>(base, shifted);
  if (shifted->basis(plant).empty())
    throw UsageError("planted torsion: shifted copy is zero at " + plant.str());
  Vector<S> v = zero_vector<S>(sum->ambient_dim(plant));
  v.tail(shifted->ambient_dim(plant)) = shifted->basis(plant).front();
  const Vector<S> w = sum->multiply(1, plant, v);
  return std::make_shared<QuotientModule<S>>(sum, plant + BiDegree{0, 1}, w);
}

enum class LiftRule { Canonical, Greedy };

struct FreenessReport {
  int n = 0;
  int k = 0;
  BiDegree cutoff;
  std::string module;
  std::map<BiDegree, std::size_t> hilbert;                         // dim of the module piece
  std::map<std::pair<int, BiDegree>, std::size_t> kernel_dims;     // (stage d, bidegree)
  std::map<std::pair<int, BiDegree>, std::size_t> stage_dims;      // dim M/(e_1..e_d)M
  std::map<BiDegree, std::size_t> fiber_series;
  bool kernels_ok = false;
  bool euler_identity_ok = false;
  bool fiber_nonnegative = true;
  std::map<BiDegree, std::size_t> generator_counts;
  std::vector<std::pair<BiDegree, std::string>> generators;
  bool independent_ok = false;
  bool spanning_ok = false;
  bool certificate_ok = false;
  std::vector<std::string> failures;
  Verdict verdict = Verdict::Inconclusive;
};

/// All stage computations for one module, shared by the individual checks.
template <class S>
class FreenessAnalysis {
 public:
  explicit FreenessAnalysis(std::shared_ptr<const GradedModule<S>> module, const Parallelism& par = {})
      : module_(std::move(module)), par_(par), n_(module_->n()), win_(module_->window()) {
    if (win_.dy < n_)
      throw UsageError("freeness: cutoff y-degree " + std::to_string(win_.dy) + " must be >= n = " + std::to_string(n_));
    for (int a = 0; a <= win_.dx; ++a)
      for (int b = 0; b <= win_.dy; ++b) cells_.push_back({a, b});
    build();
  }

  const GradedModule<S>& module() const { return *module_; }

  std::size_t module_dim(BiDegree bd) const { return dim_m_[idx(bd)] - n_stage_[0][idx(bd)].rank(); }
  std::size_t stage_dim(int d, BiDegree bd) const { return dim_m_[idx(bd)] - n_stage_[d][idx(bd)].rank(); }
  /// Kernel of e_d on stage d-1 at bd; nullopt when the target is outside the window.
  std::optional<std::size_t> kernel_dim(int d, BiDegree bd) const { return kernel_[d - 1][idx(bd)]; }
  std::size_t fiber_dim(BiDegree bd) const { return stage_dim(n_, bd); }

  /// Representatives in M of a basis of the fiber at bd.
  std::vector<Vector<S>> lift_generators(BiDegree bd, LiftRule rule) const {
    const auto& top = n_stage_[n_][idx(bd)];
    std::vector<Vector<S>> out;
    if (rule == LiftRule::Canonical) {
      RowEchelon<S> reps(module_->ambient_dim(bd));
      for (const auto& u : module_->basis(bd)) reps.insert(top.reduce(u));
      out = reps.rows();
    } else {
      RowEchelon<S> grown = top;
      for (const auto& u : module_->basis(bd))
        if (grown.insert(u)) out.push_back(u);
    }
    return out;
  }

  FreenessReport report(LiftRule rule = LiftRule::Canonical) const {
    FreenessReport rep;
    rep.n = n_;
    rep.cutoff = win_;
    rep.module = module_->describe();
    bool any_nonzero = false;
    for (const auto& bd : cells_) {
      rep.hilbert[bd] = module_dim(bd);
      any_nonzero = any_nonzero || rep.hilbert[bd] > 0;
      rep.fiber_series[bd] = fiber_dim(bd);
      for (int d = 1; d <= n_; ++d) rep.stage_dims[{d, bd}] = stage_dim(d, bd);
    }
    fill_kernels(rep);
    fill_euler(rep);
    fill_certificate(rep, rule);
    const bool all = rep.kernels_ok && rep.euler_identity_ok && rep.certificate_ok;
    if (!all)
      rep.verdict = Verdict::Fail;
    else
      rep.verdict = any_nonzero ? Verdict::Pass : Verdict::Inconclusive;
    return rep;
  }

  void fill_kernels(FreenessReport& rep) const {
    rep.kernels_ok = true;
    for (int d = 1; d <= n_; ++d) {
      for (const auto& bd : cells_) {
        const auto kd = kernel_dim(d, bd);
        if (!kd) continue;
        rep.kernel_dims[{d, bd}] = *kd;
        if (*kd != 0) {
          rep.kernels_ok = false;
          rep.failures.push_back("e_" + std::to_string(d) + " has kernel of dim " + std::to_string(*kd) +
                                 " on stage " + std::to_string(d - 1) + " at " + bd.str());
        }
      }
    }
  }

  void fill_euler(FreenessReport& rep) const {
    // prod_{d=1..n} (1 - t^d) as integer coefficients.
    std::vector<long long> factor{1};
    for (int d = 1; d <= n_; ++d) {
      std::vector<long long> next(factor.size() + static_cast<std::size_t>(d), 0);
      for (std::size_t s = 0; s < factor.size(); ++s) {
        next[s] += factor[s];
        next[s + static_cast<std::size_t>(d)] -= factor[s];
      }
      factor = std::move(next);
    }
    rep.euler_identity_ok = true;
    rep.fiber_nonnegative = true;
    for (const auto& bd : cells_) {
      long long lhs = 0;
      for (std::size_t s = 0; s < factor.size() && static_cast<int>(s) <= bd.dy; ++s)
        lhs += factor[s] * static_cast<long long>(module_dim({bd.dx, bd.dy - static_cast<int>(s)}));
      if (lhs < 0) {
        rep.fiber_nonnegative = false;
        rep.euler_identity_ok = false;
        rep.failures.push_back("Hilbert series times prod(1-t^d) is negative (" + std::to_string(lhs) + ") at " +
                               bd.str());
      } else if (static_cast<std::size_t>(lhs) != fiber_dim(bd)) {
        rep.euler_identity_ok = false;
        rep.failures.push_back("Hilbert series identity off at " + bd.str() + ": predicted " + std::to_string(lhs) +
                               ", fiber " + std::to_string(fiber_dim(bd)));
      }
    }
  }

  void fill_certificate(FreenessReport& rep, LiftRule rule) const {
    // gens[cell] and orbit[cell] = {e^alpha * g} with alpha enumerated as
    // nondecreasing index sequences (tag = last index used).
    std::vector<std::vector<Vector<S>>> gens(cells_.size());
    parallel_for(cells_.size(), par_, [&](std::size_t c) { gens[c] = lift_generators(cells_[c], rule); });

    std::vector<char> independent(cells_.size(), 1), spanning(cells_.size(), 1);
    parallel_for(static_cast<std::size_t>(win_.dx + 1), par_, [&](std::size_t a_index) {
      const int a = static_cast<int>(a_index);
      std::vector<std::vector<std::pair<Vector<S>, int>>> orbit(static_cast<std::size_t>(win_.dy + 1));
      for (int b = 0; b <= win_.dy; ++b) {
        const BiDegree bd{a, b};
        auto& here = orbit[static_cast<std::size_t>(b)];
        for (const auto& g : gens[idx(bd)]) here.emplace_back(g, 1);
        for (int d = 1; d <= n_ && d <= b; ++d) {
          const BiDegree from{a, b - d};
          for (const auto& [u, tag] : orbit[static_cast<std::size_t>(b - d)])
            if (tag <= d) here.emplace_back(module_->multiply(d, from, u), d);
        }
        const auto& rel = n_stage_[0][idx(bd)];
        RowEchelon<S> all = rel;
        for (const auto& [u, tag] : here) all.insert(u);
        independent[idx(bd)] = all.rank() - rel.rank() == here.size();
        spanning[idx(bd)] = all.rank() == dim_m_[idx(bd)];
      }
    });

    rep.independent_ok = true;
    rep.spanning_ok = true;
    for (const auto& bd : cells_) {
      const auto c = idx(bd);
      rep.generator_counts[bd] = gens[c].size();
      for (const auto& g : gens[c]) rep.generators.emplace_back(bd, module_->render(bd, g));
      if (!independent[c]) {
        rep.independent_ok = false;
        rep.failures.push_back("lifted generators times e-monomials are dependent at " + bd.str());
      }
      if (!spanning[c]) {
        rep.spanning_ok = false;
        rep.failures.push_back("lifted generators times e-monomials do not span at " + bd.str());
      }
    }
    rep.certificate_ok = rep.independent_ok && rep.spanning_ok;
  }

 private:
  std::size_t idx(BiDegree bd) const {
    return static_cast<std::size_t>(bd.dx) * static_cast<std::size_t>(win_.dy + 1) + static_cast<std::size_t>(bd.dy);
  }

  void build() {
    const std::size_t cells = cells_.size();
    dim_m_.resize(cells);
    parallel_for(cells, par_, [&](std::size_t c) {
      const auto& rows = module_->basis(cells_[c]);
      RowEchelon<S> span(module_->ambient_dim(cells_[c]));
      span.insert_all(rows);
      if (span.rank() != rows.size())
        throw std::logic_error("module basis rows are dependent at " + cells_[c].str());
      dim_m_[c] = span.rank();
    });

    // images[d-1][c]: e_d applied to the basis of cell c (target inside the window).
    std::vector<std::vector<std::vector<Vector<S>>>> images(static_cast<std::size_t>(n_),
                                                            std::vector<std::vector<Vector<S>>>(cells));
    for (int d = 1; d <= n_; ++d) {
      parallel_for(cells, par_, [&](std::size_t c) {
        const BiDegree bd = cells_[c];
        if (bd.dy + d > win_.dy) return;
        auto& out = images[static_cast<std::size_t>(d - 1)][c];
        for (const auto& u : module_->basis(bd)) out.push_back(module_->multiply(d, bd, u));
      });
    }

    n_stage_.assign(static_cast<std::size_t>(n_ + 1), std::vector<RowEchelon<S>>(cells));
    parallel_for(cells, par_, [&](std::size_t c) {
      RowEchelon<S> rel(module_->ambient_dim(cells_[c]));
      rel.insert_all(module_->relations(cells_[c]));
      n_stage_[0][c] = std::move(rel);
    });
    for (int d = 1; d <= n_; ++d) {
      parallel_for(cells, par_, [&](std::size_t c) {
        const BiDegree bd = cells_[c];
        RowEchelon<S> next = n_stage_[static_cast<std::size_t>(d - 1)][c];
        if (bd.dy >= d) next.insert_all(images[static_cast<std::size_t>(d - 1)][idx({bd.dx, bd.dy - d})]);
        n_stage_[static_cast<std::size_t>(d)][c] = std::move(next);
      });
    }

    kernel_.assign(static_cast<std::size_t>(n_), std::vector<std::optional<std::size_t>>(cells));
    for (int d = 1; d <= n_; ++d) {
      parallel_for(cells, par_, [&](std::size_t c) {
        const BiDegree bd = cells_[c];
        if (bd.dy + d > win_.dy) return;
        const BiDegree to{bd.dx, bd.dy + d};
        const auto& img = images[static_cast<std::size_t>(d - 1)][c];
        RowEchelon<S> u(module_->ambient_dim(to));
        u.insert_all(img);
        // Preimage of stage-(d-1) relations at `to`, modulo those at bd.
        const std::size_t ker_m = dim_m_[c] - u.rank();
        const std::size_t preimage = ker_m + intersection_dim(u, n_stage_[static_cast<std::size_t>(d - 1)][idx(to)]);
        kernel_[static_cast<std::size_t>(d - 1)][c] = preimage - n_stage_[static_cast<std::size_t>(d - 1)][c].rank();
      });
    }
  }

  std::shared_ptr<const GradedModule<S>> module_;
  Parallelism par_;
  int n_;
  BiDegree win_;
  std::vector<BiDegree> cells_;
  std::vector<std::size_t> dim_m_;
  std::vector<std::vector<RowEchelon<S>>> n_stage_;
  std::vector<std::vector<std::optional<std::size_t>>> kernel_;
};

template <class S>
std::shared_ptr<const GradedModule<S>> make_ak_module(int n, int k, BiDegree cutoff, AkBasisCache<S>& cache,
                                                      const Parallelism& par = {}) {
  if (cutoff.dy < n) throw UsageError("freeness: cutoff y-degree must be >= n");
  return std::make_shared<AkModule<S>>(n, k, cutoff, cache, par);
}

/// Kernels of e_1..e_n on the successive quotients; pass iff all vanish.
template <class S>
FreenessReport regular_sequence_check(int n, int k, BiDegree cutoff, AkBasisCache<S>& cache,
                                      const Parallelism& par = {}) {
  FreenessAnalysis<S> fa(make_ak_module(n, k, cutoff, cache, par), par);
  FreenessReport rep;
  rep.n = n;
  rep.k = k;
  rep.cutoff = cutoff;
  rep.module = fa.module().describe();
  fa.fill_kernels(rep);
  rep.verdict = rep.kernels_ok ? Verdict::Pass : Verdict::Fail;
  return rep;
}

template <class S>
std::map<BiDegree, std::size_t> fiber_series(int n, int k, BiDegree cutoff, AkBasisCache<S>& cache,
                                             const Parallelism& par = {}) {
  FreenessAnalysis<S> fa(make_ak_module(n, k, cutoff, cache, par), par);
  std::map<BiDegree, std::size_t> out;
  for (int a = 0; a <= cutoff.dx; ++a)
    for (int b = 0; b <= cutoff.dy; ++b) out[{a, b}] = fa.fiber_dim({a, b});
  return out;
}

template <class S>
bool euler_identity_check(int n, int k, BiDegree cutoff, AkBasisCache<S>& cache, const Parallelism& par = {}) {
  FreenessAnalysis<S> fa(make_ak_module(n, k, cutoff, cache, par), par);
  FreenessReport rep;
  fa.fill_euler(rep);
  return rep.euler_identity_ok;
}

/// Full report: kernels, Hilbert series identity, and the lifted basis check.
template <class S>
FreenessReport free_basis_certificate(int n, int k, BiDegree cutoff, AkBasisCache<S>& cache,
                                      LiftRule rule = LiftRule::Canonical, const Parallelism& par = {}) {
  FreenessAnalysis<S> fa(make_ak_module(n, k, cutoff, cache, par), par);
  FreenessReport rep = fa.report(rule);
  rep.k = k;
  return rep;
}

}  // namespace altlab
