/**************************************************************************
 * Copyright 2026 The agmds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

// Linear codes and the analytics run on them: duality, minimum distance, the
// two MDS certifiers, Schur squares, hulls and self-dual rescaling.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "agmds/arith.hpp"
#include "agmds/curve.hpp"
#include "agmds/errors.hpp"
#include "agmds/field.hpp"
#include "agmds/matrix.hpp"
#include "agmds/rr_space.hpp"

namespace agmds {

/// Where a code came from; optional on every LinearCode.
struct Provenance {
  std::string construction;
  std::optional<Curve> curve;
  int m = 0;
  std::vector<Point> points;
  std::map<std::string, std::string> params;
};

class LinearCode {
 public:
  /// The generator must have full row rank.
  explicit LinearCode(Matrix generator, std::optional<Provenance> provenance = std::nullopt)
      : g_(std::move(generator)), provenance_(std::move(provenance)) {
    if (g_.rows() > g_.cols()) throw Error(ErrorKind::RankDeficient, "k exceeds n");
    if (rank(g_) != g_.rows()) throw Error(ErrorKind::RankDeficient, "generator rows are dependent");
  }

  const Field& field() const { return g_.field(); }
  std::size_t n() const { return g_.cols(); }
  std::size_t k() const { return g_.rows(); }
  const Matrix& generator() const { return g_; }
  const std::optional<Provenance>& provenance() const { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

 private:
  Matrix g_;
  std::optional<Provenance> provenance_;
};

/// Row-space equality.
inline bool same_code(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n() || a.k() != b.k()) return false;
  return rref_rank(a.generator()).rref == rref_rank(b.generator()).rref;
}

inline void require_distinct_affine(const Curve& c, std::span<const Point> points) {
  std::set<Point> seen;
  for (const auto& p : points) {
    if (p.inf) throw Error(ErrorKind::InfinityEvaluation, "evaluation points must be affine");
    c.require_on_curve(p);
    if (!seen.insert(p).second) throw Error(ErrorKind::DuplicatePoints, "evaluation points repeat");
  }
}

/// One-point AG code C(P, m P0): rows are the basis monomials of L(m P0)
/// evaluated at the given affine points.
inline LinearCode build_code(const Curve& c, std::span<const Point> points, int m) {
  const auto n = static_cast<int>(points.size());
  const int g = c.genus();
  if (!(2 * g - 2 < m && m < n)) {
    throw Error(ErrorKind::DegreeOutOfRange, "need 2g-2 < m < n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  require_distinct_affine(c, points);
  const auto basis = rr_basis(c, m);
  Matrix gen(c.field(), basis.dimension(), points.size());
  for (std::size_t r = 0; r < basis.dimension(); ++r)
    for (std::size_t col = 0; col < points.size(); ++col) gen(r, col) = evaluate_function(c, basis.monomials[r], points[col]);
  Provenance prov;
  prov.construction = "one-point";
  prov.curve = c;
  prov.m = m;
  prov.points.assign(points.begin(), points.end());
  return LinearCode(std::move(gen), std::move(prov));
}

inline LinearCode dual_code(const LinearCode& code) { return LinearCode(kernel_basis(code.generator())); }

namespace detail {

/// Incremental echelon form over column vectors of length k.
class Echelon {
 public:
  Echelon(const Field& f, std::size_t dim) : f_(f), dim_(dim) {}

  /// Adds v; returns false (and leaves the basis unchanged) when v is dependent.
  bool push(Vec v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem c = v[pivots_[i]];
      if (c.v == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) v[j] = f_.sub(v[j], f_.mul(c, rows_[i][j]));
    }
    std::size_t piv = 0;
    while (piv < dim_ && v[piv].v == 0) ++piv;
    if (piv == dim_) return false;
    const Elem inv = f_.inv(v[piv]);
    for (auto& e : v) e = f_.mul(e, inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
  }

 private:
  const Field& f_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// True iff every k-subset of columns of g is independent.
inline bool all_k_subsets_independent(const Matrix& g) {
  const std::size_t k = g.rows(), n = g.cols();
  if (k == 0) return true;
  std::vector<Vec> cols(n, Vec(k));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < k; ++r) cols[c][r] = g(r, c);
  Echelon ech(g.field(), k);
  auto dfs = [&](auto&& self, std::size_t start, std::size_t depth) -> bool {
    for (std::size_t c = start; c + (k - depth) <= n; ++c) {
      if (!ech.push(cols[c])) return false;
      bool ok = depth + 1 == k || self(self, c + 1, depth + 1);
      ech.pop();
      if (!ok) return false;
    }
    return true;
  };
  return dfs(dfs, 0, 0);
}

inline std::size_t weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e.v != 0; }));
}

}  // namespace detail

/// Exact minimum distance. Enumerates messages when q^k fits the budget,
/// otherwise scans column subsets for the largest rank-deficient one.
inline std::uint64_t min_distance(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
  const Field& f = code.field();
  const std::size_t n = code.n(), k = code.k();
  if (k == 0) throw Error(ErrorKind::PreconditionFailed, "zero code has no minimum distance");
  const Matrix& g = code.generator();

  std::uint64_t messages = 1;
  bool fits = true;
  for (std::size_t i = 0; i < k && fits; ++i) {
    messages *= f.q();
    fits = messages <= budget;
  }
  if (fits) {
    // Projective enumeration: the first nonzero message coordinate is 1.
    std::size_t best = n;
    std::vector<Vec> partial(k + 1, Vec(n, f.zero()));
    auto dfs = [&](auto&& self, std::size_t row, bool leading) -> void {
      if (row == k) {
        if (!leading) best = std::min(best, detail::weight(partial[k]));
        return;
      }
      const std::uint32_t lo = 0, hi = leading ? 2 : f.q();
      for (std::uint32_t cv = lo; cv < hi; ++cv) {
        const Elem c{cv};
        auto& dst = partial[row + 1];
        const auto& src = partial[row];
        if (cv == 0) {
          dst = src;
        } else {
          for (std::size_t j = 0; j < n; ++j) dst[j] = f.add(src[j], f.mul(c, g(row, j)));
        }
        self(self, row + 1, leading && cv == 0);
      }
    };
    dfs(dfs, 0, true);
    return best;
  }

  // d = n - max{|Z| : rank(G_Z) < k}; deficient sets are closed under subsets.
  std::uint64_t spent = 0;
  for (std::size_t z = k; z <= n; ++z) {
    const auto count = arith::binomial_capped(n, z, budget);
    spent += count;
    if (count > budget || spent > budget) throw Error(ErrorKind::BudgetExceeded, "minimum distance exceeds the step budget");
    bool deficient = false;
    if (z == k) {
      deficient = !detail::all_k_subsets_independent(g);
    } else {
      std::vector<std::size_t> idx(z);
      for (std::size_t i = 0; i < z; ++i) idx[i] = i;
      while (true) {
        if (rank(g.select_columns(idx)) < k) {
          deficient = true;
          break;
        }
        std::size_t i = z;
        while (i > 0 && idx[i - 1] == n - z + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < z; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    if (!deficient) return n - (z - 1);
  }
  return 1;  // unreachable: every n-subset has full rank
}

/// [n,k] is MDS iff every k columns of the generator are independent.
inline bool mds_check_matrix(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
  if (arith::binomial_capped(code.n(), code.k(), budget) > budget) {
    throw Error(ErrorKind::BudgetExceeded, "C(n,k) exceeds the step budget");
  }
  return detail::all_k_subsets_independent(code.generator());
}

/// Elliptic one-point code on `points` with divisor m P0 is MDS iff no m of
/// the points sum to the identity.
inline bool mds_check_group(const Curve& c, std::span<const Point> points, int m, std::uint64_t budget = kDefaultBudget) {
  require_genus1(c);
  require_distinct_affine(c, points);
  if (m < 1) throw Error(ErrorKind::DegreeOutOfRange, "m must be >= 1");
  const auto n = points.size();
  const auto mm = static_cast<std::size_t>(m);
  if (mm > n) return true;
  if (arith::binomial_capped(n, mm, budget) > budget) throw Error(ErrorKind::BudgetExceeded, "C(n,m) exceeds the step budget");
  auto dfs = [&](auto&& self, std::size_t start, std::size_t depth, const Point& sum) -> bool {
    for (std::size_t i = start; i + (mm - depth) <= n; ++i) {
      const Point s = add_unchecked(c, sum, points[i]);
      if (depth + 1 == mm) {
        if (s.inf) return false;
      } else if (!self(self, i + 1, depth + 1, s)) {
        return false;
      }
    }
    return true;
  };
  return dfs(dfs, 0, 0, Point::infinity());
}

/// Span of all coordinatewise products of generator-row pairs.
inline LinearCode schur_square(const LinearCode& code) {
  const Field& f = code.field();
  const Matrix& g = code.generator();
  Matrix prod(f, 0, code.n());
  Vec row(code.n());
  for (std::size_t a = 0; a < code.k(); ++a)
    for (std::size_t b = a; b < code.k(); ++b) {
      for (std::size_t j = 0; j < code.n(); ++j) row[j] = f.mul(g(a, j), g(b, j));
      prod.append_row(row);
    }
  return LinearCode(row_space_basis(prod));
}

/// dim(C ∩ C^perp) = dim C + dim C^perp - rank [G; H].
inline std::size_t hull_dim(const LinearCode& code) {
  const Matrix h = kernel_basis(code.generator());
  Matrix stack = code.generator();
  for (std::size_t r = 0; r < h.rows(); ++r) stack.append_row(h.row(r));
  return code.k() + h.rows() - rank(stack);
}

inline bool is_self_orthogonal(const Matrix& g) { return (g * g.transpose()).is_zero(); }

inline constexpr std::uint64_t kSelfDualAttempts = 100'000;

/// Rescales a half-rate code over F_{2^s} to a self-dual one: finds a
/// full-weight v with G diag(v) G^T = 0 and returns G diag(sqrt(v)).
inline LinearCode selfdualize(const LinearCode& code, std::uint64_t seed = 0, std::uint64_t attempts = kSelfDualAttempts) {
  const Field& f = code.field();
  if (!f.is_char2()) throw Error(ErrorKind::CharNotTwo, "self-dual rescaling needs characteristic 2");
  if (code.n() != 2 * code.k()) throw Error(ErrorKind::NotHalfRate, "need n = 2k");
  const Matrix sol = diagonal_bilinear_solve(code.generator());
  auto full_weight = [](std::span<const Elem> v) { return detail::weight(v) == v.size(); };

  std::optional<Vec> v;
  for (std::size_t r = 0; r < sol.rows() && !v; ++r)
    if (full_weight(sol.row(r))) v = sol.row_vec(r);
  if (!v && sol.rows() > 1) {
    std::mt19937_64 rng(seed);
    Vec comb(code.n());
    for (std::uint64_t t = 0; t < attempts && !v; ++t) {
      std::fill(comb.begin(), comb.end(), f.zero());
      for (std::size_t r = 0; r < sol.rows(); ++r) {
        const Elem c{static_cast<std::uint32_t>(rng() % f.q())};
        for (std::size_t j = 0; j < code.n(); ++j) comb[j] = f.add(comb[j], f.mul(c, sol(r, j)));
      }
      if (full_weight(comb)) v = comb;
    }
  }
  if (!v) throw Error(ErrorKind::NoFullWeightSolution, "no full-weight solution of G diag(v) G^T = 0");

  Vec root(v->size());
  for (std::size_t j = 0; j < v->size(); ++j) root[j] = f.frobenius_sqrt((*v)[j]);
  Matrix scaled = code.generator().scale_columns(root);
  if (!is_self_orthogonal(scaled)) throw Error(ErrorKind::RankDeficient, "rescaled generator is not self-orthogonal");
  auto prov = code.provenance().value_or(Provenance{});
  prov.construction += prov.construction.empty() ? "selfdual" : "+selfdual";
  std::string scale;
  for (std::size_t j = 0; j < root.size(); ++j) scale += (j ? " " : "") + f.format(root[j]);
  prov.params["scaling"] = scale;
  return LinearCode(std::move(scaled), std::move(prov));
}

/// [[n, k-h, n-k+1, n-k-h]] from an MDS [n,k] code with h-dimensional hull.
struct EaqecParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;
  std::int64_t c = 0;

  friend bool operator==(const EaqecParams&, const EaqecParams&) = default;
};

inline EaqecParams eaqec_params(std::int64_t n, std::int64_t k, std::int64_t h) {
  if (n < 1 || 2 * k < n || k > n - 1) throw Error(ErrorKind::RangeViolation, "need n/2 <= k <= n-1");
  if (h < 0 || 2 * h > n) throw Error(ErrorKind::RangeViolation, "need 0 <= h <= n/2");
  if (n - k - h < 0) throw Error(ErrorKind::RangeViolation, "need n-k-h >= 0");
  return {n, k - h, n - k + 1, n - k - h};
}

struct CodeReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::uint64_t> d;
  bool is_mds = false;
  std::size_t schur_dim = 0;
  std::optional<std::uint64_t> schur_d;
  std::size_t hull_dim = 0;
  bool self_dual = false;
  bool non_rs_certified = false;

  friend bool operator==(const CodeReport&, const CodeReport&) = default;
};

/// Fills every field; distances that exceed the budget are left empty.
inline CodeReport invariant_report(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
  CodeReport r;
  r.n = code.n();
  r.k = code.k();
  if (r.k > 0) {
    try {
      r.d = min_distance(code, budget);
    } catch (const Error&) {
    }
  }
  try {
    r.is_mds = mds_check_matrix(code, budget);
  } catch (const Error&) {
    r.is_mds = r.d && *r.d == r.n - r.k + 1;
  }
  const auto sq = schur_square(code);
  r.schur_dim = sq.k();
  if (sq.k() > 0) {
    try {
      r.schur_d = min_distance(sq, budget);
    } catch (const Error&) {
    }
  }
  r.hull_dim = hull_dim(code);
  r.self_dual = 2 * r.k == r.n && r.hull_dim == r.k;
  r.non_rs_certified = r.k > 0 && r.schur_dim >= 2 * r.k;
  return r;
}

/// Column permutation followed by nonzero column scaling.
inline LinearCode monomial_transform(const LinearCode& code, std::span<const std::size_t> perm, std::span<const Elem> scale) {
  return LinearCode(code.generator().select_columns(perm).scale_columns(scale));
}

}  // namespace agmds
