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

// Named end-to-end recipes: coset codes on elliptic curves and the length
// corollaries built on them, supersingular curves, the characteristic-2
// self-dual pipeline, twisted and plain Reed-Solomon baselines, and the
// randomized genus-2 search.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "agmds/arith.hpp"
#include "agmds/code.hpp"
#include "agmds/curve.hpp"
#include "agmds/errors.hpp"
#include "agmds/field.hpp"

namespace agmds {

struct RecipeResult {
  LinearCode code;
  CodeReport report;
};

namespace detail {

inline std::string join_points(const Field& f, std::span<const Point> pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + format_point(f, pts[i]);
  return s;
}

inline Error precondition(const std::string& clause) { return Error(ErrorKind::PreconditionFailed, clause); }

}  // namespace detail

/// A subgroup E1 of order n1 (its generators) plus a representative b with
/// <b> ∩ E1 = {inf} and ord(b) >= m + 1.
struct CosetSetup {
  std::vector<Point> generators;
  Point b;
};

inline std::optional<CosetSetup> find_coset_setup(const PointGroup& g, std::uint64_t n1, int m) {
  if (n1 == 0 || g.size() % n1 != 0) return std::nullopt;
  std::set<std::vector<Point>> tried;
  std::vector<std::pair<std::vector<Point>, std::vector<Point>>> candidates;  // (generators, subgroup)
  for (const auto& p : g.points()) {
    if (p.inf || g.order_of(p) != n1) continue;
    const Point gens[] = {p};
    auto sub = g.subgroup(gens);
    if (tried.insert(sub).second) candidates.push_back({{p}, std::move(sub)});
  }
  if (candidates.empty()) {
    if (auto sub = g.subgroup_of_order(n1)) {
      std::vector<Point> gens(sub->begin() + 1, sub->end());
      candidates.push_back({std::move(gens), std::move(*sub)});
    }
  }
  for (const auto& [gens, sub] : candidates) {
    const std::set<Point> members(sub.begin(), sub.end());
    for (const auto& b : g.points()) {
      if (b.inf || members.count(b) != 0) continue;
      if (g.order_of(b) < static_cast<std::uint64_t>(m) + 1) continue;
      if (g.meets_trivially(b, members)) return CosetSetup{gens, b};
    }
  }
  return std::nullopt;
}

/// Coset code C(b + E1, m P0), or C(∪ b_i + E1, m P0) for several
/// representatives. The zero-sum subset scan is the final MDS verdict.
inline RecipeResult coset_mds(const Curve& curve, std::span<const Point> e1_generators, std::span<const Point> reps, int m,
                              std::uint64_t budget = kDefaultBudget) {
  require_genus1(curve);
  if (reps.empty()) throw detail::precondition("at least one coset representative is required");
  const PointGroup g(curve);
  const auto e1 = g.subgroup(e1_generators);
  const std::set<Point> members(e1.begin(), e1.end());
  Provenance prov;
  prov.params["e1_order"] = std::to_string(e1.size());

  std::vector<Point> pts;
  if (reps.size() == 1) {
    const Point& b = reps.front();
    curve.require_on_curve(b);
    if (b.inf) throw detail::precondition("coset representative b must be nonzero");
    if (!g.meets_trivially(b, members)) throw detail::precondition("<b> must meet E1 only in the identity");
    if (static_cast<std::uint64_t>(m) + 1 > g.order_of(b)) throw detail::precondition("need m <= ord(b) - 1");
    pts = g.coset(b, e1);
  } else {
    std::set<Point> seen;
    for (const auto& b : reps) {
      for (const auto& p : g.coset(b, e1)) {
        if (!seen.insert(p).second) throw detail::precondition("cosets must be disjoint");
        pts.push_back(p);
      }
    }
    // Sufficient condition: no sum of m representatives (with repetition) lies in E1.
    bool sufficient = true;
    auto dfs = [&](auto&& self, std::size_t start, int left, const Point& s) -> void {
      if (!sufficient) return;
      if (left == 0) {
        if (members.count(s) != 0) sufficient = false;
        return;
      }
      for (std::size_t i = start; i < reps.size(); ++i) self(self, i, left - 1, g.add(s, reps[i]));
    };
    dfs(dfs, 0, m, Point::infinity());
    prov.params["sufficient_condition"] = sufficient ? "true" : "false";
  }
  if (std::any_of(pts.begin(), pts.end(), [](const Point& p) { return p.inf; })) {
    throw detail::precondition("evaluation set contains P0");
  }
  if (!mds_check_group(curve, pts, m, budget)) {
    throw Error(ErrorKind::NotMDS, "an m-subset of the evaluation set sums to the identity");
  }
  auto code = build_code(curve, pts, m);
  prov.construction = "coset";
  prov.curve = curve;
  prov.m = m;
  prov.points = pts;
  prov.params["reps"] = detail::join_points(curve.field(), reps);
  prov.params["e1_generators"] = detail::join_points(curve.field(), e1_generators);
  code.set_provenance(std::move(prov));
  auto report = invariant_report(code, budget);
  return {std::move(code), report};
}

/// Searches curves with N points for a subgroup of order n and a coset
/// satisfying the single-coset preconditions, then builds the [n, m] code.
inline RecipeResult coset_recipe(const Field& f, std::uint64_t n_points, std::uint64_t n, int m,
                                 const CurveSearchOptions& opt = {}, std::uint64_t budget = kDefaultBudget) {
  if (m < 1 || static_cast<std::uint64_t>(m) >= n) throw detail::precondition("need 1 <= m < n");
  std::optional<CosetSetup> setup;
  const Curve c = search_curves(f, n_points, opt, [&](const Curve& cand) {
    setup = find_coset_setup(PointGroup(cand), n, m);
    return setup.has_value();
  });
  const Point b[] = {setup->b};
  return coset_mds(c, setup->generators, b, m, budget);
}

enum class LengthRecipe { Cor31, Cor32, Cor33 };

struct LengthParams {
  // cor31: |E| = l1 * l2
  std::uint64_t l1 = 0;
  std::uint64_t l2 = 0;
  // cor32: length n
  std::uint64_t n = 0;
  // dimension (m for cor31/cor32, k for cor33)
  int m = 0;
  // cor33: use length floor(sqrt p) + 1 instead of floor(sqrt p)
  bool long_variant = false;
};

inline RecipeResult length_recipe(LengthRecipe kind, const Field& f, const LengthParams& prm,
                                  const CurveSearchOptions& opt = {}, std::uint64_t budget = kDefaultBudget) {
  const std::uint64_t q = f.q(), p = f.p();
  auto tag = [](RecipeResult r, const std::string& name) {
    auto prov = *r.code.provenance();
    prov.construction = name;
    r.code.set_provenance(std::move(prov));
    return r;
  };
  auto no_curve = [](const Error& e) {
    if (e.kind() == ErrorKind::OutsideHasse || e.kind() == ErrorKind::NotAdmissible) {
      return Error(ErrorKind::NoAdmissibleCurve, e.what());
    }
    return e;
  };

  switch (kind) {
    case LengthRecipe::Cor31: {
      if (!(prm.l1 < prm.l2)) throw detail::precondition("need l1 < l2");
      if (std::gcd(prm.l1, prm.l2) != 1) throw detail::precondition("need gcd(l1, l2) = 1");
      if (prm.l1 % p == 0 || prm.l2 % p == 0) throw detail::precondition("need gcd(l_i, q) = 1");
      if (prm.m < 2 || static_cast<std::uint64_t>(prm.m) > prm.l1 - 1) throw detail::precondition("need 2 <= m <= l1 - 1");
      try {
        return tag(coset_recipe(f, prm.l1 * prm.l2, prm.l1, prm.m, opt, budget), "cor31");
      } catch (const Error& e) {
        throw no_curve(e);
      }
    }
    case LengthRecipe::Cor32: {
      const std::uint64_t n = prm.n;
      if (n < 6) throw detail::precondition("need n >= 6");
      if (n * n * n * n > q) throw detail::precondition("need n <= q^(1/4)");
      if (n % p == 0) throw detail::precondition("need gcd(n, q) = 1");
      if (prm.m < 2 || static_cast<std::uint64_t>(2 * prm.m) > n) throw detail::precondition("need 2 <= m <= n/2");
      std::optional<CosetSetup> setup;
      Curve c = [&] {
        try {
          return detail::scan_curves(
              f, opt, [n](std::uint64_t big) { return big % n == 0 && std::gcd(n, big / n) == 1; },
              [&](const Curve& cand) {
                setup = find_coset_setup(PointGroup(cand), n, prm.m);
                return setup.has_value();
              });
        } catch (const Error& e) {
          throw no_curve(e);
        }
      }();
      const Point b[] = {setup->b};
      auto res = coset_mds(c, setup->generators, b, prm.m, budget);
      return tag(std::move(res), "cor32");
    }
    case LengthRecipe::Cor33: {
      if (f.s() != 1 || p == 2) throw detail::precondition("need an odd prime field");
      const std::uint64_t r = arith::isqrt(p);
      const std::uint64_t len = prm.long_variant ? r + 1 : r;
      if (prm.m < 2 || static_cast<std::uint64_t>(2 * prm.m) > r) throw detail::precondition("need 2 <= k <= floor(sqrt p)/2");
      try {
        return tag(coset_recipe(f, r * (r + 1), len, prm.m, opt, budget), "cor33");
      } catch (const Error& e) {
        throw no_curve(e);
      }
    }
  }
  throw detail::precondition("unknown recipe");
}

/// |E(F_{p^e})| for the supersingular curves used below.
inline std::uint64_t supersingular_order(std::uint64_t p, int e) {
  if (e % 2 == 1) return arith::ipow(p, static_cast<unsigned>(e)) + 1;
  const auto half = static_cast<std::int64_t>(arith::ipow(p, static_cast<unsigned>(e / 2)));
  const std::int64_t base = half - ((e / 2) % 2 == 0 ? 1 : -1);
  return static_cast<std::uint64_t>(base * base);
}

/// Supersingular curve over F_{p^e}: y^2 = x^3 + 1 for p ≡ 2 mod 3,
/// y^2 = x^3 + x for p ≡ 3 mod 4.
inline Curve supersingular_curve(std::uint64_t p, int e) {
  if (p == 2 || !arith::is_prime(p)) throw detail::precondition("need an odd prime p");
  const Field f = Field::make(p, e);
  if (p % 3 == 2) return Curve::weierstrass(f, f.zero(), f.zero(), f.zero(), f.zero(), f.one());
  if (p % 4 == 3) return Curve::weierstrass(f, f.zero(), f.zero(), f.zero(), f.one(), f.zero());
  throw detail::precondition("need p ≡ 2 mod 3 or p ≡ 3 mod 4");
}

inline RecipeResult supersingular_recipe(std::uint64_t p, int e, std::uint64_t n_sub, int k, std::uint64_t budget = kDefaultBudget) {
  const Curve c = supersingular_curve(p, e);
  const std::uint64_t order = supersingular_order(p, e);
  if (n_sub == 0 || order % n_sub != 0) throw detail::precondition("N must divide |E| = " + std::to_string(order));
  if (e % 2 == 1) {
    if (n_sub * n_sub >= order) throw detail::precondition("need N < sqrt(p^n + 1)");
  } else {
    const auto half = static_cast<std::int64_t>(arith::ipow(p, static_cast<unsigned>(e / 2)));
    const std::int64_t bound = half - ((e / 2) % 2 == 0 ? 1 : -1);
    if (static_cast<std::int64_t>(n_sub) >= bound) throw detail::precondition("need N < p^(n/2) - (-1)^(n/2)");
  }
  if (k < 1 || static_cast<std::uint64_t>(k) > n_sub - 1) throw detail::precondition("need 1 <= k <= N - 1");

  const PointGroup g(c);
  if (g.size() != order) throw detail::precondition("curve is not supersingular over this field");
  auto sub = g.subgroup_of_order(n_sub);
  if (!sub) throw Error(ErrorKind::SubgroupNotFound, "no subgroup of order " + std::to_string(n_sub));
  const std::set<Point> members(sub->begin(), sub->end());
  std::optional<Point> rep;
  for (const auto& b : g.points()) {
    if (b.inf || members.count(b) != 0 || g.order_of(b) < static_cast<std::uint64_t>(k) + 1) continue;
    if (g.meets_trivially(b, members)) {
      rep = b;
      break;
    }
  }
  if (!rep) throw detail::precondition("no coset representative b with <b> ∩ E1 = {inf} and ord(b) > k");
  const std::vector<Point> gens(sub->begin() + 1, sub->end());
  const Point reps[] = {*rep};
  auto res = coset_mds(c, gens, reps, k, budget);
  auto prov = *res.code.provenance();
  prov.construction = "supersingular";
  prov.params["p"] = std::to_string(p);
  prov.params["extension"] = std::to_string(e);
  prov.params["N"] = std::to_string(n_sub);
  res.code.set_provenance(std::move(prov));
  return res;
}

struct SelfDualParams {
  int s1 = 0;
  int s2 = 0;
  int t = 0;
  std::uint64_t lp = 0;  // odd divisor L' of L
  std::uint64_t seed = 0;
  std::uint64_t curve_budget = 200'000;
};

struct SelfDualResult {
  RecipeResult result;
  LinearCode base;  // the coset code before rescaling
  std::int64_t beta = 0;
  int h2 = 0;
  std::uint64_t odd_part = 0;  // L
};

/// First beta (by increasing |beta|, positive first) with beta ≡ 1 mod 8,
/// 2 - beta ≡ 0 mod 2^s1 - 1, |beta| <= 2 sqrt q and v2(q + 1 - beta) >= 3.
inline std::optional<std::int64_t> selfdual_beta(int s1, int s2) {
  const auto q = static_cast<std::int64_t>(arith::ipow(2, static_cast<unsigned>(s1 * s2)));
  const auto w = static_cast<std::int64_t>(arith::isqrt(static_cast<std::uint64_t>(4 * q)));
  const std::int64_t mod = (std::int64_t{1} << s1) - 1;
  auto ok = [&](std::int64_t beta) {
    if (((beta % 8) + 8) % 8 != 1) return false;
    if (((2 - beta) % mod + mod) % mod != 0) return false;
    return arith::valuation(static_cast<std::uint64_t>(q + 1 - beta), 2) >= 3;
  };
  for (std::int64_t a = 0; a <= w; ++a) {
    if (ok(a)) return a;
    if (a != 0 && ok(-a)) return -a;
  }
  return std::nullopt;
}

inline SelfDualResult selfdual_pipeline(const SelfDualParams& prm, std::uint64_t budget = kDefaultBudget) {
  if (prm.s1 < 1 || prm.s2 < 1) throw detail::precondition("need s1, s2 >= 1");
  const Field f = Field::make(2, prm.s1 * prm.s2);
  const auto beta = selfdual_beta(prm.s1, prm.s2);
  if (!beta) throw Error(ErrorKind::NoAdmissibleBeta, "no beta ≡ 1 mod 8 with 2 - beta ≡ 0 mod 2^s1 - 1 in the Hasse range");
  const std::uint64_t big_n = f.q() + 1 - static_cast<std::uint64_t>(*beta + 0) ;
  const int h2 = arith::valuation(big_n, 2);
  const std::uint64_t odd = big_n >> h2;
  if (prm.t < 1) throw detail::precondition("need t >= 1 so that n is even");
  if (prm.t > h2 - 1) throw detail::precondition("need t <= h2 - 1 = " + std::to_string(h2 - 1));
  if (prm.lp == 0 || prm.lp % 2 == 0 || odd % prm.lp != 0) throw detail::precondition("L' must be an odd divisor of L = " + std::to_string(odd));

  const GroupStructure cyclic{1, big_n};
  Curve c = [&] {
    try {
      return search_curves(f, big_n, {cyclic, prm.curve_budget, prm.seed}, [](const Curve&) { return true; });
    } catch (const Error& e) {
      throw Error(ErrorKind::NoCurveFound, e.what());
    }
  }();
  const PointGroup g(c);
  const Point gen = *g.point_of_order(big_n);
  const Point theta = g.mul(gen, static_cast<std::int64_t>(odd));
  const Point e2 = g.mul(gen, static_cast<std::int64_t>(big_n / prm.lp));
  const Point e1_two = g.mul(theta, std::int64_t{1} << (h2 - prm.t));
  const Point b = g.mul(theta, std::int64_t{1} << (h2 - 1 - prm.t));
  const Point gens[] = {e1_two, e2};
  const auto e1 = g.subgroup(gens);
  const auto pts = g.coset(b, e1);
  const std::uint64_t n = pts.size();
  const int m = static_cast<int>(n / 2);

  if (!mds_check_group(c, pts, m, budget) || !mds_check_matrix(build_code(c, pts, m), budget)) {
    throw Error(ErrorKind::NotMDS, "coset code [" + std::to_string(n) + "," + std::to_string(m) + "] is not MDS");
  }
  auto base = build_code(c, pts, m);
  Provenance prov = *base.provenance();
  prov.construction = "selfdual-pipeline";
  prov.params["s1"] = std::to_string(prm.s1);
  prov.params["s2"] = std::to_string(prm.s2);
  prov.params["t"] = std::to_string(prm.t);
  prov.params["Lp"] = std::to_string(prm.lp);
  prov.params["beta"] = std::to_string(*beta);
  prov.params["seed"] = std::to_string(prm.seed);
  base.set_provenance(prov);
  auto sd = selfdualize(base, prm.seed);
  auto sd_prov = *sd.provenance();
  sd_prov.construction = "selfdual-pipeline";
  sd.set_provenance(std::move(sd_prov));
  auto report = invariant_report(sd, budget);
  return {{std::move(sd), report}, std::move(base), *beta, h2, odd};
}

struct TwistedRsResult {
  RecipeResult result;
  bool product_condition = false;  // eta is not a product of k distinct alphas
  bool exact_condition = false;    // eta is not (-1)^k / (product of k distinct alphas)
};

/// Evaluation code of {1 + eta x^k, x, ..., x^(k-1)} on the points alpha.
inline TwistedRsResult twisted_rs(const Field& f, std::span<const Elem> alpha, Elem eta, int k, std::uint64_t budget = kDefaultBudget) {
  const std::size_t n = alpha.size();
  if (n > f.q() - 1) throw detail::precondition("need n <= q - 1");
  if (k < 1 || static_cast<std::size_t>(k) > n - 1 || n == 0) throw detail::precondition("need 1 <= k <= n - 1");
  if (eta.v == 0) throw detail::precondition("eta must be nonzero");
  std::set<Elem> seen;
  for (auto a : alpha) {
    if (a.v == 0) throw detail::precondition("evaluation points must be nonzero");
    if (!seen.insert(a).second) throw Error(ErrorKind::DuplicatePoints, "evaluation points repeat");
  }
  const auto kk = static_cast<std::size_t>(k);
  if (arith::binomial_capped(n, kk, budget) > budget) throw Error(ErrorKind::BudgetExceeded, "C(n,k) exceeds the step budget");

  Matrix g(f, kk, n);
  for (std::size_t j = 0; j < n; ++j) {
    g(0, j) = f.add(f.one(), f.mul(eta, f.pow(alpha[j], kk)));
    for (std::size_t r = 1; r < kk; ++r) g(r, j) = f.pow(alpha[j], r);
  }

  const Elem sign = kk % 2 == 0 ? f.one() : f.neg(f.one());
  bool product_ok = true, exact_ok = true;
  auto dfs = [&](auto&& self, std::size_t start, std::size_t depth, Elem prod) -> void {
    if (depth == kk) {
      if (prod == eta) product_ok = false;
      if (f.mul(eta, prod) == sign) exact_ok = false;
      return;
    }
    for (std::size_t i = start; i + (kk - depth) <= n; ++i) self(self, i + 1, depth + 1, f.mul(prod, alpha[i]));
  };
  dfs(dfs, 0, 0, f.one());

  Provenance prov;
  prov.construction = "twisted-rs";
  prov.m = k;
  prov.params["eta"] = f.format(eta);
  std::string a;
  for (std::size_t j = 0; j < n; ++j) a += (j ? " " : "") + f.format(alpha[j]);
  prov.params["alpha"] = a;
  LinearCode code(std::move(g), std::move(prov));
  auto report = invariant_report(code, budget);
  if (exact_ok != mds_check_matrix(code, budget)) {
    throw Error(ErrorKind::PreconditionFailed, "twisted RS MDS condition disagrees with the minor check");
  }
  return {{std::move(code), report}, product_ok, exact_ok};
}

/// Vandermonde generator on 1, x, ..., x^(k-1).
inline LinearCode rs_baseline(const Field& f, std::span<const Elem> points, int k) {
  const std::size_t n = points.size();
  if (k < 1 || static_cast<std::size_t>(k) > n || n > f.q()) throw detail::precondition("need 1 <= k <= n <= q");
  std::set<Elem> seen;
  for (auto a : points)
    if (!seen.insert(a).second) throw Error(ErrorKind::DuplicatePoints, "evaluation points repeat");
  Matrix g(f, static_cast<std::size_t>(k), n);
  for (std::size_t r = 0; r < static_cast<std::size_t>(k); ++r)
    for (std::size_t j = 0; j < n; ++j) g(r, j) = f.pow(points[j], r);
  Provenance prov;
  prov.construction = "rs";
  prov.m = k;
  return LinearCode(std::move(g), std::move(prov));
}

struct Genus2SearchResult {
  std::optional<RecipeResult> result;
  std::uint64_t attempts = 0;
  bool counting_bound_holds = false;  // m * C(n, m - 2) < N
};

/// Samples n-subsets of affine points and returns the first MDS one-point code.
inline Genus2SearchResult genus2_search(const Curve& c, std::size_t n, int m, std::uint64_t seed = 0,
                                        std::uint64_t attempts = 100'000, std::uint64_t budget = kDefaultBudget) {
  if (c.genus() != 2) throw detail::precondition("need a genus-2 curve");
  if (m < 3) throw detail::precondition("need m > 2g - 2 = 2");
  auto affine = c.affine_points();
  if (!(static_cast<std::size_t>(m) < n && n <= affine.size())) {
    throw detail::precondition("need m < n <= number of affine points (" + std::to_string(affine.size()) + ")");
  }
  Genus2SearchResult out;
  const std::uint64_t total = affine.size() + 1;
  const auto bin = arith::binomial_capped(n, static_cast<std::uint64_t>(m - 2), total);
  out.counting_bound_holds = static_cast<unsigned __int128>(m) * bin < total;

  std::mt19937_64 rng(seed);
  for (out.attempts = 1; out.attempts <= attempts; ++out.attempts) {
    for (std::size_t i = 0; i < n; ++i) std::swap(affine[i], affine[i + rng() % (affine.size() - i)]);
    std::vector<Point> pts(affine.begin(), affine.begin() + static_cast<std::ptrdiff_t>(n));
    std::sort(pts.begin(), pts.end());
    auto code = build_code(c, pts, m);
    if (!mds_check_matrix(code, budget)) continue;
    auto prov = *code.provenance();
    prov.construction = "genus2-search";
    prov.params["seed"] = std::to_string(seed);
    prov.params["attempt"] = std::to_string(out.attempts);
    code.set_provenance(std::move(prov));
    auto report = invariant_report(code, budget);
    out.result = RecipeResult{std::move(code), report};
    return out;
  }
  out.attempts = attempts;
  return out;
}

}  // namespace agmds
