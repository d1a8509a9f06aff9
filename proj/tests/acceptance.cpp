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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "agmds/agmds.hpp"

namespace {

using namespace agmds;
using Clock = std::chrono::steady_clock;

// Wall-clock limits per criterion, in seconds.
constexpr double kLimitExample = 10.0;
constexpr double kLimitSchur = 30.0;
constexpr double kLimitGenus2 = 60.0;
constexpr double kLimitSelfDual = 60.0;
constexpr double kLimitTables = 120.0;
constexpr double kLimitTwisted = 60.0;

int failures = 0;

void verdict(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_time(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

void example_reproduction() {
  const auto t0 = Clock::now();
  const auto f = Field::make(19, 1);
  struct Case {
    std::uint64_t n_points, n;
    int m;
    std::uint64_t d;
  };
  const Case cases[] = {{12, 4, 2, 3}, {15, 5, 2, 4}, {18, 6, 2, 5}, {20, 5, 2, 4}, {24, 6, 3, 4}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    try {
      const auto r = coset_recipe(f, c.n_points, c.n, c.m);
      const auto& prov = *r.code.provenance();
      const bool group = mds_check_group(*prov.curve, prov.points, prov.m);
      const bool matrix = mds_check_matrix(r.code);
      const bool exact = r.code.n() == c.n && r.code.k() == static_cast<std::size_t>(c.m) && r.report.d == c.d;
      ok = ok && group && matrix && exact && prov.curve->point_count() == c.n_points;
      detail += "N=" + std::to_string(c.n_points) + "->[" + std::to_string(r.code.n()) + "," + std::to_string(r.code.k()) + "," +
                (r.report.d ? std::to_string(*r.report.d) : "?") + "] ";
    } catch (const Error& e) {
      ok = false;
      detail += "N=" + std::to_string(c.n_points) + "->" + e.what() + " ";
    }
  }
  const double t = seconds_since(t0);
  verdict(1, ok && t < kLimitExample, detail + "in " + fmt_time(t));
}

void schur_laws() {
  const auto t0 = Clock::now();
  std::size_t checked = 0, bad = 0, rs_bad = 0;
  std::string first_bad;
  for (std::uint64_t q : {19u, 25u, 64u}) {
    const auto f = Field::of_order(q);
    // One seeded curve per attained point count.
    std::map<std::uint64_t, Curve> pool;
    std::mt19937_64 rng(q);
    for (int i = 0; i < 3000; ++i) {
      Elem a[5];
      for (auto& x : a) x = Elem{static_cast<std::uint32_t>(rng() % q)};
      try {
        const auto c = Curve::weierstrass(f, a[0], a[1], a[2], a[3], a[4]);
        pool.emplace(c.point_count(), c);
      } catch (const Error&) {
      }
    }
    for (const auto& [big, curve] : pool) {
      const PointGroup g(curve);
      for (std::uint64_t n = 6; n <= std::min<std::uint64_t>(big - 1, 12); ++n) {
        if (big % n != 0) continue;
        for (int m = 3; 2 * static_cast<std::uint64_t>(m) <= n; ++m) {
          const auto setup = find_coset_setup(g, n, m);
          if (!setup) continue;
          const Point b[] = {setup->b};
          std::optional<RecipeResult> r;
          try {
            r = coset_mds(curve, setup->generators, b, m);
          } catch (const Error&) {
            continue;
          }
          ++checked;
          if (r->report.schur_dim != static_cast<std::size_t>(2 * m)) {
            ++bad;
            if (first_bad.empty()) {
              first_bad = " first: q=" + std::to_string(q) + " N=" + std::to_string(big) + " [" + std::to_string(n) + "," +
                          std::to_string(m) + "] schur " + std::to_string(r->report.schur_dim);
            }
          }
          std::vector<Elem> pts;
          for (std::uint32_t a = 0; a < n; ++a) pts.push_back(Elem{a});
          if (schur_square(rs_baseline(f, pts, m)).k() != static_cast<std::size_t>(2 * m - 1)) ++rs_bad;
        }
      }
    }
  }
  const double t = seconds_since(t0);
  verdict(2, checked >= 20 && bad == 0 && rs_bad == 0 && t < kLimitSchur,
          std::to_string(checked) + " elliptic coset codes, " + std::to_string(bad) + " off 2m, " + std::to_string(rs_bad) +
              " RS off 2k-1" + first_bad + ", " + fmt_time(t));
}

void genus2_law() {
  const auto t0 = Clock::now();
  const auto f = Field::make(31, 1);
  const auto c = Curve::parse(f, "g2:1,0,0,0,0,1;");
  auto pts = c.affine_points();
  bool ok = true;
  std::string detail = c.text() + " with " + std::to_string(pts.size()) + " affine points;";
  std::mt19937_64 rng(2);
  for (int m : {9, 10}) {
    for (std::size_t n = 2 * static_cast<std::size_t>(m) + 1; n <= std::min<std::size_t>(pts.size(), 2 * m + 3); ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(pts.begin(), pts.end(), rng);
        const std::vector<Point> sample(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(n));
        const auto code = build_code(c, sample, m);
        const auto sd = schur_square(code).k();
        if (sd != 2 * code.k() + 1) {
          ok = false;
          detail += " m=" + std::to_string(m) + " n=" + std::to_string(n) + " schur " + std::to_string(sd);
        }
      }
    }
    if (pts.size() < 2 * static_cast<std::size_t>(m) + 1) ok = false;
  }
  const double t = seconds_since(t0);
  verdict(3, ok && t < kLimitGenus2, detail + " schur = 2k+1 checked for m in {9,10}, " + fmt_time(t));
}

void selfdual() {
  const auto t0 = Clock::now();
  struct Case {
    int t;
    std::uint64_t lp;
    std::size_t n;
  };
  const Case cases[] = {{2, 1, 4}, {1, 3, 6}, {2, 3, 12}};
  bool ok = true;
  std::string detail = "F16 beta=" + std::to_string(selfdual_beta(2, 2).value_or(0)) + ":";
  for (const auto& c : cases) {
    detail += " [" + std::to_string(c.n) + "," + std::to_string(c.n / 2) + "," + std::to_string(c.n / 2 + 1) + "]";
    try {
      const auto r = selfdual_pipeline({2, 2, c.t, c.lp});
      const auto& code = r.result.code;
      const auto& rep = r.result.report;
      const bool orth = is_self_orthogonal(code.generator());
      const bool dist = rep.d == c.n / 2 + 1;
      const bool schur = rep.schur_dim == c.n;
      const bool good = code.n() == c.n && orth && dist && schur && 2 * (r.odd_part << r.h2) == 48;
      ok = ok && good;
      detail += std::string(orth ? " GG^T=0" : " GG^T!=0") + " d=" + (rep.d ? std::to_string(*rep.d) : "?") +
                " schur=" + std::to_string(rep.schur_dim) + ";";
    } catch (const Error& e) {
      ok = false;
      detail += std::string(" ") + e.what() + ";";
    }
  }
  const double t = seconds_since(t0);
  verdict(4, ok && t < kLimitSelfDual, detail + " " + fmt_time(t));
}

void tables_vs_enumeration() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (std::uint64_t q : {5u, 7u, 8u, 9u, 11u, 13u}) {
    const auto attained = enumerate_all_curves(Field::of_order(q));
    const auto theory = admissible_orders(q);
    const bool orders = std::vector<std::uint64_t>(attained.orders.begin(), attained.orders.end()) == theory;
    bool shapes = true;
    for (const auto& [n, set] : attained.structures)
      for (const auto& g : set) shapes = shapes && is_admissible_structure(q, n, g);
    ok = ok && orders && shapes;
    detail += "q=" + std::to_string(q) + (orders ? " orders=" : " orders!=") + (shapes ? "ok " : "bad-structure ");
  }
  const double t = seconds_since(t0);
  verdict(5, ok && t < kLimitTables, detail + fmt_time(t));
}

void oracle_equivalence() {
  std::mt19937_64 rng(6);
  const std::uint64_t fields[] = {11, 13, 16, 19, 23, 25, 27, 32};
  std::size_t coset_codes = 0, coset_bad = 0;
  while (coset_codes < 200) {
    const auto q = fields[rng() % std::size(fields)];
    const auto f = Field::of_order(q);
    const auto orders = admissible_orders(q);
    const auto big = orders[rng() % orders.size()];
    std::optional<Curve> c;
    try {
      c = find_curve_with_order(f, big, {std::nullopt, 200'000, rng()});
    } catch (const Error&) {
      continue;
    }
    const PointGroup g(*c);
    const auto& pts = g.points();
    const Point p = pts[1 + rng() % (pts.size() - 1)];
    const auto ord = g.order_of(p);
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 2; d <= std::min<std::uint64_t>(ord, 14); ++d)
      if (ord % d == 0) divs.push_back(d);
    if (divs.empty()) continue;
    const auto n1 = divs[rng() % divs.size()];
    const Point gen[] = {g.mul(p, static_cast<std::int64_t>(ord / n1))};
    const auto e1 = g.subgroup(gen);
    const std::set<Point> members(e1.begin(), e1.end());
    const Point b = pts[rng() % pts.size()];
    if (members.count(b)) continue;
    const auto coset = g.coset(b, e1);
    const int m = 1 + static_cast<int>(rng() % (coset.size() - 1));
    const auto code = build_code(*c, coset, m);
    ++coset_codes;
    if (mds_check_group(*c, coset, m) != mds_check_matrix(code)) ++coset_bad;
  }

  std::size_t random_codes = 0, monomial_bad = 0;
  while (random_codes < 200) {
    const auto q = fields[rng() % std::size(fields)];
    const auto f = Field::of_order(q);
    const std::size_t n = 3 + rng() % 8, k = 1 + rng() % (n - 1);
    Matrix gm(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) gm(i, j) = Elem{static_cast<std::uint32_t>(rng() % q)};
    if (rank(gm) != k) continue;
    const LinearCode code(gm);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Elem> scale(n);
    for (auto& s : scale) s = Elem{static_cast<std::uint32_t>(1 + rng() % (q - 1))};
    const auto a = invariant_report(code), b = invariant_report(monomial_transform(code, perm, scale));
    ++random_codes;
    if (a.d != b.d || a.is_mds != b.is_mds || a.schur_dim != b.schur_dim) ++monomial_bad;
  }
  verdict(6, coset_bad == 0 && monomial_bad == 0,
          std::to_string(coset_codes) + " coset codes, " + std::to_string(coset_bad) + " group/matrix disagreements; " +
              std::to_string(random_codes) + " random codes, " + std::to_string(monomial_bad) + " monomial-invariance failures");
}

// Determinant mod p of a small square matrix, by elimination on plain integers.
int det_mod(std::vector<std::vector<int>> a, int p) {
  const auto k = a.size();
  long det = 1;
  auto inv = [p](int x) {
    long r = 1, b = x, e = p - 2;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return static_cast<int>(r);
  };
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = (p - det) % p;
    }
    det = det * a[c][c] % p;
    const int iv = inv(a[c][c]);
    for (std::size_t r = c + 1; r < k; ++r) {
      const long factor = static_cast<long>(a[r][c]) * iv % p;
      for (std::size_t j = c; j < k; ++j) a[r][j] = static_cast<int>(((a[r][j] - factor * a[c][j]) % p + p) % p);
    }
  }
  return static_cast<int>(det);
}

void twisted_rs_condition() {
  const auto t0 = Clock::now();
  constexpr int p = 19;
  std::uint64_t instances = 0, product_mismatch = 0, inverse_mismatch = 0, library_mismatch = 0, library_checked = 0;
  std::string example;
  const auto f = Field::make(p, 1);
  std::mt19937_64 rng(7);

  std::vector<int> alpha;
  std::function<void(int, std::size_t)> subsets = [&](int next, std::size_t n) {
    if (alpha.size() == n) {
      for (int k = 1; k <= std::min<int>(4, static_cast<int>(n) - 1); ++k) {
        // Each k x k minor is A + eta * B, linear in eta through the first row.
        std::vector<bool> singular(p, false);
        std::set<int> products, inverse_products;
        std::vector<std::size_t> cols;
        std::function<void(std::size_t)> minors = [&](std::size_t start) {
          if (cols.size() == static_cast<std::size_t>(k)) {
            std::vector<std::vector<int>> ma(k, std::vector<int>(k)), mb(k, std::vector<int>(k));
            long prod = 1;
            for (int c = 0; c < k; ++c) {
              const long x = alpha[cols[c]];
              prod = prod * x % p;
              long pw = 1;
              for (int r = 0; r < k; ++r, pw = pw * x % p) {
                ma[r][c] = mb[r][c] = r == 0 ? 0 : static_cast<int>(pw);
              }
              ma[0][c] = 1;
              mb[0][c] = static_cast<int>(pw);  // x^k
            }
            const int a = det_mod(ma, p), b = det_mod(mb, p);
            for (int eta = 1; eta < p; ++eta)
              if ((a + static_cast<long>(eta) * b) % p == 0) singular[eta] = true;
            products.insert(static_cast<int>(prod));
            return;
          }
          for (std::size_t i = start; i < alpha.size(); ++i) {
            cols.push_back(i);
            minors(i + 1);
            cols.pop_back();
          }
        };
        minors(0);
        for (int pr : products) {
          int v = 1;
          while (v * pr % p != (k % 2 == 0 ? 1 : p - 1)) ++v;
          inverse_products.insert(v);
        }
        for (int eta = 1; eta < p; ++eta) {
          ++instances;
          const bool mds = !singular[eta];
          const bool product_flag = products.count(eta) == 0;
          const bool inverse_flag = inverse_products.count(eta) == 0;
          if (product_flag != mds) {
            ++product_mismatch;
            if (example.empty()) {
              example = " e.g. alpha={";
              for (std::size_t i = 0; i < alpha.size(); ++i) example += (i ? "," : "") + std::to_string(alpha[i]);
              example += "} k=" + std::to_string(k) + " eta=" + std::to_string(eta) + (mds ? " MDS" : " not MDS");
            }
          }
          if (inverse_flag != mds) ++inverse_mismatch;
          if (rng() % 4096 == 0) {
            std::vector<Elem> ae;
            for (int x : alpha) ae.push_back(Elem{static_cast<std::uint32_t>(x)});
            const auto r = twisted_rs(f, ae, Elem{static_cast<std::uint32_t>(eta)}, k);
            ++library_checked;
            if (mds_check_matrix(r.result.code) != mds || r.product_condition != product_flag) ++library_mismatch;
          }
        }
      }
      return;
    }
    for (int x = next; x < p; ++x) {
      alpha.push_back(x);
      subsets(x + 1, n);
      alpha.pop_back();
    }
  };
  for (std::size_t n = 2; n <= 8; ++n) subsets(1, n);

  const double t = seconds_since(t0);
  verdict(7, product_mismatch == 0 && library_mismatch == 0 && t < kLimitTwisted,
          std::to_string(instances) + " instances, " + std::to_string(product_mismatch) + " product-condition mismatches" + example +
              "; inverse-product condition " + std::to_string(inverse_mismatch) + " mismatches; library spot checks " +
              std::to_string(library_checked) + "/" + std::to_string(library_mismatch) + " bad, " + fmt_time(t));
}

void acknowledged_limits() {
  bool ok = eaqec_params(12, 6, 0) == EaqecParams{12, 6, 7, 6} && eaqec_params(12, 6, 6) == EaqecParams{12, 0, 7, 0} &&
            eaqec_params(12, 8, 2) == EaqecParams{12, 6, 5, 2};
  std::string detail = "EAQEC arithmetic " + std::string(ok ? "ok" : "wrong");
  try {
    LengthParams prm;
    prm.n = 7;
    prm.m = 3;
    const auto r = length_recipe(LengthRecipe::Cor32, Field::of_order(1u << 16), prm);
    const bool good = r.report.is_mds && r.report.d == 5;
    ok = ok && good;
    detail += std::string("; [7,3,5] over F65536 ") + (good ? "built" : "wrong");
  } catch (const Error& e) {
    ok = false;
    detail += std::string("; F65536 length recipe: ") + e.what();
  }
  verdict(8, ok, detail + "; asymptotic ranges are out of desk reach and covered by criteria 3, 4 and 6");
}

}  // namespace

int main() {
  example_reproduction();
  schur_laws();
  genus2_law();
  selfdual();
  tables_vs_enumeration();
  oracle_equivalence();
  twisted_rs_condition();
  acknowledged_limits();
  return failures;
}
