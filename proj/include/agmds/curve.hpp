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

// Elliptic curves in general Weierstrass form and genus-2 curves
// y^2 + h(x) y = f(x) with deg f = 5. Both models have a single point at
// infinity, which serves as P0 and, on elliptic curves, as the group identity.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "agmds/arith.hpp"
#include "agmds/errors.hpp"
#include "agmds/field.hpp"

namespace agmds {

struct Point {
  bool inf = true;
  Elem x{};
  Elem y{};

  static Point infinity() { return {}; }
  static Point affine(Elem x, Elem y) { return {false, x, y}; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.inf == b.inf && (a.inf || (a.x == b.x && a.y == b.y));
  }
  /// Infinity first, then affine points by encoded (x, y).
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.inf || b.inf) return b.inf <=> a.inf;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

/// E(F_q) = Z/d1 x Z/d2 with d1 | d2.
struct GroupStructure {
  std::uint64_t d1 = 1;
  std::uint64_t d2 = 1;

  friend auto operator<=>(const GroupStructure&, const GroupStructure&) = default;
};

namespace detail {

using FPoly = std::vector<Elem>;  // little-endian over F_q

inline void ftrim(FPoly& a) {
  while (!a.empty() && a.back().v == 0) a.pop_back();
}

inline Elem feval(const Field& f, const FPoly& poly, Elem x) {
  Elem acc = f.zero();
  for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
  return acc;
}

inline FPoly fderiv(const Field& f, const FPoly& poly) {
  FPoly d;
  for (std::size_t i = 1; i < poly.size(); ++i) d.push_back(f.mul(f.from_int(static_cast<std::int64_t>(i)), poly[i]));
  ftrim(d);
  return d;
}

inline FPoly fmod(const Field& f, FPoly a, FPoly b) {
  ftrim(a);
  ftrim(b);
  const Elem lead_inv = f.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    const Elem factor = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
    ftrim(a);
  }
  return a;
}

inline FPoly fgcd(const Field& f, FPoly a, FPoly b) {
  ftrim(a);
  ftrim(b);
  while (!b.empty()) {
    auto r = fmod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Splits on commas that are not inside brackets or parentheses.
inline std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace detail

class Curve {
 public:
  /// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
  static Curve weierstrass(const Field& f, Elem a1, Elem a3, Elem a2, Elem a4, Elem a6) {
    Curve c(f);
    c.genus_ = 1;
    c.a_ = {a1, a3, a2, a4, a6};
    if (c.discriminant().v == 0) throw Error(ErrorKind::Singular, "discriminant vanishes");
    return c;
  }

  /// y^2 + h(x) y = f(x); coefficients little-endian, deg f = 5, deg h <= 2.
  static Curve hyperelliptic(const Field& fld, std::vector<Elem> fcoef, std::vector<Elem> hcoef) {
    detail::ftrim(fcoef);
    detail::ftrim(hcoef);
    if (fcoef.size() != 6) throw Error(ErrorKind::BadModel, "genus-2 model needs deg f = 5");
    if (hcoef.size() > 3) throw Error(ErrorKind::BadModel, "genus-2 model needs deg h <= 2");
    Curve c(fld);
    c.genus_ = 2;
    c.f_ = std::move(fcoef);
    c.h_ = std::move(hcoef);
    c.check_genus2_smooth();
    return c;
  }

  /// Generic constructor: 5 Weierstrass coefficients for genus 1, or
  /// 6 coefficients of f followed by up to 3 of h for genus 2.
  static Curve make(const Field& f, int genus, std::span<const Elem> coeffs) {
    if (genus == 1) {
      if (coeffs.size() != 5) throw Error(ErrorKind::BadModel, "genus 1 takes a1,a3,a2,a4,a6");
      return weierstrass(f, coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]);
    }
    if (genus == 2) {
      if (coeffs.size() < 6 || coeffs.size() > 9) throw Error(ErrorKind::BadModel, "genus 2 takes 6 f-coefficients then up to 3 h-coefficients");
      return hyperelliptic(f, {coeffs.begin(), coeffs.begin() + 6}, {coeffs.begin() + 6, coeffs.end()});
    }
    throw Error(ErrorKind::BadModel, "genus must be 1 or 2");
  }

  /// Parses `g1:a1,a3,a2,a4,a6` or `g2:f0,...,f5;h0,h1,h2`.
  static Curve parse(const Field& f, std::string_view text) {
    if (text.size() < 3 || text[0] != 'g' || text[2] != ':') throw Error(ErrorKind::ParseError, "curve must start with g1: or g2:");
    auto body = text.substr(3);
    auto elems = [&](std::string_view s) {
      std::vector<Elem> out;
      if (s.empty()) return out;
      for (auto part : detail::split_top(s, ',')) out.push_back(f.parse(part));
      return out;
    };
    if (text[1] == '1') {
      auto a = elems(body);
      return make(f, 1, a);
    }
    if (text[1] == '2') {
      auto parts = detail::split_top(body, ';');
      if (parts.size() > 2) throw Error(ErrorKind::ParseError, "genus-2 curve takes f;h");
      auto fc = elems(parts[0]);
      auto hc = parts.size() == 2 ? elems(parts[1]) : std::vector<Elem>{};
      return hyperelliptic(f, fc, hc);
    }
    throw Error(ErrorKind::ParseError, "genus must be 1 or 2");
  }

  std::string text() const {
    std::string out = genus_ == 1 ? "g1:" : "g2:";
    auto join = [&](std::span<const Elem> v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += field_.format(v[i]);
      }
      return s;
    };
    if (genus_ == 1) return out + join(a_);
    return out + join(f_) + ";" + join(h_);
  }

  const Field& field() const { return field_; }
  int genus() const { return genus_; }
  Elem a1() const { return a_[0]; }
  Elem a3() const { return a_[1]; }
  Elem a2() const { return a_[2]; }
  Elem a4() const { return a_[3]; }
  Elem a6() const { return a_[4]; }
  const std::vector<Elem>& f_coeffs() const { return f_; }
  const std::vector<Elem>& h_coeffs() const { return h_; }

  Elem discriminant() const {
    const Field& F = field_;
    auto k = [&](std::int64_t n) { return F.from_int(n); };
    const auto [a1, a3, a2, a4, a6] = a_;
    const Elem b2 = F.add(F.mul(a1, a1), F.mul(k(4), a2));
    const Elem b4 = F.add(F.mul(k(2), a4), F.mul(a1, a3));
    const Elem b6 = F.add(F.mul(a3, a3), F.mul(k(4), a6));
    Elem b8 = F.add(F.mul(F.mul(a1, a1), a6), F.mul(k(4), F.mul(a2, a6)));
    b8 = F.sub(b8, F.mul(a1, F.mul(a3, a4)));
    b8 = F.add(b8, F.mul(a2, F.mul(a3, a3)));
    b8 = F.sub(b8, F.mul(a4, a4));
    Elem d = F.neg(F.mul(F.mul(b2, b2), b8));
    d = F.sub(d, F.mul(k(8), F.mul(b4, F.mul(b4, b4))));
    d = F.sub(d, F.mul(k(27), F.mul(b6, b6)));
    d = F.add(d, F.mul(k(9), F.mul(b2, F.mul(b4, b6))));
    return d;
  }

  /// Coefficients (B, C) of y^2 + B y + C = 0 over the fibre at x.
  std::pair<Elem, Elem> fibre(Elem x) const {
    const Field& F = field_;
    if (genus_ == 1) {
      const Elem b = F.add(F.mul(a1(), x), a3());
      Elem rhs = F.add(F.mul(F.add(F.mul(F.add(x, a2()), x), a4()), x), a6());
      return {b, F.neg(rhs)};
    }
    return {detail::feval(F, h_, x), F.neg(detail::feval(F, f_, x))};
  }

  bool contains(const Point& p) const {
    if (p.inf) return true;
    const auto [b, c] = fibre(p.x);
    const Field& F = field_;
    return F.add(F.add(F.mul(p.y, p.y), F.mul(b, p.y)), c).v == 0;
  }

  void require_on_curve(const Point& p) const {
    if (!contains(p)) throw Error(ErrorKind::PointNotOnCurve, "point is not on the curve");
  }

  /// Upper limits on q for exhaustive point enumeration.
  static constexpr std::uint64_t kMaxQGenus1 = std::uint64_t{1} << 16;
  static constexpr std::uint64_t kMaxQGenus2 = std::uint64_t{1} << 12;

  /// All rational points, infinity first, affine points sorted by encoding.
  std::vector<Point> points() const {
    check_enumerable();
    std::vector<Point> out{Point::infinity()};
    const Field& F = field_;
    for (std::uint32_t xv = 0; xv < F.q(); ++xv) {
      const Elem x{xv};
      const auto [b, c] = fibre(x);
      auto ys = F.quadratic_roots(b, c);
      std::sort(ys.begin(), ys.end());
      for (auto y : ys) out.push_back(Point::affine(x, y));
    }
    return out;
  }

  std::vector<Point> affine_points() const {
    auto pts = points();
    pts.erase(pts.begin());
    return pts;
  }

  /// |C(F_q)| including the point at infinity.
  std::uint64_t point_count() const {
    check_enumerable();
    std::uint64_t n = 1;
    const Field& F = field_;
    for (std::uint32_t xv = 0; xv < F.q(); ++xv) {
      const auto [b, c] = fibre(Elem{xv});
      n += F.quadratic_roots(b, c).size();
    }
    return n;
  }

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.field_ == b.field_ && a.genus_ == b.genus_ && a.a_ == b.a_ && a.f_ == b.f_ && a.h_ == b.h_;
  }

 private:
  explicit Curve(Field f) : field_(std::move(f)) {}

  void check_enumerable() const {
    const auto limit = genus_ == 1 ? kMaxQGenus1 : kMaxQGenus2;
    if (field_.q() > limit) throw Error(ErrorKind::TooLarge, "field too large for exhaustive enumeration");
  }

  void check_genus2_smooth() const {
    const Field& F = field_;
    if (F.p() != 2) {
      // y -> y - h/2 turns the model into y^2 = 4f + h^2 (up to scaling); smooth iff squarefree.
      detail::FPoly g(6, F.zero());
      for (std::size_t i = 0; i < 6; ++i) g[i] = F.mul(F.from_int(4), f_[i]);
      for (std::size_t i = 0; i < h_.size(); ++i)
        for (std::size_t j = 0; j < h_.size(); ++j) g[i + j] = F.add(g[i + j], F.mul(h_[i], h_[j]));
      auto d = detail::fgcd(F, g, detail::fderiv(F, g));
      if (d.size() > 1) throw Error(ErrorKind::Singular, "4f + h^2 has a repeated root");
      return;
    }
    if (h_.empty()) throw Error(ErrorKind::Singular, "y^2 = f(x) is singular in characteristic 2");
    check_enumerable();
    const auto dh = detail::fderiv(F, h_);
    const auto df = detail::fderiv(F, f_);
    for (const auto& p : affine_points()) {
      const Elem fy = detail::feval(F, h_, p.x);
      const Elem fx = F.sub(F.mul(detail::feval(F, dh, p.x), p.y), detail::feval(F, df, p.x));
      if (fy.v == 0 && fx.v == 0) throw Error(ErrorKind::Singular, "singular affine point");
    }
  }

  Field field_;
  int genus_ = 1;
  std::array<Elem, 5> a_{};
  std::vector<Elem> f_;
  std::vector<Elem> h_;
};

// ---------------------------------------------------------------------------
// Group law on genus-1 curves (char-2/3-safe chord-tangent formulas).

inline Point negate_unchecked(const Curve& c, const Point& p) {
  if (p.inf) return p;
  const Field& F = c.field();
  return Point::affine(p.x, F.sub(F.neg(p.y), F.add(F.mul(c.a1(), p.x), c.a3())));
}

inline Point add_unchecked(const Curve& c, const Point& p, const Point& q) {
  if (p.inf) return q;
  if (q.inf) return p;
  const Field& F = c.field();
  Elem lambda, nu;
  if (p.x == q.x) {
    // q = -p  <=>  y1 + y2 + a1 x + a3 = 0
    if (F.add(F.add(p.y, q.y), F.add(F.mul(c.a1(), q.x), c.a3())).v == 0) return Point::infinity();
    const Elem den = F.add(F.add(F.mul(F.from_int(2), p.y), F.mul(c.a1(), p.x)), c.a3());
    const Elem x2 = F.mul(p.x, p.x);
    Elem num = F.add(F.add(F.mul(F.from_int(3), x2), F.mul(F.mul(F.from_int(2), c.a2()), p.x)), c.a4());
    num = F.sub(num, F.mul(c.a1(), p.y));
    lambda = F.div(num, den);
    Elem nnum = F.add(F.neg(F.mul(x2, p.x)), F.mul(c.a4(), p.x));
    nnum = F.add(nnum, F.mul(F.from_int(2), c.a6()));
    nnum = F.sub(nnum, F.mul(c.a3(), p.y));
    nu = F.div(nnum, den);
  } else {
    const Elem dx = F.sub(q.x, p.x);
    lambda = F.div(F.sub(q.y, p.y), dx);
    nu = F.div(F.sub(F.mul(p.y, q.x), F.mul(q.y, p.x)), dx);
  }
  Elem x3 = F.add(F.mul(lambda, lambda), F.mul(c.a1(), lambda));
  x3 = F.sub(F.sub(F.sub(x3, c.a2()), p.x), q.x);
  const Elem y3 = F.sub(F.sub(F.neg(F.mul(F.add(lambda, c.a1()), x3)), nu), c.a3());
  return Point::affine(x3, y3);
}

inline Point multiply_unchecked(const Curve& c, Point p, std::int64_t k) {
  if (k < 0) {
    p = negate_unchecked(c, p);
    k = -k;
  }
  Point r = Point::infinity();
  auto e = static_cast<std::uint64_t>(k);
  while (e > 0) {
    if (e & 1) r = add_unchecked(c, r, p);
    p = add_unchecked(c, p, p);
    e >>= 1;
  }
  return r;
}

inline void require_genus1(const Curve& c) {
  if (c.genus() != 1) throw Error(ErrorKind::BadModel, "group law needs a genus-1 curve");
}

inline Point add(const Curve& c, const Point& p, const Point& q) {
  require_genus1(c);
  c.require_on_curve(p);
  c.require_on_curve(q);
  return add_unchecked(c, p, q);
}

inline Point negate(const Curve& c, const Point& p) {
  require_genus1(c);
  c.require_on_curve(p);
  return negate_unchecked(c, p);
}

inline Point multiply(const Curve& c, const Point& p, std::int64_t k) {
  require_genus1(c);
  c.require_on_curve(p);
  return multiply_unchecked(c, p, k);
}

/// Least t >= 1 with t P = inf, given the group order N.
inline std::uint64_t order_unchecked(const Curve& c, const Point& p, std::uint64_t group_order) {
  std::uint64_t t = group_order;
  for (auto [l, e] : arith::factorize(group_order)) {
    for (int i = 0; i < e; ++i) {
      if (!multiply_unchecked(c, p, static_cast<std::int64_t>(t / l)).inf) break;
      t /= l;
    }
  }
  return t;
}

inline std::uint64_t order(const Curve& c, const Point& p) {
  require_genus1(c);
  c.require_on_curve(p);
  return order_unchecked(c, p, c.point_count());
}

enum class GroupOp { Add, Neg, ScalarMul, Order };

/// Tagged entry point: a point for Add/Neg/ScalarMul, an integer for Order.
inline std::variant<Point, std::uint64_t> group_law(const Curve& c, GroupOp op, const Point& p,
                                                    const Point& q = Point::infinity(), std::int64_t scalar = 0) {
  switch (op) {
    case GroupOp::Add: return add(c, p, q);
    case GroupOp::Neg: return negate(c, p);
    case GroupOp::ScalarMul: return multiply(c, p, scalar);
    case GroupOp::Order: return order(c, p);
  }
  return p;
}

/// The rational points of an elliptic curve with its group order cached.
class PointGroup {
 public:
  explicit PointGroup(Curve c) : curve_(std::move(c)) {
    require_genus1(curve_);
    points_ = curve_.points();
  }

  const Curve& curve() const { return curve_; }
  const std::vector<Point>& points() const { return points_; }
  std::uint64_t size() const { return points_.size(); }

  Point add(const Point& p, const Point& q) const { return add_unchecked(curve_, p, q); }
  Point neg(const Point& p) const { return negate_unchecked(curve_, p); }
  Point mul(const Point& p, std::int64_t k) const { return multiply_unchecked(curve_, p, k); }
  std::uint64_t order_of(const Point& p) const { return order_unchecked(curve_, p, size()); }

  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (const auto& p : points_) e = std::lcm(e, order_of(p));
    return e;
  }

  GroupStructure structure() const {
    const std::uint64_t n = size();
    const std::uint64_t d2 = exponent();
    const GroupStructure g{n / d2, d2};
    if (g.d2 % g.d1 != 0 || (curve_.field().q() - 1) % g.d1 != 0) {
      throw Error(ErrorKind::PreconditionFailed, "group structure violates d1 | d2, d1 | q-1");
    }
    return g;
  }

  /// A point of exact order r, taken as a multiple of the first point (in
  /// sorted order) whose order is divisible by r.
  std::optional<Point> point_of_order(std::uint64_t r) const {
    if (r == 0 || size() % r != 0) return std::nullopt;
    for (const auto& p : points_) {
      const auto o = order_of(p);
      if (o % r == 0) return mul(p, static_cast<std::int64_t>(o / r));
    }
    return std::nullopt;
  }

  /// True iff the cyclic group generated by b meets `sub` only in the identity.
  bool meets_trivially(const Point& b, const std::set<Point>& sub) const {
    const auto o = order_of(b);
    for (auto [l, e] : arith::factorize(o)) {
      if (sub.count(mul(b, static_cast<std::int64_t>(o / l))) != 0) return false;
    }
    return true;
  }

  /// Closure of the generators under the group law, sorted.
  std::vector<Point> subgroup(std::span<const Point> gens) const {
    for (const auto& g : gens) curve_.require_on_curve(g);
    std::set<Point> seen{Point::infinity()};
    std::vector<Point> frontier{Point::infinity()};
    while (!frontier.empty()) {
      std::vector<Point> next;
      for (const auto& p : frontier) {
        for (const auto& g : gens) {
          auto s = add(p, g);
          if (seen.insert(s).second) next.push_back(s);
        }
      }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<Point> coset(const Point& b, std::span<const Point> sub) const {
    curve_.require_on_curve(b);
    std::vector<Point> out;
    out.reserve(sub.size());
    for (const auto& e : sub) out.push_back(add(b, e));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Some subgroup of order exactly r: cyclic when possible, otherwise generated
  /// by two r-torsion points.
  std::optional<std::vector<Point>> subgroup_of_order(std::uint64_t r) const {
    if (r == 0 || size() % r != 0) return std::nullopt;
    if (auto p = point_of_order(r)) {
      const Point g[] = {*p};
      return subgroup(g);
    }
    std::vector<Point> torsion;
    for (const auto& p : points_)
      if (!p.inf && r % order_of(p) == 0) torsion.push_back(p);
    for (std::size_t i = 0; i < torsion.size(); ++i)
      for (std::size_t j = i + 1; j < torsion.size(); ++j) {
        const Point g[] = {torsion[i], torsion[j]};
        auto s = subgroup(g);
        if (s.size() == r) return s;
      }
    return std::nullopt;
  }

 private:
  Curve curve_;
  std::vector<Point> points_;
};

inline GroupStructure group_structure(const Curve& c) { return PointGroup(c).structure(); }

/// Subgroup generated by `gens`, or the coset b + <gens> when b is given.
inline std::vector<Point> subgroup_and_cosets(const Curve& c, std::span<const Point> gens,
                                              std::optional<Point> coset_rep = std::nullopt) {
  PointGroup g(c);
  auto sub = g.subgroup(gens);
  if (!coset_rep) return sub;
  return g.coset(*coset_rep, sub);
}

// ---------------------------------------------------------------------------
// Admissible orders and group structures of elliptic curves over F_q.

/// Hasse window [q+1-floor(2 sqrt q), q+1+floor(2 sqrt q)].
inline std::pair<std::uint64_t, std::uint64_t> hasse_window(std::uint64_t q) {
  const std::uint64_t w = arith::isqrt(4 * q);
  return {q + 1 - w, q + 1 + w};
}

namespace detail {

struct OrderCases {
  bool a = false, b = false, c = false, d = false, e = false;
  bool any() const { return a || b || c || d || e; }
};

inline OrderCases order_cases(std::uint64_t p, int n, std::int64_t beta) {
  OrderCases oc;
  const std::uint64_t q = arith::ipow(p, static_cast<unsigned>(n));
  const auto ab = static_cast<std::uint64_t>(beta < 0 ? -beta : beta);
  if (ab * ab > 4 * q) return oc;
  oc.a = std::gcd(ab, p) == 1;
  if (n % 2 == 0) {
    const std::uint64_t rq = arith::isqrt(q);
    oc.b = ab == 2 * rq;
    oc.c = (p % 3 != 1) && ab == rq;
  } else {
    oc.d = (p == 2 || p == 3) && ab == arith::ipow(p, static_cast<unsigned>((n + 1) / 2));
  }
  oc.e = ab == 0 && (n % 2 == 1 || p % 4 != 1);
  return oc;
}

}  // namespace detail

/// Every N = q + 1 - beta attainable as |E(F_q)|.
inline std::vector<std::uint64_t> admissible_orders(std::uint64_t q) {
  auto pp = arith::prime_power(q);
  if (!pp) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  const auto w = static_cast<std::int64_t>(arith::isqrt(4 * q));
  std::vector<std::uint64_t> out;
  for (std::int64_t beta = w; beta >= -w; --beta) {
    if (detail::order_cases(pp->first, pp->second, beta).any()) {
      out.push_back(static_cast<std::uint64_t>(static_cast<std::int64_t>(q) + 1 - beta));
    }
  }
  return out;
}

/// Every (d1, d2) with d1 d2 = N attainable as E(F_q); empty when N itself is inadmissible.
inline std::vector<GroupStructure> admissible_structures(std::uint64_t q, std::uint64_t n_points) {
  auto pp = arith::prime_power(q);
  if (!pp) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  const auto beta = static_cast<std::int64_t>(q) + 1 - static_cast<std::int64_t>(n_points);
  const auto cases = detail::order_cases(pp->first, pp->second, beta);
  if (!cases.any() || n_points == 0) return {};
  const bool forced_half = cases.b && !(cases.a || cases.c || cases.d || cases.e);

  // Choices of l^{a_l} per prime l != p.
  std::vector<std::vector<std::uint64_t>> choices;
  for (auto [l, h] : arith::factorize(n_points)) {
    if (l == pp->first) continue;
    std::vector<std::uint64_t> opts;
    if (forced_half) {
      if (h % 2 != 0) return {};
      opts.push_back(arith::ipow(l, static_cast<unsigned>(h / 2)));
    } else {
      const int hi = std::min(arith::valuation(q - 1, l), h / 2);
      for (int a = 0; a <= hi; ++a) opts.push_back(arith::ipow(l, static_cast<unsigned>(a)));
    }
    choices.push_back(std::move(opts));
  }
  std::vector<std::uint64_t> d1s{1};
  for (const auto& opts : choices) {
    std::vector<std::uint64_t> next;
    for (auto d : d1s)
      for (auto o : opts) next.push_back(d * o);
    d1s = std::move(next);
  }
  std::sort(d1s.begin(), d1s.end());
  std::vector<GroupStructure> out;
  for (auto d1 : d1s) out.push_back({d1, n_points / d1});
  return out;
}

inline bool is_admissible_structure(std::uint64_t q, std::uint64_t n_points, GroupStructure g) {
  auto all = admissible_structures(q, n_points);
  return std::find(all.begin(), all.end(), g) != all.end();
}

/// Orders and structures attained by enumerating every nonsingular
/// Weierstrass curve (all q^5 coefficient tuples). Intended for small q.
struct AttainedGroups {
  std::set<std::uint64_t> orders;
  std::map<std::uint64_t, std::set<GroupStructure>> structures;
  std::uint64_t curves = 0;
};

inline AttainedGroups enumerate_all_curves(const Field& f) {
  AttainedGroups out;
  const std::uint32_t q = f.q();
  std::array<std::uint32_t, 5> idx{};
  const std::uint64_t total = arith::ipow(q, 5);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t r = t;
    for (int i = 4; i >= 0; --i) {
      idx[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(r % q);
      r /= q;
    }
    std::optional<Curve> c;
    try {
      c = Curve::weierstrass(f, {idx[0]}, {idx[1]}, {idx[2]}, {idx[3]}, {idx[4]});
    } catch (const Error&) {
      continue;
    }
    ++out.curves;
    const PointGroup g(*c);
    out.orders.insert(g.size());
    out.structures[g.size()].insert(g.structure());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Curve search.

struct CurveSearchOptions {
  std::optional<GroupStructure> shape;
  std::uint64_t budget = 1'000'000;  // curves examined
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kExhaustivePrimeLimit = 3000;

namespace detail {

/// Walks candidate curves until one has an acceptable point count and
/// `accept` returns true. Prime fields up to 3000 are scanned in a fixed order
/// (short Weierstrass forms for p >= 5, all coefficient tuples otherwise);
/// other fields are sampled from a seeded generator.
template <class CountOk, class Accept>
Curve scan_curves(const Field& f, const CurveSearchOptions& opt, CountOk&& count_ok, Accept&& accept) {
  const std::uint64_t q = f.q();
  auto try_curve = [&](const std::array<std::uint32_t, 5>& a) -> std::optional<Curve> {
    std::optional<Curve> c;
    try {
      c = Curve::weierstrass(f, {a[0]}, {a[1]}, {a[2]}, {a[3]}, {a[4]});
    } catch (const Error&) {
      return std::nullopt;
    }
    if (!count_ok(c->point_count())) return std::nullopt;
    if (opt.shape && group_structure(*c) != *opt.shape) return std::nullopt;
    if (!accept(*c)) return std::nullopt;
    return c;
  };

  std::uint64_t examined = 0;
  if (f.s() == 1 && q <= kExhaustivePrimeLimit) {
    if (q >= 5) {
      for (std::uint32_t a4 = 0; a4 < q && examined < opt.budget; ++a4)
        for (std::uint32_t a6 = 0; a6 < q && examined < opt.budget; ++a6, ++examined)
          if (auto c = try_curve({0, 0, 0, a4, a6})) return *c;
    } else {
      const std::uint64_t total = arith::ipow(q, 5);
      for (std::uint64_t t = 0; t < total && examined < opt.budget; ++t, ++examined) {
        std::array<std::uint32_t, 5> a{};
        std::uint64_t r = t;
        for (int i = 4; i >= 0; --i) {
          a[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(r % q);
          r /= q;
        }
        if (auto c = try_curve(a)) return *c;
      }
    }
  } else {
    std::mt19937_64 rng(opt.seed);
    for (; examined < opt.budget; ++examined) {
      std::array<std::uint32_t, 5> a{};
      for (auto& x : a) x = static_cast<std::uint32_t>(rng() % q);
      if (auto c = try_curve(a)) return *c;
    }
  }
  throw Error(ErrorKind::BudgetExhausted, "no suitable curve after " + std::to_string(examined) + " candidates");
}

}  // namespace detail

/// Calls `accept` on each curve with exactly N points (and the requested
/// shape) until it returns true; returns that curve.
template <class Accept>
Curve search_curves(const Field& f, std::uint64_t n_points, const CurveSearchOptions& opt, Accept&& accept) {
  const std::uint64_t q = f.q();
  const auto [lo, hi] = hasse_window(q);
  if (n_points < lo || n_points > hi) {
    throw Error(ErrorKind::OutsideHasse, std::to_string(n_points) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  auto orders = admissible_orders(q);
  if (std::find(orders.begin(), orders.end(), n_points) == orders.end()) {
    throw Error(ErrorKind::NotAdmissible, "no elliptic curve over F_" + std::to_string(q) + " has " + std::to_string(n_points) + " points");
  }
  if (opt.shape && !is_admissible_structure(q, n_points, *opt.shape)) {
    throw Error(ErrorKind::NotAdmissible, "group structure not admissible for this order");
  }
  return detail::scan_curves(f, opt, [n_points](std::uint64_t n) { return n == n_points; }, accept);
}

inline Curve find_curve_with_order(const Field& f, std::uint64_t n_points, const CurveSearchOptions& opt = {}) {
  return search_curves(f, n_points, opt, [](const Curve&) { return true; });
}

inline std::string format_point(const Field& f, const Point& p) {
  if (p.inf) return "inf";
  return "(" + f.format(p.x) + "," + f.format(p.y) + ")";
}

inline Point parse_point(const Field& f, std::string_view text) {
  if (text == "inf") return Point::infinity();
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw Error(ErrorKind::ParseError, "point must be inf or (x,y)");
  auto parts = detail::split_top(text.substr(1, text.size() - 2), ',');
  if (parts.size() != 2) throw Error(ErrorKind::ParseError, "point must have two coordinates");
  return Point::affine(f.parse(parts[0]), f.parse(parts[1]));
}

}  // namespace agmds
