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

// Exact arithmetic in F_p and F_{p^s}, s >= 1, with q = p^s <= 2^16.
//
// An element is stored as the packed integer sum c_i p^i of its little-endian
// coefficient list modulo the field modulus, so equal elements always have
// equal encodings. Multiplication goes through log/antilog tables built once
// per field and shared between copies.

#include <cstdint>
#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "agmds/arith.hpp"
#include "agmds/errors.hpp"

namespace agmds {

struct Elem {
  std::uint32_t v = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

enum class ArithOp { Add, Sub, Mul, Neg, Inv, Pow };

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 16;

namespace detail {

using Poly = std::vector<std::uint32_t>;  // little-endian over F_p

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

/// Remainder of a modulo b over F_p; b must be nonzero after trimming.
inline Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `index`.
inline Poly monic_from_index(std::uint64_t index, int deg, std::uint32_t p) {
  Poly f(static_cast<std::size_t>(deg) + 1, 0);
  for (int i = 0; i < deg; ++i) {
    f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f.back() = 1;
  return f;
}

/// Root test plus trial division by every monic polynomial of degree 2..deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (std::uint32_t a = 0; a < p; ++a) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * a + f[i]) % p;
    if (acc == 0) return false;
  }
  for (int d = 2; d <= deg / 2; ++d) {
    const std::uint64_t count = arith::ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

class Field {
 public:
  /// Validates p, s and the modulus; picks the smallest irreducible modulus when none is given.
  static Field make(std::uint64_t p, int s, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
    if (!arith::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (s < 1) throw Error(ErrorKind::DegreeMismatch, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < s; ++i) {
      q *= p;
      if (q > kMaxFieldOrder) throw Error(ErrorKind::TooLarge, "field order exceeds 2^16");
    }
    const auto pp = static_cast<std::uint32_t>(p);
    detail::Poly mod;
    if (s > 1) {
      if (modulus) {
        mod = *modulus;
        if (mod.size() != static_cast<std::size_t>(s) + 1 || mod.back() != 1) {
          throw Error(ErrorKind::DegreeMismatch, "modulus must be monic with " + std::to_string(s + 1) + " coefficients");
        }
        for (auto c : mod) {
          if (c >= pp) throw Error(ErrorKind::DegreeMismatch, "modulus coefficient out of range");
        }
        if (!detail::is_irreducible(mod, pp)) throw Error(ErrorKind::Reducible, "modulus factors over F_" + std::to_string(p));
      } else {
        const std::uint64_t count = arith::ipow(p, static_cast<unsigned>(s));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
          auto cand = detail::monic_from_index(idx, s, pp);
          if (detail::is_irreducible(cand, pp)) {
            mod = std::move(cand);
            break;
          }
        }
      }
    }
    Field f;
    f.t_ = build_tables(pp, s, static_cast<std::uint32_t>(q), std::move(mod));
    return f;
  }

  /// Field of order q with the default modulus.
  static Field of_order(std::uint64_t q) {
    auto pp = arith::prime_power(q);
    if (!pp) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    return make(pp->first, pp->second);
  }

  /// Parses the `p^s:modulus` text form.
  static Field parse_spec(std::string_view text) {
    auto caret = text.find('^');
    auto colon = text.find(':');
    if (caret == std::string_view::npos || colon == std::string_view::npos || colon < caret) {
      throw Error(ErrorKind::ParseError, "field spec must look like p^s:modulus");
    }
    const auto p = parse_uint(text.substr(0, caret));
    const auto s = parse_uint(text.substr(caret + 1, colon - caret - 1));
    auto rest = text.substr(colon + 1);
    if (s == 1 || rest.empty()) return make(p, static_cast<int>(s));
    return make(p, static_cast<int>(s), parse_list(rest));
  }

  std::uint32_t p() const { return t_->p; }
  int s() const { return t_->s; }
  std::uint32_t q() const { return t_->q; }
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
  bool is_char2() const { return t_->p == 2; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  /// Primitive element used by the log tables.
  Elem generator() const { return {t_->exp[1]}; }

  /// Element with packed encoding `v` (must be < q).
  Elem element(std::uint32_t v) const { return {v}; }
  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t n) const {
    auto r = n % static_cast<std::int64_t>(t_->p);
    if (r < 0) r += t_->p;
    return {static_cast<std::uint32_t>(r)};
  }

  std::vector<std::uint32_t> coeffs(Elem a) const {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(t_->s), 0);
    for (auto& d : c) {
      d = a.v % t_->p;
      a.v /= t_->p;
    }
    return c;
  }

  Elem from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() != static_cast<std::size_t>(t_->s)) throw Error(ErrorKind::ParseError, "wrong coefficient count");
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] >= t_->p) throw Error(ErrorKind::ParseError, "coefficient out of range");
      v = v * t_->p + c[i];
    }
    return {v};
  }

  Elem add(Elem a, Elem b) const {
    const auto& t = *t_;
    if (t.p == 2) return {a.v ^ b.v};
    if (t.s == 1) return {(a.v + b.v) % t.p};
    if (!t.add_table.empty()) return {t.add_table[a.v * t.q + b.v]};
    return {digit_add(a.v, b.v)};
  }

  Elem neg(Elem a) const {
    const auto& t = *t_;
    if (t.p == 2) return a;
    if (t.s == 1) return {(t.p - a.v) % t.p};
    std::uint32_t r = 0, place = 1;
    while (a.v != 0) {
      const auto d = a.v % t.p;
      r += ((t.p - d) % t.p) * place;
      a.v /= t.p;
      place *= t.p;
    }
    return {r};
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    const auto& t = *t_;
    return {t.exp[t.log[a.v] + t.log[b.v]]};
  }

  Elem inv(Elem a) const {
    if (a.v == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const auto& t = *t_;
    return {t.exp[(t.q - 1 - t.log[a.v]) % (t.q - 1)]};
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Square-and-multiply.
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Elem apply(ArithOp op, Elem a, Elem b = {}, std::uint64_t exponent = 0) const {
    switch (op) {
      case ArithOp::Add: return add(a, b);
      case ArithOp::Sub: return sub(a, b);
      case ArithOp::Mul: return mul(a, b);
      case ArithOp::Neg: return neg(a);
      case ArithOp::Inv: return inv(a);
      case ArithOp::Pow: return pow(a, exponent);
    }
    return a;
  }

  /// Discrete log base generator(); a must be nonzero.
  std::uint32_t log(Elem a) const { return t_->log[a.v]; }

  /// Square root in characteristic 2: a^(2^(s-1)).
  Elem frobenius_sqrt(Elem a) const {
    if (t_->p != 2) throw Error(ErrorKind::CharNotTwo, "frobenius_sqrt needs characteristic 2");
    for (int i = 1; i < t_->s; ++i) a = mul(a, a);
    return a;
  }

  /// Some square root of a, or nullopt when a is a non-square.
  std::optional<Elem> sqrt(Elem a) const {
    if (a.v == 0) return zero();
    if (t_->p == 2) return frobenius_sqrt(a);
    const auto l = t_->log[a.v];
    if (l % 2 != 0) return std::nullopt;
    return Elem{t_->exp[l / 2]};
  }

  /// All roots y of y^2 + b y + c = 0, without repetition.
  std::vector<Elem> quadratic_roots(Elem b, Elem c) const {
    const auto& t = *t_;
    if (t.p == 2) {
      if (b.v == 0) return {frobenius_sqrt(c)};
      const Elem u = div(c, mul(b, b));
      const auto z = t.artin_schreier[u.v];
      if (z < 0) return {};
      const Elem z0{static_cast<std::uint32_t>(z)};
      return {mul(b, z0), mul(b, add(z0, one()))};
    }
    const Elem disc = sub(mul(b, b), mul(from_int(4), c));
    const Elem half = inv(from_int(2));
    if (disc.v == 0) return {mul(neg(b), half)};
    auto r = sqrt(disc);
    if (!r) return {};
    return {mul(sub(*r, b), half), mul(sub(neg(*r), b), half)};
  }

  std::string format(Elem a) const {
    if (t_->s == 1) return std::to_string(a.v);
    std::string out = "[";
    auto c = coeffs(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    return out + "]";
  }

  Elem parse(std::string_view text) const {
    if (t_->s == 1) {
      const auto v = parse_uint(text);
      if (v >= t_->p) throw Error(ErrorKind::ParseError, "residue out of range: " + std::string(text));
      return {static_cast<std::uint32_t>(v)};
    }
    auto c = parse_list(text);
    return from_coeffs(c);
  }

  std::string spec_text() const {
    std::string out = std::to_string(t_->p) + "^" + std::to_string(t_->s) + ":";
    if (t_->s > 1) {
      out += '[';
      for (std::size_t i = 0; i < t_->modulus.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t_->modulus[i]);
      }
      out += ']';
    }
    return out;
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->s == b.t_->s && a.t_->modulus == b.t_->modulus);
  }

 private:
  struct Tables {
    std::uint32_t p = 0;
    int s = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> exp;  // length 2(q-1)
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<std::uint16_t> add_table;
    std::vector<std::int32_t> artin_schreier;  // char 2: some z with z^2 + z = u, or -1
  };

  Field() = default;

  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const {
    const auto p = t_->p;
    std::uint32_t r = 0, place = 1;
    while (a != 0 || b != 0) {
      r += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return r;
  }

  static std::uint64_t parse_uint(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw Error(ErrorKind::ParseError, "empty number");
    std::uint64_t v = 0;
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw Error(ErrorKind::ParseError, "not a number: " + std::string(text));
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
      if (v > (std::uint64_t{1} << 40)) throw Error(ErrorKind::ParseError, "number too large");
    }
    return v;
  }

  static std::vector<std::uint32_t> parse_list(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
      throw Error(ErrorKind::ParseError, "expected [c0,c1,...]: " + std::string(text));
    }
    text = text.substr(1, text.size() - 2);
    std::vector<std::uint32_t> out;
    while (true) {
      auto comma = text.find(',');
      out.push_back(static_cast<std::uint32_t>(parse_uint(text.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return out;
  }

  static std::shared_ptr<const Tables> build_tables(std::uint32_t p, int s, std::uint32_t q, detail::Poly mod) {
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->s = s;
    t->q = q;
    t->modulus = mod;
    t->exp.assign(2 * static_cast<std::size_t>(q - 1), 0);
    t->log.assign(q, 0);

    auto encode = [&](const detail::Poly& poly) {
      std::uint32_t v = 0;
      for (std::size_t i = poly.size(); i-- > 0;) v = v * p + poly[i];
      return v;
    };
    auto decode = [&](std::uint32_t v) {
      detail::Poly poly;
      while (v != 0) {
        poly.push_back(v % p);
        v /= p;
      }
      return poly;
    };
    auto mulmod = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
      if (s == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
      return encode(detail::poly_mod(detail::poly_mul(decode(a), decode(b), p), mod, p));
    };

    // Find a primitive element by walking powers; q - 1 steps per candidate.
    for (std::uint32_t g = (q == 2 ? 1 : 2); g < q; ++g) {
      std::uint32_t x = 1;
      std::uint32_t order = 0;
      do {
        t->exp[order] = x;
        x = mulmod(x, g);
        ++order;
      } while (x != 1 && order < q);
      if (order == q - 1) break;
    }
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      t->exp[i + q - 1] = t->exp[i];
      t->log[t->exp[i]] = i;
    }

    if (p != 2 && s > 1 && q <= 1024) {
      Field tmp;
      tmp.t_ = t;
      t->add_table.resize(static_cast<std::size_t>(q) * q);
      for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) {
          t->add_table[a * q + b] = static_cast<std::uint16_t>(tmp.digit_add(a, b));
        }
      }
    }
    if (p == 2) {
      t->artin_schreier.assign(q, -1);
      Field tmp;
      tmp.t_ = t;
      for (std::uint32_t z = 0; z < q; ++z) {
        const auto u = tmp.add(tmp.mul({z}, {z}), {z}).v;
        if (t->artin_schreier[u] < 0) t->artin_schreier[u] = static_cast<std::int32_t>(z);
      }
    }
    return t;
  }

  std::shared_ptr<const Tables> t_;
};

}  // namespace agmds
