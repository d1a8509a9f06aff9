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

// Monomial bases of L(m P0) for the point at infinity of the two supported
// models. On the Weierstrass model x and y have pole orders 2 and 3; on the
// degree-5 genus-2 model they have pole orders 2 and 5.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "agmds/curve.hpp"
#include "agmds/errors.hpp"

namespace agmds {

/// x^i y^j with j in {0, 1}.
struct Monomial {
  int i = 0;
  int j = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline int pole_order(int genus, const Monomial& mono) { return 2 * mono.i + (genus == 1 ? 3 : 5) * mono.j; }

struct RRBasis {
  int genus = 1;
  int m = 0;
  std::vector<Monomial> monomials;  // sorted by pole order
  std::vector<int> pole_orders;

  std::size_t dimension() const { return monomials.size(); }
};

inline RRBasis rr_basis(int genus, int m) {
  if (m < 0) throw Error(ErrorKind::DegreeOutOfRange, "divisor degree must be >= 0");
  if (genus != 1 && genus != 2) throw Error(ErrorKind::BadModel, "genus must be 1 or 2");
  RRBasis b;
  b.genus = genus;
  b.m = m;
  for (int j = 0; j <= 1; ++j)
    for (int i = 0; pole_order(genus, {i, j}) <= m; ++i) b.monomials.push_back({i, j});
  std::sort(b.monomials.begin(), b.monomials.end(),
            [genus](const Monomial& a, const Monomial& c) { return pole_order(genus, a) < pole_order(genus, c); });
  for (const auto& mono : b.monomials) b.pole_orders.push_back(pole_order(genus, mono));
  return b;
}

inline RRBasis rr_basis(const Curve& c, int m) { return rr_basis(c.genus(), m); }

inline Elem evaluate_function(const Field& f, const Monomial& mono, const Point& p) {
  if (p.inf) throw Error(ErrorKind::InfinityEvaluation, "cannot evaluate at P0");
  Elem v = f.pow(p.x, static_cast<std::uint64_t>(mono.i));
  if (mono.j == 1) v = f.mul(v, p.y);
  return v;
}

inline Elem evaluate_function(const Curve& c, const Monomial& mono, const Point& p) {
  return evaluate_function(c.field(), mono, p);
}

}  // namespace agmds
