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

#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "agmds/field.hpp"

namespace {

using agmds::Elem;
using agmds::ErrorKind;
using agmds::Field;

// Schoolbook product in F_p[x]/(mod), on packed base-p digit vectors.
std::uint32_t naive_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, const std::vector<std::uint32_t>& mod) {
  const std::size_t s = mod.size() - 1;
  std::vector<std::uint64_t> da(s), db(s), prod(2 * s, 0);
  for (std::size_t i = 0; i < s; ++i, a /= p, b /= p) {
    da[i] = a % p;
    db[i] = b % p;
  }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (std::size_t d = 2 * s - 1; d >= s; --d) {
    const auto c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= s; ++i) prod[d - s + i] = (prod[d - s + i] + (p - c) * mod[i]) % p;
  }
  std::uint32_t v = 0;
  for (std::size_t i = s; i-- > 0;) v = v * p + static_cast<std::uint32_t>(prod[i]);
  return v;
}

// Irreducibility over F_2 by trial division with every polynomial of degree 1..deg/2.
bool gf2_irreducible(std::uint32_t poly) {
  const int deg = 31 - __builtin_clz(poly);
  auto rem = [](std::uint32_t a, std::uint32_t b) {
    const int db = 31 - __builtin_clz(b);
    while (a && 31 - __builtin_clz(a) >= db) a ^= b << ((31 - __builtin_clz(a)) - db);
    return a;
  };
  for (std::uint32_t d = 2; d < (1u << (deg / 2 + 1)); ++d)
    if (rem(poly, d) == 0) return false;
  return true;
}

TEST(FieldMake, PrimeFieldHasNoModulus) {
  const auto f = Field::make(19, 1);
  EXPECT_EQ(f.q(), 19u);
  EXPECT_EQ(f.spec_text(), "19^1:");
}

TEST(FieldMake, ExplicitQuadraticModulus) {
  const auto f = Field::make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  EXPECT_EQ(f.q(), 4u);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(FieldMake, DefaultSexticIsSmallestIrreducible) {
  const auto f = Field::make(2, 6);
  std::uint32_t packed = 0;
  for (std::size_t i = f.modulus().size(); i-- > 0;) packed = packed * 2 + f.modulus()[i];
  EXPECT_TRUE(gf2_irreducible(packed));
  for (std::uint32_t cand = 64; cand < packed; ++cand) EXPECT_FALSE(gf2_irreducible(cand)) << cand;
  EXPECT_EQ(packed, 0b1000011u);
}

TEST(FieldMake, Rejections) {
  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const agmds::Error& e) {
      return e.kind();
    }
    return ErrorKind::IOFailure;
  };
  EXPECT_EQ(kind([] { Field::make(15, 1); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind([] { Field::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }), ErrorKind::Reducible);
  EXPECT_EQ(kind([] { Field::make(2, 2, std::vector<std::uint32_t>{1, 1}); }), ErrorKind::DegreeMismatch);
  EXPECT_EQ(kind([] { Field::make(2, 17); }), ErrorKind::TooLarge);
  EXPECT_EQ(kind([] { Field::of_order(12); }), ErrorKind::NotPrimePower);
  EXPECT_EQ(kind([] { Field::make(19, 1).inv(Elem{0}); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(kind([] { Field::make(19, 1).frobenius_sqrt(Elem{4}); }), ErrorKind::CharNotTwo);
}

TEST(FieldArith, SmallCases) {
  const auto f19 = Field::make(19, 1);
  EXPECT_EQ(f19.inv(Elem{2}), Elem{10});
  EXPECT_EQ(f19.pow(Elem{2}, 18), f19.one());
  EXPECT_EQ(f19.apply(agmds::ArithOp::Sub, Elem{3}, Elem{5}), Elem{17});
  EXPECT_EQ(f19.apply(agmds::ArithOp::Neg, Elem{1}), Elem{18});

  const auto f4 = Field::make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  const Elem x{2}, x1{3};
  EXPECT_EQ(f4.mul(x, x), x1);
  EXPECT_EQ(f4.frobenius_sqrt(x), x1);
  EXPECT_EQ(f4.frobenius_sqrt(f4.one()), f4.one());
}

TEST(FieldArith, SqrtOfOddPowerOfGenerator) {
  const auto f = Field::of_order(16);
  const Elem g = f.generator();
  EXPECT_EQ(f.frobenius_sqrt(f.pow(g, 5)), f.pow(g, 10));
  EXPECT_EQ(f.mul(f.pow(g, 10), f.pow(g, 10)), f.pow(g, 5));
}

TEST(FieldArith, TablesMatchSchoolbookProduct) {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {4u, 8u, 9u, 16u, 25u, 27u, 64u, 121u, 256u, 1024u, 3125u, 65536u}) {
    const auto f = Field::of_order(q);
    for (int i = 0; i < 2000; ++i) {
      const auto a = static_cast<std::uint32_t>(rng() % q), b = static_cast<std::uint32_t>(rng() % q);
      ASSERT_EQ(f.mul(Elem{a}, Elem{b}).v, naive_mul(a, b, f.p(), f.modulus())) << q;
    }
  }
}

TEST(FieldProperty, InverseAndFrobeniusFixedPoint) {
  for (std::uint64_t q : {2u, 19u, 31u, 49u, 64u, 81u, 243u, 1024u, 4096u, 65536u, 65521u}) {
    const auto f = Field::of_order(q);
    for (std::uint32_t v = 0; v < q; ++v) {
      const Elem a{v};
      ASSERT_EQ(f.pow(a, q), a) << q << " " << v;
      if (v != 0) {
        ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
      }
      ASSERT_EQ(f.add(a, f.neg(a)), f.zero());
    }
  }
}

TEST(FieldProperty, FrobeniusSqrtExhaustive) {
  for (int s = 1; s <= 10; ++s) {
    const auto f = Field::make(2, s);
    for (std::uint32_t v = 0; v < f.q(); ++v) {
      const auto r = f.frobenius_sqrt(Elem{v});
      ASSERT_EQ(f.mul(r, r), Elem{v});
    }
  }
}

TEST(FieldProperty, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {16u, 19u, 25u, 64u, 343u, 4096u}) {
    const auto f = Field::of_order(q);
    for (int i = 0; i < 10000; ++i) {
      const Elem a{static_cast<std::uint32_t>(rng() % q)}, b{static_cast<std::uint32_t>(rng() % q)},
          c{static_cast<std::uint32_t>(rng() % q)};
      ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      ASSERT_EQ(f.add(a, b), f.add(b, a));
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    }
  }
}

TEST(FieldText, RoundTrip) {
  for (std::uint64_t q : {19u, 64u, 25u}) {
    const auto f = Field::of_order(q);
    EXPECT_EQ(Field::parse_spec(f.spec_text()), f);
    for (std::uint32_t v = 0; v < q; ++v) ASSERT_EQ(f.parse(f.format(Elem{v})), Elem{v});
  }
  EXPECT_EQ(Field::of_order(64).format(Elem{5}), "[1,0,1,0,0,0]");
}

TEST(FieldArith, QuadraticRootsSatisfyEquation) {
  for (std::uint64_t q : {16u, 19u, 25u}) {
    const auto f = Field::of_order(q);
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c) {
        std::size_t brute = 0;
        for (std::uint32_t y = 0; y < q; ++y)
          if (f.add(f.mul(Elem{y}, f.add(Elem{y}, Elem{b})), Elem{c}) == f.zero()) ++brute;
        const auto roots = f.quadratic_roots(Elem{b}, Elem{c});
        ASSERT_EQ(roots.size(), brute);
        for (auto y : roots) ASSERT_EQ(f.add(f.mul(y, f.add(y, Elem{b})), Elem{c}), f.zero());
      }
  }
}

}  // namespace
