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
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "agmds/matrix.hpp"

namespace {

using namespace agmds;

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = (zero_bias && rng() % zero_bias == 0) ? f.zero() : Elem{static_cast<std::uint32_t>(rng() % f.q())};
  return m;
}

// Rank from the size of the row span: |span| = q^rank.
std::size_t span_rank(const Matrix& m) {
  const Field& f = m.field();
  std::set<Vec> span{Vec(m.cols(), f.zero())};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::set<Vec> next;
    for (const auto& v : span)
      for (std::uint32_t c = 0; c < f.q(); ++c) {
        Vec w = v;
        for (std::size_t j = 0; j < m.cols(); ++j) w[j] = f.add(w[j], f.mul(Elem{c}, m(r, j)));
        next.insert(std::move(w));
      }
    span = std::move(next);
  }
  std::size_t rank = 0;
  for (std::size_t size = span.size(); size > 1; size /= f.q()) ++rank;
  return rank;
}

TEST(Rref, IdentityZeroAndDependentRows) {
  const auto f19 = Field::make(19, 1);
  EXPECT_EQ(rank(Matrix::identity(f19, 3)), 3u);
  EXPECT_EQ(rank(Matrix(f19, 2, 4)), 0u);
  const Matrix m(f19, {{Elem{1}, Elem{2}}, {Elem{2}, Elem{4}}}, 2);
  const auto r = rref_rank(m);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
}

TEST(Kernel, SmallCases) {
  const auto f5 = Field::make(5, 1);
  EXPECT_EQ(kernel_basis(Matrix::identity(f5, 2)).rows(), 0u);

  const auto f2 = Field::make(2, 1);
  const auto k2 = kernel_basis(Matrix(f2, {{Elem{1}, Elem{1}}}, 2));
  ASSERT_EQ(k2.rows(), 1u);
  EXPECT_EQ(k2.row_vec(0), (Vec{Elem{1}, Elem{1}}));

  const auto f7 = Field::make(7, 1);
  const Matrix m(f7, {{Elem{1}, Elem{2}, Elem{3}}}, 3);
  const auto k7 = kernel_basis(m);
  EXPECT_EQ(k7.rows(), 2u);
  EXPECT_TRUE((m * k7.transpose()).is_zero());
}

TEST(DiagonalBilinear, SmallCases) {
  const auto f2 = Field::make(2, 1);
  const auto s2 = diagonal_bilinear_solve(Matrix(f2, {{Elem{1}, Elem{1}}}, 2));
  ASSERT_EQ(s2.rows(), 1u);
  EXPECT_EQ(s2.row_vec(0), (Vec{Elem{1}, Elem{1}}));

  const auto f5 = Field::make(5, 1);
  const auto s5 = diagonal_bilinear_solve(Matrix(f5, {{Elem{1}, Elem{2}}}, 2));
  ASSERT_EQ(s5.rows(), 1u);
  EXPECT_EQ(f5.add(s5(0, 0), f5.mul(Elem{4}, s5(0, 1))), f5.zero());
}

TEST(DiagonalBilinear, RandomF16SolutionsAnnihilate) {
  const auto f = Field::of_order(16);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_matrix(f, 2, 4, rng);
    const auto sol = diagonal_bilinear_solve(g);
    EXPECT_GE(sol.rows(), 1u);
    for (std::size_t r = 0; r < sol.rows(); ++r) {
      EXPECT_TRUE((g.scale_columns(sol.row(r)) * g.transpose()).is_zero());
    }
  }
}

TEST(LinalgProperty, RankMatchesSpanOracle) {
  std::mt19937_64 rng(5);
  for (std::uint64_t q : {2u, 3u, 4u}) {
    const auto f = Field::of_order(q);
    for (int t = 0; t < 200; ++t) {
      const auto m = random_matrix(f, 1 + rng() % 4, 1 + rng() % 5, rng, 2);
      ASSERT_EQ(rank(m), span_rank(m));
    }
  }
}

TEST(LinalgProperty, RrefIdempotentAndRankTransposeInvariant) {
  std::mt19937_64 rng(9);
  for (std::uint64_t q : {2u, 19u, 64u}) {
    const auto f = Field::of_order(q);
    for (int t = 0; t < 1000; ++t) {
      const auto m = random_matrix(f, 1 + rng() % 12, 1 + rng() % 12, rng, 3);
      const auto r = rref_rank(m);
      ASSERT_EQ(rref_rank(r.rref).rref, r.rref);
      ASSERT_EQ(r.rank, rank(m.transpose()));
    }
  }
}

TEST(LinalgProperty, KernelAnnihilatesAndCompletesRank) {
  std::mt19937_64 rng(13);
  for (std::uint64_t q : {3u, 16u, 25u}) {
    const auto f = Field::of_order(q);
    for (int t = 0; t < 500; ++t) {
      const auto m = random_matrix(f, 1 + rng() % 8, 1 + rng() % 10, rng, 3);
      const auto k = kernel_basis(m);
      ASSERT_EQ(k.rows() + rank(m), m.cols());
      ASSERT_EQ(rank(k), k.rows());
      if (k.rows() > 0) {
        ASSERT_TRUE((m * k.transpose()).is_zero());
      }
    }
  }
}

}  // namespace
