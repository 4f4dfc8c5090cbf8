// Copyright 2026 The cfft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>

#include "cfft/cyclotomic.hpp"
#include "cfft/error.hpp"

using namespace cfft;

using V = std::vector<uint32_t>;

TEST(Cyclotomic, Cosets31) {
  auto cs = compute_cosets(31);
  ASSERT_EQ(cs.cosets.size(), 7u);
  EXPECT_EQ(cs.cosets[0].elements, V{0});
  EXPECT_EQ(cs.cosets[1].elements, (V{1, 2, 4, 8, 16}));
  EXPECT_EQ(cs.cosets[2].elements, (V{3, 6, 12, 24, 17}));
  EXPECT_EQ(cs.cosets[3].elements, (V{5, 10, 20, 9, 18}));
  EXPECT_EQ(cs.cosets[4].leader(), 7u);
  EXPECT_EQ(cs.cosets[5].leader(), 11u);
  EXPECT_EQ(cs.cosets[6].leader(), 15u);
}

TEST(Cyclotomic, Cosets7) {
  auto cs = compute_cosets(7);
  ASSERT_EQ(cs.cosets.size(), 3u);
  EXPECT_EQ(cs.cosets[1].elements, (V{1, 2, 4}));
  EXPECT_EQ(cs.cosets[2].elements, (V{3, 6, 5}));
}

TEST(Cyclotomic, Cosets255) {
  auto cs = compute_cosets(255);
  EXPECT_EQ(cs.cosets[cs.coset_of(17)].elements, (V{17, 34, 68, 136}));
  EXPECT_EQ(cs.cosets[0].size(), 1u);
  for (uint32_t k = 1; k < 32; ++k) {
    if (k == 17) continue;
    EXPECT_EQ(cs.cosets[cs.coset_of(k)].size(), 8u) << k;
  }
}

TEST(Cyclotomic, PartitionAndDoublingClosure) {
  for (uint32_t n : {3u, 7u, 15u, 31u, 63u, 255u, 511u, 1023u}) {
    auto cs = compute_cosets(n);
    std::set<uint32_t> all;
    size_t total = 0;
    for (const auto& c : cs.cosets) {
      for (uint32_t i = 0; i < c.size(); ++i) {
        all.insert(c.elements[i]);
        EXPECT_EQ(c.elements[(i + 1) % c.size()], (2 * c.elements[i]) % n);
      }
      total += c.size();
    }
    EXPECT_EQ(total, n);
    EXPECT_EQ(all.size(), n);
  }
}

TEST(Cyclotomic, RotateCoset) {
  auto cs = compute_cosets(31);
  EXPECT_EQ(rotate_coset(cs, 1, 1).cosets[1].rotated(), (V{2, 4, 8, 16, 1}));
  EXPECT_EQ(rotate_coset(cs, 2, 1).cosets[2].rotated(), (V{6, 12, 24, 17, 3}));
  EXPECT_EQ(rotate_coset(cs, 2, 0).cosets[2].rotated(), cs.cosets[2].rotated());
  auto twice = rotate_coset(rotate_coset(cs, 1, 3), 1, 4);
  EXPECT_EQ(twice.cosets[1].rotation, 2u);
  EXPECT_THROW(rotate_coset(cs, 1, 5), Error);
  EXPECT_THROW(rotate_coset(cs, 7, 0), Error);
}

TEST(Cyclotomic, Permutations) {
  auto p7 = coset_permutation(compute_cosets(7));
  EXPECT_EQ(p7.forward, (V{0, 1, 2, 4, 3, 6, 5}));
  auto cs = with_rotations(compute_cosets(31), {0, 1, 1, 1, 0, 0, 0});
  auto p31 = coset_permutation(cs);
  V head(p31.forward.begin(), p31.forward.begin() + 16);
  EXPECT_EQ(head, (V{0, 2, 4, 8, 16, 1, 6, 12, 24, 17, 3, 10, 20, 9, 18, 5}));
  auto p255 = coset_permutation(compute_cosets(255));
  V h255(p255.forward.begin(), p255.forward.begin() + 9);
  EXPECT_EQ(h255, (V{0, 1, 2, 4, 8, 16, 32, 64, 128}));
  for (uint32_t i = 0; i < 255; ++i) EXPECT_EQ(p255.forward[p255.inverse[i]], i);
}

TEST(Cyclotomic, NormalBasis) {
  auto f = make_field(5, 0x25);
  auto nb = find_normal_basis(*f, 5);
  EXPECT_EQ(nb.beta_exponent, 3u);
  EXPECT_EQ(nb.conjugate_exponents, (V{3, 6, 12, 24, 17}));
  auto one = find_normal_basis(*f, 1);
  EXPECT_EQ(one.beta_exponent, 0u);

  auto g = default_field(8);
  for (uint32_t s : {1u, 2u, 4u, 8u}) {
    auto b = find_normal_basis(*g, s);
    V vecs;
    for (uint32_t e : b.conjugate_exponents) {
      EXPECT_EQ((e * ((1u << s) - 1)) % 255, 0u);
      vecs.push_back(g->exp(e).bits);
    }
    EXPECT_EQ(gf2_rank(vecs), s);
  }
  auto two = find_normal_basis(*g, 2);
  EXPECT_EQ(two.beta_exponent % 85, 0u);
  EXPECT_THROW(find_normal_basis(*g, 3), Error);
}

TEST(Cyclotomic, BasisCoordinatesRoundTrip) {
  auto f = make_field(5, 0x25);
  BasisCoordinates bc(*f, find_normal_basis(*f, 5));
  for (uint32_t x = 0; x < 32; ++x) {
    uint32_t c = bc.coords(FieldElement(x));
    uint32_t back = 0;
    for (uint32_t p = 0; p < 5; ++p)
      if (c & (1u << p)) back ^= f->exp(bc.basis().conjugate_exponents[p]).bits;
    EXPECT_EQ(back, x);
  }
  auto g = default_field(8);
  BasisCoordinates b4(*g, find_normal_basis(*g, 4));
  EXPECT_THROW(b4.coords(g->alpha()), Error);
}
