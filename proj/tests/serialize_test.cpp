// Copyright 2026 The mubkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "mubkit/serialize.hpp"

namespace mubkit {
namespace {

void expect_same_set(const MubSet& a, const MubSet& b) {
  ASSERT_EQ(a.dim, b.dim);
  EXPECT_EQ(a.kind, b.kind);
  EXPECT_EQ(a.k, b.k);
  ASSERT_EQ(a.bases.size(), b.bases.size());
  for (std::size_t i = 0; i < a.bases.size(); ++i) {
    EXPECT_EQ(a.bases[i].a, b.bases[i].a);
    EXPECT_EQ(a.bases[i].vectors, b.bases[i].vectors);
  }
}

TEST(SerializeMub, FieldRoundTrip) {
  const auto set = mub_field(FieldContext::make(3, 2), 4);
  const auto back = mub_from_json(parse_json_text(to_json(set).dump()));
  expect_same_set(set, back);
  ASSERT_TRUE(back.field);
  EXPECT_EQ(back.field->modulus(), set.field->modulus());
  EXPECT_TRUE(verify_mub(back).pass);
}

TEST(SerializeMub, RingRoundTrip) {
  const auto set = mub_ring(RingContext::make(3), 2);
  const auto back = mub_from_json(parse_json_text(to_json(set).dump()));
  expect_same_set(set, back);
  ASSERT_TRUE(back.ring);
  EXPECT_EQ(back.ring->h(), set.ring->h());
}

TEST(SerializeMub, ComputationalBasisIsInf) {
  const auto j = to_json(mub_field(FieldContext::make(3, 1)));
  EXPECT_EQ(j["bases"].back()["a"], "inf");
  EXPECT_EQ(j["bases"].front()["a"], 0);
  EXPECT_EQ(j["kind"], "field");
}

TEST(SerializeMub, RejectsMalformedInput) {
  EXPECT_THROW(parse_json_text("[1, 2"), InputError);
  EXPECT_THROW(mub_from_json(Json::object()), InputError);
  auto j = to_json(mub_field(FieldContext::make(3, 1)));
  auto bad_kind = j;
  bad_kind["kind"] = "quaternion";
  EXPECT_THROW(mub_from_json(bad_kind), InputError);
  auto bad_index = j;
  bad_index["bases"][0]["a"] = "zero";
  EXPECT_THROW(mub_from_json(bad_index), InputError);
  auto short_vector = j;
  short_vector["bases"][0]["vectors"][0].erase(0);
  EXPECT_THROW(mub_from_json(short_vector), InputError);
  auto bad_amp = j;
  bad_amp["bases"][0]["vectors"][0][0] = Json::array({1.0});
  EXPECT_THROW(mub_from_json(bad_amp), InputError);
  auto bad_dim = j;
  bad_dim["dim"] = "three";
  EXPECT_THROW(mub_from_json(bad_dim), InputError);
}

TEST(SerializeMub, RejectsNonLiftedRingModulus) {
  auto j = to_json(mub_ring(RingContext::make(2)));
  j["context"]["h"][0] = 3;
  EXPECT_THROW(mub_from_json(j), InputError);
}

TEST(SerializeBell, RoundTrips) {
  for (const auto& fam : {bell_family_fourier(3), bell_family_galois(FieldContext::make(3, 1)),
                          bell_family_ring(RingContext::make(2))}) {
    const auto back = bell_from_json(parse_json_text(to_json(fam).dump()));
    EXPECT_EQ(back.q, fam.q);
    EXPECT_EQ(back.kind, fam.kind);
    ASSERT_EQ(back.states.size(), fam.states.size());
    for (std::size_t i = 0; i < fam.states.size(); ++i) {
      EXPECT_EQ(back.states[i].h, fam.states[i].h);
      EXPECT_EQ(back.states[i].a, fam.states[i].a);
      EXPECT_EQ(back.states[i].b, fam.states[i].b);
      EXPECT_EQ(back.states[i].state.amps(), fam.states[i].state.amps());
    }
    EXPECT_TRUE(verify_entangled_family(back).pass);
  }
}

TEST(SerializeBell, FourierUsesK) {
  const auto j = to_json(bell_family_fourier(2));
  EXPECT_TRUE(j["states"][0].contains("k"));
  EXPECT_FALSE(j["states"][0].contains("b"));
}

TEST(SerializeBell, RejectsMalformedInput) {
  auto j = to_json(bell_family_fourier(2));
  auto bad_kind = j;
  bad_kind["kind"] = "ghz";
  EXPECT_THROW(bell_from_json(bad_kind), InputError);
  auto short_amps = j;
  short_amps["states"][0]["amps"].erase(0);
  EXPECT_THROW(bell_from_json(short_amps), InputError);
  auto empty = j;
  empty["states"] = Json::array();
  EXPECT_THROW(bell_from_json(empty), InputError);
}

}  // namespace
}  // namespace mubkit
