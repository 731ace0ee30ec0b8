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

// JSON files for MUB sets and Bell families.
//
//   MUB:  {dim, kind: field|ring, k, context, bases: [{a, vectors: [[[re, im], ...], ...]}]}
//         context is {p, m, modulus} or {m, h}; a is "inf" for the
//         computational basis.
//   Bell: {q, kind, states: [{h, a, b | k, amps: [[re, im], ...]}]}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mubkit/common.hpp"
#include "mubkit/entanglement.hpp"
#include "mubkit/finite_field.hpp"
#include "mubkit/galois_ring.hpp"
#include "mubkit/mub.hpp"

namespace mubkit {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json amps_to_json(const std::vector<Complex>& amps) {
  Json arr = Json::array();
  for (const auto& z : amps) arr.push_back(Json::array({z.real(), z.imag()}));
  return arr;
}

inline std::vector<Complex> amps_from_json(const Json& j) {
  require(j.is_array(), "amplitudes must be an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& z : j) {
    require(z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number(),
            "each amplitude must be a [re, im] pair of numbers");
    out.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return out;
}

template <typename T>
T get_field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace detail

inline Json field_context_to_json(const FieldContext& ctx) {
  return Json{{"p", ctx.p()}, {"m", ctx.m()}, {"modulus", ctx.modulus()}};
}

inline Json ring_context_to_json(const RingContext& ctx) { return Json{{"m", ctx.m()}, {"h", ctx.h()}}; }

inline Json to_json(const MubSet& set) {
  Json j;
  j["dim"] = set.dim;
  j["kind"] = to_string(set.kind);
  j["k"] = set.k;
  if (set.field) j["context"] = field_context_to_json(*set.field);
  else if (set.ring) j["context"] = ring_context_to_json(*set.ring);
  else j["context"] = nullptr;
  Json bases = Json::array();
  for (const auto& b : set.bases) {
    Json jb;
    if (b.a) jb["a"] = *b.a;
    else jb["a"] = "inf";
    Json vecs = Json::array();
    for (const auto& v : b.vectors) vecs.push_back(detail::amps_to_json(v.amps()));
    jb["vectors"] = std::move(vecs);
    bases.push_back(std::move(jb));
  }
  j["bases"] = std::move(bases);
  return j;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

// The ring context is rebuilt from h mod 2, so a file with an h that is not
// the lift of its reduction is rejected.
inline MubSet mub_from_json(const Json& j) {
  MubSet set;
  set.dim = detail::get_field<std::size_t>(j, "dim");
  const auto kind = detail::get_field<std::string>(j, "kind");
  set.k = j.contains("k") ? detail::get_field<std::uint64_t>(j, "k") : 0;
  if (kind == "field") {
    set.kind = MubKind::field;
    const auto& c = j.at("context");
    set.field = FieldContext::make(detail::get_field<std::uint32_t>(c, "p"), detail::get_field<std::uint32_t>(c, "m"),
                                   detail::get_field<Poly>(c, "modulus"));
  } else if (kind == "ring") {
    set.kind = MubKind::ring;
    const auto& c = j.at("context");
    auto h = detail::get_field<Poly>(c, "h");
    Poly hbar(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) hbar[i] = h[i] & 1u;
    set.ring = RingContext::make(detail::get_field<std::uint32_t>(c, "m"), hbar);
    require(set.ring->h() == h, "ring context h is not a basic primitive lift");
  } else if (kind == "custom") {
    set.kind = MubKind::custom;
  } else {
    throw InputError("unknown MUB kind '" + kind + "'");
  }
  const auto& bases = j.contains("bases") ? j.at("bases") : Json();
  require(bases.is_array() && !bases.empty(), "MUB file has no bases");
  for (const auto& jb : bases) {
    Basis b;
    require(jb.is_object() && jb.contains("a"), "basis without index 'a'");
    if (jb.at("a").is_string()) {
      require(jb.at("a").get<std::string>() == "inf", "basis index must be an integer or \"inf\"");
    } else {
      b.a = detail::get_field<std::uint64_t>(jb, "a");
    }
    b.k = set.k;
    const auto& vecs = jb.contains("vectors") ? jb.at("vectors") : Json();
    require(vecs.is_array(), "basis without 'vectors'");
    for (const auto& v : vecs) {
      auto amps = detail::amps_from_json(v);
      require(amps.size() == set.dim, "vector length differs from dim");
      b.vectors.emplace_back(std::move(amps));
    }
    b.phases = detail::default_phases(b.vectors.size());
    set.bases.push_back(std::move(b));
  }
  return set;
}

inline Json to_json(const BellFamily& fam) {
  Json j;
  j["q"] = fam.q;
  j["kind"] = to_string(fam.kind);
  Json states = Json::array();
  for (const auto& s : fam.states) {
    Json js;
    js["h"] = s.h;
    js["a"] = s.a;
    js[fam.kind == BellKind::fourier ? "k" : "b"] = s.b;
    js["amps"] = detail::amps_to_json(s.state.amps());
    states.push_back(std::move(js));
  }
  j["states"] = std::move(states);
  return j;
}

inline BellFamily bell_from_json(const Json& j) {
  BellFamily fam;
  fam.q = detail::get_field<std::size_t>(j, "q");
  require(fam.q >= 1, "q must be positive");
  fam.kind = parse_bell_kind(detail::get_field<std::string>(j, "kind"));
  const auto& states = j.contains("states") ? j.at("states") : Json();
  require(states.is_array() && !states.empty(), "Bell file has no states");
  for (const auto& js : states) {
    BellState s;
    s.h = detail::get_field<std::uint64_t>(js, "h");
    s.a = js.contains("a") ? detail::get_field<std::uint64_t>(js, "a") : 0;
    s.b = js.contains("b") ? detail::get_field<std::uint64_t>(js, "b") : detail::get_field<std::uint64_t>(js, "k");
    auto amps = detail::amps_from_json(js.contains("amps") ? js.at("amps") : Json());
    require(amps.size() == fam.q * fam.q, "Bell state needs q^2 amplitudes");
    s.state = BipartiteState(fam.q, std::move(amps));
    fam.states.push_back(std::move(s));
  }
  return fam;
}

}  // namespace mubkit
