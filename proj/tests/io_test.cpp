// Copyright 2026 The invforge Authors
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

#include "invforge/errors.hpp"
#include "invforge/io.hpp"
#include "invforge/lu.hpp"
#include "invforge/sl.hpp"

namespace invforge {
namespace {

TEST(Io, PolyRoundTrip) {
  const SystemShape s({2, 3});
  SparsePoly p(s, {1, 1});
  p.add_term({{0}, {5}}, Scalar(mpq_class(-3, 7), mpq_class(1, 2)));
  p.add_term({{4}, {1}}, 2);
  const auto j = to_json(p);
  EXPECT_EQ(poly_from_json(j), p);
  EXPECT_EQ(j["terms"][0]["re"], "-3/7");
  EXPECT_EQ(dump(to_json(poly_from_json(j))), dump(j));
}

TEST(Io, BasisRoundTrip) {
  const auto lu = luip_space(SystemShape({2, 2}), 2);
  const auto back = basis_from_json(to_json(lu));
  EXPECT_EQ(back.group, Group::Lu);
  EXPECT_EQ(back.degree, 2u);
  EXPECT_EQ(back.space, lu.space);

  const auto sl = slip_space(SystemShape({2, 2}), 2);
  const auto j = to_json(sl);
  EXPECT_EQ(j["group"], "sl");
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(basis_from_json(j).space, sl.space);
}

TEST(Io, StateAndDensityRoundTrip) {
  const auto w = w_state(3);
  const auto j = to_json(w);
  EXPECT_EQ(j["amplitudes"].size(), 3u);
  EXPECT_EQ(state_from_json(j).exact_amplitudes(), w.exact_amplitudes());

  const auto f = random_state(SystemShape({2, 2}), 3);
  const auto back = state_from_json(to_json(f));
  EXPECT_FALSE(back.is_exact());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(back.amplitudes()[i], f.amplitudes()[i]);

  const auto rho = partial_trace(w, {0});
  EXPECT_EQ(density_from_json(to_json(rho)).exact_entries(), rho.exact_entries());
}

TEST(Io, ChannelRoundTripAndValidation) {
  const KrausChannel id(2, 2, {Eigen::MatrixXcd::Identity(2, 2)});
  const auto back = channel_from_json(to_json(id));
  EXPECT_EQ(back.kraus_ops().size(), 1u);
  EXPECT_TRUE(back.kraus_ops()[0].isApprox(id.kraus_ops()[0]));
  auto j = to_json(id);
  j["kraus"][0]["entries"][0]["re"] = 2;
  EXPECT_THROW(channel_from_json(j), InvalidArgument);
}

TEST(Io, MalformedInputsThrowParseError) {
  EXPECT_THROW(poly_from_json(Json::parse(R"({"shape": [2]})")), ParseError);
  EXPECT_THROW(shape_from_json(Json::parse(R"("2,2")")), ParseError);
  EXPECT_THROW(state_from_json(Json::parse(R"({"shape": [2], "mode": "exact",
      "amplitudes": [{"index": 0, "re": 0.5, "im": "0/1"}]})")),
               ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST(Io, StateIndexOutOfRange) {
  EXPECT_ANY_THROW(state_from_json(Json::parse(R"({"shape": [2], "mode": "exact",
      "amplitudes": [{"index": 7, "re": "1/1", "im": "0/1"}]})")));
}

TEST(Io, DumpIsDeterministic) {
  const auto b = luip_space(SystemShape({2, 2, 2}), 2);
  const auto a = dump(to_json(b));
  EXPECT_EQ(a, dump(to_json(luip_space(SystemShape({2, 2, 2}), 2))));
  EXPECT_EQ(a.back(), '\n');
}

TEST(Io, VerdictJson) {
  const auto v = compare_lu(ghz_state(3, 2), w_state(3), 2, Mode::Exact);
  const auto j = to_json(v);
  EXPECT_EQ(j["verdict"], "Distinguished");
  EXPECT_EQ(j["half_degree"], 2);
  EXPECT_EQ(j["max_degree"], 4);
}

}  // namespace
}  // namespace invforge
