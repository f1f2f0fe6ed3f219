// Copyright 2026 The Authors.
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

#include "tangles/io.hpp"

using namespace tangles;
using namespace tangles::io;

TEST(Io, ParsesGraph) {
  auto inst = parse_instance_text(R"({"kind":"graph","n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]})");
  EXPECT_EQ(inst.kind, "graph");
  EXPECT_EQ(inst.graph, cycle_graph(4));
}

TEST(Io, MalformedJsonIsSchemaError) {
  EXPECT_THROW(parse_instance_text("{\"kind\": \"graph\", "), SchemaError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"graph","edges":[]})"), SchemaError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"graph","n":3,"edges":[[0]]})"), SchemaError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"polygon"})"), SchemaError);
  EXPECT_THROW(parse_instance_text(R"([1,2])"), SchemaError);
}

TEST(Io, SemanticErrorsAreInputErrors) {
  EXPECT_THROW(parse_instance_text(R"({"kind":"graph","n":3,"edges":[[0,5]]})"), InputError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"graph","n":3,"edges":[[1,1]]})"), InputError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"set","elements":["a","a"]})"), InputError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"circle","elements":[0,1,2],"cycle":[0,1]})"), InputError);
}

TEST(Io, MatroidRankKeys) {
  auto inst = parse_instance_text(R"({"kind":"matroid","ground":["x","y"],"rank":{"":0,"x":1,"y":1,"y,x":1}})");
  EXPECT_EQ(inst.matroid.rank, (std::vector<int>{0, 1, 1, 1}));
  EXPECT_THROW(parse_instance_text(R"({"kind":"matroid","ground":["x","y"],"rank":{"":0,"x":1}})"), SchemaError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"matroid","ground":["x"],"rank":{"":0,"z":1}})"), InputError);
}

TEST(Io, BuildModels) {
  auto g = build_model(parse_instance_text(R"({"kind":"graph","n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]})"), true, {});
  ASSERT_TRUE(g.clique.has_value());
  EXPECT_EQ(g.system->unoriented_count(), 9u);

  auto conn = build_model(parse_instance_text(R"({"kind":"graph","n":3,"edges":[[0,1],[1,2]]})"), false, 2.0);
  EXPECT_EQ(conn.universe->ground_size(), 2);
  EXPECT_EQ(conn.ground_labels.front(), "0-1");

  auto circle = build_model(parse_instance_text(R"({"kind":"circle","elements":[0,1,2,3],"cycle":[0,1,2,3]})"), false, {});
  EXPECT_EQ(circle.system->members().size(), 14u);

  auto crit = build_model(parse_instance_text(R"({"kind":"criteria","elements":[0,1,2,3],"criteria":[[0,1,2]],"k":1})"),
                          false, {});
  for (SepId s : crit.system->members()) EXPECT_LT((*crit.order)(s), 1);

  auto set = build_model(parse_instance_text(R"({"kind":"set","elements":["a","b","c"],"system":[["a"]]})"), false, {});
  EXPECT_EQ(set.system->members().size(), 2u);
}

TEST(Io, SeparationRoundTrip) {
  auto model = build_model(parse_instance_text(R"({"kind":"set","elements":["a","b","c"]})"), false, {});
  for (SepId s : model.system->members()) EXPECT_EQ(parse_separation(model, separation_json(model, s)), s);
  EXPECT_THROW(parse_separation(model, json{{"A", {"a"}}, {"B", {"a", "b"}}}), InputError);
  EXPECT_THROW(parse_separation(model, json{{"A", {"q"}}, {"B", {"b", "c"}}}), InputError);
}

TEST(Io, OrientationsAndQ) {
  auto model = build_model(parse_instance_text(R"({"kind":"set","elements":[0,1,2]})"), false, {});
  auto tangles = enumerate_tangles(*model.system, Family::abstract_tangles());
  json doc = json::array();
  for (const auto& o : tangles) doc.push_back(orientation_json(model, o));
  EXPECT_EQ(parse_orientations(model, doc), tangles);
  auto q = parse_q(model, json::parse(R"([{"A":[],"B":[0,1,2]},{"A":[0],"B":[1,2]}])"));
  EXPECT_EQ(std::count(q.begin(), q.end(), 1), 2);
}

TEST(Io, DotOutput) {
  auto model = build_model(parse_instance_text(R"({"kind":"graph","n":4,"edges":[[0,1],[0,2],[1,2],[1,3],[2,3]]})"),
                           true, {});
  auto out = duality_decide(*model.system, model.clique->stars());
  ASSERT_TRUE(out.tree.has_value());
  const std::string dot = stree_dot(model, *out.tree);
  EXPECT_NE(dot.find("graph stree {"), std::string::npos);
  EXPECT_NE(dot.find(" -- "), std::string::npos);
  EXPECT_EQ(dot, stree_dot(model, *out.tree));
}
