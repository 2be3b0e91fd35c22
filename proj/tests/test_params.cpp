// Copyright 2026 The minrank-keygen Authors
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
//
///////////////////////////////////////////////////////////////////////////////

#include <gtest/gtest.h>

#include "minrank/error.hpp"
#include "minrank/params.hpp"

namespace minrank {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternalInconsistency;
}

TEST(Params, RegistryContents) {
  const auto reg = registry();
  ASSERT_EQ(reg.size(), 9U);
  const Params& ia = params_by_name("mirith-Ia");
  EXPECT_EQ(ia.lambda, 128U);
  EXPECT_EQ(ia.q, 16U);
  EXPECT_EQ(ia.m, 15U);
  EXPECT_EQ(ia.n, 15U);
  EXPECT_EQ(ia.k, 78U);
  EXPECT_EQ(ia.r, 6U);
  EXPECT_EQ(ia.seed_bytes(), 16U);
  EXPECT_EQ(ia.mn(), 225U);
  EXPECT_EQ(ia.left_size(), 135U);
  EXPECT_EQ(ia.field, &Field::for_order(16));
  EXPECT_EQ(params_by_name("mirith-Vb").k, 254U);
  for (const Params& p : reg) {
    EXPECT_EQ(&params_by_name(p.name), &p);
    EXPECT_LT(p.k, (p.m - p.r) * (p.n - p.r)) << p.name;
  }
}

TEST(Params, ToySets) {
  EXPECT_EQ(toy_params_for(2).name, "toy-2-3-3-2-1");
  EXPECT_EQ(toy_params_for(3).name, "toy-3-4-4-3-2");
  EXPECT_EQ(toy_params_for(16).name, "toy-16-6-6-8-2");
  EXPECT_EQ(code_of([] { toy_params_for(5); }), ErrorCode::kInvalidParams);
}

TEST(Params, Validation) {
  EXPECT_NO_THROW(make_params(16, 15, 15, 78, 6, 128));
  EXPECT_NO_THROW(make_params(2, 3, 3, 3, 1, 128));
  const auto bad = ErrorCode::kInvalidParams;
  EXPECT_EQ(code_of([] { make_params(16, 15, 15, 81, 6, 128); }), bad);  // k = (m-r)(n-r)
  EXPECT_EQ(code_of([] { make_params(16, 15, 15, 0, 6, 128); }), bad);
  EXPECT_EQ(code_of([] { make_params(16, 14, 15, 10, 6, 128); }), bad);  // m < n
  EXPECT_EQ(code_of([] { make_params(16, 15, 15, 10, 15, 128); }), bad);  // r = n
  EXPECT_EQ(code_of([] { make_params(16, 15, 15, 10, 0, 128); }), bad);
  EXPECT_EQ(code_of([] { make_params(6, 15, 15, 10, 6, 128); }), bad);
  EXPECT_EQ(code_of([] { make_params(16, 15, 15, 10, 6, 100); }), bad);
  EXPECT_EQ(code_of([] { make_params(16, 15, 15, 10, 6, 0); }), bad);
  EXPECT_EQ(code_of([] { params_by_name("nope"); }), bad);
}

}  // namespace
}  // namespace minrank
