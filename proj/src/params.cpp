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

#include "minrank/params.hpp"

#include <vector>

#include "minrank/error.hpp"

namespace minrank {
namespace {

std::vector<Params> build_registry() {
  return {
      make_params(16, 15, 15, 78, 6, 128, "mirith-Ia"),
      make_params(16, 16, 16, 142, 4, 128, "mirith-Ib"),
      make_params(16, 19, 19, 109, 8, 192, "mirith-IIIa"),
      make_params(16, 19, 19, 167, 6, 192, "mirith-IIIb"),
      make_params(16, 21, 21, 189, 7, 256, "mirith-Va"),
      make_params(16, 22, 22, 254, 6, 256, "mirith-Vb"),
      make_params(2, 3, 3, 2, 1, 128, "toy-2-3-3-2-1"),
      make_params(3, 4, 4, 3, 2, 128, "toy-3-4-4-3-2"),
      make_params(16, 6, 6, 8, 2, 128, "toy-16-6-6-8-2"),
  };
}

}  // namespace

Params make_params(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r, unsigned lambda,
                   std::string name) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::kInvalidParams, why); };
  const Field* field = nullptr;
  try {
    field = &Field::for_order(q);
  } catch (const Error&) {
    fail("q = " + std::to_string(q) + " is not a supported prime power");
  }
  if (!(m >= n && n > r && r >= 1)) fail("need m >= n > r >= 1");
  if (k < 1) fail("need k >= 1");
  if (std::size_t{k} >= std::size_t{m - r} * (n - r)) fail("instance is not overdetermined: k >= (m - r)(n - r)");
  if (lambda == 0 || lambda % 8 != 0) fail("lambda must be a positive multiple of 8");
  if (name.empty()) {
    name = "custom-" + std::to_string(q) + "-" + std::to_string(m) + "-" + std::to_string(n) +
           "-" + std::to_string(k) + "-" + std::to_string(r);
  }
  return Params{std::move(name), q, m, n, k, r, lambda, field};
}

std::span<const Params> registry() {
  static const std::vector<Params> sets = build_registry();
  return sets;
}

const Params& params_by_name(std::string_view name) {
  for (const auto& p : registry()) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::kInvalidParams, "unknown parameter set '" + std::string(name) + "'");
}

const Params& toy_params_for(unsigned q) {
  switch (q) {
    case 2: return params_by_name("toy-2-3-3-2-1");
    case 3: return params_by_name("toy-3-4-4-3-2");
    case 16: return params_by_name("toy-16-6-6-8-2");
    default: break;
  }
  throw Error(ErrorCode::kInvalidParams, "no toy set for q = " + std::to_string(q));
}

}  // namespace minrank
