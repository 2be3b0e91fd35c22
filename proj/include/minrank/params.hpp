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

#ifndef MINRANK_PARAMS_HPP_
#define MINRANK_PARAMS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "minrank/gf.hpp"

namespace minrank {

// MinRank parameters (q, m, n, k, r, lambda).
//
// Valid sets satisfy m >= n > r >= 1, 1 <= k < (m - r)(n - r) (the
// overdetermined regime, which also gives k < m(n - r)), q a supported prime
// power and lambda a positive multiple of 8.
struct Params {
  std::string name;
  unsigned q = 0;
  unsigned m = 0;
  unsigned n = 0;
  unsigned k = 0;
  unsigned r = 0;
  unsigned lambda = 0;
  const Field* field = nullptr;

  std::size_t seed_bytes() const noexcept { return lambda / 8; }
  std::size_t mn() const noexcept { return std::size_t{m} * n; }
  // Number of entries of M^L, m(n - r).
  std::size_t left_size() const noexcept { return std::size_t{m} * (n - r); }
};

// Throws Error(kInvalidParams) when the tuple violates the invariants above.
Params make_params(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r, unsigned lambda,
                   std::string name = {});

// Built-in sets: mirith-Ia, mirith-Ib, mirith-IIIa, mirith-IIIb, mirith-Va,
// mirith-Vb, toy-2-3-3-2-1, toy-3-4-4-3-2, toy-16-6-6-8-2.
std::span<const Params> registry();
// Throws Error(kInvalidParams) for an unknown name.
const Params& params_by_name(std::string_view name);
// The toy set used for GF(q) experiments (q in {2, 3, 16}).
const Params& toy_params_for(unsigned q);

}  // namespace minrank

#endif  // MINRANK_PARAMS_HPP_
