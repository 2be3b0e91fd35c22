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

#ifndef MINRANK_CANONICAL_HPP_
#define MINRANK_CANONICAL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "minrank/keygen.hpp"
#include "minrank/matrix.hpp"

namespace minrank {

// The (k+1) x mn matrix with rows <M_1>, ..., <M_k>, <M_0> in that order.
Matrix build_l_matrix(const MinRankInstance& inst);

struct LBlocks {
  Matrix l1;    // k x k
  Matrix l2;    // k x (mn - k)
  Matrix ell1;  // 1 x k
  Matrix ell2;  // 1 x (mn - k)
};
LBlocks split_l_matrix(const Matrix& l, std::size_t k);

struct CanonicalReduction {
  MinRankInstance instance;  // in C_0 x C_1
  Matrix l1;
  Matrix l1_inv;
  Matrix ell1;  // 1 x k
};

// Canonical form when L_1 is invertible, nullopt (not reducible) otherwise.
// The rows of L' = (I_k | L_1^-1 L_2 ; 0 | l_2 - l_1 L_1^-1 L_2) give
// <M'_1>..<M'_k>, <M'_0>.
std::optional<CanonicalReduction> to_canonical(const MinRankInstance& inst);

// alpha' = alpha L_1 + l_1, so that M_0 + sum alpha_i M_i equals
// M'_0 + sum alpha'_i M'_i.
std::vector<Fe> transform_solution(std::span<const Fe> alpha, const CanonicalReduction& red);

// <M_0>_i = 0 for i <= k and <M_i>_j = delta_ij for i, j <= k.
bool is_canonical(const MinRankInstance& inst);
bool in_c0(const Matrix& m0, std::size_t k);
bool in_c1(std::span<const Matrix> mi);

enum class AbortStage {
  kENotInCalE,    // E^R is rank deficient
  kNotReducible,  // L_1 singular
  kIXSingular,    // I - X singular
};
const char* abort_stage_name(AbortStage s);

struct ReductionSuccess {
  MinRankInstance instance;  // canonical form M'
  std::vector<Fe> alpha;     // alpha'
  Matrix k;                  // E^L = E^R K
  Matrix e;
};

using ReductionResult = std::variant<ReductionSuccess, AbortStage>;

// Reduction from a KeyGen1 instance to a canonical instance distributed as
// KeyGen3 output. Stages run in order and the first failure is reported.
ReductionResult reduce_r(const MinRankInstance& inst, const Witness& wit, std::size_t r);

// Membership in the set S: (M_0..M_k) in C_0 x C_1, E in the rank-r class
// with full-rank E^R, E = M_0 + sum alpha_i M_i, and alpha the unique solution
// of the (I - X) system built from the K of E.
bool in_solution_set(const MinRankInstance& inst, const Matrix& e, std::span<const Fe> alpha,
                     std::size_t r);

}  // namespace minrank

#endif  // MINRANK_CANONICAL_HPP_
