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

#include "minrank/canonical.hpp"

#include <algorithm>

#include "minrank/error.hpp"

namespace minrank {

Matrix build_l_matrix(const MinRankInstance& inst) {
  const std::size_t k = inst.k();
  const Matrix& m0 = inst.m0();
  const std::size_t mn = m0.size();
  Matrix l(m0.field(), k + 1, mn);
  for (std::size_t i = 0; i <= k; ++i) {
    const Matrix& src = i < k ? inst.matrices[i + 1] : m0;
    if (src.rows() != m0.rows() || src.cols() != m0.cols()) {
      throw Error(ErrorCode::kDimensionMismatch, "instance matrices differ in shape");
    }
    for (std::size_t j = 0; j < mn; ++j) l(i, j) = src.vec_at(j);
  }
  return l;
}

LBlocks split_l_matrix(const Matrix& l, std::size_t k) {
  const std::size_t rest = l.cols() - k;
  return {l.block(0, 0, k, k), l.block(0, k, k, rest), l.block(k, 0, 1, k),
          l.block(k, k, 1, rest)};
}

std::optional<CanonicalReduction> to_canonical(const MinRankInstance& inst) {
  const std::size_t k = inst.k();
  const Matrix& m0 = inst.m0();
  const Field& f = m0.field();
  if (k > m0.size()) throw Error(ErrorCode::kDimensionMismatch, "k exceeds mn");
  const Matrix l = build_l_matrix(inst);
  LBlocks b = split_l_matrix(l, k);
  auto l1_inv = inverse(b.l1);
  if (!l1_inv) return std::nullopt;

  const Matrix upper = *l1_inv * b.l2;           // L_1^-1 L_2
  const Matrix lower = b.ell2 - b.ell1 * upper;  // l_2 - l_1 L_1^-1 L_2

  CanonicalReduction red{MinRankInstance{}, std::move(b.l1), std::move(*l1_inv),
                         std::move(b.ell1)};
  red.instance.matrices.reserve(k + 1);
  Matrix m0p(f, m0.rows(), m0.cols());
  for (std::size_t j = k; j < m0.size(); ++j) m0p.vec_at(j) = lower(0, j - k);
  red.instance.matrices.push_back(std::move(m0p));
  for (std::size_t i = 0; i < k; ++i) {
    Matrix mip(f, m0.rows(), m0.cols());
    mip.vec_at(i) = 1;
    for (std::size_t j = k; j < m0.size(); ++j) mip.vec_at(j) = upper(i, j - k);
    red.instance.matrices.push_back(std::move(mip));
  }
  return red;
}

std::vector<Fe> transform_solution(std::span<const Fe> alpha, const CanonicalReduction& red) {
  const std::size_t k = red.l1.rows();
  if (alpha.size() != k) throw Error(ErrorCode::kDimensionMismatch, "alpha length is not k");
  const Field& f = red.l1.field();
  Matrix row(f, 1, k);
  for (std::size_t i = 0; i < k; ++i) row(0, i) = alpha[i];
  const Matrix out = row * red.l1 + red.ell1;
  return std::vector<Fe>(out.row(0).begin(), out.row(0).end());
}

bool in_c0(const Matrix& m0, std::size_t k) {
  if (k > m0.size()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (m0.vec_at(i) != 0) return false;
  }
  return true;
}

bool in_c1(std::span<const Matrix> mi) {
  const std::size_t k = mi.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (k > mi[i].size()) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (mi[i].vec_at(j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool is_canonical(const MinRankInstance& inst) {
  if (inst.matrices.empty()) return false;
  return in_c0(inst.m0(), inst.k()) &&
         in_c1(std::span<const Matrix>(inst.matrices).subspan(1));
}

const char* abort_stage_name(AbortStage s) {
  switch (s) {
    case AbortStage::kENotInCalE: return "EnotInCalE";
    case AbortStage::kNotReducible: return "NotReducible";
    case AbortStage::kIXSingular: return "IXSingular";
  }
  return "unknown";
}

namespace {

std::vector<Matrix> right_blocks(const MinRankInstance& inst, std::size_t r) {
  std::vector<Matrix> out;
  out.reserve(inst.k());
  for (std::size_t i = 1; i <= inst.k(); ++i) out.push_back(split_lr(inst.matrices[i], r).second);
  return out;
}

}  // namespace

ReductionResult reduce_r(const MinRankInstance& inst, const Witness& wit, std::size_t r) {
  // Step 2: E in the class with E^L = E^R K.
  auto k_mat = solve_k_matrix(wit.e, r);
  if (!k_mat) return AbortStage::kENotInCalE;

  // Step 3: canonical form and transformed solution.
  auto red = to_canonical(inst);
  if (!red) return AbortStage::kNotReducible;
  std::vector<Fe> alpha = transform_solution(wit.alpha, *red);

  // Step 4: invertibility of I - X over the canonical right blocks.
  const Matrix m0_right = split_lr(red->instance.m0(), r).second;
  const StarSystem star = build_star_system(m0_right, right_blocks(red->instance, r), *k_mat);
  if (!inverse(star.lhs)) return AbortStage::kIXSingular;

  return ReductionSuccess{std::move(red->instance), std::move(alpha), std::move(*k_mat), wit.e};
}

bool in_solution_set(const MinRankInstance& inst, const Matrix& e, std::span<const Fe> alpha,
                     std::size_t r) {
  if (!is_canonical(inst) || alpha.size() != inst.k()) return false;
  if (rank(e) != r) return false;
  auto k_mat = solve_k_matrix(e, r);
  if (!k_mat) return false;
  if (!(inst.evaluate(alpha) == e)) return false;  // (i)
  const Matrix m0_right = split_lr(inst.m0(), r).second;
  const StarSystem star = build_star_system(m0_right, right_blocks(inst, r), *k_mat);
  auto solved = solve_linear(star.lhs, star.rhs);  // (ii)
  return solved && std::equal(solved->begin(), solved->end(), alpha.begin(), alpha.end());
}

}  // namespace minrank
