// Copyright 2026 The dppl Authors
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

#ifndef DPPL_DPP_INFERENCE_HPP
#define DPPL_DPP_INFERENCE_HPP

#include <cstdint>

#include "dppl/dpp_kernel.hpp"
#include "dppl/rng.hpp"

namespace dppl {

// Draws a fixed-cardinality sample from an elementary DPP by iterated
// norm-proportional selection and projection onto the orthogonal complement
// of the chosen column. Always returns exactly rank() indices; throws
// NumericalDegeneracyError if every residual norm collapses first.
ActiveSubset sample_elementary(const ElementaryDpp& elementary, Rng& rng);
ActiveSubset sample_elementary(const ElementaryDpp& elementary,
                               std::uint64_t seed);

// Two-phase exact DPP sampler: picks an elementary component by including
// eigenvector n with probability lambda_n/(1+lambda_n), then samples from
// it. Returns the empty set when no eigenvector is selected.
ActiveSubset sample_dpp(const DppKernel& kernel, Rng& rng);
ActiveSubset sample_dpp(const DppKernel& kernel, std::uint64_t seed);

// Greedy MAP surrogate: starting from the empty set, repeatedly adds the
// item with the largest determinant gain det(L_{Y+i})/det(L_Y) and stops
// when no addition strictly increases the determinant. Ties break to the
// lowest index, so the result is deterministic.
ActiveSubset greedy_map(const DppKernel& kernel);

}  // namespace dppl

#endif  // DPPL_DPP_INFERENCE_HPP
