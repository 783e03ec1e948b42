// Copyright 2026 The confsets Authors
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

#ifndef CONFSETS_SPECIAL_FUNCTIONS_HPP_
#define CONFSETS_SPECIAL_FUNCTIONS_HPP_

namespace confsets {

// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients).
// Absolute accuracy is better than 1e-12 over the range used here; throws
// std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

// digamma(x) = d/dx log Gamma(x), same parameterization and domain.
double digamma(double x);

}  // namespace confsets

#endif  // CONFSETS_SPECIAL_FUNCTIONS_HPP_
