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

#include "confsets/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace confsets {

namespace {

// Lanczos g = 7, 9-term coefficients (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // log(2*pi)/2

void check_domain(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(name) + ": argument must be finite and positive");
  }
}

// Lanczos series A(x) and its derivative, valid for x >= 0.5.
void lanczos_series(double x, double* a, double* da) {
  double s = kLanczosCoef[0];
  double ds = 0.0;
  for (int k = 1; k < 9; ++k) {
    const double denom = x - 1.0 + static_cast<double>(k);
    s += kLanczosCoef[k] / denom;
    ds -= kLanczosCoef[k] / (denom * denom);
  }
  *a = s;
  if (da != nullptr) *da = ds;
}

}  // namespace

double log_gamma(double x) {
  check_domain(x, "log_gamma");
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x); sin(pi x) > 0 on (0, 1).
    return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
  }
  double a;
  lanczos_series(x, &a, nullptr);
  const double t = x + kLanczosG - 0.5;
  return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(a);
}

double digamma(double x) {
  check_domain(x, "digamma");
  if (x < 0.5) {
    return digamma(1.0 - x) - M_PI / std::tan(M_PI * x);
  }
  // Differentiating the Lanczos form: psi(x) = log t - g/t + A'(x)/A(x),
  // with t = x + g - 1/2.
  double a, da;
  lanczos_series(x, &a, &da);
  const double t = x + kLanczosG - 0.5;
  return std::log(t) - kLanczosG / t + da / a;
}

}  // namespace confsets
