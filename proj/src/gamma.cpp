/*
   Copyright 2026 The quartic-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "quartic/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace quartic {

namespace {

constexpr double kLanczosG = 4.7421875;  // 607/128

// Standard published 15-coefficient set for g = 607/128.
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;

}  // namespace

double GammaEngine::ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: argument must be positive");
    double acc = kLanczosCoeff[0];
    for (int k = 1; k < 15; ++k) acc += kLanczosCoeff[k] / (x - 1.0 + k);
    double t = x + kLanczosG - 0.5;
    return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

double GammaEngine::gamma(double x) { return std::exp(ln_gamma(x)); }

}  // namespace quartic
