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

#pragma once

namespace quartic {

/// Gamma via the Lanczos approximation with the published 15-coefficient
/// set (g = 607/128). Positive real arguments only; that is all the series
/// displays ever need (the smallest argument that occurs is 1/(2n)).
class GammaEngine {
public:
    /// ln Gamma(x), x > 0. Throws std::domain_error otherwise.
    static double ln_gamma(double x);
    /// Gamma(x) = exp(ln_gamma(x)), x > 0.
    static double gamma(double x);
};

inline double ln_gamma(double x) { return GammaEngine::ln_gamma(x); }
inline double gamma_fn(double x) { return GammaEngine::gamma(x); }

}  // namespace quartic
