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

#include "quartic/rational.hpp"

namespace quartic {

/// Rising product (z)_k = z(z+1)...(z+k-1), exact; (z)_0 = 1.
Rational pochhammer_exact(const Rational& z, int64_t k);

/// Terminating Gauss series 2F1(-mNeg, b; c; z) summed exactly over
/// mNeg+1 terms. Requires c + j != 0 for 0 <= j < mNeg.
Rational hyp2f1_terminating(int64_t mNeg, const Rational& b, const Rational& c,
                            const Rational& z);

/// The two leading series coefficients for given (n, m): the parity bases
/// every later coefficient is an exact rational multiple of. c0 > 0, c1 < 0.
struct SeriesBases {
    double c0;
    double c1;
};

SeriesBases series_bases(int n, int m);

}  // namespace quartic
