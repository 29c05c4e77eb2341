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

#include <map>
#include <string_view>

#include "quartic/holonomic.hpp"

namespace quartic {

/// Parse result: a polynomial in one formal operator symbol (D_a or D_x)
/// with rational-function coefficients. D-free input lives entirely in
/// degree 0. The grammar is documented in docs/grammar.md.
struct ParsedExpr {
    enum class DKind { none, d_a, d_x };
    DKind kind = DKind::none;
    std::map<int, RatFunc> coeffs;
};

ParsedExpr parse_expression(std::string_view src);

/// D-free expression as a rational function.
RatFunc parse_ratfunc(std::string_view src);

/// Polynomial (constant-denominator) coefficients times powers of D_a.
DiffOp parse_diffop(std::string_view src);

/// D-free polynomial; rejects nonconstant denominators.
MultiPoly parse_poly(std::string_view src);

}  // namespace quartic
