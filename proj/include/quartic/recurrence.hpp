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
#include <string>
#include <vector>

#include "quartic/holonomic.hpp"

namespace quartic {

/// Polynomial-coefficient recurrence sum_j coeff[j](l, m, u) * c_{l+j} = 0,
/// offsets shifted so the smallest is 0; the relation holds for every
/// integer l >= valid_from. The recurrence index l lives in variable
/// slot 0 (printed as "l").
struct Recurrence {
    std::map<int, MultiPoly> offsets;
    int valid_from = 0;

    int max_offset() const { return offsets.empty() ? 0 : offsets.rbegin()->first; }
    std::string to_string() const;
};

/// Translate sum phi(m,u) a^j D_a^i into recurrence contributions
/// phi * (l+i-j)(l+i-j-1)...(l-j+1) at offset i-j.
Recurrence ode_to_recurrence(const DiffOp& op);

/// Exact multipliers relative to the parity bases: c_l = q_l * base(l mod 2)
/// with q_0 = q_1 = 1.
struct CoefficientStream {
    std::vector<Rational> q;
    int parity(size_t l) const { return static_cast<int>(l % 2); }
};

struct LeadingCoefficientVanishes : std::domain_error {
    explicit LeadingCoefficientVanishes(int l)
        : std::domain_error("recurrence leading coefficient vanishes at l = " +
                            std::to_string(l)),
          at(l) {}
    int at;
};

/// Unroll a stride-2 recurrence (max offset 2, unshifted) at integer m and
/// exact rational u, producing q_l for l < count.
CoefficientStream unroll(const Recurrence& rec, int m, const Rational& u, int count);

}  // namespace quartic
