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

#include <string>
#include <string_view>
#include <vector>

#include "quartic/holonomic.hpp"

namespace quartic {

/// One operator/certificate/kernel triple as shipped in a .tdf data file.
struct TheoremFixture {
    std::string name;
    bool reduced_form = false;  // z-form (kernel power times z^(u-1))
    MultiPoly kernel;
    DiffOp op;
    RatFunc certificate_expr;

    CertifiedIntegrand integrand() const;
    Certificate certificate() const;
};

/// Parse the "key: expression" fixture format (# starts a comment).
TheoremFixture parse_fixture(std::string_view text);

/// Built-in definitions, embedded from data/*.tdf at build time.
const TheoremFixture& theorem2_printed();
const std::vector<TheoremFixture>& theorem3_variants();
const TheoremFixture* find_theorem3_variant(std::string_view name);

}  // namespace quartic
