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

#include "quartic/fixtures.hpp"

#include <stdexcept>

#include "quartic/expr.hpp"
#include "quartic/fixture_data.hpp"

namespace quartic {

CertifiedIntegrand TheoremFixture::integrand() const {
    return reduced_form ? CertifiedIntegrand::reduced(kernel)
                        : CertifiedIntegrand::plain(kernel);
}

Certificate TheoremFixture::certificate() const {
    return make_certificate(certificate_expr, integrand());
}

TheoremFixture parse_fixture(std::string_view text) {
    TheoremFixture fx;
    bool have_kernel = false, have_op = false, have_cert = false, have_form = false;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("fixture line without key: " + std::string(line));
        std::string_view key = line.substr(0, colon);
        std::string_view val = line.substr(colon + 1);
        size_t vb = val.find_first_not_of(" \t");
        val = vb == std::string_view::npos ? std::string_view{} : val.substr(vb);

        if (key == "name") {
            fx.name = std::string(val);
        } else if (key == "form") {
            if (val != "x" && val != "z")
                throw std::invalid_argument("fixture form must be x or z");
            fx.reduced_form = (val == "z");
            have_form = true;
        } else if (key == "kernel") {
            fx.kernel = parse_poly(val);
            have_kernel = true;
        } else if (key == "operator") {
            fx.op = parse_diffop(val);
            have_op = true;
        } else if (key == "certificate") {
            fx.certificate_expr = parse_ratfunc(val);
            have_cert = true;
        } else {
            throw std::invalid_argument("unknown fixture key: " + std::string(key));
        }
    }
    if (!(have_form && have_kernel && have_op && have_cert))
        throw std::invalid_argument("fixture missing one of form/kernel/operator/certificate");
    return fx;
}

const TheoremFixture& theorem2_printed() {
    static const TheoremFixture fx = parse_fixture(fixture_data::kTheorem2Printed);
    return fx;
}

const std::vector<TheoremFixture>& theorem3_variants() {
    static const std::vector<TheoremFixture> v = {
        parse_fixture(fixture_data::kTheorem3Printed),
        parse_fixture(fixture_data::kTheorem3KernelFix),
        parse_fixture(fixture_data::kTheorem3OperatorFix),
        parse_fixture(fixture_data::kTheorem3Corrected),
    };
    return v;
}

const TheoremFixture* find_theorem3_variant(std::string_view name) {
    for (const auto& fx : theorem3_variants())
        if (fx.name == name) return &fx;
    return nullptr;
}

}  // namespace quartic
