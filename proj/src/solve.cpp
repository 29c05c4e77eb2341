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

#include <stdexcept>
#include <vector>

#include "quartic/holonomic.hpp"

namespace quartic {

namespace {

// Split a polynomial in (x, a) by x-power; values are polynomials in a.
std::map<int, MultiPoly> collect_by_x(const MultiPoly& p) {
    std::map<int, MultiPoly> out;
    for (const auto& [e, c] : p.terms()) {
        ExpVec rest = e;
        int xe = rest.e[static_cast<int>(Var::x)];
        rest.e[static_cast<int>(Var::x)] = 0;
        auto [it, inserted] = out.emplace(xe, MultiPoly::monomial(c, rest));
        if (!inserted) it->second += MultiPoly::monomial(c, rest);
    }
    return out;
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d) {
    auto q = p.divided_exactly_by(d);
    if (!q) throw std::logic_error("fraction-free elimination: inexact division");
    return *q;
}

}  // namespace

SolveOutcome certificate_solve(const DiffOp& op, const CertifiedIntegrand& f, int m, int n,
                               int degree_bound) {
    if (m < 0 || n < 1 || degree_bound < 0)
        throw std::invalid_argument("certificate_solve: bad parameters");
    const Rational u(1, n);
    const DiffOp lop = op.instantiated(m, u);
    const CertifiedIntegrand fi = f.instantiated(m, u);
    const MultiPoly& q = fi.kernel;
    const MultiPoly qx = q.diff(Var::x);
    const MultiPoly xv = MultiPoly::variable(Var::x);

    // Left side sum p_i G_i^a as one rational function NL/DL in (x, a).
    RatFunc lhs;
    if (!lop.is_zero()) {
        auto ga = logderiv_tower(fi, Var::a, lop.order());
        for (int i = 0; i <= lop.order(); ++i)
            lhs += RatFunc(lop.coeff(i)) * ga[static_cast<size_t>(i)];
    }

    // With R = x P / Q and P = sum_d c_d x^d, clearing denominators in
    // L(F)/F = D_x R + R Lambda_x gives
    //   sum_d c_d * DL * W_d = NL * Q^2,
    //   W_d = ((1 + Ex) + d) x^d Q + (Em - 1) x^{d+1} Q_x,
    // a linear system for the c_d over polynomials in a.
    const MultiPoly one_plus_ex = fi.exponent_x + MultiPoly(Rational(1));
    const MultiPoly em_minus_one = fi.exponent_main - MultiPoly(Rational(1));

    const int ncols = degree_bound + 1;
    std::vector<std::map<int, MultiPoly>> col_by_x;
    col_by_x.reserve(static_cast<size_t>(ncols));
    MultiPoly xpow(Rational(1));
    int max_x = 0;
    for (int d = 0; d < ncols; ++d) {
        MultiPoly w = (one_plus_ex + MultiPoly(Rational(d))) * xpow * q +
                      em_minus_one * xpow * xv * qx;
        auto cols = collect_by_x(lhs.den() * w);
        if (!cols.empty()) max_x = std::max(max_x, cols.rbegin()->first);
        col_by_x.push_back(std::move(cols));
        xpow *= xv;
    }
    auto rhs_by_x = collect_by_x(lhs.num() * q * q);
    if (!rhs_by_x.empty()) max_x = std::max(max_x, rhs_by_x.rbegin()->first);

    const int nrows = max_x + 1;
    std::vector<std::vector<MultiPoly>> mat(
        static_cast<size_t>(nrows),
        std::vector<MultiPoly>(static_cast<size_t>(ncols) + 1, MultiPoly(Rational(0))));
    for (int d = 0; d < ncols; ++d)
        for (const auto& [e, p] : col_by_x[static_cast<size_t>(d)])
            mat[static_cast<size_t>(e)][static_cast<size_t>(d)] = p;
    for (const auto& [e, p] : rhs_by_x)
        mat[static_cast<size_t>(e)][static_cast<size_t>(ncols)] = p;

    // Bareiss fraction-free elimination over Q[a].
    std::vector<int> pivot_row_of_col(static_cast<size_t>(ncols), -1);
    MultiPoly prev(Rational(1));
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pr = -1;
        for (int r = rank; r < nrows; ++r) {
            if (!mat[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;  // free unknown
        std::swap(mat[static_cast<size_t>(rank)], mat[static_cast<size_t>(pr)]);
        for (int r = rank + 1; r < nrows; ++r) {
            for (int c2 = col + 1; c2 <= ncols; ++c2) {
                MultiPoly num = mat[static_cast<size_t>(rank)][static_cast<size_t>(col)] *
                                    mat[static_cast<size_t>(r)][static_cast<size_t>(c2)] -
                                mat[static_cast<size_t>(r)][static_cast<size_t>(col)] *
                                    mat[static_cast<size_t>(rank)][static_cast<size_t>(c2)];
                mat[static_cast<size_t>(r)][static_cast<size_t>(c2)] =
                    num.is_zero() ? num : exact_div(num, prev);
            }
            mat[static_cast<size_t>(r)][static_cast<size_t>(col)] = MultiPoly(Rational(0));
        }
        prev = mat[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        pivot_row_of_col[static_cast<size_t>(col)] = rank;
        ++rank;
    }
    for (int r = rank; r < nrows; ++r) {
        if (!mat[static_cast<size_t>(r)][static_cast<size_t>(ncols)].is_zero())
            return {std::nullopt, false,
                    "inconsistent system at degree bound " + std::to_string(degree_bound)};
    }

    // Back substitution over Q(a); free unknowns pinned to zero.
    SolveOutcome out;
    std::vector<RatFunc> c(static_cast<size_t>(ncols), RatFunc(Rational(0)));
    for (int col = ncols - 1; col >= 0; --col) {
        int r = pivot_row_of_col[static_cast<size_t>(col)];
        if (r < 0) {
            out.underdetermined = true;
            continue;
        }
        RatFunc acc(mat[static_cast<size_t>(r)][static_cast<size_t>(ncols)]);
        for (int c2 = col + 1; c2 < ncols; ++c2)
            acc -= RatFunc(mat[static_cast<size_t>(r)][static_cast<size_t>(c2)]) *
                   c[static_cast<size_t>(c2)];
        c[static_cast<size_t>(col)] =
            acc / RatFunc(mat[static_cast<size_t>(r)][static_cast<size_t>(col)]);
    }

    RatFunc p;
    MultiPoly xp(Rational(1));
    for (int d = 0; d < ncols; ++d) {
        p += c[static_cast<size_t>(d)] * RatFunc(xp);
        xp *= xv;
    }
    RatFunc r_sol = RatFunc(xv) * p / RatFunc(q);
    Certificate cert = make_certificate(r_sol, fi);
    if (!telescoping_residual(lop, cert, fi).is_zero())
        return {std::nullopt, out.underdetermined,
                "solution candidate failed verification (system rank deficiency)"};
    out.certificate = std::move(cert);
    if (out.message.empty())
        out.message = out.underdetermined ? "underdetermined system: one solution returned"
                                          : "unique solution";
    return out;
}

}  // namespace quartic
