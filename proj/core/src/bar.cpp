/*
   Copyright 2026 The exthecke Authors

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

#include "hecke/bar.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_map>

#include "hecke/parallel.hpp"

namespace hecke {

BarOperator::BarOperator(const HeckeModule& module, unsigned threads) : module_(&module) {
    const InvolutionSet& basis = module.basis();
    columns_.resize(module.dim());
    parallel_for(module.dim(), threads, [&](std::size_t x) {
        const TwistedInvolution& ti = basis[x];
        const BasisIndex start = basis.index(ti.w, basis.neg_m(ti.lambda));
        ModuleVector col = module.tw_inv_act(ti.w, ModuleVector::basis(start));
        columns_[x] = ti.sign > 0 ? std::move(col) : LaurentPoly(-1) * col;
    });
}

ModuleVector BarOperator::apply(const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [x, c] : v.terms()) out.add_scaled(column(x), c.bar());
    return out;
}

bool BarMatrix::squares_to_identity() const {
    const std::size_t n = index.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly acc;
            for (std::size_t k = 0; k < n; ++k)
                if (!entries[i][k].is_zero() && !entries[k][j].is_zero()) acc += entries[i][k] * entries[k][j].bar();
            if (acc != LaurentPoly(i == j ? 1 : 0)) return false;
        }
    return true;
}

namespace {

std::vector<BasisIndex> orbit_indices(const HeckeModule& module, const std::vector<PointId>& orbit) {
    const TorusLattice& lattice = module.lattice();
    std::set<PointId> members(orbit.begin(), orbit.end());
    for (PointId p : orbit)
        for (int s = 0; s < module.rank(); ++s)
            if (!members.count(lattice.act_simple(s, p)))
                throw std::invalid_argument("orbit is not W-stable: " + lattice.point(p).to_string());
    return module.basis().restrict_to(orbit);
}

std::unordered_map<BasisIndex, std::size_t> positions(const std::vector<BasisIndex>& index) {
    std::unordered_map<BasisIndex, std::size_t> pos;
    for (std::size_t i = 0; i < index.size(); ++i) pos.emplace(index[i], i);
    return pos;
}

}  // namespace

BarMatrix bar_matrix(const BarOperator& bar, const std::vector<PointId>& orbit) {
    BarMatrix m;
    m.index = orbit_indices(bar.module(), orbit);
    const auto pos = positions(m.index);
    const std::size_t n = m.index.size();
    m.entries.assign(n, std::vector<LaurentPoly>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [y, c] : bar.column(m.index[j]).terms()) {
            auto it = pos.find(y);
            if (it == pos.end()) throw std::invalid_argument("bar operator leaves the span of the orbit");
            m.entries[it->second][j] = c;
        }
    return m;
}

BarReport verify_bar(const BarOperator& bar, unsigned threads) {
    const HeckeModule& module = bar.module();
    const InvolutionSet& basis = module.basis();
    const std::size_t n = module.dim();
    std::vector<std::string> failures(n);
    std::vector<std::size_t> counts(n, 0);

    parallel_for(n, threads, [&](std::size_t x) {
        auto fail = [&](const std::string& what) {
            if (failures[x].empty()) failures[x] = what + " at " + describe_index(basis, x);
        };
        const TwistedInvolution& ti = basis[x];
        const ModuleVector ax = ModuleVector::basis(x);
        const ModuleVector& bx = bar.column(x);
        for (int s = 0; s < module.rank(); ++s) {
            ++counts[x];
            if (bar.apply(module.ts_act(s, ax)) != module.ts_inv_act(s, bx)) fail("B T_s != T_s^-1 B for s" + std::to_string(s + 1));
            ++counts[x];
            if (bar.apply(module.ts_inv_act(s, ax)) != module.ts_act(s, bx)) fail("B T_s^-1 != T_s B for s" + std::to_string(s + 1));
        }
        ++counts[x];
        if (bar.apply(bx) != ax) fail("B^2 != 1");
        if (ti.u == module.group().identity()) {
            ++counts[x];
            if (bx != ax) fail("B does not fix a_{z,lambda}");
        }
        ++counts[x];
        const PointId other = basis.neg_m(ti.lambda);
        for (const auto& [y, c] : bx.terms()) {
            const TwistedInvolution& ty = basis[y];
            if (ty.z != ti.z || (ty.lambda != ti.lambda && ty.lambda != other)) {
                fail("B leaves blocks (z,lambda), (z,-m lambda)");
                break;
            }
        }
    });

    BarReport report;
    for (std::size_t x = 0; x < n; ++x) {
        report.checks += counts[x];
        if (report.passed && !failures[x].empty()) {
            report.passed = false;
            report.failure = failures[x];
        }
    }
    return report;
}

CanonicalBasisTable canonical_basis(const BarOperator& bar, const std::vector<PointId>& orbit, CanonicalOrder order) {
    const HeckeModule& module = bar.module();
    const InvolutionSet& basis = module.basis();
    CanonicalBasisTable table;
    table.index = orbit_indices(module, orbit);

    // Linear order: sorted[k] is the k-th smallest index.
    std::vector<BasisIndex> sorted = table.index;
    std::sort(sorted.begin(), sorted.end(), [&](BasisIndex a, BasisIndex b) {
        const int la = basis[a].u_length, lb = basis[b].u_length;
        if (la != lb) return la < lb;
        return order == CanonicalOrder::LengthThenIndex ? a < b : a > b;
    });
    const auto rank = positions(sorted);

    for (BasisIndex x : sorted) {
        const ModuleVector& col = bar.column(x);
        if (col.coeff(x) != LaurentPoly(1))
            throw TriangularityError("diagonal entry of B at " + describe_index(basis, x) + " is " + col.coeff(x).to_string());
        for (const auto& [y, c] : col.terms()) {
            auto it = rank.find(y);
            if (it == rank.end()) throw TriangularityError("B(" + describe_index(basis, x) + ") leaves the orbit");
            if (y != x && it->second > rank.at(x))
                throw TriangularityError("B(" + describe_index(basis, x) + ") contains the higher term " + describe_index(basis, y));
        }
    }

    for (BasisIndex x : sorted) {
        const std::size_t rx = rank.at(x);
        ModuleVector hat = ModuleVector::basis(x);
        ModuleVector acc = bar.column(x);  // B(hat) restricted to the part already fixed
        for (std::size_t k = rx; k-- > 0;) {
            const BasisIndex y = sorted[k];
            const LaurentPoly q = acc.coeff(y);
            if (q.is_zero()) continue;
            const LaurentPoly lower = q.negative_part();
            if (q.constant_term() != 0 || q.positive_part() != -lower.bar())
                throw std::logic_error("canonical_basis: inconsistent correction at " + describe_index(basis, y) +
                                       " for " + describe_index(basis, x) + ": " + q.to_string());
            hat.add(y, lower);
            acc.add_scaled(bar.column(y), lower.bar());
        }
        table.elements.emplace(x, std::move(hat));
    }
    return table;
}

std::string check_canonical(const BarOperator& bar, const CanonicalBasisTable& table) {
    const InvolutionSet& basis = bar.module().basis();
    std::set<BasisIndex> members(table.index.begin(), table.index.end());
    if (table.elements.size() != table.index.size()) return "table size does not match the orbit";
    for (const auto& [x, hat] : table.elements) {
        const std::string where = describe_index(basis, x);
        if (hat.coeff(x) != LaurentPoly(1)) return "leading coefficient of hat " + where + " is not 1";
        for (const auto& [y, c] : hat.terms()) {
            if (!members.count(y)) return "hat " + where + " leaves the orbit";
            if (y != x && !c.in_v_inv_z_v_inv()) return "hat " + where + " has coefficient " + c.to_string() + " outside v^-1 Z[v^-1]";
            if (y != x && basis[y].u_length >= basis[x].u_length) return "hat " + where + " is not unitriangular";
        }
        if (bar.apply(hat) != hat) return "hat " + where + " is not bar-invariant";
    }
    return {};
}

// The lambda = 0 sector, rebuilt from the group alone.

namespace {

using SectorVector = std::map<ElemId, LaurentPoly>;

void sector_add(SectorVector& v, ElemId w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    LaurentPoly& slot = v[w];
    slot += c;
    if (slot.is_zero()) v.erase(w);
}

SectorVector sector_ts(const WeylGroup& g, int s, const SectorVector& v, bool inverse) {
    SectorVector out;
    const ElemId sig = g.simple(s);
    for (const auto& [w, c] : v) {
        const ElemId ws = g.mul(w, sig);
        const bool commute = ws == g.mul(sig, w);
        const bool up = g.length(ws) > g.length(w);
        if (!commute) {
            sector_add(out, g.mul(sig, ws), c);
            if (!up) sector_add(out, w, c * laurent::v2_minus_v_inv2());
        } else if (up) {
            sector_add(out, w, c);
            sector_add(out, ws, c * laurent::v_plus_v_inv());
        } else {
            sector_add(out, ws, c * laurent::v_minus_v_inv());
            sector_add(out, w, c * laurent::v2_minus_v_inv2_minus_one());
        }
        if (inverse) sector_add(out, w, -(c * laurent::v2_minus_v_inv2()));
    }
    return out;
}

SectorVector sector_bar_basis(const WeylGroup& g, ElemId w) {
    SectorVector v{{w, LaurentPoly(g.length(w) % 2 == 0 ? 1 : -1)}};
    for (int s : g.reduced_word(w)) v = sector_ts(g, s, v, true);
    return v;
}

/// Solves A c = b exactly; returns std::nullopt unless the solution exists and is unique.
std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rational inv = Rational(1) / rows[r][c];
        for (auto& e : rows[r]) e *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c];
            for (std::size_t k = c; k <= unknowns; ++k) rows[i][k] -= f * rows[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (!rows[i][unknowns].is_zero()) return std::nullopt;
    if (r != unknowns) return std::nullopt;
    std::vector<Rational> sol(unknowns);
    for (std::size_t i = 0; i < r; ++i) sol[pivot_col[i]] = rows[i][unknowns];
    return sol;
}

}  // namespace

std::map<BasisIndex, ModuleVector> lambda0_canonical_by_elimination(const HeckeModule& module) {
    const WeylGroup& g = module.group();
    const InvolutionSet& basis = module.basis();
    const PointId zero = module.lattice().zero();
    const std::vector<ElemId> sector = g.involutions();
    const std::size_t n = sector.size();
    int max_len = 0;
    for (ElemId w = 0; w < g.size(); ++w) max_len = std::max(max_len, g.length(w));

    std::vector<SectorVector> bars(n);
    for (std::size_t i = 0; i < n; ++i) bars[i] = sector_bar_basis(g, sector[i]);
    std::map<ElemId, std::size_t> slot;
    for (std::size_t i = 0; i < n; ++i) slot.emplace(sector[i], i);

    // Unknowns: coefficient of v^-k (1 <= k <= depth) in p_y for every y != x.
    const int depth = 2 * max_len + 2;
    const int span = depth + 2 * max_len + 2;  // degrees in [-span, span]
    std::map<BasisIndex, ModuleVector> out;
    for (std::size_t xi = 0; xi < n; ++xi) {
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < n; ++i)
            if (i != xi) others.push_back(i);
        const std::size_t unknowns = others.size() * static_cast<std::size_t>(depth);
        const std::size_t width = static_cast<std::size_t>(2 * span + 1);
        auto eq = [&](std::size_t target, int degree) { return target * width + static_cast<std::size_t>(degree + span); };
        std::vector<std::vector<Rational>> rows(n * width, std::vector<Rational>(unknowns + 1));

        // B(hat) - hat = 0, hat = a_x + sum_y p_y a_y, B semilinear.
        auto add_bar_image = [&](std::size_t src, const LaurentPoly& scalar_bar, std::size_t col, bool rhs) {
            for (const auto& [w, c] : bars[src]) {
                const LaurentPoly term = c * scalar_bar;
                for (int e = term.lo(); e <= term.hi(); ++e) {
                    const auto k = term.coeff(e);
                    if (k == 0) continue;
                    if (e < -span || e > span) throw std::logic_error("lambda0 elimination: degree bound too small");
                    auto& cell = rows[eq(slot.at(w), e)][col];
                    cell += rhs ? Rational(-k) : Rational(k);
                }
            }
        };
        add_bar_image(xi, LaurentPoly(1), unknowns, true);
        rows[eq(xi, 0)][unknowns] += Rational(1);  // move -a_x to the right-hand side
        for (std::size_t j = 0; j < others.size(); ++j)
            for (int k = 1; k <= depth; ++k) {
                const std::size_t col = j * static_cast<std::size_t>(depth) + static_cast<std::size_t>(k - 1);
                add_bar_image(others[j], LaurentPoly::monomial(1, k), col, false);
                rows[eq(others[j], -k)][col] -= Rational(1);
            }

        std::vector<std::vector<Rational>> nonzero;
        for (auto& row : rows)
            if (std::any_of(row.begin(), row.end(), [](const Rational& r) { return !r.is_zero(); })) nonzero.push_back(std::move(row));
        auto sol = solve_unique(std::move(nonzero), unknowns);
        if (!sol) throw std::logic_error("lambda0 elimination: no unique solution");

        ModuleVector hat = ModuleVector::basis(basis.index(sector[xi], zero));
        for (std::size_t j = 0; j < others.size(); ++j) {
            std::vector<LaurentPoly::Coeff> coeffs(static_cast<std::size_t>(depth));
            for (int k = 1; k <= depth; ++k) {
                const Rational& r = (*sol)[j * static_cast<std::size_t>(depth) + static_cast<std::size_t>(k - 1)];
                if (!r.is_integer()) throw std::logic_error("lambda0 elimination: non-integral coefficient");
                coeffs[static_cast<std::size_t>(depth - k)] = static_cast<LaurentPoly::Coeff>(r.numerator());
            }
            hat.add(basis.index(sector[others[j]], zero), LaurentPoly(-depth, coeffs));
        }
        out.emplace(basis.index(sector[xi], zero), std::move(hat));
    }
    return out;
}

}  // namespace hecke
