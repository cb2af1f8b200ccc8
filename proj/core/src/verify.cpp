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

#include "hecke/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hecke/parallel.hpp"
#include "hecke/transport.hpp"

namespace hecke {

Instance::Instance(const CartanType& type, int m, int N)
    : datum(type), group(datum), lattice(group, N), basis(lattice, m), module(basis) {}

std::vector<PointId> Instance::xbar_points() const {
    std::vector<PointId> out;
    for (PointId p = 0; p < lattice.size(); ++p)
        if (lattice.in_xbar_m(p, basis.m())) out.push_back(p);
    return out;
}

std::vector<std::vector<PointId>> Instance::xbar_orbits() const {
    std::vector<std::vector<PointId>> out;
    for (auto& orbit : lattice.orbits())
        if (lattice.in_xbar_m(orbit.front(), basis.m())) out.push_back(std::move(orbit));
    return out;
}

namespace {

using Fail = std::function<void(const std::string&)>;

/// Runs body(x, fail, count) for every basis index; collects the first failure in index order.
SuiteResult per_basis(const std::string& name, std::size_t n, unsigned threads,
                      const std::function<void(std::size_t, const Fail&, std::size_t&)>& body) {
    std::vector<std::string> failures(n);
    std::vector<std::size_t> counts(n, 0);
    parallel_for(n, threads, [&](std::size_t x) {
        Fail fail = [&](const std::string& what) {
            if (failures[x].empty()) failures[x] = what;
        };
        body(x, fail, counts[x]);
    });
    SuiteResult r;
    r.name = name;
    for (std::size_t x = 0; x < n; ++x) {
        r.checks += counts[x];
        if (r.passed && !failures[x].empty()) {
            r.passed = false;
            r.failure = failures[x];
        }
    }
    return r;
}

std::vector<int> alternating(int s, int t, int len) {
    std::vector<int> w;
    for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? s : t);
    return w;
}

std::string gen_name(int s) { return "s" + std::to_string(s + 1); }

}  // namespace

SuiteResult check_braid(const Instance& in, unsigned threads) {
    const HeckeModule& mod = in.module;
    return per_basis("braid", mod.dim(), threads, [&](std::size_t x, const Fail& fail, std::size_t& count) {
        const ModuleVector ax = ModuleVector::basis(x);
        for (int s = 0; s < mod.rank(); ++s)
            for (int t = s + 1; t < mod.rank(); ++t) {
                const int order = in.datum.coxeter_order(s, t);
                ++count;
                if (mod.word_act(alternating(s, t, order), ax) != mod.word_act(alternating(t, s, order), ax))
                    fail("braid relation " + gen_name(s) + "," + gen_name(t) + " fails on " + describe_index(in.basis, x));
            }
    });
}

SuiteResult check_quadratic(const Instance& in, unsigned threads) {
    const HeckeModule& mod = in.module;
    const std::vector<PointId> points = in.xbar_points();
    return per_basis("quadratic", mod.dim(), threads, [&](std::size_t x, const Fail& fail, std::size_t& count) {
        const std::string where = describe_index(in.basis, x);
        const ModuleVector ax = ModuleVector::basis(x);
        const PointId l = in.basis[x].lambda;
        for (int s = 0; s < mod.rank(); ++s) {
            const ModuleVector tx = mod.ts_act(s, ax);
            ModuleVector rhs = ax;
            if (mod.delta(s, l)) rhs.add_scaled(tx, laurent::v2_minus_v_inv2());
            ++count;
            if (mod.ts_act(s, tx) != rhs) fail("quadratic relation for " + gen_name(s) + " fails on " + where);
            count += 2;
            if (mod.ts_act(s, mod.ts_inv_act(s, ax)) != ax || mod.ts_inv_act(s, tx) != ax)
                fail("T_s T_s^-1 != 1 for " + gen_name(s) + " on " + where);
            for (PointId p : points) {
                ++count;
                if (mod.ts_act(s, mod.one_lambda(p, ax)) != mod.one_lambda(in.lattice.act_simple(s, p), tx))
                    fail("T_s 1_l != 1_{sl} T_s for " + gen_name(s) + " on " + where);
            }
        }
        for (PointId p : points)
            for (PointId q : points) {
                ++count;
                const ModuleVector lhs = mod.one_lambda(p, mod.one_lambda(q, ax));
                const ModuleVector expect = (p == q && p == l) ? ax : ModuleVector();
                if (lhs != expect) fail("1_l 1_l' != [l = l'] 1_l on " + where);
            }
        ModuleVector total;
        for (PointId p : points) total += mod.one_lambda(p, ax);
        ++count;
        if (total != ax) fail("sum of 1_l is not the identity on " + where);
    });
}

SuiteResult check_oracle(const Instance& in, unsigned threads) {
    const HeckeModule& mod = in.module;
    const WeylGroup& g = in.group;
    const std::vector<PointId> points = in.xbar_points();
    return per_basis("oracle", mod.dim(), threads, [&](std::size_t x, const Fail& fail, std::size_t& count) {
        const std::string where = describe_index(in.basis, x);
        const ModuleVector ax = ModuleVector::basis(x);
        for (PointId l : points)
            for (ElemId w = 0; w < g.size(); ++w) {
                const auto [u, z] = decompose_tw1lambda(in.lattice, w, l);
                ++count;
                if (mod.tw_act(w, mod.one_lambda(l, ax)) != bullet_act(mod, u, z, l, ax))
                    fail("T_w 1_l disagrees with the transport action on " + where);
            }
        const PointId l = in.basis[x].lambda;
        std::set<ElemId> reps;
        for (ElemId w = 0; w < g.size(); ++w) reps.insert(in.lattice.min_coset(w, l));
        for (ElemId z : reps) {
            ++count;
            const ModuleVector moved = bullet_act(mod, g.identity(), z, l, ax);
            if (moved.support_size() != 1 || moved.terms().begin()->second != LaurentPoly(1))
                fail("transport by z is not a basis vector on " + where);
        }
    });
}

SuiteResult check_bar(const Instance& in, const BarOperator& bar, unsigned threads) {
    (void)in;
    const BarReport rep = verify_bar(bar, threads);
    return {"bar", rep.passed, rep.checks, rep.failure};
}

SuiteResult check_canonical_suite(const Instance& in, const BarOperator& bar, std::size_t elimination_cap) {
    SuiteResult r;
    r.name = "canonical";
    auto fail = [&](const std::string& what) {
        if (r.passed) {
            r.passed = false;
            r.failure = what;
        }
    };
    std::map<BasisIndex, ModuleVector> all;
    for (const auto& orbit : in.xbar_orbits()) {
        try {
            const CanonicalBasisTable t1 = canonical_basis(bar, orbit, CanonicalOrder::LengthThenIndex);
            const CanonicalBasisTable t2 = canonical_basis(bar, orbit, CanonicalOrder::LengthThenReverseIndex);
            ++r.checks;
            if (std::string err = check_canonical(bar, t1); !err.empty()) fail(err);
            ++r.checks;
            if (!(t1 == t2)) fail("canonical basis depends on the processing order in orbit of " + in.lattice.point(orbit.front()).to_string());
            for (const auto& [x, hat] : t1.elements) {
                if (in.basis[x].u == in.group.identity()) {
                    ++r.checks;
                    if (hat != ModuleVector::basis(x)) fail("hat a_{z,l} != a_{z,l} at " + describe_index(in.basis, x));
                }
                all.emplace(x, hat);
            }
        } catch (const TriangularityError& e) {
            fail(std::string("triangularity: ") + e.what());
        } catch (const std::logic_error& e) {
            fail(e.what());
        }
    }
    if (r.passed && in.group.size() <= elimination_cap) {
        for (const auto& [x, hat] : lambda0_canonical_by_elimination(in.module)) {
            ++r.checks;
            auto it = all.find(x);
            if (it == all.end() || it->second != hat)
                fail("lambda = 0 canonical basis disagrees with elimination at " + describe_index(in.basis, x));
        }
    }
    return r;
}

SuiteResult check_v1(const Instance& in, unsigned threads) {
    const HeckeModule& mod = in.module;
    std::vector<IntOperator> sigma;
    for (int s = 0; s < mod.rank(); ++s) sigma.push_back(specialize_v1(mod, s));
    auto word = [&](const std::vector<int>& w, IntVectorMap v) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) v = apply_operator(sigma[static_cast<std::size_t>(*it)], v);
        return v;
    };
    return per_basis("v=1", mod.dim(), threads, [&](std::size_t x, const Fail& fail, std::size_t& count) {
        const IntVectorMap ex{{x, 1}};
        for (int s = 0; s < mod.rank(); ++s) {
            ++count;
            if (apply_operator(sigma[static_cast<std::size_t>(s)], apply_operator(sigma[static_cast<std::size_t>(s)], ex)) != ex)
                fail("sigma_s^2 != 1 for " + gen_name(s) + " on " + describe_index(in.basis, x));
            ++count;
            if (specialize_v1(mod.ts_act(s, ModuleVector::basis(x))) != apply_operator(sigma[static_cast<std::size_t>(s)], ex))
                fail("v = 1 table disagrees with the module for " + gen_name(s));
            for (int t = s + 1; t < mod.rank(); ++t) {
                const int order = in.datum.coxeter_order(s, t);
                ++count;
                if (word(alternating(s, t, order), ex) != word(alternating(t, s, order), ex))
                    fail("braid relation at v = 1 fails on " + describe_index(in.basis, x));
            }
        }
    });
}

SuiteResult check_bijection(const Instance& in) {
    SuiteResult r;
    r.name = "bijection";
    auto fail = [&](const std::string& what) {
        if (r.passed) {
            r.passed = false;
            r.failure = what;
        }
    };
    const WeylGroup& g = in.group;
    std::size_t total = 0;
    std::set<std::size_t> hit;
    for (const Block& b : in.basis.blocks()) {
        const Block direct = block_involutions(in.lattice, in.basis.m(), b.z, b.lambda);
        ++r.checks;
        if (direct.members != b.members) fail("I_{z,l} differs from a direct search at " + in.lattice.point(b.lambda).to_string());
        total += direct.members.size();
        for (ElemId u : direct.members) {
            ++r.checks;
            auto idx = in.basis.find(g.mul(b.z, u), b.lambda);
            if (!idx) fail("(zu, l) is not an m-twisted involution");
            else if (!hit.insert(*idx).second) fail("(block, u) -> (zu, l) is not injective");
        }
    }
    ++r.checks;
    if (total != in.basis.size() || hit.size() != in.basis.size())
        fail("sum of |I_{z,l}| = " + std::to_string(total) + " but |Xtilde_m| = " + std::to_string(in.basis.size()));
    return r;
}

SuiteResult check_signs(const Instance& in) {
    SuiteResult r;
    r.name = "signs";
    const WeylGroup& g = in.group;
    for (std::size_t x = 0; x < in.basis.size(); ++x) {
        const TwistedInvolution& ti = in.basis[x];
        for (int s = 0; s < g.rank(); ++s) {
            const ElemId sw = g.left_mul_simple(s, ti.w);
            const ElemId sws = g.right_mul_simple(sw, s);
            ++r.checks;
            const std::size_t y = in.basis.index(sws, in.lattice.act_simple(s, ti.lambda));
            if (in.basis[y].sign != ti.sign && r.passed) {
                r.passed = false;
                r.failure = "E(sws, sl) != E(w, l) at " + describe_index(in.basis, x);
            }
            if (sw == g.right_mul_simple(ti.w, s) && in.lattice.simple_in_little(s, ti.lambda)) {
                ++r.checks;
                const std::size_t z = in.basis.index(g.right_mul_simple(ti.w, s), ti.lambda);
                if (in.basis[z].sign != -ti.sign && r.passed) {
                    r.passed = false;
                    r.failure = "E(ws, l) != -E(w, l) at " + describe_index(in.basis, x);
                }
            }
        }
    }
    return r;
}

SuiteResult check_lv_sector(const Instance& in) {
    SuiteResult r;
    r.name = "lv-sector";
    auto fail = [&](const std::string& what) {
        if (r.passed) {
            r.passed = false;
            r.failure = what;
        }
    };
    const PointId zero = in.lattice.zero();
    const auto block = in.basis.find_block(in.group.identity(), zero);
    ++r.checks;
    if (!block) {
        fail("no block (1, 0)");
        return r;
    }
    const auto& simples = in.lattice.little_weyl(zero).simples;
    ++r.checks;
    if (simples.size() != static_cast<std::size_t>(in.group.rank())) fail("W_0 is not all of W");
    for (std::size_t x = 0; x < in.basis.size(); ++x) {
        if (in.basis[x].lambda != zero) continue;
        ++r.checks;
        if (in.basis[x].block != *block) fail("a_{w,0} outside block (1, 0)");
        for (int s = 0; s < in.group.rank(); ++s) {
            const ModuleVector direct = in.module.ts_act(s, ModuleVector::basis(x));
            ++r.checks;
            for (const auto& [y, c] : direct.terms())
                if (in.basis[y].lambda != zero) fail("T_s leaves the lambda = 0 span at " + describe_index(in.basis, x));
            ++r.checks;
            if (!in.module.delta(s, zero)) fail("D != 1 at lambda = 0");
            ++r.checks;
            if (direct != lv_circle_act(in.module, *block, simples[static_cast<std::size_t>(s)], ModuleVector::basis(x)))
                fail("lambda = 0 action differs from the block action at " + describe_index(in.basis, x));
        }
    }
    return r;
}

}  // namespace hecke
