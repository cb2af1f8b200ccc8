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


#include <doctest.h>

#include "hecke/bar.hpp"
#include "support.hpp"

using namespace hecke;
using hecke::testing::a;
using hecke::testing::idx;
using hecke::testing::pt;
using hecke::testing::v;
using hecke::testing::vi;

namespace {

std::vector<PointId> orbit_of(const Instance& in, PointId p) {
    for (const auto& o : in.xbar_orbits())
        if (std::find(o.begin(), o.end(), p) != o.end()) return o;
    return {};
}

}  // namespace

TEST_CASE("bar operator examples") {
    auto in = Instance::build("A1", 2, 3);
    const Instance& I = *in;
    const BarOperator B(I.module);
    CHECK(B.apply(a(I, {}, "0")) == a(I, {}, "0"));
    CHECK(B.apply(a(I, {1}, "0")) == a(I, {1}, "0") - (v() - vi()) * a(I, {}, "0"));
    // -2 * 1/3 = 1/3 mod 1, so (1, 1/3) is fixed
    CHECK(B.apply(a(I, {}, "1/3")) == a(I, {}, "1/3"));
    CHECK(B.apply(v() * a(I, {}, "0")) == vi() * a(I, {}, "0"));

    auto b = Instance::build("A1", 1, 2);
    const BarOperator B1(b->module);
    CHECK(B1.apply(a(*b, {1}, "1/2")) == a(*b, {1}, "1/2"));

    auto c = Instance::build("A1", 1, 1);
    const BarOperator B0(c->module);
    CHECK(verify_bar(B0).passed);
    CHECK(B0.apply(a(*c, {}, "0")) == a(*c, {}, "0"));
}

TEST_CASE("verify_bar on small instances") {
    for (auto [type, m, N] : std::vector<std::tuple<const char*, int, int>>{{"A1", 2, 3}, {"A2", 1, 2}, {"A1", 1, 1}, {"B2", 3, 8}}) {
        CAPTURE(type);
        auto in = Instance::build(type, m, N);
        const BarOperator B(in->module, 2);
        const BarReport r = verify_bar(B, 2);
        CHECK_MESSAGE(r.passed, r.failure);
        CHECK(r.checks > 0);
        for (const auto& o : in->xbar_orbits()) CHECK(bar_matrix(B, o).squares_to_identity());
    }
}

TEST_CASE("bar matrix rejects a non-stable point set") {
    auto in = Instance::build("A1", 2, 3);
    const BarOperator B(in->module);
    CHECK_THROWS_AS(bar_matrix(B, {pt(in->lattice, "1/3")}), std::invalid_argument);
    const BarMatrix mat = bar_matrix(B, {in->lattice.zero()});
    CHECK(mat.index.size() == 2);
    CHECK(mat.squares_to_identity());
}

TEST_CASE("canonical basis examples") {
    auto in = Instance::build("A1", 2, 3);
    const Instance& I = *in;
    const BarOperator B(I.module);
    const CanonicalBasisTable t = canonical_basis(B, {I.lattice.zero()});
    CHECK(t.elements.at(idx(I, {1}, "0")) == a(I, {1}, "0") + vi() * a(I, {}, "0"));
    CHECK(t.elements.at(idx(I, {}, "0")) == a(I, {}, "0"));
    CHECK(check_canonical(B, t).empty());
    const CanonicalBasisTable t3 = canonical_basis(B, orbit_of(I, pt(I.lattice, "1/3")));
    CHECK(t3.elements.at(idx(I, {}, "1/3")) == a(I, {}, "1/3"));
    CHECK(t3.elements.at(idx(I, {}, "2/3")) == a(I, {}, "2/3"));

    auto b = Instance::build("A1", 1, 2);
    const BarOperator B1(b->module);
    const CanonicalBasisTable th = canonical_basis(B1, orbit_of(*b, pt(b->lattice, "1/2")));
    CHECK(th.elements.at(idx(*b, {1}, "1/2")) == a(*b, {1}, "1/2"));
}

TEST_CASE("check_canonical detects a corrupted table") {
    auto in = Instance::build("A2", 1, 1);
    const BarOperator B(in->module);
    CanonicalBasisTable t = canonical_basis(B, {in->lattice.zero()});
    REQUIRE(check_canonical(B, t).empty());
    auto it = std::prev(t.elements.end());
    CanonicalBasisTable bad = t;
    bad.elements[it->first].add(t.index.front(), v());
    CHECK_FALSE(check_canonical(B, bad).empty());
    bad = t;
    bad.elements[it->first].add(t.index.front(), vi());
    CHECK_FALSE(check_canonical(B, bad).empty());
}

TEST_CASE("property: B is semilinear and involutive on random vectors") {
    hecke::testing::Gen gen(7);
    for (auto [type, m, N] : std::vector<std::tuple<const char*, int, int>>{{"A2", 2, 3}, {"B2", 1, 2}, {"G2", 1, 2}}) {
        CAPTURE(type);
        auto in = Instance::build(type, m, N);
        const BarOperator B(in->module);
        for (int trial = 0; trial < 80; ++trial) {
            const ModuleVector x = gen.vector(in->module.dim()), y = gen.vector(in->module.dim());
            const LaurentPoly c = gen.laurent();
            CHECK(B.apply(x + c * y) == B.apply(x) + c.bar() * B.apply(y));
            CHECK(B.apply(B.apply(x)) == x);
            const int s = gen.integer(0, in->module.rank() - 1);
            CHECK(B.apply(in->module.ts_act(s, x)) == in->module.ts_inv_act(s, B.apply(x)));
        }
    }
}

TEST_CASE("property: canonical basis is order independent and matches elimination at lambda = 0") {
    for (auto [type, m, N] : std::vector<std::tuple<const char*, int, int>>{{"A1xA1", 1, 2}, {"A2", 2, 3}, {"B2", 1, 4}, {"G2", 3, 2}, {"A3", 1, 1}}) {
        CAPTURE(type);
        auto in = Instance::build(type, m, N);
        const BarOperator B(in->module);
        for (const auto& o : in->xbar_orbits()) {
            const CanonicalBasisTable t = canonical_basis(B, o);
            CHECK(check_canonical(B, t).empty());
            CHECK(t == canonical_basis(B, o, CanonicalOrder::LengthThenReverseIndex));
        }
        const auto oracle = lambda0_canonical_by_elimination(in->module);
        const CanonicalBasisTable t0 = canonical_basis(B, {in->lattice.zero()});
        CHECK(oracle.size() == t0.elements.size());
        for (const auto& [x, hat] : oracle) CHECK(t0.elements.at(x) == hat);
        // hat a_{z,l} = a_{z,l} on Xtilde_m^0
        for (const auto& blk : in->basis.blocks()) {
            const BasisIndex x = in->basis.index(blk.z, blk.lambda);
            const CanonicalBasisTable t = canonical_basis(B, orbit_of(*in, blk.lambda));
            CHECK(t.elements.at(x) == ModuleVector::basis(x));
        }
    }
}
