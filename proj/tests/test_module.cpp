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

#include "hecke/transport.hpp"
#include "support.hpp"

using namespace hecke;
using hecke::testing::a;
using hecke::testing::elem;
using hecke::testing::idx;
using hecke::testing::pt;
using hecke::testing::v;
using hecke::testing::vi;

namespace {

const LaurentPoly one(1);

}  // namespace

TEST_CASE("generator action examples") {
    auto in = Instance::build("A1", 2, 3);
    const HeckeModule& M = in->module;
    const Instance& I = *in;
    CHECK(M.ts_act(0, a(I, {}, "0")) == a(I, {}, "0") + (v() + vi()) * a(I, {1}, "0"));
    CHECK(M.ts_act(0, a(I, {}, "1/3")) == a(I, {}, "2/3"));
    CHECK(M.ts_act(0, a(I, {1}, "0")) == (v() - vi()) * a(I, {}, "0") + (v() * v() - vi() * vi() - one) * a(I, {1}, "0"));

    CHECK(M.ts_inv_act(0, a(I, {}, "1/3")) == a(I, {}, "2/3"));
    CHECK(M.ts_inv_act(0, a(I, {1}, "0")) == (v() - vi()) * a(I, {}, "0") - a(I, {1}, "0"));

    CHECK(M.action_case(0, idx(I, {}, "0")) == ActionCase::CommutingUp);
    CHECK(M.action_case(0, idx(I, {1}, "0")) == ActionCase::CommutingDown);
    CHECK(M.delta(0, pt(I.lattice, "0")));
    CHECK_FALSE(M.delta(0, pt(I.lattice, "1/3")));
    CHECK_THROWS_AS(M.ts_act(1, a(I, {}, "0")), std::out_of_range);
}

TEST_CASE("non-commuting cases") {
    auto in = Instance::build("A2", 1, 1);
    const Instance& I = *in;
    const HeckeModule& M = in->module;
    // s1 . s2 != s2 . s1 and |s1 s2| > |s2|: case (a) sends a_{s2} to a_{s1 s2 s1}
    CHECK(M.action_case(0, idx(I, {2}, "0,0")) == ActionCase::NonCommutingUp);
    CHECK(M.ts_act(0, a(I, {2}, "0,0")) == a(I, {1, 2, 1}, "0,0"));
    CHECK(M.action_case(0, idx(I, {1, 2, 1}, "0,0")) == ActionCase::NonCommutingDown);
    CHECK(M.ts_act(0, a(I, {1, 2, 1}, "0,0")) == a(I, {2}, "0,0") + (v() * v() - vi() * vi()) * a(I, {1, 2, 1}, "0,0"));
}

TEST_CASE("words, idempotents and specialisation") {
    auto in = Instance::build("A2", 1, 1);
    const Instance& I = *in;
    const HeckeModule& M = in->module;
    const ModuleVector x = a(I, {}, "0,0");
    CHECK(M.tw_act(I.group.identity(), x) == x);
    CHECK(M.tw_act(elem(I.group, {1, 2}), x) == M.word_act({0, 1}, x));
    CHECK(M.word_act({0, 1, 0}, x) == M.word_act({1, 0, 1}, x));
    CHECK(M.tw_inv_act(elem(I.group, {1, 2}), M.tw_act(elem(I.group, {1, 2}), x)) == x);

    auto b = Instance::build("A1", 2, 3);
    const Instance& J = *b;
    CHECK(J.module.one_lambda(pt(J.lattice, "0"), a(J, {1}, "0")) == a(J, {1}, "0"));
    CHECK(J.module.one_lambda(pt(J.lattice, "1/3"), a(J, {1}, "0")).is_zero());

    // case (c) at v = 1: a_{w,sl} + 2 a_{sw,l}; case (d): a_{w,sl} - 2 a_{w,l} with sl = l
    const IntOperator sigma = specialize_v1(J.module, 0);
    CHECK(apply_operator(sigma, {{idx(J, {}, "0"), 1}}) == IntVectorMap{{idx(J, {}, "0"), 1}, {idx(J, {1}, "0"), 2}});
    CHECK(apply_operator(sigma, {{idx(J, {1}, "0"), 1}}) == IntVectorMap{{idx(J, {1}, "0"), -1}});
    CHECK(apply_operator(sigma, {{idx(J, {}, "1/3"), 1}}) == IntVectorMap{{idx(J, {}, "2/3"), 1}});
    CHECK(specialize_v1((v() + vi()) * a(J, {}, "0") + (v() * v() - vi() * vi()) * a(J, {1}, "0")) ==
          IntVectorMap{{idx(J, {}, "0"), 2}});

    auto c = Instance::build("A2", 1, 1);
    const IntOperator s1 = specialize_v1(c->module, 0);
    CHECK(apply_operator(s1, {{idx(*c, {2}, "0,0"), 1}}) == IntVectorMap{{idx(*c, {1, 2, 1}, "0,0"), 1}});
    CHECK(describe_index(J.basis, idx(J, {1}, "0")) == "a[s1,(0/1)]");
}

TEST_CASE("block action examples") {
    auto in = Instance::build("A1", 2, 3);
    const Instance& I = *in;
    const std::size_t blk = *I.basis.find_block(I.group.identity(), I.lattice.zero());
    CHECK(lv_circle_act(I.module, blk, 0, a(I, {}, "0")) == a(I, {}, "0") + (v() + vi()) * a(I, {1}, "0"));
    CHECK(lv_circle_act(I.module, blk, 0, a(I, {1}, "0")) ==
          (v() - vi()) * a(I, {}, "0") + (v() * v() - vi() * vi() - one) * a(I, {1}, "0"));
    CHECK(lv_circle_act(I.module, blk, 0, ModuleVector()).is_zero());
    CHECK_THROWS_AS(lv_circle_act(I.module, blk, 0, a(I, {}, "1/3")), std::invalid_argument);
    const std::size_t third = *I.basis.find_block(I.group.identity(), pt(I.lattice, "1/3"));
    CHECK_THROWS_AS(lv_circle_act(I.module, third, 0, a(I, {}, "1/3")), std::invalid_argument);
}

TEST_CASE("transport examples") {
    auto in = Instance::build("A1", 2, 3);
    const Instance& I = *in;
    const ElemId e = I.group.identity(), s = I.group.simple(0);
    const PointId third = pt(I.lattice, "1/3");
    CHECK(bullet_act(I.module, e, e, third, a(I, {}, "1/3")) == a(I, {}, "1/3"));
    CHECK(bullet_act(I.module, e, e, I.lattice.zero(), a(I, {1}, "0")) == a(I, {1}, "0"));
    CHECK(bullet_act(I.module, e, s, third, a(I, {}, "1/3")) == a(I, {}, "2/3"));
    CHECK(bullet_act(I.module, e, s, third, a(I, {}, "2/3")).is_zero());
    CHECK(bullet_act(I.module, s, e, I.lattice.zero(), a(I, {}, "0")) == I.module.ts_act(0, a(I, {}, "0")));
    CHECK_THROWS_AS(bullet_act(I.module, e, s, I.lattice.zero(), a(I, {}, "0")), std::invalid_argument);
    CHECK_THROWS_AS(bullet_act(I.module, s, s, third, a(I, {}, "1/3")), std::invalid_argument);

    CHECK(decompose_tw1lambda(I.lattice, s, I.lattice.zero()) == std::pair<ElemId, ElemId>{s, e});
    CHECK(decompose_tw1lambda(I.lattice, s, third) == std::pair<ElemId, ElemId>{e, s});

    auto b = Instance::build("A2", 1, 2);
    const WeylGroup& g = b->group;
    const PointId l = pt(b->lattice, "0,1/2");
    const auto [u, z] = decompose_tw1lambda(b->lattice, elem(g, {2, 1}), l);
    CHECK(z == elem(g, {2}));
    CHECK(u == elem(g, {2, 1, 2}));
    CHECK(b->lattice.in_little_weyl(u, b->lattice.act(z, l)));
    CHECK(b->lattice.act(z, l) == pt(b->lattice, "1/2,1/2"));
}

TEST_CASE("property: linearity and inverse on random vectors") {
    hecke::testing::Gen gen(2026);
    for (auto [type, m, N] : std::vector<std::tuple<const char*, int, int>>{{"A2", 2, 3}, {"B2", 1, 4}, {"G2", 3, 2}, {"A1xA1", 2, 6}}) {
        CAPTURE(type);
        auto in = Instance::build(type, m, N);
        const HeckeModule& M = in->module;
        for (int trial = 0; trial < 60; ++trial) {
            const ModuleVector x = gen.vector(M.dim()), y = gen.vector(M.dim());
            const LaurentPoly c = gen.laurent();
            const int s = gen.integer(0, M.rank() - 1);
            CHECK(M.ts_act(s, x + c * y) == M.ts_act(s, x) + c * M.ts_act(s, y));
            CHECK(M.ts_inv_act(s, M.ts_act(s, x)) == x);
            CHECK(M.ts_act(s, M.ts_inv_act(s, x)) == x);
            const auto word = gen.word(M.rank(), 6);
            const ElemId w = in->group.from_word(word);
            CHECK(M.tw_inv_act(w, M.tw_act(w, x)) == x);
            ModuleVector sum;
            for (PointId l = 0; l < in->lattice.size(); ++l) sum += M.one_lambda(l, x);
            CHECK(sum == x);
            // the specialisation is a ring homomorphism on coefficients
            IntVectorMap lhs = specialize_v1(M.ts_act(s, x));
            CHECK(lhs == apply_operator(specialize_v1(M, s), specialize_v1(x)));
        }
    }
}

TEST_CASE("property: T_w 1_lambda agrees with block transport") {
    for (auto [type, m, N] : std::vector<std::tuple<const char*, int, int>>{{"A2", 1, 2}, {"B2", 2, 3}, {"G2", 1, 2}, {"A1xA1", 3, 4}}) {
        CAPTURE(type);
        auto in = Instance::build(type, m, N);
        const HeckeModule& M = in->module;
        for (ElemId w = 0; w < in->group.size(); ++w)
            for (BasisIndex x = 0; x < M.dim(); ++x) {
                const PointId l = in->basis[x].lambda;
                const auto [u, z] = decompose_tw1lambda(in->lattice, w, l);
                const ModuleVector ax = ModuleVector::basis(x);
                CHECK(M.tw_act(w, M.one_lambda(l, ax)) == bullet_act(M, u, z, l, ax));
                const ModuleVector moved = bullet_act(M, in->group.identity(), z, l, ax);
                CHECK(moved.support_size() == 1);
                CHECK(moved.terms().begin()->second == one);
            }
    }
}
