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

#include <set>

#include "hecke/finite_field.hpp"
#include "support.hpp"

using namespace hecke;
using Elt = GaloisField::Elt;

namespace {

// Independent count by a direct loop over F_{q^2}.
std::size_t brute_e(const GaloisField& f, Elt a, Elt b) {
    std::size_t n = 0;
    const Elt ainv = f.inv(a);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Elt d = f.element(i);
        Elt p = f.one();
        for (int k = 0; k <= f.q(); ++k) p = f.mul(p, d);
        if (f.sub(f.mul(p, a), ainv) == b) ++n;
    }
    return n;
}

bool trace_zero(const GaloisField& f, Elt a) { return f.add(f.frobenius(a), a) == f.zero(); }

}  // namespace

TEST_CASE("field construction examples") {
    CHECK(GaloisField(3).nonresidue() == 2);
    CHECK(GaloisField(5).nonresidue() == 2);
    CHECK(GaloisField(7).nonresidue() == 3);
    CHECK(GaloisField(11).nonresidue() == 2);
    CHECK(GaloisField(3).size() == 9);
    for (int bad : {2, 4, 9, 1, 0, -3, 103}) CHECK_THROWS_AS(GaloisField{bad}, std::invalid_argument);
    CHECK(is_odd_prime(101));
    CHECK_FALSE(is_odd_prime(2));
    const GaloisField f(3);
    CHECK(f.mul(f.gen(), f.gen()) == f.scalar(-1));
    CHECK(f.to_string(f.gen()) == "x");
    CHECK(f.to_string({2, 1}) == "2+x");
    CHECK(f.to_string(f.zero()) == "0");
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
}

TEST_CASE("property: field axioms and Frobenius, exhaustive for small q") {
    for (int q : {3, 5, 7, 11}) {
        CAPTURE(q);
        const GaloisField f(q);
        CHECK(f.mul(f.gen(), f.gen()) == f.scalar(f.nonresidue()));
        std::size_t fixed = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const Elt a = f.element(i);
            CHECK(f.index(a) == i);
            CHECK(f.add(a, f.neg(a)) == f.zero());
            if (!(a == f.zero())) {
                CHECK(f.mul(a, f.inv(a)) == f.one());
                CHECK(f.pow(a, f.size() - 1) == f.one());
            }
            const bool fix = f.frobenius(a) == a;
            CHECK(fix == f.in_prime_field(a));
            if (fix) ++fixed;
            CHECK(f.frobenius(f.frobenius(a)) == a);
        }
        CHECK(fixed == static_cast<std::size_t>(q));
        hecke::testing::Gen gen(static_cast<std::uint64_t>(q));
        const int top = static_cast<int>(f.size()) - 1;
        for (int trial = 0; trial < 300; ++trial) {
            const Elt a = f.element(static_cast<std::size_t>(gen.integer(0, top)));
            const Elt b = f.element(static_cast<std::size_t>(gen.integer(0, top)));
            const Elt c = f.element(static_cast<std::size_t>(gen.integer(0, top)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
            CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        }
    }
}

TEST_CASE("identity (e) examples at q = 3") {
    const GaloisField f(3);
    const Elt i = f.gen();
    const CountResult same = count_identity_e(f, i, i);
    CHECK(same.count == 1);
    CHECK(same.expected == 1);
    const CountResult opp = count_identity_e(f, i, f.neg(i));
    CHECK(opp.count == 4);
    CHECK(opp.expected == 4);
    CHECK_THROWS_AS(count_identity_e(f, f.zero(), i), std::invalid_argument);
    CHECK_THROWS_AS(count_identity_e(f, f.one(), i), std::invalid_argument);
    CHECK_THROWS_AS(count_identity_e(f, i, f.one()), std::invalid_argument);
    CHECK(sweep_identity_e(f).passed());
}

TEST_CASE("identity (e) counts against a direct loop and the norm map") {
    for (int q : {3, 5, 7, 11}) {
        CAPTURE(q);
        const GaloisField f(q);
        std::size_t pairs = 0;
        std::size_t stated_failures = 0;
        for (std::size_t ia = 0; ia < f.size(); ++ia)
            for (std::size_t ib = 0; ib < f.size(); ++ib) {
                const Elt a = f.element(ia), b = f.element(ib);
                if (a == f.zero() || !trace_zero(f, a) || !trace_zero(f, b)) continue;
                ++pairs;
                const CountResult r = count_identity_e(f, a, b);
                CHECK(r.count == brute_e(f, a, b));
                // d -> d^{q+1} maps onto F_q with fibres of size q + 1 over nonzero values, so the
                // count is 1 exactly when a^{-1} + b = 0.
                const bool single = f.add(f.inv(a), b) == f.zero();
                CHECK(r.count == (single ? 1u : 1u + static_cast<std::size_t>(q)));
                if (!r.holds()) ++stated_failures;
            }
        CHECK(pairs == static_cast<std::size_t>(q * (q - 1)));
        const IdentitySweep s = sweep_identity_e(f);
        CHECK(s.pairs == pairs);
        CHECK(s.failures == stated_failures);
        CHECK(sweep_identity_e_norm_form(f).passed());
    }
    // the stated expectation and the norm-map count agree only at q = 3
    CHECK(sweep_identity_e(GaloisField(3)).failures == 0);
    CHECK(sweep_identity_e(GaloisField(5)).failures == 8);
    CHECK(sweep_identity_e(GaloisField(7)).failures == 8);
    CHECK(sweep_identity_e(GaloisField(11)).failures == 16);
}

TEST_CASE("identity (f) examples and solution structure") {
    const GaloisField f3(3);
    CHECK(count_identity_f(f3, f3.one(), f3.zero()).count == 3);
    CHECK(count_identity_f(f3, f3.one(), f3.zero()).expected == 3);
    CHECK(count_identity_f(f3, f3.scalar(-1), f3.zero()).count == 3);
    CHECK(count_identity_f(f3, f3.scalar(-1), f3.zero()).holds());
    CHECK_THROWS_AS(count_identity_f(f3, Elt{1, 1}, f3.zero()), std::invalid_argument);
    CHECK_THROWS_AS(count_identity_f(f3, f3.one(), f3.one()), std::invalid_argument);

    // a' = 1, b = 0: -d^q + d = 0 exactly on the prime field
    std::vector<Elt> sol = solutions_identity_f(f3, f3.one(), f3.zero());
    CHECK(sol == std::vector<Elt>{f3.zero(), f3.one(), f3.scalar(2)});

    hecke::testing::Gen gen(77);
    for (int q : {3, 5, 7, 11}) {
        CAPTURE(q);
        const GaloisField f(q);
        CHECK(sweep_identity_f(f).passed());
        std::vector<Elt> units, traceless;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const Elt x = f.element(i);
            if (f.mul(f.frobenius(x), x) == f.one()) units.push_back(x);
            if (trace_zero(f, x)) traceless.push_back(x);
        }
        CHECK(units.size() == static_cast<std::size_t>(q + 1));
        CHECK(traceless.size() == static_cast<std::size_t>(q));
        for (int trial = 0; trial < 20; ++trial) {
            const Elt a = units[static_cast<std::size_t>(gen.integer(0, q))];
            const Elt b = traceless[static_cast<std::size_t>(gen.integer(0, q - 1))];
            const auto s = solutions_identity_f(f, a, b);
            CHECK(s.size() == static_cast<std::size_t>(q));
            // solutions form a coset of the solutions with b = 0
            const auto h = solutions_identity_f(f, a, f.zero());
            std::set<std::size_t> shifted, expect;
            for (const Elt& d : h) shifted.insert(f.index(f.add(d, s.front())));
            for (const Elt& d : s) expect.insert(f.index(d));
            CHECK(shifted == expect);
        }
    }
}
