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

#include "hecke/finite_field.hpp"

#include <functional>
#include <stdexcept>

namespace hecke {

bool is_odd_prime(int q) {
    if (q < 3 || q % 2 == 0) return false;
    for (int d = 3; d * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

GaloisField::GaloisField(int q) : q_(q), r_(0) {
    if (!is_odd_prime(q) || q > kMaxPrime) throw std::invalid_argument("GaloisField: q must be an odd prime <= 101");
    std::vector<bool> square(static_cast<std::size_t>(q), false);
    for (int t = 1; t < q; ++t) square[static_cast<std::size_t>(t * t % q)] = true;
    for (int t = 2; t < q; ++t)
        if (!square[static_cast<std::size_t>(t)]) {
            r_ = t;
            break;
        }
    if (r_ == 0) throw std::logic_error("GaloisField: no quadratic non-residue");
}

GaloisField::Elt GaloisField::element(std::size_t i) const {
    if (i >= size()) throw std::out_of_range("GaloisField::element");
    return {static_cast<int>(i % static_cast<std::size_t>(q_)), static_cast<int>(i / static_cast<std::size_t>(q_))};
}

GaloisField::Elt GaloisField::mul(Elt a, Elt b) const {
    const std::int64_t c0 = static_cast<std::int64_t>(a.c0) * b.c0 + static_cast<std::int64_t>(r_) * a.c1 * b.c1;
    const std::int64_t c1 = static_cast<std::int64_t>(a.c0) * b.c1 + static_cast<std::int64_t>(a.c1) * b.c0;
    return {mod(c0), mod(c1)};
}

GaloisField::Elt GaloisField::pow(Elt a, std::uint64_t e) const {
    Elt result = one();
    while (e) {
        if (e & 1u) result = mul(result, a);
        a = mul(a, a);
        e >>= 1u;
    }
    return result;
}

GaloisField::Elt GaloisField::inv(Elt a) const {
    if (a == zero()) throw std::domain_error("GaloisField: inverse of zero");
    return pow(a, size() - 2);
}

std::string GaloisField::to_string(Elt a) const {
    if (a.c1 == 0) return std::to_string(a.c0);
    std::string s = a.c0 ? std::to_string(a.c0) + "+" : "";
    return s + (a.c1 == 1 ? "" : std::to_string(a.c1)) + "x";
}

namespace {

bool trace_zero(const GaloisField& f, GaloisField::Elt a) { return f.add(f.frobenius(a), a) == f.zero(); }

template <class Pred>
std::size_t count_if(const GaloisField& f, Pred pred) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (pred(f.element(i))) ++n;
    return n;
}

}  // namespace

CountResult count_identity_e(const GaloisField& f, GaloisField::Elt a, GaloisField::Elt b) {
    if (a == f.zero() || !trace_zero(f, a) || !trace_zero(f, b))
        throw std::invalid_argument("count_identity_e: need a != 0, a^q + a = 0, b^q + b = 0");
    const auto ainv = f.inv(a);
    const std::uint64_t e = static_cast<std::uint64_t>(f.q()) + 1;
    CountResult r;
    r.count = count_if(f, [&](GaloisField::Elt d) { return f.sub(f.mul(f.pow(d, e), a), ainv) == b; });
    r.expected = 1 + (a == b ? 0 : static_cast<std::size_t>(f.q()));
    return r;
}

std::vector<GaloisField::Elt> solutions_identity_f(const GaloisField& f, GaloisField::Elt a, GaloisField::Elt b) {
    if (f.pow(a, static_cast<std::uint64_t>(f.q()) + 1) != f.one() || !trace_zero(f, b))
        throw std::invalid_argument("count_identity_f: need a'^{q+1} = 1, b^q + b = 0");
    const auto ainv = f.inv(a);
    std::vector<GaloisField::Elt> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto d = f.element(i);
        if (f.add(f.neg(f.mul(a, f.frobenius(d))), f.mul(ainv, d)) == b) out.push_back(d);
    }
    return out;
}

CountResult count_identity_f(const GaloisField& f, GaloisField::Elt a, GaloisField::Elt b) {
    return {solutions_identity_f(f, a, b).size(), static_cast<std::size_t>(f.q())};
}

namespace {

IdentitySweep sweep(const GaloisField& f, const std::string& name, const std::function<bool(GaloisField::Elt)>& first_ok,
                    const std::function<CountResult(GaloisField::Elt, GaloisField::Elt)>& run) {
    IdentitySweep s;
    s.identity = name;
    s.q = f.q();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto a = f.element(i);
        if (!first_ok(a)) continue;
        for (std::size_t j = 0; j < f.size(); ++j) {
            const auto b = f.element(j);
            if (!trace_zero(f, b)) continue;
            ++s.pairs;
            const CountResult r = run(a, b);
            if (!r.holds()) {
                if (s.failures == 0)
                    s.first_failure = "a=" + f.to_string(a) + " b=" + f.to_string(b) + ": count " + std::to_string(r.count) +
                                      ", expected " + std::to_string(r.expected);
                ++s.failures;
            }
        }
    }
    return s;
}

}  // namespace

IdentitySweep sweep_identity_e(const GaloisField& f) {
    return sweep(
        f, "e", [&](GaloisField::Elt a) { return a != f.zero() && trace_zero(f, a); },
        [&](GaloisField::Elt a, GaloisField::Elt b) { return count_identity_e(f, a, b); });
}

IdentitySweep sweep_identity_f(const GaloisField& f) {
    return sweep(
        f, "f", [&](GaloisField::Elt a) { return f.pow(a, static_cast<std::uint64_t>(f.q()) + 1) == f.one(); },
        [&](GaloisField::Elt a, GaloisField::Elt b) { return count_identity_f(f, a, b); });
}

IdentitySweep sweep_identity_e_norm_form(const GaloisField& f) {
    return sweep(
        f, "e (norm form)", [&](GaloisField::Elt a) { return a != f.zero() && trace_zero(f, a); },
        [&](GaloisField::Elt a, GaloisField::Elt b) {
            CountResult r = count_identity_e(f, a, b);
            r.expected = 1 + (b == f.neg(f.inv(a)) ? 0 : static_cast<std::size_t>(f.q()));
            return r;
        });
}

}  // namespace hecke
