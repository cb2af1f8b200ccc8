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

#ifndef HECKE_FINITE_FIELD_HPP
#define HECKE_FINITE_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

/// F_{q^2} = F_q[x]/(x^2 - r) for an odd prime q, r the least quadratic non-residue mod q.
class GaloisField {
public:
    static constexpr int kMaxPrime = 101;

    /// An element c0 + c1 x with 0 <= c0, c1 < q.
    struct Elt {
        int c0 = 0;
        int c1 = 0;
        friend bool operator==(const Elt&, const Elt&) = default;
    };

    /// Throws std::invalid_argument unless q is an odd prime <= kMaxPrime.
    explicit GaloisField(int q);

    int q() const { return q_; }
    int nonresidue() const { return r_; }
    std::size_t size() const { return static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_); }

    Elt zero() const { return {0, 0}; }
    Elt one() const { return {1, 0}; }
    Elt gen() const { return {0, 1}; }
    Elt scalar(std::int64_t k) const { return {mod(k), 0}; }
    /// Elements in the order c0 + q c1.
    Elt element(std::size_t i) const;
    std::size_t index(Elt a) const { return static_cast<std::size_t>(a.c0) + static_cast<std::size_t>(q_) * static_cast<std::size_t>(a.c1); }

    Elt add(Elt a, Elt b) const { return {mod(a.c0 + b.c0), mod(a.c1 + b.c1)}; }
    Elt sub(Elt a, Elt b) const { return {mod(a.c0 - b.c0), mod(a.c1 - b.c1)}; }
    Elt neg(Elt a) const { return {mod(-a.c0), mod(-a.c1)}; }
    Elt mul(Elt a, Elt b) const;
    Elt pow(Elt a, std::uint64_t e) const;
    /// Throws std::domain_error for zero.
    Elt inv(Elt a) const;
    Elt frobenius(Elt a) const { return pow(a, static_cast<std::uint64_t>(q_)); }
    bool in_prime_field(Elt a) const { return a.c1 == 0; }

    std::string to_string(Elt a) const;

private:
    int mod(std::int64_t k) const { return static_cast<int>(((k % q_) + q_) % q_); }

    int q_;
    int r_;
};

bool is_odd_prime(int q);

struct CountResult {
    std::size_t count = 0;
    std::size_t expected = 0;
    bool holds() const { return count == expected; }
};

/// #{d : d^{q+1} a - a^{-1} = b} against 1 + (1 - [a = b]) q.
/// Requires a != 0, a^q + a = 0, b^q + b = 0; throws std::invalid_argument otherwise.
CountResult count_identity_e(const GaloisField& f, GaloisField::Elt a, GaloisField::Elt b);

/// #{d : -a' d^q + a'^{-1} d = b} against q. Requires a'^{q+1} = 1, b^q + b = 0.
CountResult count_identity_f(const GaloisField& f, GaloisField::Elt a, GaloisField::Elt b);

/// The solutions of the (f) equation, ascending by index.
std::vector<GaloisField::Elt> solutions_identity_f(const GaloisField& f, GaloisField::Elt a, GaloisField::Elt b);

/// Exhaustive run of one identity over every admissible pair.
struct IdentitySweep {
    std::string identity;
    int q = 0;
    std::size_t pairs = 0;
    std::size_t failures = 0;
    std::string first_failure;
    bool passed() const { return pairs > 0 && failures == 0; }
};

IdentitySweep sweep_identity_e(const GaloisField& f);
IdentitySweep sweep_identity_f(const GaloisField& f);

/// Identity (e) measured against 1 + (1 - [b = -a^{-1}]) q instead, which is the count the norm
/// map d -> d^{q+1} actually produces. Diagnostic only.
IdentitySweep sweep_identity_e_norm_form(const GaloisField& f);

}  // namespace hecke

#endif  // HECKE_FINITE_FIELD_HPP
