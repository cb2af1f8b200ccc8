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


#ifndef HECKE_TESTS_SUPPORT_HPP
#define HECKE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hecke/coeff.hpp"
#include "hecke/module.hpp"
#include "hecke/verify.hpp"

namespace hecke::testing {

/// Seeded generator for property tests; the seed is fixed so failures reproduce.
class Gen {
public:
    explicit Gen(std::uint64_t seed = 0x5eed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    LaurentPoly laurent(int max_terms = 4, int max_degree = 4, int max_coeff = 5) {
        LaurentPoly p;
        const int n = integer(0, max_terms);
        for (int i = 0; i < n; ++i)
            p += LaurentPoly::monomial(integer(-max_coeff, max_coeff), integer(-max_degree, max_degree));
        return p;
    }

    std::vector<int> word(int rank, int max_len) {
        std::vector<int> w(static_cast<std::size_t>(integer(0, max_len)));
        for (auto& s : w) s = integer(0, rank - 1);
        return w;
    }

    ModuleVector vector(std::size_t dim, int max_terms = 3) {
        ModuleVector v;
        const int n = integer(1, max_terms);
        for (int i = 0; i < n; ++i) v.add(static_cast<std::size_t>(integer(0, static_cast<int>(dim) - 1)), laurent(2, 2, 3));
        return v;
    }

private:
    std::mt19937_64 rng_;
};

inline LaurentPoly v() { return LaurentPoly::v(); }
inline LaurentPoly vi() { return LaurentPoly::v_inv(); }

/// Index of (w given by a 1-based word, lambda given as "a/b,c/d").
inline BasisIndex idx(const Instance& in, const std::vector<int>& word1, const std::string& lambda) {
    std::vector<int> w;
    for (int s : word1) w.push_back(s - 1);
    return in.basis.index(in.group.from_word(w), in.lattice.id(TorusPoint::parse(lambda)));
}

inline ModuleVector a(const Instance& in, const std::vector<int>& word1, const std::string& lambda) {
    return ModuleVector::basis(idx(in, word1, lambda));
}

inline ElemId elem(const WeylGroup& g, const std::vector<int>& word1) {
    std::vector<int> w;
    for (int s : word1) w.push_back(s - 1);
    return g.from_word(w);
}

inline PointId pt(const TorusLattice& lattice, const std::string& text) { return lattice.id(TorusPoint::parse(text)); }

struct Config {
    std::string type;
    int m;
    int N;
};

/// The exhaustive grid: {A1xA1, A2, B2, G2} x {1,2,3} x {1..6}, then A3 and B3 with m = 1, N = 1, 2.
inline std::vector<Config> full_grid() {
    std::vector<Config> out;
    for (const char* t : {"A1xA1", "A2", "B2", "G2"})
        for (int m = 1; m <= 3; ++m)
            for (int N = 1; N <= 6; ++N) out.push_back({t, m, N});
    for (const char* t : {"A3", "B3"})
        for (int N = 1; N <= 2; ++N) out.push_back({t, 1, N});
    return out;
}

}  // namespace hecke::testing

#endif  // HECKE_TESTS_SUPPORT_HPP
