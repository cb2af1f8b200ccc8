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

#ifndef HECKE_VERIFY_HPP
#define HECKE_VERIFY_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hecke/bar.hpp"
#include "hecke/module.hpp"
#include "hecke/rootdata.hpp"
#include "hecke/torus.hpp"

namespace hecke {

/// Everything built for one (type, m, N). Members refer to each other, so instances are pinned.
struct Instance {
    Instance(const CartanType& type, int m, int N);
    Instance(const Instance&) = delete;
    Instance& operator=(const Instance&) = delete;

    static std::unique_ptr<Instance> build(const std::string& type, int m, int N) {
        return std::make_unique<Instance>(CartanType::parse(type), m, N);
    }

    /// The points of the lattice lying in Xbar_m, ascending.
    std::vector<PointId> xbar_points() const;
    /// W-orbits of xbar_points(), ordered by least element.
    std::vector<std::vector<PointId>> xbar_orbits() const;

    RootDatum datum;
    WeylGroup group;
    TorusLattice lattice;
    InvolutionSet basis;
    HeckeModule module;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::string failure;  // first violation
};

SuiteResult check_braid(const Instance& in, unsigned threads = 1);
/// T_s^2 1_l = 1_l + D (v^2 - v^-2) T_s 1_l, T_s T_s^-1 = 1, 1_l 1_l' = [l = l'] 1_l, T_s 1_l = 1_{sl} T_s.
SuiteResult check_quadratic(const Instance& in, unsigned threads = 1);
/// T_w 1_l against the block transport for every w, l and basis vector, plus transport by z alone
/// carrying basis vectors to basis vectors.
SuiteResult check_oracle(const Instance& in, unsigned threads = 1);
SuiteResult check_bar(const Instance& in, const BarOperator& bar, unsigned threads = 1);
/// Canonical basis on every orbit: defining properties, agreement of two processing orders,
/// hat a_{z,l} = a_{z,l}, and the lambda = 0 sector against direct elimination when |W| <= elimination_cap.
SuiteResult check_canonical_suite(const Instance& in, const BarOperator& bar, std::size_t elimination_cap = 24);
SuiteResult check_v1(const Instance& in, unsigned threads = 1);
/// Blocks partition Xtilde_m: sum of |I_{z,l}| = |Xtilde_m|, (block, u) -> (zu, l) injective, and
/// each I_{z,l} agrees with a direct search of W_l.
SuiteResult check_bijection(const Instance& in);
/// E(sws, sl) = E(w, l); E(ws, l) = -E(w, l) when sw = ws and s is in W_l.
SuiteResult check_signs(const Instance& in);
/// On the span of the a_{w,0}: closed under every T_s and equal to the block action with W_0 = W.
SuiteResult check_lv_sector(const Instance& in);

}  // namespace hecke

#endif  // HECKE_VERIFY_HPP
