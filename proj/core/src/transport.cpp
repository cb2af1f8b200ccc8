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

#include "hecke/transport.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

ModuleVector lv_circle_act(const HeckeModule& module, std::size_t block, int sigma, const ModuleVector& v) {
    const InvolutionSet& basis = module.basis();
    const TorusLattice& lattice = module.lattice();
    const WeylGroup& g = module.group();
    if (block >= basis.blocks().size()) throw std::invalid_argument("lv_circle_act: no such block");
    const Block& blk = basis.blocks()[block];
    const PointId l = blk.lambda;
    const auto& simples = lattice.little_weyl(l).simples;
    if (std::find(simples.begin(), simples.end(), sigma) == simples.end())
        throw std::invalid_argument("lv_circle_act: sigma is not simple in W_lambda");

    const ElemId s = g.reflection(sigma);
    const ElemId is = g.conjugate(blk.z, s);
    ModuleVector out;
    for (const auto& [x, c] : v.terms()) {
        const TwistedInvolution& ti = basis[x];
        if (ti.block != block) throw std::invalid_argument("lv_circle_act: support leaves the block");
        const ElemId us = g.mul(ti.u, s);
        const bool commute = us == g.mul(is, ti.u);
        const bool up = lattice.length_lambda(us, l) > ti.u_length;
        const ElemId ws = g.mul(ti.w, s);
        if (!commute) {
            out.add(basis.index(g.mul(s, ws), l), c);
            if (!up) out.add(x, c * laurent::v2_minus_v_inv2());
        } else if (up) {
            out.add(x, c);
            out.add(basis.index(ws, l), c * laurent::v_plus_v_inv());
        } else {
            out.add(basis.index(ws, l), c * laurent::v_minus_v_inv());
            out.add(x, c * laurent::v2_minus_v_inv2_minus_one());
        }
    }
    return out;
}

ModuleVector bullet_act(const HeckeModule& module, ElemId u, ElemId z, PointId lambda, const ModuleVector& v) {
    const InvolutionSet& basis = module.basis();
    const TorusLattice& lattice = module.lattice();
    const WeylGroup& g = module.group();
    const PointId target = lattice.act(z, lambda);
    if (!lattice.bracket_contains(target, z, lambda)) throw std::invalid_argument("bullet_act: z is not minimal in z W_lambda");
    if (!lattice.in_little_weyl(u, target)) throw std::invalid_argument("bullet_act: u is not in W_{z(lambda)}");

    const auto& simples = lattice.little_weyl(target).simples;
    const std::vector<int> word = lattice.little_reduced_word(u, target);
    ModuleVector out;
    for (const auto& [x, c] : v.terms()) {
        const TwistedInvolution& ti = basis[x];
        if (ti.lambda != lambda) continue;
        const BasisIndex moved = basis.index(g.conjugate(z, ti.w), target);
        const std::size_t block = basis[moved].block;
        ModuleVector cur = ModuleVector::basis(moved, c);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = lv_circle_act(module, block, simples[static_cast<std::size_t>(*it)], cur);
        out += cur;
    }
    return out;
}

std::pair<ElemId, ElemId> decompose_tw1lambda(const TorusLattice& lattice, ElemId w, PointId lambda) {
    const WeylGroup& g = lattice.group();
    const ElemId z = lattice.min_coset(w, lambda);
    const ElemId u = g.mul(w, g.inverse(z));
    if (!lattice.in_little_weyl(u, lattice.act(z, lambda)))
        throw std::logic_error("decompose_tw1lambda: u is not in W_{z(lambda)}");
    return {u, z};
}

}  // namespace hecke
