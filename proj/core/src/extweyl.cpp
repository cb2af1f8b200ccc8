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

#include "hecke/extweyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace hecke {

ExtElt ext_mul(const RootDatum& datum, const ExtElt& a, const ExtElt& b) {
    return {a.w * b.w, act(datum.inverse(b.w), a.lambda) + b.lambda};
}

ExtElt ext_identity(const RootDatum& datum) { return {datum.identity(), TorusPoint::zero(datum.rank())}; }

ExtElt star(const ExtElt& a, int m) {
    if (!in_xbar_m(a.lambda, m)) throw std::invalid_argument("star: lambda is not in Xbar_m");
    return {a.w, static_cast<std::int64_t>(m) * a.lambda};
}

ExtId ext_mul(const TorusLattice& lattice, ExtId a, ExtId b) {
    const WeylGroup& g = lattice.group();
    return {g.mul(a.w, b.w), lattice.add(lattice.act(g.inverse(b.w), a.lambda), b.lambda)};
}

ExtId star(const TorusLattice& lattice, ExtId a, int m) {
    if (!lattice.in_xbar_m(a.lambda, m)) throw std::invalid_argument("star: lambda is not in Xbar_m");
    return {a.w, lattice.scale(m, a.lambda)};
}

namespace {

PointId neg_m_of(const TorusLattice& lattice, int m, PointId lambda) { return lattice.scale(-m, lambda); }

bool in_xtilde0(const TorusLattice& lattice, int m, ElemId z, PointId lambda) {
    const WeylGroup& g = lattice.group();
    return g.mul(z, z) == g.identity() && lattice.bracket_contains(neg_m_of(lattice, m, lambda), z, lambda);
}

}  // namespace

ElemId iota(const TorusLattice& lattice, int m, ElemId z, PointId lambda, ElemId u) {
    if (!lattice.bracket_contains(neg_m_of(lattice, m, lambda), z, lambda))
        throw std::invalid_argument("iota: z is not in [-m lambda, lambda]");
    if (!lattice.in_little_weyl(u, lambda)) throw std::invalid_argument("iota: u is not in W_lambda");
    ElemId out = lattice.group().conjugate(z, u);
    if (!lattice.in_little_weyl(out, lambda)) throw std::logic_error("iota: image left W_lambda");
    return out;
}

Block block_involutions(const TorusLattice& lattice, int m, ElemId z, PointId lambda) {
    if (!in_xtilde0(lattice, m, z, lambda)) throw std::invalid_argument("block_involutions: (z, lambda) not in Xtilde_m^0");
    const WeylGroup& g = lattice.group();
    Block b{z, lambda, {}};
    for (ElemId u = 0; u < g.size(); ++u) {
        if (!lattice.in_little_weyl(u, lambda)) continue;
        if (g.mul(g.conjugate(z, u), u) == g.identity()) b.members.push_back(u);
    }
    return b;
}

bool is_groupoid_arrow(const TorusLattice& lattice, const GroupoidArrow& arrow) {
    return lattice.bracket_contains(arrow.target, arrow.z, arrow.source);
}

GroupoidArrow groupoid_star(const TorusLattice& lattice, const GroupoidArrow& arrow, int m) {
    if (!is_groupoid_arrow(lattice, arrow)) throw std::invalid_argument("groupoid_star: not an arrow");
    if (!lattice.in_xbar_m(arrow.source, m) || !lattice.in_xbar_m(arrow.target, m))
        throw std::invalid_argument("groupoid_star: endpoints not in Xbar_m");
    return {neg_m_of(lattice, m, arrow.source), lattice.group().inverse(arrow.z), neg_m_of(lattice, m, arrow.target)};
}

std::pair<ElemId, ElemId> decompose(const TorusLattice& lattice, int m, ElemId w, PointId lambda) {
    const WeylGroup& g = lattice.group();
    const PointId target = neg_m_of(lattice, m, lambda);
    if (g.mul(w, w) != g.identity() || lattice.act(w, lambda) != target)
        throw std::invalid_argument("decompose: (w, lambda) is not an m-twisted involution");
    const ElemId z = lattice.min_coset(w, lambda);
    const ElemId u = g.mul(g.inverse(z), w);
    if (g.mul(z, z) != g.identity()) throw std::logic_error("decompose: z is not an involution");
    if (!lattice.bracket_contains(target, z, lambda)) throw std::logic_error("decompose: z not in [-m lambda, lambda]");
    if (!lattice.in_little_weyl(u, lambda)) throw std::logic_error("decompose: u not in W_lambda");
    if (g.mul(g.conjugate(z, u), u) != g.identity()) throw std::logic_error("decompose: iota_z(u) u != 1");
    return {z, u};
}

int e_sign(const TwistedInvolution& ti) { return ti.sign; }

InvolutionSet::InvolutionSet(const TorusLattice& lattice, int m) : lattice_(&lattice), m_(m) {
    if (m < 1) throw std::invalid_argument("InvolutionSet: m must be >= 1");
    const WeylGroup& g = lattice.group();
    const std::vector<ElemId> invols = g.involutions();
    neg_m_.resize(lattice.size());
    for (PointId p = 0; p < lattice.size(); ++p) neg_m_[p] = neg_m_of(lattice, m, p);

    std::map<std::pair<PointId, ElemId>, std::size_t> block_of;  // (lambda, z) ordered
    for (PointId lambda = 0; lambda < lattice.size(); ++lambda) {
        if (!lattice.in_xbar_m(lambda, m)) continue;
        for (ElemId w : invols) {
            if (lattice.act(w, lambda) != neg_m_[lambda]) continue;
            auto [z, u] = decompose(lattice, m, w, lambda);
            TwistedInvolution ti;
            ti.w = w;
            ti.lambda = lambda;
            ti.z = z;
            ti.u = u;
            ti.sign = (g.length(u) % 2 == 0) ? 1 : -1;
            ti.u_length = lattice.length_lambda(u, lambda);
            if ((g.length(u) - ti.u_length) % 2 != 0)
                throw std::logic_error("InvolutionSet: parity of |u| and |u|_lambda disagree");
            lookup_.emplace(key(w, lambda), entries_.size());
            entries_.push_back(ti);
        }
    }
    for (const auto& ti : entries_) block_of.emplace(std::make_pair(ti.lambda, ti.z), 0);
    for (auto& [k, idx] : block_of) {
        idx = blocks_.size();
        blocks_.push_back({k.second, k.first, {}});
        block_lookup_.emplace(key(k.second, k.first), idx);
    }
    for (auto& ti : entries_) {
        ti.block = block_of.at({ti.lambda, ti.z});
        blocks_[ti.block].members.push_back(ti.u);
    }
    for (auto& b : blocks_) {
        std::sort(b.members.begin(), b.members.end());
        if (!find(b.z, b.lambda)) throw std::logic_error("InvolutionSet: block representative missing");
    }
}

std::optional<std::size_t> InvolutionSet::find(ElemId w, PointId lambda) const {
    auto it = lookup_.find(key(w, lambda));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::size_t InvolutionSet::index(ElemId w, PointId lambda) const {
    auto idx = find(w, lambda);
    if (!idx) throw std::out_of_range("InvolutionSet: index outside Xtilde_m");
    return *idx;
}

std::optional<std::size_t> InvolutionSet::find_block(ElemId z, PointId lambda) const {
    auto it = block_lookup_.find(key(z, lambda));
    if (it == block_lookup_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> InvolutionSet::restrict_to(const std::vector<PointId>& points) const {
    std::vector<bool> keep(lattice_->size(), false);
    for (PointId p : points) keep[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (keep[entries_[i].lambda]) out.push_back(i);
    return out;
}

}  // namespace hecke
