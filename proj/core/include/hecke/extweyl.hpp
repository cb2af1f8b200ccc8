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

#ifndef HECKE_EXTWEYL_HPP
#define HECKE_EXTWEYL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hecke/rootdata.hpp"
#include "hecke/torus.hpp"

namespace hecke {

/// Element (w, lambda) of the extended Weyl group W x Xbar with
/// (w, l)(w', l') = (w w', w'^{-1}(l) + l').
struct ExtElt {
    WeylElt w;
    TorusPoint lambda;
    friend bool operator==(const ExtElt&, const ExtElt&) = default;
};

ExtElt ext_mul(const RootDatum& datum, const ExtElt& a, const ExtElt& b);
ExtElt ext_identity(const RootDatum& datum);
/// (w, m lambda); throws std::invalid_argument unless lambda is in Xbar_m.
ExtElt star(const ExtElt& a, int m);

/// Id-level form over a lattice.
struct ExtId {
    ElemId w;
    PointId lambda;
    friend bool operator==(const ExtId&, const ExtId&) = default;
};
ExtId ext_mul(const TorusLattice& lattice, ExtId a, ExtId b);
ExtId star(const TorusLattice& lattice, ExtId a, int m);

/// An m-twisted involution (w, lambda) with its decomposition w = z u, z = min(w W_lambda).
struct TwistedInvolution {
    ElemId w = 0;
    PointId lambda = 0;
    ElemId z = 0;
    ElemId u = 0;
    int sign = 1;       // (-1)^{|u|}
    int u_length = 0;   // |u|_lambda
    std::size_t block = 0;
};

/// A block (z, lambda) of Xtilde_m^0 together with I_{z,lambda}, the iota_z-twisted involutions of W_lambda.
struct Block {
    ElemId z = 0;
    PointId lambda = 0;
    std::vector<ElemId> members;  // u, ascending
};

/// Arrow (target, z, source) of the groupoid of minimal coset representatives.
struct GroupoidArrow {
    PointId target = 0;
    ElemId z = 0;
    PointId source = 0;
    friend bool operator==(const GroupoidArrow&, const GroupoidArrow&) = default;
};

/// z u z^{-1}. Throws std::invalid_argument unless z is in [-m lambda, lambda] and u in W_lambda.
ElemId iota(const TorusLattice& lattice, int m, ElemId z, PointId lambda, ElemId u);

/// All u in W_lambda with iota_z(u) u = 1, computed by direct search of W_lambda.
/// Throws std::invalid_argument unless (z, lambda) is in Xtilde_m^0.
Block block_involutions(const TorusLattice& lattice, int m, ElemId z, PointId lambda);

/// (lambda', z, lambda) -> (-m lambda, z^{-1}, -m lambda').
GroupoidArrow groupoid_star(const TorusLattice& lattice, const GroupoidArrow& arrow, int m);
bool is_groupoid_arrow(const TorusLattice& lattice, const GroupoidArrow& arrow);

/// (z, u) with z = min(w W_lambda), u = z^{-1} w; checks every structural claim and throws
/// std::logic_error on failure, std::invalid_argument if (w, lambda) is not in Xtilde_m.
std::pair<ElemId, ElemId> decompose(const TorusLattice& lattice, int m, ElemId w, PointId lambda);

/// The index set Xtilde_m restricted to the N-torsion lattice, with blocks.
///
/// Entries are ordered by (lambda, w), i.e. lexicographically on (coordinates, matrix).
class InvolutionSet {
public:
    InvolutionSet(const TorusLattice& lattice, int m);

    const TorusLattice& lattice() const { return *lattice_; }
    const WeylGroup& group() const { return lattice_->group(); }
    int m() const { return m_; }

    std::size_t size() const { return entries_.size(); }
    const TwistedInvolution& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<TwistedInvolution>& entries() const { return entries_; }
    std::optional<std::size_t> find(ElemId w, PointId lambda) const;
    /// Like find, but throws std::out_of_range for an index outside Xtilde_m.
    std::size_t index(ElemId w, PointId lambda) const;

    const std::vector<Block>& blocks() const { return blocks_; }
    std::optional<std::size_t> find_block(ElemId z, PointId lambda) const;

    /// -m lambda for every point.
    PointId neg_m(PointId lambda) const { return neg_m_[lambda]; }

    /// Indices whose lambda lies in the given set of points.
    std::vector<std::size_t> restrict_to(const std::vector<PointId>& points) const;

private:
    static std::uint64_t key(ElemId w, PointId lambda) { return (static_cast<std::uint64_t>(lambda) << 32) | w; }

    const TorusLattice* lattice_;
    int m_;
    std::vector<TwistedInvolution> entries_;
    std::unordered_map<std::uint64_t, std::size_t> lookup_;
    std::vector<Block> blocks_;
    std::unordered_map<std::uint64_t, std::size_t> block_lookup_;
    std::vector<PointId> neg_m_;
};

/// E(w, lambda) = (-1)^{|u|} for w = z u.
int e_sign(const TwistedInvolution& ti);

}  // namespace hecke

#endif  // HECKE_EXTWEYL_HPP
