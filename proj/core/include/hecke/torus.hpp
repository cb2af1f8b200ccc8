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

#ifndef HECKE_TORUS_HPP
#define HECKE_TORUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/coeff.hpp"
#include "hecke/rootdata.hpp"

namespace hecke {

/// A point of (Q/Z) (x) X in fundamental-weight coordinates.
class TorusPoint {
public:
    TorusPoint() = default;
    explicit TorusPoint(std::vector<RatMod1> coords) : coords_(std::move(coords)) {}
    static TorusPoint zero(int rank) { return TorusPoint(std::vector<RatMod1>(static_cast<std::size_t>(rank))); }
    /// Parses "a/b,c/d,..." (also accepts bare integers).
    static TorusPoint parse(const std::string& text);

    int rank() const { return static_cast<int>(coords_.size()); }
    const std::vector<RatMod1>& coords() const { return coords_; }
    const RatMod1& operator[](std::size_t i) const { return coords_[i]; }
    bool is_zero() const;
    /// Least N with N * point = 0.
    Rational::Integer order() const;
    std::string to_string() const;

    TorusPoint operator-() const;
    friend TorusPoint operator+(const TorusPoint& a, const TorusPoint& b);
    friend TorusPoint operator*(std::int64_t n, const TorusPoint& p);

    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
    friend bool operator<(const TorusPoint& a, const TorusPoint& b) { return a.coords_ < b.coords_; }

private:
    std::vector<RatMod1> coords_;
};

/// <coroot, point> mod 1 for a coroot in simple-coroot coordinates.
RatMod1 pair(const IntVector& coroot, const TorusPoint& point);
/// Matrix action of w reduced mod 1.
TorusPoint act(const WeylElt& w, const TorusPoint& point);
/// True iff (m^2 - 1) * point = 0.
bool in_xbar_m(const TorusPoint& point, int m);
/// All points killed by N, in lexicographic order of coordinates.
std::vector<TorusPoint> enumerate_xbar(int rank, int N);
/// Partition of a W-closed list into orbits; each orbit sorted, orbits sorted by least element.
/// Throws std::invalid_argument if the list is not W-closed.
std::vector<std::vector<TorusPoint>> orbits(const RootDatum& datum, const std::vector<TorusPoint>& points);

using PointId = std::uint32_t;

/// Little Weyl group data at a point: coroots pairing to zero, their simple system and reflections.
struct LittleWeylData {
    PointId base = 0;
    std::vector<int> coroots;    // all of R_lambda (coroot indices)
    std::vector<int> positives;  // R_lambda intersected with positive coroots
    std::vector<int> simples;    // positives that are not a sum of two positives, ascending
    std::vector<ElemId> generators;  // s_b for b in simples
    std::vector<bool> in_subsystem;  // indexed by coroot
};

/// The finite torsion subgroup (1/N)X/X with its W-action, tabulated.
///
/// Points are numbered in lexicographic order of their coordinates k_i/N.
class TorusLattice {
public:
    TorusLattice(const WeylGroup& group, int N);

    const WeylGroup& group() const { return *group_; }
    int denominator() const { return N_; }
    int rank() const { return group_->rank(); }
    std::size_t size() const { return size_; }

    /// Integer numerators k_i with point = (k_i / N).
    std::vector<int> numerators(PointId p) const;
    PointId from_numerators(const std::vector<int>& k) const;
    TorusPoint point(PointId p) const;
    /// Throws std::invalid_argument unless N kills the point.
    PointId id(const TorusPoint& p) const;
    PointId zero() const { return 0; }

    PointId act_simple(int i, PointId p) const { return simple_act_[static_cast<std::size_t>(i) * size_ + p]; }
    PointId act(ElemId w, PointId p) const;
    PointId scale(std::int64_t n, PointId p) const;
    PointId add(PointId a, PointId b) const;
    PointId negate(PointId p) const { return scale(-1, p); }
    /// Numerator of <coroot, p> mod N.
    int pair_numerator(int coroot, PointId p) const;
    bool pairs_to_zero(int coroot, PointId p) const { return pair_numerator(coroot, p) == 0; }
    /// s_i in W_lambda, i.e. <a_i, lambda> = 0.
    bool simple_in_little(int i, PointId p) const { return pairs_to_zero(i, p); }
    bool in_xbar_m(PointId p, int m) const;

    const LittleWeylData& little_weyl(PointId p) const { return little_[p]; }

    /// z = min(w W_lambda): the element of the coset sending positive R_lambda into positive coroots.
    ElemId min_coset(ElemId w, PointId lambda) const;
    bool in_little_weyl(ElemId u, PointId lambda) const { return min_coset(u, lambda) == group_->identity(); }
    /// Inversions of u inside R_lambda; throws std::invalid_argument if u is not in W_lambda.
    int length_lambda(ElemId u, PointId lambda) const;
    /// Reduced word of u in the generators of W_lambda (positions into little_weyl().simples),
    /// by greedy left descent taking the lowest position each time.
    std::vector<int> little_reduced_word(ElemId u, PointId lambda) const;
    /// lambda' = z(lambda) and z = min(z W_lambda).
    bool bracket_contains(PointId target, ElemId z, PointId source) const;

    /// W-orbits of the whole lattice, ordered by least element; each orbit ascending.
    std::vector<std::vector<PointId>> orbits() const;

private:
    LittleWeylData build_little(PointId p) const;

    const WeylGroup* group_;
    int N_;
    std::size_t size_;
    std::vector<PointId> simple_act_;
    std::vector<LittleWeylData> little_;
};

/// Value-level forms over a materialised group.
LittleWeylData little_weyl(const TorusLattice& lattice, const TorusPoint& lambda);
int length_lambda(const TorusLattice& lattice, const WeylElt& u, const TorusPoint& lambda);
WeylElt min_coset(const TorusLattice& lattice, const WeylElt& w, const TorusPoint& lambda);
bool bracket_contains(const TorusLattice& lattice, const TorusPoint& target, const WeylElt& z,
                      const TorusPoint& source);

}  // namespace hecke

#endif  // HECKE_TORUS_HPP
