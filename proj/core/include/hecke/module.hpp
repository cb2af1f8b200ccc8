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

#ifndef HECKE_MODULE_HPP
#define HECKE_MODULE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/coeff.hpp"
#include "hecke/extweyl.hpp"

namespace hecke {

using BasisIndex = std::size_t;

/// Finitely supported combination of basis vectors a_{w,lambda}; zero coefficients are never stored.
class ModuleVector {
public:
    using Terms = std::map<BasisIndex, LaurentPoly>;

    ModuleVector() = default;
    static ModuleVector basis(BasisIndex x, LaurentPoly c = LaurentPoly(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    LaurentPoly coeff(BasisIndex x) const;

    void add(BasisIndex x, const LaurentPoly& c);
    /// this += c * other
    void add_scaled(const ModuleVector& other, const LaurentPoly& c);

    ModuleVector& operator+=(const ModuleVector& o);
    ModuleVector& operator-=(const ModuleVector& o);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const LaurentPoly& c, const ModuleVector& v);

    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

private:
    Terms terms_;
};

/// Sparse image of one basis vector: (target, coefficient) pairs, targets ascending.
using ActionRow = std::vector<std::pair<BasisIndex, LaurentPoly>>;

/// Which formula of the generator action applies to a_{w,lambda}.
enum class ActionCase {
    NonCommutingUp,    // sw != ws, |sw| > |w|
    NonCommutingDown,  // sw != ws, |sw| < |w|
    CommutingUp,       // sw == ws, |sw| > |w|
    CommutingDown,     // sw == ws, |sw| < |w|
};

/// The module with basis indexed by Xtilde_m and the braid-group action of the generators T_s:
///
///   (a) sw != ws, |sw| > |w|:  T_s a_{w,l} = a_{sws,sl}
///   (b) sw != ws, |sw| < |w|:  T_s a_{w,l} = a_{sws,sl} + D (v^2 - v^-2) a_{w,l}
///   (c) sw == ws, |sw| > |w|:  T_s a_{w,l} = a_{w,sl} + D (v + v^-1) a_{sw,l}
///   (d) sw == ws, |sw| < |w|:  T_s a_{w,l} = D (v - v^-1) a_{sw,l} + D (v^2 - v^-2 - 1) a_{w,l} + (1 - D) a_{w,sl}
///
/// where D = 1 if <a_s, l> = 0 and D = 0 otherwise. Tables for T_s and T_s^{-1} are built eagerly.
class HeckeModule {
public:
    explicit HeckeModule(const InvolutionSet& basis);

    const InvolutionSet& basis() const { return *basis_; }
    const TorusLattice& lattice() const { return basis_->lattice(); }
    const WeylGroup& group() const { return basis_->group(); }
    int rank() const { return group().rank(); }
    std::size_t dim() const { return basis_->size(); }

    bool delta(int s, PointId lambda) const { return lattice().simple_in_little(s, lambda); }
    ActionCase action_case(int s, BasisIndex x) const;

    const ActionRow& ts_row(int s, BasisIndex x) const { return ts_[static_cast<std::size_t>(s) * dim() + x]; }
    const ActionRow& ts_inv_row(int s, BasisIndex x) const { return ts_inv_[static_cast<std::size_t>(s) * dim() + x]; }

    ModuleVector ts_act(int s, const ModuleVector& v) const;
    ModuleVector ts_inv_act(int s, const ModuleVector& v) const;
    /// T_w along the canonical (lexicographically smallest) reduced word.
    ModuleVector tw_act(ElemId w, const ModuleVector& v) const;
    /// T_w along an arbitrary word (no reducedness check).
    ModuleVector word_act(const std::vector<int>& word, const ModuleVector& v) const;
    /// T_w^{-1} = T_{s_k}^{-1} ... T_{s_1}^{-1} for w = s_1 ... s_k.
    ModuleVector tw_inv_act(ElemId w, const ModuleVector& v) const;
    /// Keeps exactly the terms whose second index is lambda.
    ModuleVector one_lambda(PointId lambda, const ModuleVector& v) const;

private:
    ActionRow build_row(int s, BasisIndex x) const;
    static ModuleVector apply_rows(const std::vector<ActionRow>& table, std::size_t offset, const ModuleVector& v);

    const InvolutionSet* basis_;
    std::vector<ActionRow> ts_;
    std::vector<ActionRow> ts_inv_;
};

/// Integer matrix of an operator after v = 1, stored by column (image of each basis vector).
struct IntOperator {
    std::vector<std::vector<std::pair<BasisIndex, std::int64_t>>> columns;
};

using IntVectorMap = std::map<BasisIndex, std::int64_t>;

IntVectorMap specialize_v1(const ModuleVector& v);
/// Generator matrix sigma_s at v = 1.
IntOperator specialize_v1(const HeckeModule& module, int s);
/// Applies an integer operator to an integer vector.
IntVectorMap apply_operator(const IntOperator& op, const IntVectorMap& v);

/// Human-readable form, e.g. "(1) a[s1,(1/3)] + (v + v^-1) a[e,(0/1)]"; for diagnostics.
std::string describe(const InvolutionSet& basis, const ModuleVector& v);
std::string describe_index(const InvolutionSet& basis, BasisIndex x);

}  // namespace hecke

#endif  // HECKE_MODULE_HPP
