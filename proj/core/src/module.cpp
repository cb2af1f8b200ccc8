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

#include "hecke/module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hecke {

// ModuleVector

ModuleVector ModuleVector::basis(BasisIndex x, LaurentPoly c) {
    ModuleVector v;
    v.add(x, c);
    return v;
}

LaurentPoly ModuleVector::coeff(BasisIndex x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void ModuleVector::add(BasisIndex x, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(x, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void ModuleVector::add_scaled(const ModuleVector& other, const LaurentPoly& c) {
    if (c.is_zero()) return;
    for (const auto& [x, a] : other.terms_) add(x, a * c);
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
    for (const auto& [x, c] : o.terms_) add(x, c);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
    for (const auto& [x, c] : o.terms_) add(x, -c);
    return *this;
}

ModuleVector operator*(const LaurentPoly& c, const ModuleVector& v) {
    ModuleVector out;
    out.add_scaled(v, c);
    return out;
}

// HeckeModule

HeckeModule::HeckeModule(const InvolutionSet& basis) : basis_(&basis) {
    const std::size_t n = dim();
    ts_.reserve(static_cast<std::size_t>(rank()) * n);
    ts_inv_.reserve(static_cast<std::size_t>(rank()) * n);
    for (int s = 0; s < rank(); ++s)
        for (BasisIndex x = 0; x < n; ++x) {
            ActionRow row = build_row(s, x);
            ActionRow inv = row;
            if (delta(s, basis[x].lambda)) {
                // T_s^{-1} 1_l = T_s 1_l - D (v^2 - v^-2) 1_l
                ModuleVector tmp;
                for (const auto& [y, c] : row) tmp.add(y, c);
                tmp.add(x, -laurent::v2_minus_v_inv2());
                inv.assign(tmp.terms().begin(), tmp.terms().end());
            }
            ts_.push_back(std::move(row));
            ts_inv_.push_back(std::move(inv));
        }
}

ActionCase HeckeModule::action_case(int s, BasisIndex x) const {
    const WeylGroup& g = group();
    const ElemId w = (*basis_)[x].w;
    const ElemId sw = g.left_mul_simple(s, w);
    const bool commute = sw == g.right_mul_simple(w, s);
    const bool up = g.length(sw) > g.length(w);
    if (commute) return up ? ActionCase::CommutingUp : ActionCase::CommutingDown;
    return up ? ActionCase::NonCommutingUp : ActionCase::NonCommutingDown;
}

ActionRow HeckeModule::build_row(int s, BasisIndex x) const {
    const WeylGroup& g = group();
    const TwistedInvolution& ti = (*basis_)[x];
    const ElemId w = ti.w;
    const PointId l = ti.lambda;
    const PointId sl = lattice().act_simple(s, l);
    const bool d = delta(s, l);
    const ElemId sw = g.left_mul_simple(s, w);
    const ElemId sws = g.right_mul_simple(sw, s);

    ModuleVector out;
    switch (action_case(s, x)) {
        case ActionCase::NonCommutingUp:
            out.add(basis_->index(sws, sl), LaurentPoly(1));
            break;
        case ActionCase::NonCommutingDown:
            out.add(basis_->index(sws, sl), LaurentPoly(1));
            if (d) out.add(x, laurent::v2_minus_v_inv2());
            break;
        case ActionCase::CommutingUp:
            out.add(basis_->index(w, sl), LaurentPoly(1));
            if (d) out.add(basis_->index(sw, l), laurent::v_plus_v_inv());
            break;
        case ActionCase::CommutingDown:
            if (d) {
                out.add(basis_->index(sw, l), laurent::v_minus_v_inv());
                out.add(x, laurent::v2_minus_v_inv2_minus_one());
            } else {
                out.add(basis_->index(w, sl), LaurentPoly(1));
            }
            break;
    }
    return {out.terms().begin(), out.terms().end()};
}

ModuleVector HeckeModule::apply_rows(const std::vector<ActionRow>& table, std::size_t offset, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [x, c] : v.terms())
        for (const auto& [y, a] : table[offset + x]) out.add(y, a * c);
    return out;
}

ModuleVector HeckeModule::ts_act(int s, const ModuleVector& v) const {
    if (s < 0 || s >= rank()) throw std::out_of_range("ts_act: generator index");
    return apply_rows(ts_, static_cast<std::size_t>(s) * dim(), v);
}

ModuleVector HeckeModule::ts_inv_act(int s, const ModuleVector& v) const {
    if (s < 0 || s >= rank()) throw std::out_of_range("ts_inv_act: generator index");
    return apply_rows(ts_inv_, static_cast<std::size_t>(s) * dim(), v);
}

ModuleVector HeckeModule::word_act(const std::vector<int>& word, const ModuleVector& v) const {
    ModuleVector cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = ts_act(*it, cur);
    return cur;
}

ModuleVector HeckeModule::tw_act(ElemId w, const ModuleVector& v) const { return word_act(group().reduced_word(w), v); }

ModuleVector HeckeModule::tw_inv_act(ElemId w, const ModuleVector& v) const {
    ModuleVector cur = v;
    for (int s : group().reduced_word(w)) cur = ts_inv_act(s, cur);
    return cur;
}

ModuleVector HeckeModule::one_lambda(PointId lambda, const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [x, c] : v.terms())
        if ((*basis_)[x].lambda == lambda) out.add(x, c);
    return out;
}

// v = 1

IntVectorMap specialize_v1(const ModuleVector& v) {
    IntVectorMap out;
    for (const auto& [x, c] : v.terms()) {
        std::int64_t k = c.eval_one();
        if (k != 0) out.emplace(x, k);
    }
    return out;
}

IntOperator specialize_v1(const HeckeModule& module, int s) {
    IntOperator op;
    op.columns.resize(module.dim());
    for (BasisIndex x = 0; x < module.dim(); ++x)
        for (const auto& [y, c] : module.ts_row(s, x)) {
            std::int64_t k = c.eval_one();
            if (k != 0) op.columns[x].emplace_back(y, k);
        }
    return op;
}

IntVectorMap apply_operator(const IntOperator& op, const IntVectorMap& v) {
    IntVectorMap out;
    for (const auto& [x, c] : v)
        for (const auto& [y, a] : op.columns.at(x)) {
            std::int64_t& slot = out[y];
            slot += a * c;
            if (slot == 0) out.erase(y);
        }
    return out;
}

// Diagnostics

std::string describe_index(const InvolutionSet& basis, BasisIndex x) {
    const TwistedInvolution& ti = basis[x];
    std::ostringstream os;
    os << "a[";
    auto word = basis.group().reduced_word(ti.w);
    if (word.empty()) os << 'e';
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "." : "") << 's' << word[i] + 1;
    os << ',' << basis.lattice().point(ti.lambda).to_string() << ']';
    return os.str();
}

std::string describe(const InvolutionSet& basis, const ModuleVector& v) {
    if (v.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [x, c] : v.terms()) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.to_string() + ") " + describe_index(basis, x);
    }
    return s;
}

}  // namespace hecke
