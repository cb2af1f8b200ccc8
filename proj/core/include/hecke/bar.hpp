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

#ifndef HECKE_BAR_HPP
#define HECKE_BAR_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/module.hpp"

namespace hecke {

/// The semilinear involution B(f a_{w,l}) = bar(f) E(w,l) T_w^{-1} a_{w,-ml}.
/// Images of basis vectors are computed once, at construction.
class BarOperator {
public:
    explicit BarOperator(const HeckeModule& module, unsigned threads = 1);

    const HeckeModule& module() const { return *module_; }
    const ModuleVector& column(BasisIndex x) const { return columns_.at(x); }
    ModuleVector apply(const ModuleVector& v) const;

private:
    const HeckeModule* module_;
    std::vector<ModuleVector> columns_;
};

/// Matrix of B on the span of an index list (one W-orbit of lambda). entries[i][j] is the coefficient
/// of a_{index[i]} in B(a_{index[j]}).
struct BarMatrix {
    std::vector<BasisIndex> index;
    std::vector<std::vector<LaurentPoly>> entries;

    /// R * bar(R) == identity, the matrix form of B^2 = 1 for a semilinear map.
    bool squares_to_identity() const;
};

/// Throws std::invalid_argument if the orbit is not W-stable or B leaves its span.
BarMatrix bar_matrix(const BarOperator& bar, const std::vector<PointId>& orbit);

struct BarReport {
    bool passed = true;
    std::size_t checks = 0;
    std::string failure;  // first violation, empty on success
};

/// B T_s = T_s^{-1} B, B T_s^{-1} = T_s B, B^2 = 1, B fixes a_{z,l} on Xtilde_m^0, and B maps
/// block (z,l) together with block (z,-ml) into their joint span; all on every basis vector.
BarReport verify_bar(const BarOperator& bar, unsigned threads = 1);

/// Raised when the bar matrix of an orbit is not unitriangular in the chosen order.
class TriangularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// How the indices of an orbit are linearly ordered for the triangular solve.
enum class CanonicalOrder {
    LengthThenIndex,         // (|u|_lambda, enumeration index)
    LengthThenReverseIndex,  // (|u|_lambda, reversed enumeration index); an alternative linear extension
};

struct CanonicalBasisTable {
    std::vector<BasisIndex> index;                 // orbit indices, enumeration order
    std::map<BasisIndex, ModuleVector> elements;   // hat a_x
    friend bool operator==(const CanonicalBasisTable&, const CanonicalBasisTable&) = default;
};

/// The unique B-fixed elements hat a_x with hat a_x - a_x in the v^-1 Z[v^-1]-span of the basis.
/// Throws TriangularityError naming the offending pair if the order is not compatible with B, and
/// std::logic_error if a degree-cancellation step is inconsistent.
CanonicalBasisTable canonical_basis(const BarOperator& bar, const std::vector<PointId>& orbit,
                                    CanonicalOrder order = CanonicalOrder::LengthThenIndex);

/// Checks the defining properties of a table: B-fixed, unitriangular with off-diagonal terms in
/// v^-1 Z[v^-1], supported in the orbit. Returns an empty string on success.
std::string check_canonical(const BarOperator& bar, const CanonicalBasisTable& table);

/// Canonical basis of the lambda = 0 sector, computed without HeckeModule's tables: the block
/// action at lambda = 0 (where W_0 = W and iota is the identity) builds its own bar operator, and
/// each hat a_x is found by exact Gaussian elimination over the rationals on the unknown
/// coefficients. Keys are indices of the module basis.
std::map<BasisIndex, ModuleVector> lambda0_canonical_by_elimination(const HeckeModule& module);

}  // namespace hecke

#endif  // HECKE_BAR_HPP
