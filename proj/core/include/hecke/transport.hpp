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

#ifndef HECKE_TRANSPORT_HPP
#define HECKE_TRANSPORT_HPP

#include <cstddef>
#include <utility>

#include "hecke/module.hpp"

// A second, independent construction of the action: each block (z, lambda) carries an action of
// the little Hecke algebra of W_lambda, and T_u T_z 1_lambda acts by transporting along z and then
// acting inside the target block. Used as an oracle against HeckeModule.

namespace hecke {

/// Action of the simple generator sigma = s_b of W_lambda (b a coroot index in little_weyl(lambda).simples)
/// on vectors supported in one block. With w = z u:
///
///   (a) u.sigma != iota_z(sigma).u, up:    a_{z iota_z(sigma) u sigma, l}
///   (b) u.sigma != iota_z(sigma).u, down:  a_{z iota_z(sigma) u sigma, l} + (v^2 - v^-2) a_{zu, l}
///   (c) u.sigma == iota_z(sigma).u, up:    a_{zu, l} + (v + v^-1) a_{zu sigma, l}
///   (d) u.sigma == iota_z(sigma).u, down:  (v - v^-1) a_{zu sigma, l} + (v^2 - v^-2 - 1) a_{zu, l}
///
/// "up" means |u sigma|_lambda > |u|_lambda. Throws std::invalid_argument if sigma is not simple in
/// W_lambda or the support leaves the block.
ModuleVector lv_circle_act(const HeckeModule& module, std::size_t block, int sigma, const ModuleVector& v);

/// (T_u T_z 1_lambda) acting on v: terms with second index other than lambda are killed; a_{w, lambda}
/// is carried to a_{z w z^{-1}, z(lambda)} and then acted on by T_u through lv_circle_act, along the
/// greedy reduced word of u in W_{z(lambda)}. Throws std::invalid_argument unless z is in
/// [z(lambda), lambda] and u is in W_{z(lambda)}.
ModuleVector bullet_act(const HeckeModule& module, ElemId u, ElemId z, PointId lambda, const ModuleVector& v);

/// (u, z) with z = min(w W_lambda) and u = w z^{-1}, so that T_w 1_lambda = T_u T_z 1_lambda.
/// Throws std::logic_error if u is not in W_{z(lambda)}.
std::pair<ElemId, ElemId> decompose_tw1lambda(const TorusLattice& lattice, ElemId w, PointId lambda);

}  // namespace hecke

#endif  // HECKE_TRANSPORT_HPP
