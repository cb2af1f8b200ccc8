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

#ifndef HECKE_ROOTDATA_HPP
#define HECKE_ROOTDATA_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hecke {

/*
  Conventions.

  The weight lattice X has the basis of fundamental weights w_1..w_r and the
  coweight-side lattice Y has the basis of simple coroots a_1..a_r, so the
  pairing <y, x> is the dot product of coordinate vectors.

  cartan[i][j] = <a_i, alpha_j>. The simple root alpha_j written in the
  fundamental-weight basis is column j of the Cartan matrix, and the simple
  reflection acts on X by s_i(x) = x - x_i * alpha_i.

  Generator indices are 0-based in the C++ API; text formats (JSON, CLI)
  print them 1-based.
*/

struct CartanFactor {
    char family;  // one of A B C D E F G
    int rank;
    friend bool operator==(const CartanFactor&, const CartanFactor&) = default;
};

class CartanType {
public:
    CartanType() = default;
    explicit CartanType(std::vector<CartanFactor> factors);

    /// "A2", "B3", "A1xA1", "G2" ('x' or '*' separates factors).
    static CartanType parse(std::string_view text);

    const std::vector<CartanFactor>& factors() const { return factors_; }
    int rank() const;
    std::string to_string() const;

    friend bool operator==(const CartanType&, const CartanType&) = default;

private:
    std::vector<CartanFactor> factors_;
};

using IntVector = std::vector<int>;

/// Square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n), 0) {}
    static IntMatrix identity(int n);

    int dim() const { return n_; }
    int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }
    int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }
    const std::vector<int>& data() const { return data_; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntVector operator*(const IntVector& v) const;
    IntMatrix transpose() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) { return a.data_ <=> b.data_; }

private:
    int n_ = 0;
    std::vector<int> data_;
};

/// A Weyl group element, canonically its matrix on X in fundamental-weight coordinates.
class WeylElt {
public:
    WeylElt() = default;
    explicit WeylElt(IntMatrix m) : matrix_(std::move(m)) {}

    const IntMatrix& matrix() const { return matrix_; }
    WeylElt operator*(const WeylElt& o) const { return WeylElt(matrix_ * o.matrix_); }

    friend bool operator==(const WeylElt&, const WeylElt&) = default;
    friend auto operator<=>(const WeylElt& a, const WeylElt& b) { return a.matrix_ <=> b.matrix_; }

private:
    IntMatrix matrix_;
};

struct WeylEltHash {
    std::size_t operator()(const WeylElt& w) const noexcept;
};

class RootDatum {
public:
    /// Builds the simply connected root datum; throws std::invalid_argument for an unsupported rank.
    explicit RootDatum(const CartanType& type);

    const CartanType& type() const { return type_; }
    int rank() const { return rank_; }
    const IntMatrix& cartan() const { return cartan_; }

    /// Coroots in simple-coroot coordinates: indices [0, P) are positive,
    /// index c + P is the negative of c.
    const std::vector<IntVector>& coroots() const { return coroots_; }
    std::size_t positive_coroot_count() const { return positive_count_; }
    bool is_positive_coroot(int c) const { return static_cast<std::size_t>(c) < positive_count_; }
    int negate_coroot(int c) const;
    /// Index of a coroot given by coordinates, or -1.
    int coroot_index(const IntVector& coords) const;

    /// Positive roots in simple-root coordinates (same order as positive coroots).
    const std::vector<IntVector>& positive_roots() const { return positive_roots_; }

    /// For each positive coroot b: a word s_{j_1}...s_{j_k} and simple index i with
    /// b = s_{j_1}...s_{j_k}(a_i); the first one found in breadth-first order.
    struct CorootWitness {
        std::vector<int> word;
        int simple = 0;
    };
    const CorootWitness& witness(int positive_coroot) const { return witnesses_[static_cast<std::size_t>(positive_coroot)]; }

    /// Matrix of s_i on X.
    const WeylElt& simple_reflection(int i) const { return simple_[static_cast<std::size_t>(i)]; }
    /// s_i applied to a coroot index.
    int reflect_coroot(int i, int c) const { return simple_on_coroots_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]; }

    /// Order of s_i s_j (Coxeter matrix entry).
    int coxeter_order(int i, int j) const;

    /// Image of a coroot (simple-coroot coordinates) under w, via the contragredient action.
    IntVector act_on_coroot(const WeylElt& w, const IntVector& coroot) const;
    /// Sum_i coroot_i * x_i.
    static long pairing(const IntVector& y, const IntVector& x);

    /// Length by inversion counting: #{positive b : w(b) negative}.
    int length(const WeylElt& w) const;
    /// Lexicographically smallest reduced word (0-based generator indices).
    std::vector<int> reduced_word(const WeylElt& w) const;
    WeylElt from_word(const std::vector<int>& word) const;
    WeylElt identity() const;
    WeylElt inverse(const WeylElt& w) const;

private:
    CartanType type_;
    int rank_ = 0;
    IntMatrix cartan_;
    std::vector<IntVector> coroots_;
    std::size_t positive_count_ = 0;
    std::vector<IntVector> positive_roots_;
    std::vector<CorootWitness> witnesses_;
    std::vector<WeylElt> simple_;
    std::vector<std::vector<int>> simple_on_coroots_;
    std::map<IntVector, int> coroot_lookup_;
};

using ElemId = std::uint32_t;

/// The materialised Weyl group. Elements are numbered in lexicographic order of their matrices.
class WeylGroup {
public:
    /// Default cap on |W|; enumeration beyond this refuses.
    static constexpr std::size_t kDefaultMaxOrder = 51840;

    static constexpr int kDefaultMaxRank = 6;

    /// Throws std::length_error when the rank or the group order exceeds the caps.
    explicit WeylGroup(const RootDatum& datum, std::size_t max_order = kDefaultMaxOrder,
                       int max_rank = kDefaultMaxRank);

    const RootDatum& datum() const { return datum_; }
    int rank() const { return datum_.rank(); }
    std::size_t size() const { return elements_.size(); }

    const WeylElt& element(ElemId id) const { return elements_[id]; }
    const std::vector<WeylElt>& elements() const { return elements_; }
    ElemId id(const WeylElt& w) const;
    ElemId identity() const { return identity_; }
    ElemId simple(int i) const { return simple_ids_[static_cast<std::size_t>(i)]; }

    ElemId left_mul_simple(int i, ElemId w) const { return lmul_[w * rank_u() + static_cast<std::size_t>(i)]; }
    ElemId right_mul_simple(ElemId w, int i) const { return rmul_[w * rank_u() + static_cast<std::size_t>(i)]; }
    ElemId mul(ElemId a, ElemId b) const;
    ElemId inverse(ElemId w) const { return inverse_[w]; }
    ElemId conjugate(ElemId z, ElemId u) const { return mul(mul(z, u), inverse(z)); }

    int length(ElemId w) const { return length_[w]; }
    /// Image of coroot c under w.
    int coroot_image(ElemId w, int c) const {
        return coroot_perm_[w * datum_.coroots().size() + static_cast<std::size_t>(c)];
    }
    std::vector<int> reduced_word(ElemId w) const;
    ElemId from_word(const std::vector<int>& word) const;
    /// The reflection s_b for a coroot index b (positive or negative).
    ElemId reflection(int coroot) const;

    /// All w with w^2 = 1, ascending.
    std::vector<ElemId> involutions() const;

private:
    std::size_t rank_u() const { return static_cast<std::size_t>(datum_.rank()); }

    RootDatum datum_;
    std::vector<WeylElt> elements_;
    std::unordered_map<WeylElt, ElemId, WeylEltHash> index_;
    ElemId identity_ = 0;
    std::vector<ElemId> simple_ids_;
    std::vector<ElemId> lmul_, rmul_, inverse_;
    std::vector<int> length_;
    std::vector<std::int16_t> coroot_perm_;
    std::vector<std::int8_t> first_descent_;  // lowest left descent, -1 for the identity
    std::vector<ElemId> reflections_;         // per positive coroot
};

/// Exhaustively generated group (lexicographic order on matrices); the free-function form.
std::vector<WeylElt> weyl_generate(const RootDatum& datum);
/// All involutions as values.
std::vector<WeylElt> involutions(const RootDatum& datum);

}  // namespace hecke

#endif  // HECKE_ROOTDATA_HPP
