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

#include "hecke/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "hecke/coeff.hpp"

namespace hecke {

// CartanType

CartanType::CartanType(std::vector<CartanFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("CartanType: no factors");
    for (const auto& f : factors_) {
        auto bad = [&](const char* why) {
            throw std::invalid_argument(std::string("CartanType: ") + f.family + std::to_string(f.rank) + ": " + why);
        };
        switch (f.family) {
            case 'A': if (f.rank < 1) bad("rank must be >= 1"); break;
            case 'B':
            case 'C': if (f.rank < 2) bad("rank must be >= 2"); break;
            case 'D': if (f.rank < 3) bad("rank must be >= 3"); break;
            case 'E': if (f.rank < 6 || f.rank > 8) bad("rank must be 6, 7 or 8"); break;
            case 'F': if (f.rank != 4) bad("rank must be 4"); break;
            case 'G': if (f.rank != 2) bad("rank must be 2"); break;
            default: bad("unknown family");
        }
    }
}

CartanType CartanType::parse(std::string_view text) {
    std::vector<CartanFactor> factors;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("CartanType: expected rank in '" + std::string(text) + "'");
        int rank = std::stoi(std::string(text.substr(start, pos - start)));
        factors.push_back({fam, rank});
        if (pos < text.size()) {
            if (text[pos] != 'x' && text[pos] != 'X' && text[pos] != '*')
                throw std::invalid_argument("CartanType: bad separator in '" + std::string(text) + "'");
            ++pos;
            if (pos == text.size()) throw std::invalid_argument("CartanType: trailing separator");
        }
    }
    return CartanType(std::move(factors));
}

int CartanType::rank() const {
    int r = 0;
    for (const auto& f : factors_) r += f.rank;
    return r;
}

std::string CartanType::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += 'x';
        s += factors_[i].family;
        s += std::to_string(factors_[i].rank);
    }
    return s;
}

// IntMatrix

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            int a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    IntVector r(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

std::size_t WeylEltHash::operator()(const WeylElt& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : w.matrix().data()) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(x + 1024));
        h *= 0x100000001b3ULL;
    }
    return h;
}

// RootDatum

namespace {

IntMatrix irreducible_cartan(const CartanFactor& f) {
    const int n = f.rank;
    IntMatrix a(n);
    for (int i = 0; i < n; ++i) a(i, i) = 2;
    auto edge = [&](int i, int j) { a(i, j) = -1; a(j, i) = -1; };
    switch (f.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case 'B':  // alpha_n short
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            a(n - 1, n - 2) = -2;
            break;
        case 'C':  // alpha_n long
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            a(n - 2, n - 1) = -2;
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 3, n - 1);
            break;
        case 'E':  // Bourbaki: 1-3-4-5-..., 2 attached to 4
            edge(0, 2);
            edge(1, 3);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case 'F':  // alpha_1, alpha_2 long
            edge(0, 1);
            edge(1, 2);
            edge(2, 3);
            a(2, 1) = -2;
            break;
        case 'G':  // alpha_1 short
            a(0, 1) = -3;
            a(1, 0) = -1;
            break;
        default:
            throw std::invalid_argument("unknown Cartan family");
    }
    return a;
}

bool all_nonneg(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

IntVector negated(IntVector v) {
    for (int& x : v) x = -x;
    return v;
}

/// Inverse of an integer matrix that is known to be unimodular.
IntMatrix unimodular_inverse(const IntMatrix& m) {
    const int n = m.dim();
    std::vector<std::vector<Rational>> aug(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(2 * n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = Rational(m(i, j));
        aug[i][n + i] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && aug[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("unimodular_inverse: singular matrix");
        std::swap(aug[piv], aug[col]);
        Rational p = aug[col][col];
        for (auto& x : aug[col]) x /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col].is_zero()) continue;
            Rational f = aug[r][col];
            for (int j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    IntMatrix inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& x = aug[i][n + j];
            if (!x.is_integer()) throw std::domain_error("unimodular_inverse: matrix not unimodular");
            inv(i, j) = static_cast<int>(x.numerator());
        }
    return inv;
}

}  // namespace

RootDatum::RootDatum(const CartanType& type) : type_(type), rank_(type.rank()), cartan_(type.rank()) {
    int offset = 0;
    for (const auto& f : type.factors()) {
        IntMatrix block = irreducible_cartan(f);
        for (int i = 0; i < f.rank; ++i)
            for (int j = 0; j < f.rank; ++j) cartan_(offset + i, offset + j) = block(i, j);
        offset += f.rank;
    }
    const auto r = static_cast<std::size_t>(rank_);

    // s_j(y) = y - <y, alpha_j> a_j with <y, alpha_j> = sum_k y_k A[k][j].
    auto reflect_y = [&](int j, IntVector y) {
        int p = 0;
        for (int k = 0; k < rank_; ++k) p += y[static_cast<std::size_t>(k)] * cartan_(k, j);
        y[static_cast<std::size_t>(j)] -= p;
        return y;
    };
    // s_j(alpha) = alpha - <a_j, alpha> alpha_j with <a_j, alpha> = sum_k A[j][k] alpha_k.
    auto reflect_x_root = [&](int j, IntVector x) {
        int p = 0;
        for (int k = 0; k < rank_; ++k) p += cartan_(j, k) * x[static_cast<std::size_t>(k)];
        x[static_cast<std::size_t>(j)] -= p;
        return x;
    };

    struct Found {
        IntVector coords;
        CorootWitness witness;
    };
    std::vector<Found> found;
    std::map<IntVector, std::size_t> seen;
    std::deque<std::size_t> queue;
    for (int i = 0; i < rank_; ++i) {
        IntVector e(r, 0);
        e[static_cast<std::size_t>(i)] = 1;
        seen.emplace(e, found.size());
        queue.push_back(found.size());
        found.push_back({e, {{}, i}});
    }
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (int j = 0; j < rank_; ++j) {
            IntVector img = reflect_y(j, found[cur].coords);
            if (!all_nonneg(img) || seen.count(img)) continue;
            CorootWitness w = found[cur].witness;
            w.word.insert(w.word.begin(), j);
            seen.emplace(img, found.size());
            queue.push_back(found.size());
            found.push_back({img, std::move(w)});
        }
    }
    auto height = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), 0); };
    std::stable_sort(found.begin(), found.end(), [&](const Found& a, const Found& b) {
        int ha = height(a.coords), hb = height(b.coords);
        if (ha != hb) return ha < hb;
        return a.coords > b.coords;  // simple coroots come out as a_1, a_2, ...
    });

    positive_count_ = found.size();
    for (auto& f : found) {
        coroots_.push_back(f.coords);
        IntVector root(r, 0);
        root[static_cast<std::size_t>(f.witness.simple)] = 1;
        for (auto it = f.witness.word.rbegin(); it != f.witness.word.rend(); ++it) root = reflect_x_root(*it, root);
        if (!all_nonneg(root)) throw std::logic_error("RootDatum: root/coroot witness mismatch");
        positive_roots_.push_back(std::move(root));
        witnesses_.push_back(std::move(f.witness));
    }
    for (std::size_t i = 0; i < positive_count_; ++i) coroots_.push_back(negated(coroots_[i]));
    for (std::size_t i = 0; i < coroots_.size(); ++i) coroot_lookup_.emplace(coroots_[i], static_cast<int>(i));

    simple_on_coroots_.assign(r, std::vector<int>(coroots_.size()));
    for (int i = 0; i < rank_; ++i) {
        for (std::size_t c = 0; c < coroots_.size(); ++c) {
            int img = coroot_index(reflect_y(i, coroots_[c]));
            if (img < 0) throw std::logic_error("RootDatum: coroot set not closed under reflections");
            simple_on_coroots_[static_cast<std::size_t>(i)][c] = img;
        }
        IntMatrix s = IntMatrix::identity(rank_);
        for (int k = 0; k < rank_; ++k) s(k, i) -= cartan_(k, i);
        simple_.emplace_back(std::move(s));
    }
}

int RootDatum::negate_coroot(int c) const {
    auto p = static_cast<int>(positive_count_);
    return c < p ? c + p : c - p;
}

int RootDatum::coroot_index(const IntVector& coords) const {
    auto it = coroot_lookup_.find(coords);
    return it == coroot_lookup_.end() ? -1 : it->second;
}

int RootDatum::coxeter_order(int i, int j) const {
    IntMatrix st = simple_[static_cast<std::size_t>(i)].matrix() * simple_[static_cast<std::size_t>(j)].matrix();
    IntMatrix p = st;
    const IntMatrix id = IntMatrix::identity(rank_);
    for (int k = 1; k <= 12; ++k) {
        if (p == id) return k;
        p = p * st;
    }
    throw std::logic_error("RootDatum: Coxeter order exceeds 12");
}

IntVector RootDatum::act_on_coroot(const WeylElt& w, const IntVector& coroot) const {
    return unimodular_inverse(w.matrix()).transpose() * coroot;
}

long RootDatum::pairing(const IntVector& y, const IntVector& x) {
    long s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += static_cast<long>(y[i]) * x[i];
    return s;
}

int RootDatum::length(const WeylElt& w) const {
    IntMatrix ycontra = unimodular_inverse(w.matrix()).transpose();
    int n = 0;
    for (std::size_t c = 0; c < positive_count_; ++c)
        if (!all_nonneg(ycontra * coroots_[c])) ++n;
    return n;
}

std::vector<int> RootDatum::reduced_word(const WeylElt& w) const {
    std::vector<int> word;
    WeylElt cur = w;
    int len = length(cur);
    while (len > 0) {
        bool stepped = false;
        for (int i = 0; i < rank_ && !stepped; ++i) {
            WeylElt next = simple_[static_cast<std::size_t>(i)] * cur;
            if (length(next) < len) {
                word.push_back(i);
                cur = std::move(next);
                --len;
                stepped = true;
            }
        }
        if (!stepped) throw std::logic_error("RootDatum::reduced_word: no descent found");
    }
    return word;
}

WeylElt RootDatum::from_word(const std::vector<int>& word) const {
    WeylElt w = identity();
    for (int i : word) w = w * simple_.at(static_cast<std::size_t>(i));
    return w;
}

WeylElt RootDatum::identity() const { return WeylElt(IntMatrix::identity(rank_)); }

WeylElt RootDatum::inverse(const WeylElt& w) const { return WeylElt(unimodular_inverse(w.matrix())); }

// WeylGroup

WeylGroup::WeylGroup(const RootDatum& datum, std::size_t max_order, int max_rank) : datum_(datum) {
    if (datum_.rank() > max_rank)
        throw std::length_error("WeylGroup: rank " + std::to_string(datum_.rank()) + " exceeds the cap " +
                                std::to_string(max_rank));
    const std::size_t r = rank_u();
    const std::size_t ncor = datum_.coroots().size();

    // Breadth-first over left multiplication by simple reflections; distance = length.
    std::vector<WeylElt> elems{datum_.identity()};
    std::vector<int> dist{0};
    std::vector<std::int16_t> perms(ncor);
    for (std::size_t c = 0; c < ncor; ++c) perms[c] = static_cast<std::int16_t>(c);
    std::unordered_map<WeylElt, ElemId, WeylEltHash> seen{{elems[0], 0}};
    std::vector<ElemId> lmul;
    for (std::size_t cur = 0; cur < elems.size(); ++cur) {
        for (std::size_t i = 0; i < r; ++i) {
            WeylElt next = datum_.simple_reflection(static_cast<int>(i)) * elems[cur];
            auto [it, inserted] = seen.emplace(next, static_cast<ElemId>(elems.size()));
            if (inserted) {
                if (elems.size() >= max_order)
                    throw std::length_error("WeylGroup: order exceeds the cap " + std::to_string(max_order));
                elems.push_back(std::move(next));
                dist.push_back(dist[cur] + 1);
                for (std::size_t c = 0; c < ncor; ++c)
                    perms.push_back(static_cast<std::int16_t>(
                        datum_.reflect_coroot(static_cast<int>(i), perms[cur * ncor + c])));
            }
            lmul.push_back(it->second);
        }
    }

    // Relabel in lexicographic order of matrices.
    const std::size_t n = elems.size();
    std::vector<ElemId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](ElemId a, ElemId b) { return elems[a] < elems[b]; });
    std::vector<ElemId> relabel(n);
    for (std::size_t k = 0; k < n; ++k) relabel[order[k]] = static_cast<ElemId>(k);

    elements_.resize(n);
    length_.resize(n);
    coroot_perm_.resize(n * ncor);
    lmul_.resize(n * r);
    for (std::size_t old = 0; old < n; ++old) {
        const ElemId nw = relabel[old];
        elements_[nw] = elems[old];
        length_[nw] = dist[old];
        std::copy_n(perms.begin() + static_cast<std::ptrdiff_t>(old * ncor), ncor,
                    coroot_perm_.begin() + static_cast<std::ptrdiff_t>(nw * ncor));
        for (std::size_t i = 0; i < r; ++i) lmul_[nw * r + i] = relabel[lmul[old * r + i]];
    }
    for (std::size_t k = 0; k < n; ++k) index_.emplace(elements_[k], static_cast<ElemId>(k));
    identity_ = index_.at(datum_.identity());
    for (std::size_t i = 0; i < r; ++i) simple_ids_.push_back(lmul_[identity_ * r + i]);

    first_descent_.assign(n, -1);
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t i = 0; i < r; ++i)
            if (length_[lmul_[w * r + i]] < length_[w]) {
                first_descent_[w] = static_cast<std::int8_t>(i);
                break;
            }

    rmul_.resize(n * r);
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t i = 0; i < r; ++i)
            rmul_[w * r + i] = index_.at(elements_[w] * datum_.simple_reflection(static_cast<int>(i)));

    // inverse(s_i w) = inverse(w) s_i, filled in order of increasing length.
    std::vector<ElemId> by_length(n);
    std::iota(by_length.begin(), by_length.end(), 0);
    std::stable_sort(by_length.begin(), by_length.end(), [&](ElemId a, ElemId b) { return length_[a] < length_[b]; });
    inverse_.assign(n, identity_);
    for (ElemId w : by_length) {
        if (w == identity_) continue;
        const int i = first_descent_[w];
        const ElemId rest = lmul_[w * r + static_cast<std::size_t>(i)];
        inverse_[w] = rmul_[inverse_[rest] * r + static_cast<std::size_t>(i)];
    }

    for (std::size_t b = 0; b < datum_.positive_coroot_count(); ++b) {
        const auto& wit = datum_.witness(static_cast<int>(b));
        ElemId w = from_word(wit.word);
        reflections_.push_back(mul(mul(w, simple(wit.simple)), inverse(w)));
    }
}

ElemId WeylGroup::id(const WeylElt& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("WeylGroup::id: matrix is not a group element");
    return it->second;
}

ElemId WeylGroup::mul(ElemId a, ElemId b) const {
    ElemId cur = a;
    while (b != identity_) {
        const int i = first_descent_[b];
        cur = right_mul_simple(cur, i);
        b = left_mul_simple(i, b);
    }
    return cur;
}

std::vector<int> WeylGroup::reduced_word(ElemId w) const {
    std::vector<int> word;
    while (w != identity_) {
        const int i = first_descent_[w];
        word.push_back(i);
        w = left_mul_simple(i, w);
    }
    return word;
}

ElemId WeylGroup::from_word(const std::vector<int>& word) const {
    ElemId w = identity_;
    for (int i : word) {
        if (i < 0 || i >= rank()) throw std::out_of_range("WeylGroup::from_word: generator index");
        w = right_mul_simple(w, i);
    }
    return w;
}

ElemId WeylGroup::reflection(int coroot) const {
    int c = datum_.is_positive_coroot(coroot) ? coroot : datum_.negate_coroot(coroot);
    return reflections_.at(static_cast<std::size_t>(c));
}

std::vector<ElemId> WeylGroup::involutions() const {
    std::vector<ElemId> out;
    for (ElemId w = 0; w < size(); ++w)
        if (inverse_[w] == w) out.push_back(w);
    return out;
}

std::vector<WeylElt> weyl_generate(const RootDatum& datum) { return WeylGroup(datum).elements(); }

std::vector<WeylElt> involutions(const RootDatum& datum) {
    WeylGroup g(datum);
    std::vector<WeylElt> out;
    for (ElemId w : g.involutions()) out.push_back(g.element(w));
    return out;
}

}  // namespace hecke
