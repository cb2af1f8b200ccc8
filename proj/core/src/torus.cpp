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

#include "hecke/torus.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

// TorusPoint

TorusPoint TorusPoint::parse(const std::string& text) {
    std::vector<RatMod1> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coords.emplace_back(Rational::parse(item));
    if (coords.empty()) throw std::invalid_argument("TorusPoint: empty coordinate list");
    return TorusPoint(std::move(coords));
}

bool TorusPoint::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const RatMod1& x) { return x.is_zero(); });
}

Rational::Integer TorusPoint::order() const {
    Rational::Integer n = 1;
    for (const auto& c : coords_) {
        Rational::Integer d = c.value().denominator();
        n = n / boost::multiprecision::gcd(n, d) * d;
    }
    return n;
}

std::string TorusPoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ", ";
        s += coords_[i].to_string();
    }
    return s + ")";
}

TorusPoint TorusPoint::operator-() const {
    std::vector<RatMod1> c;
    for (const auto& x : coords_) c.push_back(-x);
    return TorusPoint(std::move(c));
}

TorusPoint operator+(const TorusPoint& a, const TorusPoint& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("TorusPoint: rank mismatch");
    std::vector<RatMod1> c;
    for (std::size_t i = 0; i < a.coords_.size(); ++i) c.push_back(a.coords_[i] + b.coords_[i]);
    return TorusPoint(std::move(c));
}

TorusPoint operator*(std::int64_t n, const TorusPoint& p) {
    std::vector<RatMod1> c;
    for (const auto& x : p.coords_) c.push_back(n * x);
    return TorusPoint(std::move(c));
}

RatMod1 pair(const IntVector& coroot, const TorusPoint& point) {
    if (static_cast<int>(coroot.size()) != point.rank()) throw std::invalid_argument("pair: rank mismatch");
    RatMod1 s;
    for (std::size_t i = 0; i < coroot.size(); ++i) s += coroot[i] * point[i];
    return s;
}

TorusPoint act(const WeylElt& w, const TorusPoint& point) {
    const IntMatrix& m = w.matrix();
    if (m.dim() != point.rank()) throw std::invalid_argument("act: rank mismatch");
    std::vector<RatMod1> out;
    for (int i = 0; i < m.dim(); ++i) {
        RatMod1 s;
        for (int j = 0; j < m.dim(); ++j) s += m(i, j) * point[static_cast<std::size_t>(j)];
        out.push_back(s);
    }
    return TorusPoint(std::move(out));
}

bool in_xbar_m(const TorusPoint& point, int m) {
    if (m < 1) throw std::invalid_argument("in_xbar_m: m must be >= 1");
    return (static_cast<std::int64_t>(m) * m - 1) * point == TorusPoint::zero(point.rank());
}

std::vector<TorusPoint> enumerate_xbar(int rank, int N) {
    if (N < 1) throw std::invalid_argument("enumerate_xbar: N must be >= 1");
    std::vector<TorusPoint> out;
    std::vector<int> k(static_cast<std::size_t>(rank), 0);
    while (true) {
        std::vector<RatMod1> c;
        for (int x : k) c.emplace_back(x, N);
        out.emplace_back(std::move(c));
        int pos = rank - 1;
        while (pos >= 0 && ++k[static_cast<std::size_t>(pos)] == N) k[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    return out;
}

std::vector<std::vector<TorusPoint>> orbits(const RootDatum& datum, const std::vector<TorusPoint>& points) {
    std::set<TorusPoint> all(points.begin(), points.end());
    std::set<TorusPoint> done;
    std::vector<std::vector<TorusPoint>> out;
    for (const auto& start : all) {
        if (done.count(start)) continue;
        std::set<TorusPoint> orbit{start};
        std::deque<TorusPoint> queue{start};
        while (!queue.empty()) {
            TorusPoint p = queue.front();
            queue.pop_front();
            for (int i = 0; i < datum.rank(); ++i) {
                TorusPoint q = act(datum.simple_reflection(i), p);
                if (!all.count(q)) throw std::invalid_argument("orbits: point set is not W-closed at " + q.to_string());
                if (orbit.insert(q).second) queue.push_back(q);
            }
        }
        done.insert(orbit.begin(), orbit.end());
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;  // std::set iteration already yields orbits ordered by least element
}

// TorusLattice

namespace {
int mod(long a, int n) {
    long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}
}  // namespace

TorusLattice::TorusLattice(const WeylGroup& group, int N) : group_(&group), N_(N) {
    if (N < 1) throw std::invalid_argument("TorusLattice: N must be >= 1");
    size_ = 1;
    for (int i = 0; i < rank(); ++i) {
        size_ *= static_cast<std::size_t>(N);
        if (size_ > (std::size_t{1} << 26)) throw std::length_error("TorusLattice: too many points");
    }
    simple_act_.resize(static_cast<std::size_t>(rank()) * size_);
    for (int i = 0; i < rank(); ++i) {
        const IntMatrix& m = group.datum().simple_reflection(i).matrix();
        for (PointId p = 0; p < size_; ++p) simple_act_[static_cast<std::size_t>(i) * size_ + p] = from_numerators(m * numerators(p));
    }
    little_.reserve(size_);
    for (PointId p = 0; p < size_; ++p) little_.push_back(build_little(p));
}

std::vector<int> TorusLattice::numerators(PointId p) const {
    std::vector<int> k(static_cast<std::size_t>(rank()));
    for (int i = rank() - 1; i >= 0; --i) {
        k[static_cast<std::size_t>(i)] = static_cast<int>(p % static_cast<PointId>(N_));
        p /= static_cast<PointId>(N_);
    }
    return k;
}

PointId TorusLattice::from_numerators(const std::vector<int>& k) const {
    PointId p = 0;
    for (int x : k) p = p * static_cast<PointId>(N_) + static_cast<PointId>(mod(x, N_));
    return p;
}

TorusPoint TorusLattice::point(PointId p) const {
    std::vector<RatMod1> c;
    for (int x : numerators(p)) c.emplace_back(x, N_);
    return TorusPoint(std::move(c));
}

PointId TorusLattice::id(const TorusPoint& p) const {
    if (p.rank() != rank()) throw std::invalid_argument("TorusLattice::id: rank mismatch");
    std::vector<int> k;
    for (const auto& c : p.coords()) {
        Rational scaled = c.value() * Rational(N_);
        if (!scaled.is_integer())
            throw std::invalid_argument("TorusLattice::id: denominator of " + p.to_string() + " does not divide " +
                                        std::to_string(N_));
        k.push_back(static_cast<int>(scaled.numerator()));
    }
    return from_numerators(k);
}

PointId TorusLattice::act(ElemId w, PointId p) const {
    return from_numerators(group_->element(w).matrix() * numerators(p));
}

PointId TorusLattice::scale(std::int64_t n, PointId p) const {
    std::vector<int> k = numerators(p);
    for (int& x : k) x = mod(static_cast<long>((n % N_) * x), N_);
    return from_numerators(k);
}

PointId TorusLattice::add(PointId a, PointId b) const {
    std::vector<int> ka = numerators(a), kb = numerators(b);
    for (std::size_t i = 0; i < ka.size(); ++i) ka[i] += kb[i];
    return from_numerators(ka);
}

int TorusLattice::pair_numerator(int coroot, PointId p) const {
    const IntVector& c = group_->datum().coroots()[static_cast<std::size_t>(coroot)];
    return mod(RootDatum::pairing(c, numerators(p)), N_);
}

bool TorusLattice::in_xbar_m(PointId p, int m) const {
    if (m < 1) throw std::invalid_argument("in_xbar_m: m must be >= 1");
    return scale(static_cast<std::int64_t>(m) * m - 1, p) == zero();
}

LittleWeylData TorusLattice::build_little(PointId p) const {
    const RootDatum& d = group_->datum();
    LittleWeylData out;
    out.base = p;
    out.in_subsystem.assign(d.coroots().size(), false);
    const std::vector<int> k = numerators(p);
    for (std::size_t c = 0; c < d.coroots().size(); ++c) {
        if (mod(RootDatum::pairing(d.coroots()[c], k), N_) != 0) continue;
        out.coroots.push_back(static_cast<int>(c));
        out.in_subsystem[c] = true;
        if (d.is_positive_coroot(static_cast<int>(c))) out.positives.push_back(static_cast<int>(c));
    }
    std::set<int> decomposable;
    for (std::size_t a = 0; a < out.positives.size(); ++a)
        for (std::size_t b = a; b < out.positives.size(); ++b) {
            IntVector sum = d.coroots()[static_cast<std::size_t>(out.positives[a])];
            const IntVector& y = d.coroots()[static_cast<std::size_t>(out.positives[b])];
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y[i];
            int idx = d.coroot_index(sum);
            if (idx >= 0) decomposable.insert(idx);
        }
    for (int c : out.positives)
        if (!decomposable.count(c)) {
            out.simples.push_back(c);
            out.generators.push_back(group_->reflection(c));
        }
    return out;
}

ElemId TorusLattice::min_coset(ElemId w, PointId lambda) const {
    const LittleWeylData& lw = little_[lambda];
    const RootDatum& d = group_->datum();
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t k = 0; k < lw.simples.size(); ++k) {
            if (!d.is_positive_coroot(group_->coroot_image(w, lw.simples[k]))) {
                w = group_->mul(w, lw.generators[k]);
                moved = true;
            }
        }
    }
    return w;
}

int TorusLattice::length_lambda(ElemId u, PointId lambda) const {
    if (!in_little_weyl(u, lambda)) throw std::invalid_argument("length_lambda: element not in W_lambda");
    const RootDatum& d = group_->datum();
    int n = 0;
    for (int b : little_[lambda].positives)
        if (!d.is_positive_coroot(group_->coroot_image(u, b))) ++n;
    return n;
}

std::vector<int> TorusLattice::little_reduced_word(ElemId u, PointId lambda) const {
    if (!in_little_weyl(u, lambda)) throw std::invalid_argument("little_reduced_word: element not in W_lambda");
    const LittleWeylData& lw = little_[lambda];
    const RootDatum& d = group_->datum();
    std::vector<int> word;
    while (u != group_->identity()) {
        // sigma_b is a left descent of u iff u^{-1}(b) is negative.
        const ElemId uinv = group_->inverse(u);
        bool stepped = false;
        for (std::size_t k = 0; k < lw.simples.size(); ++k) {
            if (!d.is_positive_coroot(group_->coroot_image(uinv, lw.simples[k]))) {
                word.push_back(static_cast<int>(k));
                u = group_->mul(lw.generators[k], u);
                stepped = true;
                break;
            }
        }
        if (!stepped) throw std::logic_error("little_reduced_word: no descent");
    }
    return word;
}

bool TorusLattice::bracket_contains(PointId target, ElemId z, PointId source) const {
    return act(z, source) == target && min_coset(z, source) == z;
}

std::vector<std::vector<PointId>> TorusLattice::orbits() const {
    std::vector<bool> seen(size_, false);
    std::vector<std::vector<PointId>> out;
    for (PointId start = 0; start < size_; ++start) {
        if (seen[start]) continue;
        std::vector<PointId> orbit{start};
        seen[start] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (int i = 0; i < rank(); ++i) {
                PointId q = act_simple(i, orbit[k]);
                if (!seen[q]) {
                    seen[q] = true;
                    orbit.push_back(q);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

LittleWeylData little_weyl(const TorusLattice& lattice, const TorusPoint& lambda) {
    return lattice.little_weyl(lattice.id(lambda));
}

int length_lambda(const TorusLattice& lattice, const WeylElt& u, const TorusPoint& lambda) {
    return lattice.length_lambda(lattice.group().id(u), lattice.id(lambda));
}

WeylElt min_coset(const TorusLattice& lattice, const WeylElt& w, const TorusPoint& lambda) {
    return lattice.group().element(lattice.min_coset(lattice.group().id(w), lattice.id(lambda)));
}

bool bracket_contains(const TorusLattice& lattice, const TorusPoint& target, const WeylElt& z,
                      const TorusPoint& source) {
    return lattice.bracket_contains(lattice.id(target), lattice.group().id(z), lattice.id(source));
}

}  // namespace hecke
