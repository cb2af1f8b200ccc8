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

#include "hecke/coeff.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow");
    return r;
}

}  // namespace

// Rational

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = den < 0 ? Value(Integer(-num), Integer(-den)) : Value(num, den);
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto to_int = [](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty integer");
        std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("Rational: malformed integer");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Rational: malformed integer '" + std::string(s) + "'");
        return Integer(std::string(s.front() == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(to_int(text), Integer(1));
    return Rational(to_int(trim(text.substr(0, slash))), to_int(trim(text.substr(slash + 1))));
}

Rational::Integer Rational::floor() const {
    Integer n = numerator(), d = denominator();
    Integer q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

std::string Rational::to_string() const {
    return numerator().str() + "/" + denominator().str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// RatMod1

RatMod1::RatMod1(const Rational& r) : value_(r - Rational(r.floor(), Rational::Integer(1))) {}

std::ostream& operator<<(std::ostream& os, const RatMod1& r) { return os << r.to_string(); }

// LaurentPoly

LaurentPoly::LaurentPoly(Coeff c) {
    if (c != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(int lo, std::vector<Coeff> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(Coeff c, int e) { return LaurentPoly(e, {c}); }

void LaurentPoly::normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    lo_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    while (coeffs_.back() == 0) coeffs_.pop_back();
}

Coeff LaurentPoly::coeff(int e) const {
    if (is_zero() || e < lo_ || e > hi()) return 0;
    return coeffs_[static_cast<std::size_t>(e - lo_)];
}

LaurentPoly LaurentPoly::bar() const {
    if (is_zero()) return {};
    std::vector<Coeff> c(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(-hi(), std::move(c));
}

Coeff LaurentPoly::eval_one() const {
    Coeff s = 0;
    for (Coeff c : coeffs_) s = checked_add(s, c);
    return s;
}

LaurentPoly LaurentPoly::positive_part() const {
    if (is_zero() || hi() <= 0) return {};
    int start = std::max(lo_, 1);
    std::vector<Coeff> c(coeffs_.begin() + (start - lo_), coeffs_.end());
    return LaurentPoly(start, std::move(c));
}

LaurentPoly LaurentPoly::negative_part() const {
    if (is_zero() || lo_ >= 0) return {};
    int stop = std::min(hi(), -1);
    std::vector<Coeff> c(coeffs_.begin(), coeffs_.begin() + (stop - lo_ + 1));
    return LaurentPoly(lo_, std::move(c));
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = hi(); e >= lo_; --e) {
        Coeff c = coeff(e);
        if (c == 0) continue;
        Coeff mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 'v';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (Coeff& c : r.coeffs_) c = checked_mul(c, -1);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(lo_, o.lo_);
    int hi = std::max(this->hi(), o.hi());
    std::vector<Coeff> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<std::size_t>(lo_ - lo)] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        auto& slot = c[i + static_cast<std::size_t>(o.lo_ - lo)];
        slot = checked_add(slot, o.coeffs_[i]);
    }
    lo_ = lo;
    coeffs_ = std::move(c);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    return LaurentPoly(a.lo_ + b.lo_, std::move(c));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

namespace laurent {
LaurentPoly v_plus_v_inv() { return LaurentPoly(-1, {1, 0, 1}); }
LaurentPoly v_minus_v_inv() { return LaurentPoly(-1, {-1, 0, 1}); }
LaurentPoly v2_minus_v_inv2() { return LaurentPoly(-2, {-1, 0, 0, 0, 1}); }
LaurentPoly v2_minus_v_inv2_minus_one() { return LaurentPoly(-2, {-1, 0, -1, 0, 1}); }
}  // namespace laurent

}  // namespace hecke
