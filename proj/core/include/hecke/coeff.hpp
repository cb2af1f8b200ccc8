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

#ifndef HECKE_COEFF_HPP
#define HECKE_COEFF_HPP

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

/*
   Exact coefficient types.

   Rational    arbitrary precision, always reduced, positive denominator.
   RatMod1     a rational number in [0,1), arithmetic modulo the integers.
   LaurentPoly integer Laurent polynomial in v, stored densely as a lowest
               exponent plus a coefficient run whose ends are nonzero.
*/

class Rational {
public:
    using Integer = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    Rational(std::int64_t num, std::int64_t den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p/q" or "p".
    static Rational parse(std::string_view text);

    Integer numerator() const { return boost::multiprecision::numerator(value_); }
    Integer denominator() const { return boost::multiprecision::denominator(value_); }

    /// Largest integer not exceeding the value.
    Integer floor() const;
    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return value_ == 0; }

    /// Always "p/q", also for integers ("3/1").
    std::string to_string() const;

    Rational operator-() const { return Rational(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    using Value = boost::multiprecision::cpp_rational;
    explicit Rational(Value v) : value_(std::move(v)) {}
    Value value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

class RatMod1 {
public:
    RatMod1() = default;
    explicit RatMod1(const Rational& r);
    RatMod1(std::int64_t num, std::int64_t den) : RatMod1(Rational(num, den)) {}

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    std::string to_string() const { return value_.to_string(); }

    RatMod1 operator-() const { return RatMod1(-value_); }
    RatMod1& operator+=(const RatMod1& o) { *this = RatMod1(value_ + o.value_); return *this; }
    RatMod1& operator-=(const RatMod1& o) { *this = RatMod1(value_ - o.value_); return *this; }
    friend RatMod1 operator+(RatMod1 a, const RatMod1& b) { return a += b; }
    friend RatMod1 operator-(RatMod1 a, const RatMod1& b) { return a -= b; }
    friend RatMod1 operator*(std::int64_t n, const RatMod1& x) { return RatMod1(Rational(n) * x.value_); }

    friend bool operator==(const RatMod1& a, const RatMod1& b) { return a.value_ == b.value_; }
    friend bool operator<(const RatMod1& a, const RatMod1& b) { return a.value_ < b.value_; }

private:
    Rational value_;
};

std::ostream& operator<<(std::ostream& os, const RatMod1& r);

class LaurentPoly {
public:
    using Coeff = std::int64_t;

    LaurentPoly() = default;
    LaurentPoly(Coeff c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(int lo, std::vector<Coeff> coeffs);

    /// c * v^e.
    static LaurentPoly monomial(Coeff c, int e);
    static LaurentPoly v() { return monomial(1, 1); }
    static LaurentPoly v_inv() { return monomial(1, -1); }

    bool is_zero() const { return coeffs_.empty(); }
    int lo() const { return lo_; }
    /// Highest exponent; meaningless for zero.
    int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    Coeff coeff(int e) const;

    /// v -> v^{-1}.
    LaurentPoly bar() const;
    /// Sum of coefficients (value at v = 1).
    Coeff eval_one() const;

    /// Terms of strictly positive / zero / strictly negative degree.
    LaurentPoly positive_part() const;
    Coeff constant_term() const { return coeff(0); }
    LaurentPoly negative_part() const;

    /// True iff every exponent is <= -1 (zero qualifies).
    bool in_v_inv_z_v_inv() const { return is_zero() || hi() <= -1; }

    std::string to_string() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    void normalize();
    int lo_ = 0;
    std::vector<Coeff> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// The recurring coefficients of the module action.
namespace laurent {
LaurentPoly v_plus_v_inv();                  // v + v^-1
LaurentPoly v_minus_v_inv();                 // v - v^-1
LaurentPoly v2_minus_v_inv2();               // v^2 - v^-2
LaurentPoly v2_minus_v_inv2_minus_one();     // v^2 - v^-2 - 1
}  // namespace laurent

}  // namespace hecke

#endif  // HECKE_COEFF_HPP
