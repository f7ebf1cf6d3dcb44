#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dynamo {

/// Exact rational number in lowest terms with a positive denominator.
/// Arithmetic is arbitrary precision; the 64-bit accessors throw
/// std::overflow_error when a component does not fit.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);

    std::int64_t numerator() const;
    std::int64_t denominator() const;

    bool is_integer() const;
    std::int64_t floor() const;
    std::int64_t ceil() const;

    /// Always "p/q", including integers ("2/1").
    std::string str() const;
    /// Accepts "p/q" or a bare integer.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dynamo
