#include "dynamo/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace dynamo {

namespace {

using boost::multiprecision::cpp_int;

std::int64_t narrow(const cpp_int& x)
{
    if (x < std::numeric_limits<std::int64_t>::min() || x > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("rational component exceeds 64 bits");
    return x.convert_to<std::int64_t>();
}

std::int64_t parse_int(std::string_view text)
{
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    cpp_int n(numerator);
    cpp_int d(denominator);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    value_ = boost::multiprecision::cpp_rational(n, d);
}

std::int64_t Rational::numerator() const
{
    return narrow(boost::multiprecision::numerator(value_));
}

std::int64_t Rational::denominator() const
{
    return narrow(boost::multiprecision::denominator(value_));
}

bool Rational::is_integer() const
{
    return boost::multiprecision::denominator(value_) == 1;
}

std::int64_t Rational::floor() const
{
    const cpp_int n = boost::multiprecision::numerator(value_);
    const cpp_int d = boost::multiprecision::denominator(value_);
    cpp_int q = n / d;
    if (n % d != 0 && n < 0)
        --q;
    return narrow(q);
}

std::int64_t Rational::ceil() const
{
    const cpp_int n = boost::multiprecision::numerator(value_);
    const cpp_int d = boost::multiprecision::denominator(value_);
    cpp_int q = n / d;
    if (n % d != 0 && n > 0)
        ++q;
    return narrow(q);
}

std::string Rational::str() const
{
    return boost::multiprecision::numerator(value_).str() + "/" + boost::multiprecision::denominator(value_).str();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.value_ == 0)
        throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
{
    if (lhs.value_ < rhs.value_)
        return std::strong_ordering::less;
    if (lhs.value_ > rhs.value_)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

}  // namespace dynamo
