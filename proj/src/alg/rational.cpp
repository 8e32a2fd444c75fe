#include "fw/alg/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace fw::alg {

namespace {

wide_int gcd128(wide_int a, wide_int b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(wide_int v)
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d)
{
    *this = from_wide(n, d);
}

Rational Rational::from_wide(wide_int n, wide_int d)
{
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    wide_int g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (!fits64(n) || !fits64(d)) throw std::overflow_error("rational coefficient exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    if (den_ == o.den_) {
        *this = from_wide(static_cast<wide_int>(num_) + o.num_, den_);
        return *this;
    }
    wide_int n = static_cast<wide_int>(num_) * o.den_ + static_cast<wide_int>(o.num_) * den_;
    wide_int d = static_cast<wide_int>(den_) * o.den_;
    *this = from_wide(n, d);
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    return *this += -o;
}

Rational& Rational::operator*=(const Rational& o)
{
    if (num_ == 0 || o.num_ == 0) {
        *this = Rational();
        return *this;
    }
    *this = from_wide(static_cast<wide_int>(num_) * o.num_, static_cast<wide_int>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    *this = from_wide(static_cast<wide_int>(num_) * o.den_, static_cast<wide_int>(den_) * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    wide_int l = static_cast<wide_int>(a.num_) * b.den_;
    wide_int r = static_cast<wide_int>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const
{
    if (den_ == 1) return fmt::format("{}", num_);
    return fmt::format("{}/{}", num_, den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Complex& Complex::operator*=(const Complex& o)
{
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
}

Complex& Complex::operator/=(const Complex& o)
{
    Rational n = o.re * o.re + o.im * o.im;
    if (n.is_zero()) throw std::domain_error("complex division by zero");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

std::string Complex::to_string() const
{
    if (im.is_zero()) return re.to_string();
    if (re.is_zero()) {
        if (im == Rational(1)) return "i";
        if (im == Rational(-1)) return "-i";
        return im.to_string() + "*i";
    }
    return fmt::format("({}{}{}*i)", re.to_string(), im < Rational(0) ? "" : "+", im.to_string());
}

std::ostream& operator<<(std::ostream& os, const Complex& c)
{
    return os << c.to_string();
}

Complex i_pow(int n)
{
    switch (((n % 4) + 4) % 4) {
    case 0: return {1};
    case 1: return {0, 1};
    case 2: return {-1};
    default: return {0, -1};
    }
}

}  // namespace fw::alg
