#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace fw::alg {

__extension__ typedef __int128 wide_int;

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always stored reduced with a positive denominator. Intermediate products
/// are formed in 128 bits; a result that does not fit back into 64 bits
/// throws std::overflow_error rather than wrapping.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    Rational abs() const noexcept { return num_ < 0 ? -*this : *this; }

    std::string to_string() const;

    Rational operator-() const noexcept
    {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(wide_int n, wide_int d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Gaussian rational a + b i.
struct Complex {
    Rational re;
    Rational im;

    constexpr Complex() noexcept = default;
    constexpr Complex(Rational r) noexcept : re(r) {}  // NOLINT(implicit)
    constexpr Complex(std::int64_t r) noexcept : re(r) {}  // NOLINT(implicit)
    constexpr Complex(Rational r, Rational i) noexcept : re(r), im(i) {}

    static Complex i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
    bool is_real() const noexcept { return im.is_zero(); }
    Complex conj() const { return {re, -im}; }

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend bool operator==(const Complex&, const Complex&) = default;

    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Complex& c);

/// i^n for integer n.
Complex i_pow(int n);

}  // namespace fw::alg
