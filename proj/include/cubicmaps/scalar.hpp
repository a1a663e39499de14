#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace cubicmaps {

/// Exact arbitrary-precision rational scalar.
using Rational = mpq_class;
/// Default floating scalar (64-bit mantissa, 15-bit exponent; counts up to ~1e4900 fit).
using Real = long double;

struct DivisionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Element a + b*sqrt(3) of the quadratic field Q(sqrt 3).
class QSqrt3 {
public:
    QSqrt3() = default;
    QSqrt3(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QSqrt3(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt3 sqrt3() { return {0, 1}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt3_part() const { return b_; }

    QSqrt3& operator+=(const QSqrt3& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QSqrt3& operator-=(const QSqrt3& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QSqrt3& operator*=(const QSqrt3& o)
    {
        Rational a = a_ * o.a_ + 3 * b_ * o.b_;
        b_ = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        return *this;
    }
    QSqrt3& operator/=(const QSqrt3& o)
    {
        Rational norm = o.a_ * o.a_ - 3 * o.b_ * o.b_;
        if (norm == 0) throw DivisionError("QSqrt3: division by zero");
        *this *= QSqrt3(o.a_ / norm, -o.b_ / norm);
        return *this;
    }
    friend QSqrt3 operator+(QSqrt3 x, const QSqrt3& y) { return x += y; }
    friend QSqrt3 operator-(QSqrt3 x, const QSqrt3& y) { return x -= y; }
    friend QSqrt3 operator*(QSqrt3 x, const QSqrt3& y) { return x *= y; }
    friend QSqrt3 operator/(QSqrt3 x, const QSqrt3& y) { return x /= y; }
    friend QSqrt3 operator-(const QSqrt3& x) { return {-x.a_, -x.b_}; }
    friend bool operator==(const QSqrt3& x, const QSqrt3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QSqrt3& x, const QSqrt3& y) { return !(x == y); }

    /// Evaluated in 256-bit floats, so cancellation between the parts costs nothing.
    long double to_real() const
    {
        mpf_class x(a_, 256), r(3, 256);
        r = sqrt(r);
        x += mpf_class(b_, 256) * r;
        const double hi = x.get_d();
        x -= hi;
        return static_cast<long double>(hi) + static_cast<long double>(x.get_d());
    }
    std::string str() const { return a_.get_str() + "+" + b_.get_str() + "*sqrt3"; }

private:
    Rational a_ = 0;
    Rational b_ = 0;
};

// ---------------------------------------------------------------------------
// Scalar traits.  Generic series/polynomial code only relies on the free
// functions below, so nested coefficient rings (polynomials in markers) can
// provide their own overloads.

template <class T> struct is_exact : std::false_type {};
template <> struct is_exact<Rational> : std::true_type {};
template <> struct is_exact<QSqrt3> : std::true_type {};
template <class T> inline constexpr bool is_exact_v = is_exact<T>::value;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const QSqrt3& x) { return x == QSqrt3(0); }
inline bool is_zero(Real x) { return x == 0; }

inline Rational divide_exact(const Rational& a, const Rational& b)
{
    if (is_zero(b)) throw DivisionError("division by zero");
    return a / b;
}
inline QSqrt3 divide_exact(const QSqrt3& a, const QSqrt3& b) { return a / b; }
inline Real divide_exact(Real a, Real b)
{
    if (b == 0) throw DivisionError("division by zero");
    return a / b;
}

inline void mul_add(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
inline void mul_add(QSqrt3& acc, const QSqrt3& a, const QSqrt3& b) { acc += a * b; }
inline void mul_add(Real& acc, Real a, Real b) { acc += a * b; }

inline long double to_real(const Rational& x) { return x.get_d(); }
inline long double to_real(const QSqrt3& x) { return x.to_real(); }
inline long double to_real(Real x) { return x; }

/// Rational to long double with ~106 correct bits (get_d alone only yields a double).
inline long double rational_to_real(const Rational& x)
{
    mpf_class f(x, 192);
    long exp = 0;
    mpf_get_d_2exp(&exp, f.get_mpf_t());
    mpf_class m(0, 192);
    if (exp >= 0)
        mpf_div_2exp(m.get_mpf_t(), f.get_mpf_t(), static_cast<unsigned long>(exp));
    else
        mpf_mul_2exp(m.get_mpf_t(), f.get_mpf_t(), static_cast<unsigned long>(-exp));
    double hi = m.get_d();
    mpf_class rem(m - hi, 192);
    double lo = rem.get_d();
    return std::ldexp(static_cast<long double>(hi) + static_cast<long double>(lo), static_cast<int>(exp));
}

inline long double magnitude(const Rational& x) { return std::fabs(rational_to_real(x)); }
inline long double magnitude(const QSqrt3& x) { return std::fabs(x.to_real()); }
inline long double magnitude(Real x) { return std::fabs(x); }

inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const QSqrt3& x) { return x.str(); }
std::string to_string(Real x);

/// Conversion between scalar backends (exact -> float is lossy, float -> exact is refused).
template <class To, class From>
To scalar_cast(const From& x)
{
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (std::is_same_v<To, Real>) {
        if constexpr (std::is_same_v<From, Rational>) return rational_to_real(x);
        else return to_real(x);
    } else if constexpr (std::is_same_v<To, QSqrt3> && std::is_same_v<From, Rational>) {
        return QSqrt3(x);
    } else {
        static_assert(sizeof(To) == 0, "unsupported scalar conversion");
    }
}

} // namespace cubicmaps
