#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubicmaps/series.hpp"

namespace cubicmaps {

/// Polynomial in (y, z) with coefficients in Q(sqrt 3); c[i] is the coefficient of y^i as a
/// polynomial in z.  Stored records only use integer coefficients a + b*sqrt3.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<std::vector<QSqrt3>> c) : c_(std::move(c)) { trim(); }

    /// Parse text such as "16z^2y^3 + (48z^2+8z)y^2 - 1" with implicit multiplication;
    /// `sqrt3` denotes the square root of 3.
    static BiPoly parse(const std::string& text, char y = 'y', char z = 'z');
    static BiPoly constant(QSqrt3 c);
    static BiPoly y_var();
    static BiPoly z_var();

    int deg_y() const { return static_cast<int>(c_.size()) - 1; }
    int deg_z() const;
    bool zero() const { return c_.empty(); }
    bool rational() const;
    bool integral() const;
    const QSqrt3& coeff(int i, int j) const;
    /// Coefficient of y^i as a univariate polynomial in z.
    std::vector<QSqrt3> y_coeff(int i) const;
    BiPoly derivative_y() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a) { return BiPoly() - a; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

    std::string str(char y = 'y', char z = 'z') const;

private:
    void trim();
    std::vector<std::vector<QSqrt3>> c_;
};

BiPoly pow(const BiPoly& p, int k);

/// A bivariate polynomial asserted to annihilate a named series.
struct MinimalPolynomialRecord {
    std::string series_name;
    std::string source;
    BiPoly poly;
    char y = 'y';
    char z = 'z';
};

/// A univariate polynomial whose root is a singularity or tail constant.
struct UnivariateRecord {
    std::string name;
    std::string source;
    std::vector<QSqrt3> coeffs;  // ascending powers
};

/// Stored records: "M", "C", "B", "C*", "C*-printed", "B*", "Q" (Q(p,u) with y = p, z = u).
const MinimalPolynomialRecord& minimal_polynomial(const std::string& name);
std::vector<std::string> minimal_polynomial_names();
/// Stored univariate polynomials: "phi", "phi*", "rho*" (the sextic for C*), "q-cubic".
const UnivariateRecord& univariate_record(const std::string& name);

template <class R>
R embed(const QSqrt3& c);
template <>
inline Rational embed<Rational>(const QSqrt3& c)
{
    if (!is_zero(c.sqrt3_part())) throw std::domain_error("coefficient involves sqrt3; use QSqrt3 or Real");
    return c.rational_part();
}
template <>
inline QSqrt3 embed<QSqrt3>(const QSqrt3& c) { return c; }
template <>
inline Real embed<Real>(const QSqrt3& c)
{
    static const Real s3 = std::sqrt(3.0L);
    return rational_to_real(c.rational_part()) + rational_to_real(c.sqrt3_part()) * s3;
}

/// Coefficient of y^i as an exact series in z.
template <class R>
Series<R> y_coefficient_series(const BiPoly& p, int i)
{
    std::vector<R> v;
    for (const auto& c : p.y_coeff(i)) v.push_back(embed<R>(c));
    return Series<R>::polynomial(std::move(v));
}

/// P(y(z), z) by Horner's rule in y.
template <class R>
Series<R> evaluate(const BiPoly& p, const Series<R>& y)
{
    if (p.zero()) return Series<R>(y.order());
    Series<R> acc = y_coefficient_series<R>(p, p.deg_y());
    for (int i = p.deg_y() - 1; i >= 0; --i) acc = (acc * y).truncate(y.order()) + y_coefficient_series<R>(p, i);
    return acc.truncate(y.order());
}

/// True iff P(s(z), z) vanishes modulo z^(order+1).
template <class R>
bool verify_poly_residual(const MinimalPolynomialRecord& rec, const Series<R>& s)
{
    static_assert(is_exact_v<R>, "residual checks need an exact backend");
    const Series<R> r = evaluate(rec.poly, s);
    for (int n = 0; n < r.stored() && n <= s.order(); ++n)
        if (!is_zero(r[n])) return false;
    return true;
}

struct NewtonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Extend `prefix` (known to its order k-1) to the unique root of P modulo z^(N+1).
///
/// With v the valuation of dP/dy at the prefix, each new coefficient c_m solves
/// [z^(m+v)] P(y) = 0, which is linear in c_m once k > v.
template <class R>
Series<R> newton_solve_poly(const MinimalPolynomialRecord& rec, const Series<R>& prefix, int N)
{
    const BiPoly dp = rec.poly.derivative_y();
    const int k = prefix.order() + 1;
    const Series<R> py = evaluate(dp, prefix);
    const int v = py.valuation();
    if (v > py.order() || v >= k) throw NewtonError("derivative vanishes to the prefix order (branch point)");
    const R lead = py[v];
    std::vector<R> y(static_cast<std::size_t>(std::max(N, k - 1)) + 1, R(0));
    for (int i = 0; i < k && i <= N; ++i) y[static_cast<std::size_t>(i)] = prefix[i];
    // consistency of the prefix: P(prefix) = O(z^(k+v))
    {
        Series<R> yp(std::vector<R>(y.begin(), y.begin() + k), k - 1 + v);
        const Series<R> r = evaluate(rec.poly, yp);
        for (int n = 0; n < k + v; ++n) {
            const R& c = r[n];
            bool ok = is_zero(c);
            if constexpr (!is_exact_v<R>) ok = ok || magnitude(c) < 1e-14L;
            if (!ok) throw NewtonError("prefix inconsistent with polynomial at z^" + std::to_string(n));
        }
    }
    for (int m = k; m <= N; ++m) {
        Series<R> yp(std::vector<R>(y.begin(), y.begin() + m), m + v);
        const Series<R> r = evaluate(rec.poly, yp);
        y[static_cast<std::size_t>(m)] = -divide_exact(r[m + v], lead);
    }
    y.resize(static_cast<std::size_t>(N) + 1);
    return Series<R>(std::move(y), N);
}

// ---------------------------------------------------------------------------
// Exact univariate tools for root isolation.

using QPoly = std::vector<Rational>;  // ascending powers, trimmed

/// Sylvester resultant Res_y(P, dP/dy) as a polynomial in z over Q(sqrt 3) (fraction-free elimination).
std::vector<QSqrt3> discriminant_y(const BiPoly& p);
/// Rational polynomial whose roots include those of p (p times its conjugate when sqrt3 occurs).
QPoly rational_norm(const std::vector<QSqrt3>& p);

QPoly qpoly_derivative(const QPoly& p);
QPoly qpoly_gcd(QPoly a, QPoly b);
QPoly qpoly_squarefree(const QPoly& p);
Rational qpoly_eval(const QPoly& p, const Rational& x);

/// Sturm chain of the square-free part; counts distinct real roots in (a, b].
class SturmChain {
public:
    explicit SturmChain(const QPoly& p);
    int roots_in(const Rational& a, const Rational& b) const;
    const QPoly& squarefree() const { return chain_.front(); }

private:
    int variations(const Rational& x) const;
    std::vector<QPoly> chain_;
};

/// Certified interval [lo, hi] holding a real root.
struct RootInterval {
    Rational lo, hi;
    long double mid() const { return (rational_to_real(lo) + rational_to_real(hi)) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const QSqrt3& x) const;
    long double width() const { return rational_to_real(hi - lo); }
};

/// Smallest root of p in the open window (lo, hi), refined below `tol`.
RootInterval smallest_root(const QPoly& p, const Rational& lo, const Rational& hi, const Rational& tol);
/// All roots of p in (lo, hi), refined below `tol`, ascending.
std::vector<RootInterval> isolate_roots(const QPoly& p, const Rational& lo, const Rational& hi, const Rational& tol);
/// Smallest root in (lo, hi) of a polynomial over Q(sqrt 3): roots of the rational norm at which
/// p itself changes sign.
RootInterval smallest_root_qsqrt3(const std::vector<QSqrt3>& p, const Rational& lo, const Rational& hi,
                                  const Rational& tol);

int sign(const QSqrt3& x);

} // namespace cubicmaps
