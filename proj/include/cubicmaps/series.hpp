#pragma once

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "cubicmaps/poly.hpp"
#include "cubicmaps/scalar.hpp"

namespace cubicmaps {

/// Power series in z with coefficients in R, known modulo z^(order+1).
///
/// Polynomials that are known exactly (constants, z, markers) carry the
/// sentinel order kExact so that they never lower the order of a result.
template <class R>
class Series {
public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    Series() : order_(kExact) {}
    explicit Series(int order) : order_(order) {}
    Series(std::vector<R> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) { normalize(); }

    static Series constant(R c) { return Series(std::vector<R>{std::move(c)}, kExact); }
    static Series polynomial(std::vector<R> c) { return Series(std::move(c), kExact); }
    /// c * z^k, exact.
    static Series monomial(R c, int k)
    {
        std::vector<R> v(static_cast<std::size_t>(k) + 1, R(0));
        v.back() = std::move(c);
        return Series(std::move(v), kExact);
    }
    static Series z() { return monomial(R(1), 1); }

    int order() const { return order_; }
    bool exact() const { return order_ >= kExact; }
    /// Number of stored coefficients (trailing entries past this are zero).
    int stored() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    const R& operator[](int n) const
    {
        static const R kZero(0);
        if (n < 0 || n > order_) throw std::out_of_range("coefficient beyond truncation order");
        return n < stored() ? coeffs_[static_cast<std::size_t>(n)] : kZero;
    }
    R coeff(int n) const { return (*this)[n]; }

    void set(int n, R c)
    {
        if (n < 0 || n > order_) throw std::out_of_range("coefficient beyond truncation order");
        if (n >= stored()) coeffs_.resize(static_cast<std::size_t>(n) + 1, R(0));
        coeffs_[static_cast<std::size_t>(n)] = std::move(c);
    }

    /// Index of the first non-zero coefficient; order()+1 for the zero series.
    int valuation() const
    {
        for (int i = 0; i < stored(); ++i)
            if (!is_zero(coeffs_[static_cast<std::size_t>(i)])) return i;
        return exact() ? kExact : order_ + 1;
    }

    Series truncate(int k) const
    {
        Series r = *this;
        r.order_ = std::min(order_, k);
        r.normalize();
        return r;
    }

    Series shifted(int k) const
    {
        std::vector<R> v;
        if (k >= 0) {
            v.assign(static_cast<std::size_t>(k), R(0));
            v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        } else {
            for (int i = 0; i < -k && i < stored(); ++i)
                if (!is_zero(coeffs_[static_cast<std::size_t>(i)])) throw DivisionError("series not divisible by z power");
            if (-k < stored()) v.assign(coeffs_.begin() - k, coeffs_.end());
        }
        return Series(std::move(v), exact() ? kExact : order_ + k);
    }

    Series& operator+=(const Series& o) { return add(o, true); }
    Series& operator-=(const Series& o) { return add(o, false); }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a)
    {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Series operator+(Series a, int c) { return a += constant(R(c)); }
    friend Series operator+(int c, Series a) { return a += constant(R(c)); }
    friend Series operator-(Series a, int c) { return a -= constant(R(c)); }
    friend Series operator-(int c, const Series& a) { return constant(R(c)) - a; }
    friend Series operator*(const Series& a, int c) { return a * constant(R(c)); }
    friend Series operator*(int c, const Series& a) { return a * constant(R(c)); }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    /// Product; the order accounts for valuations, so z*S is one order longer than S.
    friend Series operator*(const Series& a, const Series& b)
    {
        const int va = a.valuation();
        const int vb = b.valuation();
        int order;
        if (a.exact() && b.exact()) order = kExact;
        else order = std::min(sat_add(a.order_, vb), sat_add(b.order_, va));
        Series r(order);
        if (va >= a.stored() || vb >= b.stored()) return r;
        int top = a.stored() - 1 + b.stored() - 1;
        if (!r.exact()) top = std::min(top, order);
        if (top < va + vb) return r;
        r.coeffs_.assign(static_cast<std::size_t>(top) + 1, R(0));
        if constexpr (std::is_arithmetic_v<R>) {
            const R* __restrict pa = a.coeffs_.data();
            const R* __restrict pb = b.coeffs_.data();
            R* __restrict pr = r.coeffs_.data();
            const int amax = a.stored() - 1;
            const int bmax = b.stored() - 1;
            for (int n = va + vb; n <= top; ++n) {
                const int lo = std::max(va, n - bmax);
                const int hi = std::min(amax, n - vb);
                R s0 = 0, s1 = 0;
                int i = lo;
                for (; i + 1 <= hi; i += 2) {
                    s0 += pa[i] * pb[n - i];
                    s1 += pa[i + 1] * pb[n - i - 1];
                }
                if (i <= hi) s0 += pa[i] * pb[n - i];
                pr[n] = s0 + s1;
            }
            r.normalize();
            return r;
        }
        for (int i = va; i < a.stored() && i + vb <= top; ++i) {
            const R& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (is_zero(ai)) continue;
            const int jmax = std::min(b.stored() - 1, top - i);
            for (int j = vb; j <= jmax; ++j) mul_add(r.coeffs_[static_cast<std::size_t>(i + j)], ai, b.coeffs_[static_cast<std::size_t>(j)]);
        }
        r.normalize();
        return r;
    }

    /// Coefficient-wise equality up to the common truncation order.
    bool agrees_with(const Series& o) const
    {
        const int n = std::min(order_, o.order_);
        const int m = std::max(stored(), o.stored());
        for (int i = 0; i <= n && i < m; ++i) {
            const bool ia = i < stored();
            const bool ib = i < o.stored();
            if (ia && ib) {
                if (!(coeffs_[static_cast<std::size_t>(i)] == o.coeffs_[static_cast<std::size_t>(i)])) return false;
            } else if (ia) {
                if (!is_zero(coeffs_[static_cast<std::size_t>(i)])) return false;
            } else if (ib) {
                if (!is_zero(o.coeffs_[static_cast<std::size_t>(i)])) return false;
            }
        }
        return true;
    }
    friend bool operator==(const Series& a, const Series& b) { return a.order_ == b.order_ && a.agrees_with(b); }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    template <class S, class F>
    Series<S> map(F f) const
    {
        std::vector<S> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(f(c));
        return Series<S>(std::move(v), order_);
    }

    std::string str() const
    {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i < stored(); ++i) {
            if (is_zero(coeffs_[static_cast<std::size_t>(i)])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << to_string(coeffs_[static_cast<std::size_t>(i)]) << ")";
            if (i > 0) os << "*z^" << i;
        }
        if (first) os << "0";
        if (!exact()) os << " + O(z^" << order_ + 1 << ")";
        return os.str();
    }

    static int sat_add(int a, int b) { return (a >= kExact - b) ? kExact : a + b; }

private:
    Series& add(const Series& o, bool plus)
    {
        order_ = std::min(order_, o.order_);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            if (plus) coeffs_[i] += o.coeffs_[i];
            else coeffs_[i] -= o.coeffs_[i];
        }
        normalize();
        return *this;
    }

    void normalize()
    {
        if (!exact() && stored() > order_ + 1) coeffs_.resize(static_cast<std::size_t>(std::max(order_ + 1, 0)));
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
    int order_;
};

template <class R>
Series<R> truncated(std::vector<R> c, int order) { return Series<R>(std::move(c), order); }

/// Exact quotient a/b.  If z^v divides b, the low coefficients of a must vanish and the
/// result loses v orders; coefficient divisions go through divide_exact of R.
template <class R>
Series<R> exact_divide(const Series<R>& a, const Series<R>& b)
{
    const int vb = b.valuation();
    if (vb > b.order() || vb >= Series<R>::kExact) throw DivisionError("series division by zero");
    const Series<R> as = a.shifted(-vb);
    const Series<R> bs = b.shifted(-vb);
    const int va = as.valuation();
    int order;
    if (as.exact() && bs.exact()) {
        if (va >= Series<R>::kExact) return Series<R>();
        order = as.stored() - 1 - (bs.stored() - 1);
        if (order < 0) throw DivisionError("polynomial quotient is not a polynomial");
    } else {
        order = std::min(as.order(), Series<R>::sat_add(bs.order(), va));
    }
    std::vector<R> q(static_cast<std::size_t>(std::max(order, -1) + 1), R(0));
    const R& b0 = bs[0];
    for (int n = std::min(va, order + 1); n <= order; ++n) {
        R num = n < as.stored() ? as[n] : R(0);
        for (int i = std::max(va, n - bs.stored() + 1); i < n; ++i) {
            if (is_zero(q[static_cast<std::size_t>(i)])) continue;
            num -= q[static_cast<std::size_t>(i)] * bs[n - i];
        }
        q[static_cast<std::size_t>(n)] = divide_exact(num, b0);
    }
    if (as.exact() && bs.exact()) {
        Series<R> quot = Series<R>::polynomial(q);
        if (!(quot * bs).agrees_with(as)) throw DivisionError("polynomial quotient is not a polynomial");
        return quot;
    }
    return Series<R>(std::move(q), order);
}

template <class R>
Series<R> operator/(const Series<R>& a, const Series<R>& b) { return exact_divide(a, b); }

template <class R>
Series<R> pow(const Series<R>& s, int k)
{
    if (k < 0) throw std::invalid_argument("negative power");
    Series<R> result = Series<R>::constant(R(1));
    Series<R> base = s;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

/// f(g) for g with zero constant term, by Horner's rule.
template <class R>
Series<R> compose(const Series<R>& f, const Series<R>& g)
{
    const int vg = g.valuation();
    if (vg >= Series<R>::kExact || vg > g.order()) {
        // g is zero to its known order
        if (g.order() < 0) return Series<R>(std::min(f.order(), g.order()));
        return Series<R>(std::vector<R>{f[0]}, std::min(f.order(), g.order()));
    }
    if (vg == 0) throw std::domain_error("composition needs an inner series without constant term");
    const int vf = f.valuation();
    int order = Series<R>::kExact;
    if (!f.exact()) order = std::min(order, vg * (f.order() + 1) - 1);
    if (!g.exact()) order = std::min(order, Series<R>::sat_add(g.order(), std::max(vf - 1, 0) * vg));
    int deg = f.stored() - 1;
    if (order < Series<R>::kExact) deg = std::min(deg, order / vg);
    if (deg < 0) return Series<R>(order);
    const Series<R> gt = order < Series<R>::kExact ? g.truncate(order) : g;
    // the partial sum at step j is multiplied by g^j afterwards, so order - j*vg terms suffice
    Series<R> acc = Series<R>::constant(f[deg]);
    for (int j = deg - 1; j >= 0; --j) {
        if (order < Series<R>::kExact) {
            const int keep = order - j * vg;
            acc = acc.truncate(keep - vg) * gt.truncate(keep);
            acc = acc.truncate(keep);
        } else {
            acc = acc * gt;
        }
        acc += Series<R>::constant(f[j]);
    }
    if (order < Series<R>::kExact) return Series<R>(acc.coeffs(), order);
    return acc;
}

/// Square root of a series with constant term 1.
template <class R>
Series<R> sqrt(const Series<R>& s)
{
    if (!(s[0] == R(1))) throw std::domain_error("sqrt needs constant term 1");
    const int order = s.exact() ? throw std::domain_error("sqrt of an exact polynomial needs a truncation order")
                                : s.order();
    std::vector<R> r(static_cast<std::size_t>(order) + 1, R(0));
    r[0] = R(1);
    const R two(2);
    for (int n = 1; n <= order; ++n) {
        R num = n < s.stored() ? s[n] : R(0);
        for (int i = 1; i < n; ++i) num -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(n - i)];
        r[static_cast<std::size_t>(n)] = divide_exact(num, two);
    }
    return Series<R>(std::move(r), order);
}

template <class R>
Series<R> derivative(const Series<R>& s)
{
    std::vector<R> v;
    for (int i = 1; i < s.stored(); ++i) v.push_back(s[i] * R(i));
    return Series<R>(std::move(v), s.exact() ? Series<R>::kExact : s.order() - 1);
}

/// Embed series coefficients into the marker-polynomial ring as constants.
template <class R>
Series<Poly<R>> lift(const Series<R>& s, int cap = Poly<R>::kUnbounded)
{
    return s.template map<Poly<R>>([cap](const R& c) { return Poly<R>(c, cap); });
}

/// Specialise a marker to 1.
template <class R>
Series<R> at_marker_one(const Series<Poly<R>>& s)
{
    return s.template map<R>([](const Poly<R>& p) { return p.at_one(); });
}

template <class To, class From>
Series<To> series_cast(const Series<From>& s)
{
    return s.template map<To>([](const From& c) { return scalar_cast<To>(c); });
}

} // namespace cubicmaps
