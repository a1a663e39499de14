#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cubicmaps/scalar.hpp"

namespace cubicmaps {

/// Dense polynomial in one catalytic marker (u, s, w, ...), coefficients in R.
///
/// A finite `cap` means the polynomial is only known modulo marker^(cap+1);
/// products and sums drop everything above the smallest cap involved.
template <class R>
class Poly {
public:
    static constexpr int kUnbounded = -1;

    Poly() = default;
    Poly(int c) { if (c != 0) coeffs_.push_back(R(c)); }  // NOLINT(google-explicit-constructor)
    explicit Poly(R c, int cap = kUnbounded) : cap_(cap)
    {
        coeffs_.push_back(std::move(c));
        trim();
    }
    Poly(std::vector<R> coeffs, int cap) : coeffs_(std::move(coeffs)), cap_(cap) { trim(); }

    /// The marker itself, optionally capped.
    static Poly variable(int cap = kUnbounded) { return monomial(R(1), 1, cap); }
    static Poly monomial(R c, int deg, int cap = kUnbounded)
    {
        std::vector<R> v(static_cast<std::size_t>(deg) + 1, R(0));
        v[static_cast<std::size_t>(deg)] = std::move(c);
        return Poly(std::move(v), cap);
    }

    int cap() const { return cap_; }
    bool bounded() const { return cap_ != kUnbounded; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool zero() const { return coeffs_.empty(); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    const R& operator[](int i) const
    {
        static const R kZero(0);
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)] : kZero;
    }

    int valuation() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!is_zero(coeffs_[i])) return static_cast<int>(i);
        return -1;
    }

    /// Sum of coefficients, i.e. the value at marker = 1.
    R at_one() const
    {
        R s(0);
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    template <class X>
    X evaluate(const X& x) const
    {
        X acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    Poly with_cap(int cap) const
    {
        Poly r = *this;
        r.cap_ = combine_caps(cap_, cap);
        r.trim();
        return r;
    }

    Poly& operator+=(const Poly& o) { return add(o, 1); }
    Poly& operator-=(const Poly& o) { return add(o, -1); }
    Poly& operator*=(const Poly& o)
    {
        Poly r;
        r.cap_ = combine_caps(cap_, o.cap_);
        mul_add(r, *this, o);
        return *this = std::move(r);
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r;
        r.cap_ = combine_caps(a.cap_, b.cap_);
        mul_add(r, a, b);
        return r;
    }
    friend Poly operator-(Poly a)
    {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// acc += a*b without temporaries.
    friend void mul_add(Poly& acc, const Poly& a, const Poly& b)
    {
        if (a.zero() || b.zero()) return;
        acc.cap_ = combine_caps(acc.cap_, combine_caps(a.cap_, b.cap_));
        int deg = a.degree() + b.degree();
        if (acc.cap_ != kUnbounded) deg = std::min(deg, acc.cap_);
        if (deg < 0) return;
        if (static_cast<int>(acc.coeffs_.size()) < deg + 1) acc.coeffs_.resize(static_cast<std::size_t>(deg) + 1, R(0));
        const int da = a.degree();
        const int db = b.degree();
        for (int i = 0; i <= std::min(da, deg); ++i) {
            const R& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (is_zero(ai)) continue;
            const int jmax = std::min(db, deg - i);
            for (int j = 0; j <= jmax; ++j) mul_add(acc.coeffs_[static_cast<std::size_t>(i + j)], ai, b.coeffs_[static_cast<std::size_t>(j)]);
        }
        acc.trim();
    }

    friend bool is_zero(const Poly& p) { return p.zero(); }

    friend long double magnitude(const Poly& p)
    {
        long double m = 0;
        for (const auto& c : p.coeffs_) m = std::max(m, magnitude(c));
        return m;
    }

    friend std::string to_string(const Poly& p)
    {
        if (p.zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i <= p.degree(); ++i) {
            if (is_zero(p[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << to_string(p[i]) << ")";
            if (i > 0) os << "*u^" << i;
        }
        return os.str();
    }

    /// Exact quotient a/b.  Powers of the marker dividing b are stripped first; with a finite
    /// cap the quotient is computed modulo marker^(cap-v+1), otherwise divisibility is verified.
    friend Poly divide_exact(const Poly& a, const Poly& b)
    {
        if (b.zero()) throw DivisionError("polynomial division by zero");
        const int vb = b.valuation();
        int cap = combine_caps(a.cap_, b.cap_);
        for (int i = 0; i < vb; ++i)
            if (!negligible(a[i], a)) throw DivisionError("polynomial not divisible by marker power");
        Poly as = a.shifted(-vb);
        Poly bs = b.shifted(-vb);
        if (cap != kUnbounded) cap -= vb;
        if (as.zero()) { Poly r; r.cap_ = cap; return r; }
        int qdeg = cap != kUnbounded ? cap : as.degree() - bs.degree();
        if (qdeg < 0) throw DivisionError("polynomial not divisible");
        std::vector<R> q(static_cast<std::size_t>(qdeg) + 1, R(0));
        const R& b0 = bs.coeffs_[0];
        for (int n = 0; n <= qdeg; ++n) {
            R num = as[n];
            for (int i = std::max(0, n - bs.degree()); i < n; ++i) num -= q[static_cast<std::size_t>(i)] * bs[n - i];
            q[static_cast<std::size_t>(n)] = divide_exact(num, b0);
        }
        Poly quot(std::move(q), cap);
        if (cap == kUnbounded) {
            Poly rem = as - quot * bs;
            for (const auto& c : rem.coeffs_)
                if (!negligible(c, as)) throw DivisionError("polynomial not divisible");
        }
        return quot;
    }

    /// Multiply by marker^k (k may be negative when the low coefficients vanish).
    Poly shifted(int k) const
    {
        Poly r;
        r.cap_ = cap_ == kUnbounded ? kUnbounded : cap_ + k;
        if (zero()) return r;
        std::vector<R> v;
        for (int i = 0; i <= degree(); ++i) {
            int j = i + k;
            if (j < 0) continue;
            if (static_cast<int>(v.size()) <= j) v.resize(static_cast<std::size_t>(j) + 1, R(0));
            v[static_cast<std::size_t>(j)] = coeffs_[static_cast<std::size_t>(i)];
        }
        r.coeffs_ = std::move(v);
        r.trim();
        return r;
    }

    template <class S, class F>
    Poly<S> map(F f) const
    {
        std::vector<S> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(f(c));
        return Poly<S>(std::move(v), cap_);
    }

private:
    static int combine_caps(int a, int b)
    {
        if (a == kUnbounded) return b;
        if (b == kUnbounded) return a;
        return std::min(a, b);
    }

    static bool negligible(const R& c, const Poly& ref)
    {
        if constexpr (is_exact_v<R>) {
            (void)ref;
            return is_zero(c);
        } else {
            return magnitude(c) <= 1e-10L * std::max<long double>(1, magnitude(ref));
        }
    }

    Poly& add(const Poly& o, int sign)
    {
        cap_ = combine_caps(cap_, o.cap_);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            if (sign > 0) coeffs_[i] += o.coeffs_[i];
            else coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }

    void trim()
    {
        if (cap_ != kUnbounded && static_cast<int>(coeffs_.size()) > cap_ + 1)
            coeffs_.resize(static_cast<std::size_t>(std::max(cap_ + 1, 0)));
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
    int cap_ = kUnbounded;
};

template <class R> struct is_exact<Poly<R>> : is_exact<R> {};

} // namespace cubicmaps
