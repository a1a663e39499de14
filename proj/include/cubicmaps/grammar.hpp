#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubicmaps/series.hpp"

namespace cubicmaps {

struct NonContractingGrammar : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class R>
struct GrammarNode {
    enum class Kind { Constant, Z, Unknown, Known, Add, Sub, Mul, Div, SubstZ, SubstMarker };
    Kind kind = Kind::Constant;
    Series<R> value;                       // Constant / Known
    int index = -1;                        // Unknown
    std::vector<Series<R>> slices;         // SubstMarker: outer = sum_k slices[k] * m^k
    std::shared_ptr<const GrammarNode> a, b;
};

/// Expression over z, constants (possibly marker polynomials), unknowns and known series.
template <class R>
class Expr {
public:
    using Node = GrammarNode<R>;
    using Kind = typename Node::Kind;

    Expr(int c) : Expr(constant(R(c))) {}  // NOLINT(google-explicit-constructor)
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Expr constant(R c)
    {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Constant;
        n->value = Series<R>::constant(std::move(c));
        return Expr(n);
    }
    static Expr z()
    {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Z;
        return Expr(n);
    }
    static Expr known(Series<R> s)
    {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Known;
        n->value = std::move(s);
        return Expr(n);
    }
    static Expr unknown(int index)
    {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Unknown;
        n->index = index;
        return Expr(n);
    }
    static Expr binary(Kind k, const Expr& x, const Expr& y)
    {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->a = x.node_;
        n->b = y.node_;
        return Expr(n);
    }

    const Node& node() const { return *node_; }
    const std::shared_ptr<const Node>& ptr() const { return node_; }

    friend Expr operator+(const Expr& x, const Expr& y) { return binary(Kind::Add, x, y); }
    friend Expr operator-(const Expr& x, const Expr& y) { return binary(Kind::Sub, x, y); }
    friend Expr operator*(const Expr& x, const Expr& y) { return binary(Kind::Mul, x, y); }
    friend Expr operator/(const Expr& x, const Expr& y) { return binary(Kind::Div, x, y); }
    friend Expr operator-(const Expr& x) { return Expr(0) - x; }

private:
    std::shared_ptr<const Node> node_;
};

template <class R>
Expr<R> pow(const Expr<R>& e, int k)
{
    if (k < 0) throw std::invalid_argument("negative power");
    Expr<R> r(1);
    for (int i = 0; i < k; ++i) r = (i == 0) ? e : r * e;
    return r;
}

/// outer(inner) where outer is a known series in z and inner has zero constant term.
template <class R>
Expr<R> compose(const Series<R>& outer, const Expr<R>& inner)
{
    auto n = std::make_shared<GrammarNode<R>>();
    n->kind = GrammarNode<R>::Kind::SubstZ;
    n->value = outer;
    n->a = inner.ptr();
    return Expr<R>(n);
}

/// Substitute a marker m := inner into an outer series given as its m-slices, i.e.
/// outer(z, m) = sum_k slices[k](z) m^k.
template <class R>
Expr<R> substitute_marker(std::vector<Series<R>> slices, const Expr<R>& inner)
{
    auto n = std::make_shared<GrammarNode<R>>();
    n->kind = GrammarNode<R>::Kind::SubstMarker;
    n->slices = std::move(slices);
    n->a = inner.ptr();
    return Expr<R>(n);
}

/// m-slices of a series whose coefficients are polynomials in m, embedded into R by `embed`.
template <class R, class S, class F>
std::vector<Series<R>> marker_slices(const Series<Poly<S>>& outer, F embed, int max_degree = -1)
{
    int deg = 0;
    for (const auto& c : outer.coeffs()) deg = std::max(deg, c.degree());
    if (max_degree >= 0) deg = std::min(deg, max_degree);
    std::vector<Series<R>> out;
    for (int k = 0; k <= deg; ++k) {
        std::vector<R> v;
        for (const auto& c : outer.coeffs()) v.push_back(embed(c[k]));
        out.emplace_back(std::move(v), outer.order());
    }
    return out;
}

struct SolveStats {
    int passes = 0;
};

/// Named system Y_i = Phi_i(z, markers, Y), solved by Gauss-Seidel fixed-point iteration.
/// Equations are swept in the order they were defined.
///
/// Each value carries a proven truncation order (see Series), so every pass must raise
/// the least order of the unknowns; a pass that does not, or that alters an already
/// settled coefficient, is reported as a non-contracting grammar.
template <class R>
class GrammarSystem {
public:
    explicit GrammarSystem(std::string source = {}) : source_(std::move(source)) {}

    /// Declare (or look up) an unknown.  `valuation` is a lower bound on its z-valuation
    /// (default 1: every class is empty at size 0); it is checked during the solve.
    Expr<R> unknown(const std::string& name, int valuation = 1)
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return Expr<R>::unknown(static_cast<int>(i));
        names_.push_back(name);
        initial_order_.push_back(valuation - 1);
        rhs_.emplace_back(std::nullopt);
        return Expr<R>::unknown(static_cast<int>(names_.size() - 1));
    }

    void define(const Expr<R>& lhs, Expr<R> rhs)
    {
        if (lhs.node().kind != GrammarNode<R>::Kind::Unknown) throw std::invalid_argument("lhs must be an unknown");
        const auto idx = static_cast<std::size_t>(lhs.node().index);
        if (!rhs_[idx]) order_.push_back(idx);
        rhs_[idx] = std::move(rhs);
    }
    void define(const std::string& name, Expr<R> rhs) { define(unknown(name), std::move(rhs)); }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& source() const { return source_; }

    /// Solve to order N.  `slack` extra orders are carried internally for systems that
    /// divide by series of positive valuation (results are truncated back to N).
    std::map<std::string, Series<R>> solve(int N, int slack = 0, SolveStats* stats = nullptr) const
    {
        for (std::size_t i = 0; i < rhs_.size(); ++i)
            if (!rhs_[i]) throw std::invalid_argument("unknown without equation: " + names_[i]);
        const int target = N + slack;
        const int cap = target + 4;
        // a wrong valuation bound shows up as a changed settled coefficient
        std::vector<Series<R>> vals;
        for (int o : initial_order_) vals.emplace_back(o);
        int prev_min = *std::min_element(initial_order_.begin(), initial_order_.end());
        // a well-ordered system gains an order per pass; allow one stalled pass per unknown
        const int max_passes = target + 2 + static_cast<int>(names_.size());
        int pass = 0;
        int stalled = 0;
        for (;;) {
            if (++pass > max_passes) throw NonContractingGrammar("no stabilisation within pass bound");
            bool changed = false;
            for (std::size_t i : order_) {
                Series<R> next = eval(rhs_[i]->node(), vals, cap).truncate(target);
                changed |= check_prefix(vals[i], next, names_[i]);
                vals[i] = std::move(next);
            }
            int min_order = target;
            for (const auto& v : vals) min_order = std::min(min_order, v.order());
            if (min_order >= target && !changed && prev_min >= target) break;
            if (min_order <= prev_min && min_order < target) {
                if (++stalled > static_cast<int>(names_.size()))
                    throw NonContractingGrammar("no z-order gained (stuck at " + std::to_string(min_order) + ")");
            } else {
                stalled = 0;
            }
            prev_min = std::max(prev_min, min_order);
        }
        if (stats) stats->passes = pass;
        std::map<std::string, Series<R>> out;
        for (std::size_t i = 0; i < vals.size(); ++i) out.emplace(names_[i], vals[i].truncate(N));
        return out;
    }

private:
    using Node = GrammarNode<R>;
    using Kind = typename Node::Kind;

    // Throws if `next` alters a settled coefficient; returns whether the known order moved.
    bool check_prefix(const Series<R>& old, const Series<R>& next, const std::string& name) const
    {
        const int common = std::min(old.order(), next.order());
        for (int n = 0; n <= common; ++n) {
            const R& x = old[n];
            const R& y = next[n];
            if (x == y) continue;
            if constexpr (!is_exact_v<R>) {
                long double scale = std::max<long double>(magnitude(x), magnitude(y));
                if (magnitude(R(x - y)) <= 1e-12L * scale) continue;
            }
            throw NonContractingGrammar("settled coefficient z^" + std::to_string(n) + " of " + name + " changed");
        }
        return next.order() != old.order();
    }

    Series<R> eval(const Node& n, const std::vector<Series<R>>& vals, int cap) const
    {
        switch (n.kind) {
        case Kind::Constant: return n.value;
        case Kind::Z: return Series<R>::z();
        case Kind::Unknown: return vals[static_cast<std::size_t>(n.index)];
        case Kind::Known: return n.value.truncate(cap);
        case Kind::Add: return eval(*n.a, vals, cap) + eval(*n.b, vals, cap);
        case Kind::Sub: return eval(*n.a, vals, cap) - eval(*n.b, vals, cap);
        case Kind::Mul: return (eval(*n.a, vals, cap) * eval(*n.b, vals, cap)).truncate(cap);
        case Kind::Div: {
            Series<R> den = eval(*n.b, vals, cap);
            if (!den.exact() && den.valuation() > den.order()) return Series<R>(-1);  // divisor not yet determined
            return exact_divide(eval(*n.a, vals, cap), den).truncate(cap);
        }
        case Kind::SubstZ: return compose(n.value.truncate(cap), eval(*n.a, vals, cap)).truncate(cap);
        case Kind::SubstMarker: {
            Series<R> inner = eval(*n.a, vals, cap);
            Series<R> acc = n.slices.back().truncate(cap);
            for (int k = static_cast<int>(n.slices.size()) - 2; k >= 0; --k)
                acc = (acc * inner).truncate(cap) + n.slices[static_cast<std::size_t>(k)].truncate(cap);
            return acc;
        }
        }
        throw std::logic_error("bad grammar node");
    }

    std::string source_;
    std::vector<std::string> names_;
    std::vector<int> initial_order_;
    std::vector<std::optional<Expr<R>>> rhs_;
    std::vector<std::size_t> order_;  // evaluation order = order of definition
};

} // namespace cubicmaps
