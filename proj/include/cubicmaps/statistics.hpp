#pragma once

#include <string>
#include <vector>

#include "cubicmaps/grammars.hpp"
#include "cubicmaps/minpoly.hpp"

namespace cubicmaps {

enum class SizeUnit { faces, edges };
std::string to_string(SizeUnit u);

/// Exact (or floating) finite-n distribution of a map parameter.
template <class R>
struct DistTable {
    int n = 0;
    SizeUnit unit = SizeUnit::faces;
    std::string parameter;
    std::string scheme;
    std::vector<long> support;  // strictly increasing
    std::vector<R> masses;
    bool exact = is_exact_v<R>;
    std::string notes;

    R total() const
    {
        R s(0);
        for (const auto& m : masses) s += m;
        return s;
    }
    R mean() const
    {
        R s(0);
        for (std::size_t i = 0; i < masses.size(); ++i) s += masses[i] * R(static_cast<int>(support[i]));
        return s;
    }
    R mass_at(long k) const
    {
        for (std::size_t i = 0; i < support.size(); ++i)
            if (support[i] == k) return masses[i];
        return R(0);
    }
};

/// Builds a table from unnormalised weights (zero weights dropped), dividing by `norm`.
template <class R>
DistTable<R> make_table(int n, SizeUnit unit, std::string parameter, std::string scheme,
                        const std::vector<std::pair<long, R>>& weights, const R& norm)
{
    DistTable<R> d;
    d.n = n;
    d.unit = unit;
    d.parameter = std::move(parameter);
    d.scheme = std::move(scheme);
    std::vector<std::pair<long, R>> w;
    for (const auto& [k, v] : weights)
        if (!is_zero(v)) w.emplace_back(k, v);
    std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, v] : w) {
        if (!d.support.empty() && d.support.back() == k) {
            d.masses.back() += divide_exact(v, norm);
            continue;
        }
        d.support.push_back(k);
        d.masses.push_back(divide_exact(v, norm));
    }
    return d;
}

/// Row-oriented export: header comments with metadata, then `param_value,mass`.
std::string to_csv(const DistTable<Rational>& d);
std::string to_csv(const DistTable<Real>& d);
std::string to_json(const DistTable<Rational>& d);
std::string to_json(const DistTable<Real>& d);

// ---------------------------------------------------------------------------
// Root-face degree

/// M(x,y) of 3-connected cubic maps with y marking the root-face degree, from the
/// loopless-map parametrisation q = x(1+q)^4.  `cap` bounds the y-degree.
template <class R>
Series<Poly<R>> three_connected_root_degree(int N, int cap = Poly<R>::kUnbounded)
{
    using P = Poly<R>;
    using S = Series<P>;
    Series<R> q;
    {
        GrammarSystem<R> g("4-ary trees");
        auto Q = g.unknown("q");
        g.define(Q, Expr<R>::z() * pow(Expr<R>(1) + Q, 4));
        q = g.solve(N + 1).at("q");
    }
    const S Q = lift(q, cap);
    const S Y = S::constant(P::variable(cap));
    const S one = S::constant(P(R(1), cap));
    const S q1 = one + Q;
    const S q1sq = (q1 * q1).truncate(N + 1);
    const S disc = one - exact_divide(S::constant(P(4)) * Q * Y, q1sq).truncate(N + 1);
    // the + branch is the one with vanishing constant term, i.e. non-negative coefficients
    const S num = Y + S::constant(P(3)) * Q * Y - q1sq + (q1 * (q1 - Y)).truncate(N + 1) * sqrt(disc);
    const S a = exact_divide((q1sq * num).truncate(N + 1), S::constant(P(2)) * Q);
    S m = (lift(Series<R>::z(), cap) * (a - Y * Y)).truncate(N);
    return m;
}

/// Bivariate system for C(z,u), u marking the root-face degree (faces-2 index).
///
/// The polyhedral part substitutes w = u(1+D(z,u))/(1+D(z)) for the root-face marker
/// of M: edges of the root face keep their own contribution to the degree.
template <class R>
SeriesMap<Poly<R>> build_root_degree(int N, int cap = Poly<R>::kUnbounded)
{
    using P = Poly<R>;
    using E = Expr<P>;
    const auto uni = build_cubic<R>(N);
    const Series<R>& D1 = uni.at("D");
    const Series<R>& I1 = uni.at("I");
    const Series<R> one = Series<R>::constant(R(1));
    const Series<R> x = (Series<R>::z() * pow(one + D1, 3)).truncate(N);
    const auto mxy = three_connected_root_degree<R>(N, cap);
    std::vector<Series<P>> slices;
    for (const auto& s : marker_slices<R>(mxy, [](const R& c) { return c; }))
        slices.push_back(lift(compose(s, x), cap));

    const P u = P::variable(cap);
    const E z = E::z();
    const E U = E::constant(u);
    const E d1 = E::known(lift(D1, cap));
    GrammarSystem<P> g("cubic maps by root-face degree");
    E D = g.unknown("D"), L2 = g.unknown("L2"), I = g.unknown("I"), S = g.unknown("S"), Pp = g.unknown("P"),
      H = g.unknown("H"), C = g.unknown("C");
    const E L1 = E::known(lift((Series<R>::z() * (one + D1 + I1)).truncate(N), cap)) * U;
    const E u4 = pow(U, 4);
    g.define(L2, z * u4 * (E(1) + D + U * I));
    g.define(I, z * u4 * pow(E(1) + D + U * I, 2));
    g.define(S, D * (D - S));
    g.define(Pp, z * U * U * (E(1) + d1) * (E(1) + D));
    g.define(H, substitute_marker(slices, U * (E(1) + D) / (E(1) + d1)) / (E(1) + D));
    g.define(D, L1 + L2 + S + Pp + H);
    g.define(C, D + I);
    return g.solve(N);
}

/// P(root face degree = k) at size n (faces-2).  With a finite cap the last support
/// entry cap+1 aggregates all degrees above the cap.
template <class R>
DistTable<R> root_degree_distribution(int n, int cap = Poly<R>::kUnbounded)
{
    if (n < 1) throw std::invalid_argument("root_degree_distribution needs n >= 1");
    const auto sys = build_root_degree<R>(n, cap);
    const Poly<R>& c = sys.at("C")[n];
    const R total = build_cubic<R>(n).at("C")[n];
    std::vector<std::pair<long, R>> w;
    R seen(0);
    for (int k = 0; k <= c.degree(); ++k) {
        w.emplace_back(k, c[k]);
        seen += c[k];
    }
    DistTable<R> d = make_table(n, SizeUnit::faces, "root-face degree", "bivariate cubic system", w, total);
    if (cap != Poly<R>::kUnbounded) {
        R rest = divide_exact(R(total - seen), total);
        if constexpr (!is_exact_v<R>) rest = std::max(rest, R(0));
        if (!is_zero(rest)) {
            d.support.push_back(cap + 1);
            d.masses.push_back(rest);
        }
        d.notes = "degrees above " + std::to_string(cap) + " aggregated in the last entry";
    }
    return d;
}

/// Limiting pgf p(u) = sum p_k u^k to order K: the branch of Q(p,u) = 0 through the
/// prefix (sqrt3/36)(u + u^2 + u^3).
template <class R>
Series<R> limit_root_degree_pgf(int K)
{
    const auto& rec = minimal_polynomial("Q");
    const R a = embed<R>(QSqrt3(0, Rational(1, 36)));
    Series<R> prefix({R(0), a, a, a}, 3);
    if (K <= 3) return prefix.truncate(K);
    return newton_solve_poly(rec, prefix, K);
}

struct RootDegreeTail {
    long double q = 0;      // 1 / (root of the tail cubic)
    RootInterval q_inverse;  // certified interval for 1/q
    long double c = 0;
    std::vector<long double> ratios;  // p_k k^{-1/2} q^{-k}, k = 1..K
};

/// Tail p_k ~ c k^{1/2} q^k: q from the stored cubic, c by extrapolating the ratios of the
/// exact p_1..p_K (K >= 100).
RootDegreeTail root_degree_tail(int K);

// ---------------------------------------------------------------------------
// Core schemes (edge index)

enum class CoreScheme { two_core, three_core };
enum class CoreKind { block, cubic_block, three_connected };
std::string to_string(CoreScheme s);
std::string to_string(CoreKind k);
CoreScheme scheme_of(CoreKind k);

/// Counts [z^n w^t u^m] of the scheme at a single edge size n; table[t][m].
template <class R>
std::vector<std::vector<R>> core_counts(CoreScheme which, int n);

/// Trivariate series C(z,w,u) to edge order N, coefficients as w-polynomials of u-polynomials.
template <class R>
struct CoreSeries {
    CoreScheme which;
    int N;
    Series<Poly<Poly<R>>> series;
};

/// Closed-form (binomial) expansion of the scheme, all n <= N.
template <class R>
CoreSeries<R> core_scheme_series(CoreScheme which, int N);
/// The same series built by literal substitution and division; small N only.
template <class R>
CoreSeries<R> core_scheme_series_direct(CoreScheme which, int N);

/// Distribution of the root core size (t for blocks, t - m for cubic blocks and 3-cores;
/// 0 when there is none).
template <class R>
DistTable<R> core_size_distribution(CoreKind kind, int n);

/// Largest component law from the root-core law through the n/t re-rooting factor,
/// restricted to w-sizes t > threshold*n (where the component is the unique largest)
/// and renormalised.  Flagged approximate.
template <class R>
DistTable<R> largest_component_distribution(CoreKind kind, int n, double threshold = -1);

// ---------------------------------------------------------------------------
// Marked expectations

enum class Marking { isthmus, cut_vertex, loop };
std::string to_string(Marking m);

/// Cubic system with a marker s on isthmuses or cut vertices.  By default s = 1 + e modulo
/// e^2, so coefficient 0 counts maps and coefficient 1 sums the parameter; with `full` the
/// marker is a free variable and the coefficients are the whole distribution.
template <class R>
SeriesMap<Poly<R>> build_marked_cubic(int N, Marking which, bool full = false)
{
    using P = Poly<R>;
    using E = Expr<P>;
    const int cap = full ? P::kUnbounded : 1;
    const Series<R> m = build_three_connected<R>(N + 1).M;
    const Series<P> mp = lift(m, cap);
    const E s = E::constant(full ? P::variable() : P({R(1), R(1)}, 1));
    const E z = E::z();
    GrammarSystem<P> g(std::string("cubic maps marked by ") + to_string(which));
    E D = g.unknown("D"), I = g.unknown("I"), L = g.unknown("L"), S = g.unknown("S"), Pp = g.unknown("P"),
      H = g.unknown("H"), C = g.unknown("C");
    if (which == Marking::isthmus) {
        // the dumbbell neck; an isthmus-rooted map attached at a loop trades its root for two
        g.define(L, E(2) * z * s * (E(1) + D + s * I));
        g.define(I, z * s * pow(E(1) + D + s * I, 2));
        g.define(S, D * (D - S));
        g.define(Pp, z * pow(E(1) + D, 2));
        g.define(H, compose(mp, z * pow(E(1) + D, 3)) / (E(1) + D));
    } else if (which == Marking::loop) {
        // maps used in place of an edge lose a root loop, so D and L are unmarked at the root;
        // each end of an isthmus carries a loop, a D-map or an isthmus-rooted map
        g.define(L, E(2) * z * (s + D + I));
        g.define(I, z * pow(s + D + I, 2));
        g.define(S, D * (D - S));
        g.define(Pp, z * pow(E(1) + D, 2));
        g.define(H, compose(mp, z * pow(E(1) + D, 3)) / (E(1) + D));
        g.define(D, L + S + Pp + H);
        g.define(C, s * L + S + Pp + H + I);
        return g.solve(N);
    } else {
        // a loop-rooted map used in place of an edge turns its root vertex into a cut vertex
        const E Dr = D + (s - E(1)) * L;
        g.define(L, E(2) * z * (E(1) + s * (Dr + I)));
        g.define(I, z * pow(E(1) + s * (Dr + I), 2));
        g.define(S, Dr * (Dr - S));
        g.define(Pp, z * pow(E(1) + Dr, 2));
        g.define(H, compose(mp, z * pow(E(1) + Dr, 3)) / (E(1) + Dr));
    }
    g.define(D, L + S + Pp + H);
    g.define(C, D + I);
    return g.solve(N);
}

/// Exact law of the number of marked objects at size n (faces-2).
template <class R>
DistTable<R> marked_distribution(int n, Marking which)
{
    if (n < 1) throw std::invalid_argument("marked_distribution needs n >= 1");
    const Poly<R> c = build_marked_cubic<R>(n, which, true).at("C")[n];
    std::vector<std::pair<long, R>> w;
    for (int k = 0; k <= c.degree(); ++k) w.emplace_back(k, c[k]);
    return make_table(n, SizeUnit::faces, "number of " + to_string(which), "marked cubic system", w, c.at_one());
}

template <class R>
struct MarkedExpectation {
    int n;
    R isthmuses;
    R cut_vertices;
    R loops;
};

/// Exact expected numbers of isthmuses, cut vertices and loops at sizes 1..N (faces-2).
template <class R>
std::vector<MarkedExpectation<R>> marked_expectations(int N)
{
    const auto a = build_marked_cubic<R>(N, Marking::isthmus).at("C");
    const auto b = build_marked_cubic<R>(N, Marking::cut_vertex).at("C");
    const auto c = build_marked_cubic<R>(N, Marking::loop).at("C");
    std::vector<MarkedExpectation<R>> out;
    for (int n = 1; n <= N; ++n)
        out.push_back({n, divide_exact(a[n][1], a[n][0]), divide_exact(b[n][1], b[n][0]), divide_exact(c[n][1], c[n][0])});
    return out;
}

} // namespace cubicmaps
