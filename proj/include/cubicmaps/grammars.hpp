#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cubicmaps/grammar.hpp"
#include "cubicmaps/series.hpp"

namespace cubicmaps {

template <class R>
using SeriesMap = std::map<std::string, Series<R>>;

/// Series of 3-connected triangulations and cubic maps (faces-2 indexed; x = z).
template <class R>
struct ThreeConnected {
    Series<R> U, T, V, T4, M;
};

template <class R>
ThreeConnected<R> build_three_connected(int N)
{
    using E = Expr<R>;
    ThreeConnected<R> out;
    {
        GrammarSystem<R> g("simple triangulations: x = U(1-U)^3");
        E u = g.unknown("U");
        g.define(u, E::z() / pow(E(1) - u, 3));
        out.U = g.solve(N).at("U");
    }
    {
        GrammarSystem<R> g("4-connected triangulations: z = V(1-V)^2");
        E v = g.unknown("V");
        g.define(v, E::z() / pow(E(1) - v, 2));
        out.V = g.solve(N).at("V");
    }
    const Series<R> one = Series<R>::constant(R(1));
    const Series<R> z = Series<R>::z();
    out.T = (out.U * (one - 2 * out.U)).truncate(N);
    out.T4 = (z + exact_divide(out.V * (out.V - one), pow(out.V + one, 2)) - z * z).truncate(N);
    out.M = (out.T - z).truncate(N);
    return out;
}

namespace detail {

template <class R>
Expr<R> polyhedral(const Series<R>& m, const Expr<R>& d)
{
    using E = Expr<R>;
    return compose(m, E::z() * pow(E(1) + d, 3)) / (E(1) + d);
}

} // namespace detail

/// All cubic maps: C = D + I with loop, isthmus, series, parallel and polyhedral parts.
template <class R>
SeriesMap<R> build_cubic(int N)
{
    using E = Expr<R>;
    const Series<R> m = build_three_connected<R>(N + 1).M;
    GrammarSystem<R> g("cubic maps");
    E D = g.unknown("D"), I = g.unknown("I"), L = g.unknown("L"), S = g.unknown("S"), P = g.unknown("P"),
      H = g.unknown("H"), C = g.unknown("C");
    const E z = E::z();
    g.define(L, E(2) * z * (E(1) + D + I));
    g.define(I, L * L / (E(4) * z));
    g.define(S, D * (D - S));
    g.define(P, z * pow(E(1) + D, 2));
    g.define(H, detail::polyhedral(m, D));
    g.define(D, L + S + P + H);
    g.define(C, D + I);
    return g.solve(N);
}

/// 2-connected cubic maps.
template <class R>
SeriesMap<R> build_two_connected(int N)
{
    using E = Expr<R>;
    const Series<R> m = build_three_connected<R>(N + 1).M;
    GrammarSystem<R> g("2-connected cubic maps");
    E B = g.unknown("B"), S = g.unknown("S"), P = g.unknown("P"), H = g.unknown("H");
    const E z = E::z();
    g.define(S, B * (B - S));
    g.define(P, z * pow(E(1) + B, 2));
    g.define(H, detail::polyhedral(m, B));
    g.define(B, S + P + H);
    return g.solve(N);
}

/// Simple cubic maps (no loops or multiple edges).
template <class R>
SeriesMap<R> build_simple(int N)
{
    using E = Expr<R>;
    const Series<R> m = build_three_connected<R>(N + 1).M;
    GrammarSystem<R> g("simple cubic maps");
    E D = g.unknown("D"), I = g.unknown("I"), L = g.unknown("L"), S = g.unknown("S"), P = g.unknown("P"),
      H = g.unknown("H"), C = g.unknown("C*");
    const E z = E::z();
    g.define(L, E(2) * z * (I + D - L));
    g.define(I, L * L / (E(4) * z));
    g.define(S, D * (D - S));
    g.define(P, E(2) * z * D + z * D * D);
    g.define(H, detail::polyhedral(m, D));
    g.define(D, L + S + P + H);
    g.define(C, D + I - L - E(2) * z * D - L * L);
    return g.solve(N);
}

/// 2-connected simple cubic maps.
template <class R>
SeriesMap<R> build_two_connected_simple(int N)
{
    using E = Expr<R>;
    const Series<R> m = build_three_connected<R>(N + 1).M;
    GrammarSystem<R> g("2-connected simple cubic maps");
    E D = g.unknown("D"), S = g.unknown("S"), P = g.unknown("P"), H = g.unknown("H"), B = g.unknown("B*");
    const E z = E::z();
    g.define(S, D * (D - S));
    g.define(P, E(2) * z * D + z * D * D);
    g.define(H, detail::polyhedral(m, D));
    g.define(D, S + P + H);
    g.define(B, D - E(2) * z * D);
    return g.solve(N);
}

enum class TriangleFreeVariant { general, simple, two_connected, two_connected_simple };

/// Triangle-free cubic maps and their simple / 2-connected restrictions.
///
/// T^(3)(x,u) is needed only at x = z(1+D)^3, u = (3D+3D^2+D^3)/(1+D)^3, so it is carried
/// as the univariate unknown "T3"; then T1 = u x T3 = z(3D+3D^2+D^3) T3 and H1 = z T3.
template <class R>
SeriesMap<R> build_triangle_free(int N, TriangleFreeVariant variant = TriangleFreeVariant::general)
{
    using E = Expr<R>;
    const bool simple = variant == TriangleFreeVariant::simple || variant == TriangleFreeVariant::two_connected_simple;
    const bool biconnected =
        variant == TriangleFreeVariant::two_connected || variant == TriangleFreeVariant::two_connected_simple;
    const int slack = 2;
    const Series<R> t4 = build_three_connected<R>(N + slack + 6).T4;

    GrammarSystem<R> g("triangle-free cubic maps");
    E F = g.unknown(simple ? (biconnected ? "G*" : "F*") : (biconnected ? "G" : "F"));
    E D = g.unknown("D"), L = g.unknown("L"), I = g.unknown("I"), P0 = g.unknown("P0"), P1 = g.unknown("P1"),
      S0 = g.unknown("S0"), S1 = g.unknown("S1"), W0 = g.unknown("W0"), W1 = g.unknown("W1"),
      H0 = g.unknown("H0"), H1 = g.unknown("H1"), T3 = g.unknown("T3", 2), T0 = g.unknown("T0");
    const E z = E::z();
    const E cube = pow(E(1) + D, 3);
    const E x = z * cube;
    const E u = (E(3) * D + E(3) * D * D + pow(D, 3)) / cube;
    const E a = E(1) + T3 / x;

    g.define(T3, compose(t4, x * a * a) / a + x * x * pow(a, 3) + x * x * (u - E(1)));
    g.define(T0, (E(1) + E(2) * x * u - E(3) * x) * T3 - x * x * u);
    g.define(H1, z * T3);
    g.define(H0, (E(2) * D + D * D) * H1 + T0 / (E(1) + D));
    g.define(W0, z * z * (E(4) * D * D + E(8) * pow(D, 3) + E(5) * pow(D, 4) + pow(D, 5)));
    g.define(W1, z * z * (D + E(6) * D * D + E(2) * pow(D, 3)));
    g.define(P1, z * D * L);
    if (biconnected) {
        g.define(L, E(0));
        g.define(I, E(0));
    } else {
        g.define(I, L * L / (E(4) * z));
        if (simple)
            g.define(L, E(2) * z * (I + D - E(2) * z * (D - L) - L * L));
        else
            g.define(L, E(2) * z * (E(1) + I + D - L * L - z) - E(4) * z * z * (D - L));
    }
    if (simple) {
        g.define(P0, E(2) * z * (D - L) + z * pow(D - L, 2));
        g.define(S1, E(4) * z * (D - L) * L + pow(L, 3));
    } else {
        g.define(P0, z * pow(E(1) + D - L, 2));
        g.define(S1, E(2) * z * L + E(4) * z * (D - L) * L + pow(L, 3));
    }
    g.define(S0, (D - S0 - S1) * D - S1);
    g.define(D, L + S0 + P0 + W0 + H0 + S1 + P1 + W1 + H1);
    if (simple)
        g.define(F, I + D - L - S1 - P1 - W1 - H1 - L * L - E(2) * z * (D - L));
    else
        g.define(F, I + L + S0 + P0 + W0 + H0);
    return g.solve(N, slack);
}

/// Integer closed forms for cubic (c_n) and 2-connected cubic (b_n) map counts, n >= 1.
mpz_class closed_formula_c(unsigned n);
mpz_class closed_formula_b(unsigned n);

/// faces-2 indexed series to edge indexing: z^n -> z^(3n+offset).
template <class R>
Series<R> reindex_faces_to_edges(const Series<R>& s, int offset)
{
    if (offset != 0 && offset != -1) throw std::invalid_argument("offset must be 0 or -1");
    std::vector<R> v;
    for (int n = 0; n < s.stored(); ++n) {
        if (is_zero(s[n])) continue;
        int e = 3 * n + offset;
        if (e < 0) throw std::domain_error("negative exponent after reindexing");
        if (static_cast<int>(v.size()) <= e) v.resize(static_cast<std::size_t>(e) + 1, R(0));
        v[static_cast<std::size_t>(e)] = s[n];
    }
    const int order = s.exact() ? Series<R>::kExact : std::max(3 * s.order() + offset + 2, 0);
    return Series<R>(std::move(v), order);
}

/// One counting class of the catalog.
struct CatalogEntry {
    std::string name;          // e.g. "cubic"
    std::string symbol;        // table column symbol, e.g. "c"
    std::string description;
    std::string oeis;          // empty if none
    std::vector<long long> table;  // printed values for total faces 3..11 (0 = blank cell)
    std::vector<long long> expected;  // verified values for total faces 3..11
    std::function<Series<Rational>(int)> exact;
    std::function<Series<Real>(int)> floating;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name_or_symbol);

/// Rows {class, n_faces_total, count} for export.
struct SequenceRow {
    std::string cls;
    int faces_total;
    std::string count;
};
std::vector<SequenceRow> sequence_rows(const CatalogEntry& e, int N);

} // namespace cubicmaps
