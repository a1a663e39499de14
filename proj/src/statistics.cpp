#include "cubicmaps/statistics.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cubicmaps/asymptotics.hpp"

namespace cubicmaps {

std::string to_string(SizeUnit u) { return u == SizeUnit::faces ? "faces-2" : "edges"; }

std::string to_string(CoreScheme s) { return s == CoreScheme::two_core ? "two-core" : "three-core"; }

std::string to_string(CoreKind k)
{
    switch (k) {
    case CoreKind::block: return "block";
    case CoreKind::cubic_block: return "cubic-block";
    case CoreKind::three_connected: return "three-connected";
    }
    return "?";
}

CoreScheme scheme_of(CoreKind k) { return k == CoreKind::three_connected ? CoreScheme::three_core : CoreScheme::two_core; }

std::string to_string(Marking m)
{
    switch (m) {
    case Marking::isthmus: return "isthmuses";
    case Marking::cut_vertex: return "cut vertices";
    case Marking::loop: return "loops";
    }
    return {};
}

// ---------------------------------------------------------------------------
// Export

namespace {

std::string mass_text(const Rational& r) { return r.get_str(); }
std::string mass_text(const Real& r) { return to_string(r); }

template <class R>
std::string csv_impl(const DistTable<R>& d)
{
    std::ostringstream out;
    out << "# n=" << d.n << " unit=" << to_string(d.unit) << " parameter=" << d.parameter << " scheme=" << d.scheme
        << " exact=" << (d.exact ? "true" : "false") << "\n";
    if (!d.notes.empty()) out << "# " << d.notes << "\n";
    out << "param_value,mass\n";
    for (std::size_t i = 0; i < d.support.size(); ++i) out << d.support[i] << "," << mass_text(d.masses[i]) << "\n";
    return out.str();
}

template <class R>
std::string json_impl(const DistTable<R>& d)
{
    nlohmann::json j;
    j["schema_version"] = 1;
    j["n"] = d.n;
    j["unit"] = to_string(d.unit);
    j["parameter"] = d.parameter;
    j["scheme"] = d.scheme;
    j["exact"] = d.exact;
    j["notes"] = d.notes;
    j["rows"] = nlohmann::json::array();
    for (std::size_t i = 0; i < d.support.size(); ++i)
        j["rows"].push_back({{"param_value", d.support[i]},
                             {"mass", mass_text(d.masses[i])},
                             {"mass_float", static_cast<double>(to_real(d.masses[i]))}});
    return j.dump(2);
}

} // namespace

std::string to_csv(const DistTable<Rational>& d) { return csv_impl(d); }
std::string to_csv(const DistTable<Real>& d) { return csv_impl(d); }
std::string to_json(const DistTable<Rational>& d) { return json_impl(d); }
std::string to_json(const DistTable<Real>& d) { return json_impl(d); }

// ---------------------------------------------------------------------------
// Root degree tail

RootDegreeTail root_degree_tail(int K)
{
    if (K < 100) throw std::invalid_argument("root_degree_tail needs K >= 100");
    RootDegreeTail out;
    out.q_inverse = smallest_root_qsqrt3(univariate_record("q-cubic").coeffs, 1, 2, Rational(1, 1000000000000000L));
    out.q = 1 / out.q_inverse.mid();
    // exact: the float solve loses all digits of p_k by k = 150
    const Series<QSqrt3> p = limit_root_degree_pgf<QSqrt3>(K);
    for (int k = 1; k <= K; ++k)
        out.ratios.push_back(to_real(p[k]) / std::sqrt(static_cast<Real>(k)) * std::pow(out.q_inverse.mid(), k));
    out.c = richardson_limit(out.ratios, 1).value;
    return out;
}

// ---------------------------------------------------------------------------
// Core schemes

namespace {

template <class R>
R binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return R(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return scalar_cast<R>(Rational(b));
}

// powers[m] = s^m truncated at order N, m = 0..N
template <class R>
std::vector<Series<R>> powers(const Series<R>& s, int N)
{
    std::vector<Series<R>> out;
    out.push_back(Series<R>::constant(R(1)));
    for (int m = 1; m <= N; ++m) out.push_back((out.back() * s).truncate(N));
    return out;
}

template <class R>
R at(const Series<R>& s, int k)
{
    return (k >= 0 && k < s.stored()) ? s[k] : R(0);
}

// Remainder of the 3-core scheme: C - H(1 + 2D), since at w = u = 1 the scheme is H(1 + 2D)
// (root on a core edge, or on either half of a subdivided one).  The form
// L + I + P + (D - H)(D - H - S) exceeds this by H(H + S) from 12 edges on.
template <class R>
Series<R> no_three_core(const SeriesMap<R>& cubic)
{
    const Series<R>& D = cubic.at("D");
    const Series<R>& H = cubic.at("H");
    const int N = D.order();
    return (cubic.at("L") + cubic.at("I") + cubic.at("P") + cubic.at("S") - Series<R>::constant(R(2)) * H * D)
        .truncate(N);
}

void check_edge_size(int n)
{
    if (n < 0 || n % 3 != 0) throw std::invalid_argument("edge size must be a non-negative multiple of 3");
}

} // namespace

template <class R>
std::vector<std::vector<R>> core_counts(CoreScheme which, int n)
{
    check_edge_size(n);
    const int Nf = n / 3;
    std::vector<std::vector<R>> table(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) table[static_cast<std::size_t>(t)].assign(static_cast<std::size_t>(t) + 1, R(0));
    if (n == 0) return table;
    const auto cubic = build_cubic<R>(Nf);
    if (which == CoreScheme::two_core) {
        // B(x/(1-xv))/(1-xv) + xv/(1-xv) + L^2/(4z) with x = zw, v = uL
        const Series<R> b = build_two_connected<R>(Nf).at("B");
        const auto lp = powers(cubic.at("L"), Nf);
        for (int t = 1; t <= n; ++t) {
            auto& row = table[static_cast<std::size_t>(t)];
            for (int m = 0; m + 3 <= t; ++m) {
                if ((t - m) % 3) continue;
                const int k = (t - m) / 3;
                if (m > Nf) continue;
                const R& l = at(lp[static_cast<std::size_t>(m)], Nf - k);
                if (is_zero(l) || is_zero(at(b, k))) continue;
                row[static_cast<std::size_t>(m)] += b[k] * binomial<R>(t, m) * l;
            }
            if (t <= Nf) row[static_cast<std::size_t>(t)] += at(lp[static_cast<std::size_t>(t)], Nf);
        }
        table[0][0] = cubic.at("I")[Nf];
    } else {
        // M(x(1+y)) (1+2y)/(1+y) + zA with x = zw, y = zwuD
        const Series<R> mf = build_three_connected<R>(Nf).M;
        const auto dp = powers(cubic.at("D"), Nf);
        for (int t = 6; t <= n; ++t) {
            auto& row = table[static_cast<std::size_t>(t)];
            for (int m = 0; m + 6 <= t; ++m) {
                const int j = t - m;
                if (j % 3) continue;
                if (m > Nf) continue;
                const R& mj = at(mf, j / 3);
                const R& dk = at(dp[static_cast<std::size_t>(m)], Nf - j / 3);
                if (is_zero(mj) || is_zero(dk)) continue;
                row[static_cast<std::size_t>(m)] +=
                    mj * (binomial<R>(j - 1, m) + R(2) * binomial<R>(j - 1, m - 1)) * dk;
            }
        }
        table[0][0] = no_three_core(cubic)[Nf];
    }
    return table;
}

template <class R>
CoreSeries<R> core_scheme_series(CoreScheme which, int N)
{
    using P = Poly<R>;
    using PP = Poly<P>;
    std::vector<PP> coeffs(static_cast<std::size_t>(N) + 1);
    for (int n = 3; n <= N; n += 3) {
        const auto table = core_counts<R>(which, n);
        std::vector<P> w;
        for (const auto& row : table) w.emplace_back(row, P::kUnbounded);
        coeffs[static_cast<std::size_t>(n)] = PP(std::move(w), PP::kUnbounded);
    }
    return {which, N, Series<PP>(std::move(coeffs), N)};
}

template <class R>
CoreSeries<R> core_scheme_series_direct(CoreScheme which, int N)
{
    using P = Poly<R>;
    using PP = Poly<P>;
    using S = Series<PP>;
    auto lift2 = [](const Series<R>& s) { return s.template map<PP>([](const R& c) { return PP(P(c)); }); };
    const int Nf = N / 3 + 1;
    const auto cubic = build_cubic<R>(Nf);
    const S w = S::constant(PP::variable());
    const S u = S::constant(PP(P::variable()));
    const S x = S::z() * w;
    const S one = S::constant(PP(1));
    S result;
    if (which == CoreScheme::two_core) {
        const Series<R> le = reindex_faces_to_edges(cubic.at("L"), -1).truncate(N);
        const Series<R> b = reindex_faces_to_edges(build_two_connected<R>(Nf).at("B"), 0).truncate(N);
        const S xv = (x * u * lift2(le)).truncate(N);
        const S y = exact_divide(x, one - xv).truncate(N);
        const Series<R> dumbbells = exact_divide(le * le, Series<R>::monomial(R(4), 1));
        result = exact_divide(compose(lift2(b), y) + xv, one - xv) + lift2(dumbbells);
    } else {
        const Series<R> de = reindex_faces_to_edges(cubic.at("D"), -1).truncate(N);
        const Series<R> m = reindex_faces_to_edges(build_three_connected<R>(Nf).M, 0).truncate(N);
        const Series<R> a = no_three_core(cubic);
        const S y = (x * u * lift2(de)).truncate(N);
        result = exact_divide(compose(lift2(m), (x * (one + y)).truncate(N)) * (one + S::constant(PP(2)) * y),
                              one + y) +
                 lift2(reindex_faces_to_edges(a, 0));
    }
    return {which, N, result.truncate(N)};
}

template <class R>
DistTable<R> core_size_distribution(CoreKind kind, int n)
{
    check_edge_size(n);
    if (n == 0) throw std::invalid_argument("core distributions need n >= 3");
    const auto table = core_counts<R>(scheme_of(kind), n);
    const R total = build_cubic<R>(n / 3).at("C")[n / 3];
    std::vector<std::pair<long, R>> w;
    for (int t = 0; t <= n; ++t)
        for (int m = 0; m <= t; ++m) {
            const R& c = table[static_cast<std::size_t>(t)][static_cast<std::size_t>(m)];
            if (is_zero(c)) continue;
            w.emplace_back(kind == CoreKind::block ? t : t - m, c);
        }
    auto d = make_table(n, SizeUnit::edges, "root " + to_string(kind) + " size", to_string(scheme_of(kind)), w, total);
    d.notes = "0 = no core";
    return d;
}

template <class R>
DistTable<R> largest_component_distribution(CoreKind kind, int n, double threshold)
{
    check_edge_size(n);
    if (n == 0) throw std::invalid_argument("core distributions need n >= 3");
    if (threshold < 0) threshold = kind == CoreKind::three_connected ? 0.25 : 0.5;
    const auto table = core_counts<R>(scheme_of(kind), n);
    std::vector<std::pair<long, R>> w;
    R total(0);
    for (int t = 1; t <= n; ++t) {
        if (t <= threshold * n) continue;
        for (int m = 0; m <= t; ++m) {
            const R& c = table[static_cast<std::size_t>(t)][static_cast<std::size_t>(m)];
            if (is_zero(c)) continue;
            const R v = divide_exact(R(c * R(n)), R(t));
            w.emplace_back(kind == CoreKind::block ? t : t - m, v);
            total += v;
        }
    }
    if (is_zero(total)) throw std::domain_error("no mass above the threshold");
    auto d = make_table(n, SizeUnit::edges, "largest " + to_string(kind) + " size", to_string(scheme_of(kind)), w,
                        total);
    d.exact = false;
    std::ostringstream note;
    note << "transferred via n/t factor from the root core law, t > " << threshold << " n, renormalised; approximate";
    d.notes = note.str();
    return d;
}

template std::vector<std::vector<Rational>> core_counts<Rational>(CoreScheme, int);
template std::vector<std::vector<Real>> core_counts<Real>(CoreScheme, int);
template CoreSeries<Rational> core_scheme_series<Rational>(CoreScheme, int);
template CoreSeries<Real> core_scheme_series<Real>(CoreScheme, int);
template CoreSeries<Rational> core_scheme_series_direct<Rational>(CoreScheme, int);
template CoreSeries<Real> core_scheme_series_direct<Real>(CoreScheme, int);
template DistTable<Rational> core_size_distribution<Rational>(CoreKind, int);
template DistTable<Real> core_size_distribution<Real>(CoreKind, int);
template DistTable<Rational> largest_component_distribution<Rational>(CoreKind, int, double);
template DistTable<Real> largest_component_distribution<Real>(CoreKind, int, double);

} // namespace cubicmaps
