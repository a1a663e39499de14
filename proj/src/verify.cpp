#include "cubicmaps/verify.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cubicmaps/asymptotics.hpp"
#include "cubicmaps/oracle.hpp"

namespace cubicmaps {

Quadruple quadruple(std::string label, long double paper, long double computed, long double tol, bool relative)
{
    Quadruple q{std::move(label), paper, computed, tol, relative, false};
    const long double err = std::fabs(computed - paper);
    q.pass = relative ? err <= tol * std::fabs(paper) : err <= tol;
    return q;
}

std::string CriterionResult::summary_line() const
{
    std::ostringstream o;
    o << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  " << name;
    if (!pass && known_unattainable) o << "  [known unattainable]";
    o << "  (" << std::fixed << std::setprecision(1) << seconds << " s)";
    return o.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool all_pass(const std::vector<Quadruple>& v)
{
    for (const auto& q : v)
        if (!q.pass) return false;
    return true;
}

Quadruple flag(std::string label, bool ok)
{
    return {std::move(label), 1, ok ? 1.0L : 0.0L, 0, false, ok};
}

Quadruple upper_bound(std::string label, long double limit, long double value)
{
    return {std::move(label), limit, value, 0, false, value < limit};
}

std::string fmt(long double x, int digits = 10)
{
    std::ostringstream o;
    o << std::setprecision(digits) << static_cast<double>(x);
    return o.str();
}

const long double kS3 = std::sqrt(3.0L);
const Rational kTol(1, 1000000000000L);

// float sequences shared by criteria 5 and 6
struct Sequences {
    std::map<std::string, std::vector<long double>> a;
    const std::vector<long double>& get(const std::string& cls)
    {
        auto it = a.find(cls);
        if (it == a.end()) it = a.emplace(cls, class_sequence(cls, 400, false)).first;
        return it->second;
    }
};

// ---------------------------------------------------------------------------

void golden_table(CriterionResult& r)
{
    r.name = "golden counts, nine columns, 3 to 11 faces";
    const auto t0 = Clock::now();
    bool exact = true;
    for (const auto& e : catalog()) {
        const Series<Rational> s = e.exact(9);
        int bad = 0;
        for (int n = 1; n <= 9; ++n) {
            const auto i = static_cast<std::size_t>(n - 1);
            const Rational got = s[n];
            if (got != static_cast<long>(e.expected[i])) ++bad;
            if (e.table[i] != e.expected[i])
                r.notes.push_back(e.symbol + " at " + std::to_string(n + 2) + " faces: printed " +
                                  std::to_string(e.table[i]) + ", computed " + got.get_str() +
                                  " (printed cell is missing its last digit)");
        }
        exact = exact && bad == 0;
        r.values.push_back(quadruple(e.symbol + " at 11 faces", static_cast<long double>(e.table[8]),
                                     rational_to_real(s[9]), 0));
        if (bad) r.notes.push_back(e.symbol + ": " + std::to_string(bad) + " cells differ");
    }
    const double t = since(t0);
    r.values.push_back(upper_bound("runtime (s)", 10, t));
    r.pass = exact && all_pass(r.values);
}

void closed_formulas(CriterionResult& r)
{
    r.name = "closed formulas for c_n and b_n, n <= 50";
    const int N = 50;
    const auto c = build_cubic<Rational>(N).at("C");
    const auto b = build_two_connected<Rational>(N).at("B");
    int bad = 0;
    for (unsigned n = 1; n <= N; ++n) {
        if (c[static_cast<int>(n)] != Rational(closed_formula_c(n))) ++bad;
        if (b[static_cast<int>(n)] != Rational(closed_formula_b(n))) ++bad;
    }
    r.values.push_back(quadruple("c_50", rational_to_real(Rational(closed_formula_c(N))), rational_to_real(c[N]), 0));
    r.values.push_back(quadruple("b_50", rational_to_real(Rational(closed_formula_b(N))), rational_to_real(b[N]), 0));
    r.values.push_back(quadruple("mismatching coefficients", 0, bad, 0));
    r.pass = bad == 0;
}

void residuals(CriterionResult& r)
{
    r.name = "minimal polynomials annihilate their series to order 40";
    const int N = 40;
    const std::vector<std::pair<std::string, bool>> checks = {
        {"M", verify_poly_residual(minimal_polynomial("M"), build_three_connected<Rational>(N).M)},
        {"C", verify_poly_residual(minimal_polynomial("C"), build_cubic<Rational>(N).at("C"))},
        {"B", verify_poly_residual(minimal_polynomial("B"), build_two_connected<Rational>(N).at("B"))},
        {"C*", verify_poly_residual(minimal_polynomial("C*"), build_simple<Rational>(N).at("C*"))},
        {"B*", verify_poly_residual(minimal_polynomial("B*"), build_two_connected_simple<Rational>(N).at("B*"))},
        {"Q", verify_poly_residual(minimal_polynomial("Q"), limit_root_degree_pgf<QSqrt3>(N))},
    };
    for (const auto& [name, ok] : checks) r.values.push_back(flag("residual of " + name + " vanishes", ok));
    r.notes.push_back("C* uses the corrected polynomial; the printed one leaves a residual");
    r.pass = all_pass(r.values);
}

void oracle_equivalence(CriterionResult& r, std::map<int, CrossCheckReport>& reports)
{
    r.name = "oracle equivalence at 3, 6, 9, 12 edges";
    const std::map<int, long> maps = {{3, 4}, {6, 32}, {9, 336}, {12, 4096}};
    bool ok = true;
    for (const auto& [E, count] : maps) {
        const auto t0 = Clock::now();
        const auto& rep = reports[E] = cross_check(E);
        const double t = since(t0);
        r.values.push_back(quadruple("maps with " + std::to_string(E) + " edges", count, rep.maps, 0));
        if (!rep.equivalence_pass()) {
            ok = false;
            r.notes.push_back("E = " + std::to_string(E) + ": " + rep.first_failure());
        }
        for (const auto& i : rep.items)
            if (i.triangle && !i.pass)
                r.notes.push_back("E = " + std::to_string(E) + ": " + i.name + " differs (" + i.detail +
                                  "); triangle-free classes are outside this criterion");
        if (E == 12) r.values.push_back(upper_bound("runtime at 12 edges (s)", 900, t));
    }
    r.pass = ok && all_pass(r.values);
}

void growth(CriterionResult& r, Sequences& seq, std::map<std::string, long double>& rho)
{
    r.name = "growth constants from 400 terms, certified singularities";
    struct Row {
        std::string cls, label;
        long double paper;
        long double printed_tol;  // half a unit in the last printed digit, or exact
    };
    const std::vector<Row> rows = {
        {"c", "12 sqrt3", 12 * kS3, 0},        {"b", "27/2", 13.5L, 0},
        {"c*", "1/rho", 10.38845L, 5e-6L},     {"b*", "5 + 3 sqrt3", 5 + 3 * kS3, 0},
        {"f", "1/phi", 18.18695L, 5e-6L},      {"f*", "1/phi*", 7.039997L, 5e-7L},
    };
    const Rational zero(0), one(1);
    auto sing = [&](const std::string& name) { return locate_dominant_singularity(minimal_polynomial(name), zero, one, kTol); };
    auto uni = [&](const std::string& name) { return locate_dominant_singularity(univariate_record(name), zero, one, kTol); };
    std::map<std::string, RootInterval> cert;
    cert["c"] = sing("C");
    cert["b"] = sing("B");
    cert["b*"] = sing("B*");
    cert["c*"] = uni("rho*");
    cert["f"] = uni("phi");
    cert["f*"] = uni("phi*");
    const RootInterval cs = sing("C*");

    r.values.push_back(flag("1/(12 sqrt3) in the certified interval of C", cert["c"].contains(QSqrt3(0, Rational(1, 36)))));
    r.values.push_back(flag("2/27 in the certified interval of B", cert["b"].contains(Rational(2, 27))));
    r.values.push_back(flag("1/(5 + 3 sqrt3) in the certified interval of B*",
                            cert["b*"].contains(QSqrt3(Rational(-5, 2), Rational(3, 2)))));
    r.values.push_back(flag("rho* root lies in the discriminant interval of C*", cs.contains(cert["c*"].lo) ||
                                                                                    cert["c*"].contains(cs.lo)));
    for (const auto& row : rows) {
        const auto& iv = cert[row.cls];
        rho[row.cls] = iv.mid();
        if (row.printed_tol > 0)
            r.values.push_back(quadruple("certified " + row.label, row.paper, 1 / iv.mid(), row.printed_tol));
        const Extrapolation g = growth_constant(seq.get(row.cls));
        r.values.push_back(quadruple(row.cls + " growth " + row.label, row.paper, g.value, 1e-3L, true));
    }
    r.pass = all_pass(r.values);
}

void exponents(CriterionResult& r, Sequences& seq, const std::map<std::string, long double>& rho)
{
    r.name = "exponent -5/2 and prefactors at n = 400";
    for (const std::string cls : {"c", "b", "c*", "b*", "f", "f*"}) {
        const long double e = exponent_estimate(seq.get(cls), rho.at(cls));
        r.values.push_back(quadruple(cls + " exponent", -2.5L, e, 0.1L));
    }
    // 3 A3 / (4 sqrt pi) with A3 = 4 sqrt6 / 3 and sqrt3 / 3
    const long double sp = std::sqrt(std::acos(-1.0L));
    r.values.push_back(quadruple("c prefactor", std::sqrt(6.0L) / sp, prefactor_at(seq.get("c"), rho.at("c"), 400),
                                 0.02L, true));
    r.values.push_back(
        quadruple("b prefactor", kS3 / (4 * sp), prefactor_at(seq.get("b"), rho.at("b"), 400), 0.02L, true));
    r.pass = all_pass(r.values);
}

void root_degree(CriterionResult& r)
{
    r.name = "root-face degree law at n = 60, 120, 240";
    const auto exact = limit_root_degree_pgf<QSqrt3>(8);
    std::vector<long double> p(8);
    for (int k = 1; k <= 7; ++k) p[static_cast<std::size_t>(k)] = exact[k].to_real();
    std::vector<DistTable<Real>> d;
    for (int n : {60, 120, 240}) d.push_back(root_degree_distribution<Real>(n, 8));
    bool monotone = true;
    for (int k = 1; k <= 7; ++k) {
        const long double lim = p[static_cast<std::size_t>(k)];
        long double prev = INFINITY;
        for (const auto& t : d) {
            const long double err = std::fabs(t.mass_at(k) - lim);
            if (!(err < prev)) monotone = false;
            prev = err;
        }
        r.values.push_back(quadruple("p_" + std::to_string(k) + " at n = 240", lim, d.back().mass_at(k), 1e-3L));
    }
    r.values.push_back(flag("distance to the limit decreases in n for every k", monotone));
    const RootDegreeTail tail = root_degree_tail(150);
    r.values.push_back(quadruple("q", 0.90699L, tail.q, 1e-5L));
    r.values.push_back(quadruple("c", 0.032328L, tail.c, 1e-3L));
    r.notes.push_back("tail constant c = " + fmt(tail.c, 8) + " from p_1..p_150");
    r.pass = all_pass(r.values);
}

void map_airy(CriterionResult& r)
{
    r.name = "map-Airy constants and convergence of the core laws";
    const PredictedConstants pc = predicted_constants();
    const auto& B = pc.block;
    const auto& K = pc.cubic_block;
    const auto& T = pc.three_connected;
    r.values.push_back(quadruple("c", 10.9215218947L, B.c, 1e-9L, true));
    r.values.push_back(quadruple("c*", 12.6110872117L, K.c, 1e-9L, true));
    r.values.push_back(quadruple("c'", 27.1635288451L, T.c, 1e-9L, true));
    r.values.push_back(quadruple("block center", 1 / kS3, B.center, 1e-12L, true));
    r.values.push_back(quadruple("cubic block center", 0.5L, K.center, 1e-12L, true));
    r.values.push_back(quadruple("3-connected center", 0.25L, T.center, 1e-12L, true));
    for (const MapAirySpec* s : {&B, &K, &T})
        r.values.push_back(upper_bound(s->name + " consistency residual", 1e-12L, s->consistency));
    const bool constants = all_pass(r.values);

    const auto t0 = Clock::now();
    std::vector<long double> sup_c, sup_saddle, mean_b, mean_t;
    for (int n : {120, 240, 480}) {
        const auto d = core_size_distribution<Real>(CoreKind::block, n);
        sup_c.push_back(compare_to_airy(d, B, 0.3L, true).sup_distance);
        sup_saddle.push_back(compare_to_airy(d, B, 0.3L, true, B.c_saddle).sup_distance);
        mean_b.push_back(largest_component_distribution<Real>(CoreKind::block, n).mean() / n);
        mean_t.push_back(largest_component_distribution<Real>(CoreKind::three_connected, n).mean() / n);
    }
    const double t = since(t0);
    auto decreasing = [](const std::vector<long double>& v) { return v[0] > v[1] && v[1] > v[2]; };
    auto towards = [](const std::vector<long double>& v, long double target) {
        return std::fabs(v[0] - target) > std::fabs(v[1] - target) && std::fabs(v[1] - target) > std::fabs(v[2] - target);
    };
    auto list = [](const std::vector<long double>& v) { return fmt(v[0], 4) + ", " + fmt(v[1], 4) + ", " + fmt(v[2], 4); };

    const bool sup_ok = decreasing(sup_c);
    r.values.push_back(flag("sup distance to cA(cq) decreases over n = 120, 240, 480", sup_ok));
    r.values.push_back(flag("largest block mean / n moves toward 1/sqrt3", towards(mean_b, 1 / kS3)));
    r.values.push_back(flag("largest 3-connected mean / n moves toward 1/4", towards(mean_t, 0.25L)));
    r.values.push_back(upper_bound("runtime of the convergence part (s)", 600, t));
    r.notes.push_back("sup distance with c = " + fmt(B.c, 6) + ": " + list(sup_c));
    r.notes.push_back("sup distance with the saddle-point scale " + fmt(B.c_saddle, 6) + ": " + list(sup_saddle));
    r.notes.push_back("largest block mean / n: " + list(mean_b));
    r.notes.push_back("largest 3-connected mean / n: " + list(mean_t));
    r.pass = all_pass(r.values);
    // the printed scale is off by 4 (1 - alpha0)^{-4/3}; with it the distance cannot shrink
    r.known_unattainable = !r.pass && !sup_ok && constants && decreasing(sup_saddle) && towards(mean_b, 1 / kS3) &&
                           towards(mean_t, 0.25L) && t < 600;
}

void airy_numerics(CriterionResult& r)
{
    r.name = "Airy numerics";
    const MapAiryCheck m = map_airy_checks(predicted_constants().block.c, 10);
    r.values.push_back(quadruple("integral of A", 1, m.integral, 1e-6L));
    r.values.push_back(quadruple("integral of cA(cx)", 1, m.integral_scaled, 1e-6L));
    r.values.push_back(upper_bound("max |Ai'' - x Ai| on the grid", 1e-8L, m.ode_residual));
    r.values.push_back(quadruple("left tail ratio at x = -10", 1, m.left_tail, 0.05L));
    r.values.push_back(quadruple("right tail ratio at x = 10", 1, m.right_tail, 0.05L));
    r.pass = all_pass(r.values);
}

void marked(CriterionResult& r, std::map<int, CrossCheckReport>& reports)
{
    r.name = "marked expectations: isthmuses and cut vertices";
    bool oracle_ok = true;
    for (int E : {3, 6, 9, 12, 15}) {
        if (!reports.count(E)) reports[E] = cross_check(E);
        for (const auto& i : reports[E].items) {
            const bool relevant = i.name.find("isthmuses") != std::string::npos ||
                                  i.name.find("cut vertices") != std::string::npos;
            if (relevant && !i.pass) {
                oracle_ok = false;
                r.notes.push_back("E = " + std::to_string(E) + ": " + i.name + " " + i.detail);
            }
        }
    }
    r.values.push_back(flag("exact expectations and laws equal the oracle at 3..15 edges", oracle_ok));

    const int N = 120;
    const auto e = marked_expectations<Real>(N);
    std::vector<long double> isth, cut, block;
    for (int n = N / 2; n <= N; ++n) {
        const auto& x = e[static_cast<std::size_t>(n - 1)];
        isth.push_back(x.isthmuses / n);
        cut.push_back(x.cut_vertices / n);
        block.push_back((x.cut_vertices + x.loops) / n);
    }
    const auto li = richardson_limit(isth, N / 2);
    const auto lc = richardson_limit(cut, N / 2);
    const auto lb = richardson_limit(block, N / 2);
    const auto qi = quadruple("E[isthmuses] / n", 0.40192L, li.value, 0.02L, true);
    const auto qc = quadruple("E[cut vertices] / n", 0.75L, lc.value, 0.02L, true);
    r.values.push_back(qi);
    r.values.push_back(qc);
    r.notes.push_back("n counts faces minus 2 (vertices / 2)");
    r.notes.push_back("cut vertices in the vertex-removal sense tend to " + fmt(lc.value) +
                      "; counting the vertices of loops as well gives " + fmt(lb.value));
    r.pass = all_pass(r.values);
    r.known_unattainable = !r.pass && oracle_ok && qi.pass && !qc.pass && std::fabs(lb.value - 0.75L) < 1e-6L;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt)
{
    auto wanted = [&](int id) {
        if (opt.only.empty()) return true;
        for (int i : opt.only)
            if (i == id) return true;
        return false;
    };
    Sequences seq;
    std::map<std::string, long double> rho;
    std::map<int, CrossCheckReport> reports;
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 10; ++id) {
        if (!wanted(id)) continue;
        CriterionResult r;
        r.id = id;
        const auto t0 = Clock::now();
        try {
            switch (id) {
            case 1: golden_table(r); break;
            case 2: closed_formulas(r); break;
            case 3: residuals(r); break;
            case 4: oracle_equivalence(r, reports); break;
            case 5: growth(r, seq, rho); break;
            case 6:
                if (rho.empty()) {
                    CriterionResult tmp;
                    growth(tmp, seq, rho);
                }
                exponents(r, seq, rho);
                break;
            case 7: root_degree(r); break;
            case 8: map_airy(r); break;
            case 9: airy_numerics(r); break;
            case 10: marked(r, reports); break;
            }
        } catch (const std::exception& ex) {
            r.pass = false;
            r.notes.push_back(std::string("error: ") + ex.what());
        }
        r.seconds = since(t0);
        if (opt.on_result) opt.on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_json(const std::vector<CriterionResult>& results)
{
    nlohmann::json j;
    j["schema_version"] = 1;
    bool all = true;
    for (const auto& r : results) {
        nlohmann::json c;
        c["id"] = r.id;
        c["name"] = r.name;
        c["pass"] = r.pass;
        c["known_unattainable"] = r.known_unattainable;
        c["seconds"] = r.seconds;
        for (const auto& q : r.values)
            c["values"].push_back({{"label", q.label},
                                   {"paper_value", static_cast<double>(q.paper_value)},
                                   {"computed_value", static_cast<double>(q.computed_value)},
                                   {"tolerance", static_cast<double>(q.tolerance)},
                                   {"relative", q.relative},
                                   {"pass", q.pass}});
        c["notes"] = r.notes;
        j["criteria"].push_back(c);
        all = all && r.pass;
    }
    j["all_pass"] = all;
    return j.dump(2);
}

} // namespace cubicmaps
