// cubicmaps: counting, distributions, asymptotics, oracle cross-checks and the acceptance run.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <CLI11.hpp>
#include <httplib.h>
#include <json.hpp>

#include "cubicmaps/asymptotics.hpp"
#include "cubicmaps/oracle.hpp"
#include "cubicmaps/verify.hpp"

using namespace cubicmaps;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunConfig {
    std::string subcommand;
    int order = 9;
    bool floating = false;
    int precision = 64;
    std::string format = "table";
    std::string out;
    int edges = 6;
    std::string fixtures;
};

json quad_json(const Quadruple& q)
{
    return {{"label", q.label},
            {"paper_value", static_cast<double>(q.paper_value)},
            {"computed_value", static_cast<double>(q.computed_value)},
            {"tolerance", static_cast<double>(q.tolerance)},
            {"relative", q.relative},
            {"pass", q.pass}};
}

/// Writes to a temporary next to the target and renames it into place.
void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty() || cfg.out == "-") {
        std::cout << text;
        return;
    }
    const fs::path target(cfg.out);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
        f << text;
        if (!f.flush()) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string fixtures_dir(const RunConfig& cfg)
{
    if (!cfg.fixtures.empty()) return cfg.fixtures;
    if (const char* env = std::getenv("CUBICMAPS_FIXTURES")) return env;
    return std::string(CUBICMAPS_FIXTURE_DIR) + "/oeis";
}

// ---------------------------------------------------------------------------
// count

std::string coefficient(int n, const Series<Rational>* ex, const Series<Real>* fl)
{
    if (ex) return (*ex)[n].get_str();
    std::ostringstream o;
    o.precision(18);
    o << static_cast<double>((*fl)[n]);
    return o.str();
}

int cmd_count(const RunConfig& cfg, const std::string& cls, bool table)
{
    std::vector<const CatalogEntry*> entries;
    if (table || cls.empty())
        for (const auto& e : catalog()) entries.push_back(&e);
    else
        entries.push_back(&catalog_entry(cls));
    std::vector<Series<Rational>> ex;
    std::vector<Series<Real>> fl;
    for (const auto* e : entries) {
        if (cfg.floating)
            fl.push_back(e->floating(std::max(cfg.order, 1)));
        else
            ex.push_back(e->exact(std::max(cfg.order, 1)));
    }
    auto cell = [&](std::size_t i, int n) {
        return coefficient(n, cfg.floating ? nullptr : &ex[i], cfg.floating ? &fl[i] : nullptr);
    };

    std::ostringstream o;
    if (cfg.format == "json") {
        json j;
        j["schema_version"] = 1;
        j["backend"] = cfg.floating ? "float" : "exact";
        j["order"] = cfg.order;
        j["rows"] = json::array();
        for (int n = 1; n <= cfg.order; ++n)
            for (std::size_t i = 0; i < entries.size(); ++i)
                j["rows"].push_back({{"class", entries[i]->name}, {"faces_total", n + 2}, {"count", cell(i, n)}});
        o << j.dump(2) << "\n";
    } else if (table) {
        const char sep = cfg.format == "csv" ? ',' : '\t';
        o << "faces";
        for (const auto* e : entries) o << sep << e->symbol;
        o << "\n";
        for (int n = 1; n <= cfg.order; ++n) {
            o << n + 2;
            for (std::size_t i = 0; i < entries.size(); ++i) o << sep << cell(i, n);
            o << "\n";
        }
        o << "OEIS";
        for (const auto* e : entries) o << sep << (e->oeis.empty() ? "-" : e->oeis);
        o << "\n";
    } else {
        const char sep = cfg.format == "csv" ? ',' : '\t';
        o << "class" << sep << "faces_total" << sep << "count\n";
        for (int n = 1; n <= cfg.order; ++n) o << entries[0]->name << sep << n + 2 << sep << cell(0, n) << "\n";
    }
    emit(cfg, o.str());
    return 0;
}

// ---------------------------------------------------------------------------
// dist

template <class R>
DistTable<R> build_dist(const std::string& kind, int n, int cap)
{
    if (kind == "root-degree") return cap > 0 ? root_degree_distribution<R>(n, cap) : root_degree_distribution<R>(n);
    if (kind == "two-core" || kind == "block") return core_size_distribution<R>(CoreKind::block, n);
    if (kind == "cubic-block") return core_size_distribution<R>(CoreKind::cubic_block, n);
    if (kind == "three-core") return core_size_distribution<R>(CoreKind::three_connected, n);
    if (kind == "largest-block") return largest_component_distribution<R>(CoreKind::block, n);
    if (kind == "largest-cubic-block") return largest_component_distribution<R>(CoreKind::cubic_block, n);
    if (kind == "largest-three-connected") return largest_component_distribution<R>(CoreKind::three_connected, n);
    if (kind == "isthmuses") return marked_distribution<R>(n, Marking::isthmus);
    if (kind == "cut-vertices") return marked_distribution<R>(n, Marking::cut_vertex);
    if (kind == "loops") return marked_distribution<R>(n, Marking::loop);
    throw std::invalid_argument("unknown distribution kind: " + kind);
}

template <class R>
std::string render(const DistTable<R>& d, const std::string& format)
{
    if (format == "json") return to_json(d) + "\n";
    return to_csv(d);
}

int cmd_dist(const RunConfig& cfg, const std::string& kind, int n, int cap)
{
    if (cfg.floating)
        emit(cfg, render(build_dist<Real>(kind, n, cap), cfg.format));
    else
        emit(cfg, render(build_dist<Rational>(kind, n, cap), cfg.format));
    return 0;
}

// ---------------------------------------------------------------------------
// airy

int cmd_airy(const RunConfig& cfg, double from, double to, double step, double c, bool check)
{
    std::ostringstream o;
    o.precision(17);
    if (check) {
        const MapAiryCheck m = map_airy_checks(c, 10);
        const std::vector<Quadruple> q = {
            quadruple("integral of A", 1, m.integral, 1e-6L),
            quadruple("integral of cA(cx)", 1, m.integral_scaled, 1e-6L),
            {"max |Ai'' - x Ai|", 1e-8L, m.ode_residual, 0, false, m.ode_residual < 1e-8L},
            quadruple("left tail ratio at x = -10", 1, m.left_tail, 0.05L),
            quadruple("right tail ratio at x = 10", 1, m.right_tail, 0.05L),
        };
        json j;
        j["schema_version"] = 1;
        j["c"] = c;
        bool ok = true;
        for (const auto& x : q) {
            j["values"].push_back(quad_json(x));
            ok = ok && x.pass;
        }
        j["pass"] = ok;
        o << j.dump(2) << "\n";
        emit(cfg, o.str());
        return ok ? 0 : 1;
    }
    if (step <= 0 || to < from) throw std::invalid_argument("need from <= to and step > 0");
    o << "x,Ai,Ai',density\n";
    const long n = std::lround((to - from) / step);
    for (long i = 0; i <= n; ++i) {
        const long double x = from + i * step;
        const AiryValue v = airy(x);
        o << static_cast<double>(x) << "," << static_cast<double>(v.ai) << "," << static_cast<double>(v.aip) << ","
          << static_cast<double>(map_airy_density(x, c)) << "\n";
    }
    emit(cfg, o.str());
    return 0;
}

// ---------------------------------------------------------------------------
// asym

struct AsymClass {
    std::string symbol, growth_label;
    long double growth;
    std::string record;  // minimal polynomial or univariate record holding the singularity
    bool univariate;
    long double prefactor;  // 0 if not checked
};

int cmd_asym(const RunConfig& cfg, const std::string& cls, int terms)
{
    const long double s3 = std::sqrt(3.0L), sp = std::sqrt(std::acos(-1.0L));
    const std::map<std::string, AsymClass> known = {
        {"c", {"c", "12 sqrt3", 12 * s3, "C", false, std::sqrt(6.0L) / sp}},
        {"b", {"b", "27/2", 13.5L, "B", false, s3 / (4 * sp)}},
        {"c*", {"c*", "1/rho", 10.38845L, "rho*", true, 0}},
        {"b*", {"b*", "5 + 3 sqrt3", 5 + 3 * s3, "B*", false, 0}},
        {"f", {"f", "1/phi", 18.18695L, "phi", true, 0}},
        {"f*", {"f*", "1/phi*", 7.039997L, "phi*", true, 0}},
    };
    const auto it = known.find(catalog_entry(cls).symbol);
    if (it == known.end()) throw std::invalid_argument("no asymptotic data for class " + cls);
    const AsymClass& a = it->second;
    if (terms < 300) throw std::invalid_argument("asym needs at least 300 terms");

    const auto seq = class_sequence(a.symbol, terms, !cfg.floating);
    const Extrapolation g = growth_constant(seq);
    const Rational tol(1, 1000000000000L);
    const RootInterval iv =
        a.univariate ? locate_dominant_singularity(univariate_record(a.record), Rational(0), Rational(1), tol)
                     : locate_dominant_singularity(minimal_polynomial(a.record), Rational(0), Rational(1), tol);
    const long double rho = iv.mid();
    std::vector<Quadruple> q;
    q.push_back(quadruple("growth " + a.growth_label, a.growth, g.value, 1e-3L, true));
    q.push_back(quadruple("certified 1/rho", a.growth, 1 / rho, 1e-5L, true));
    q.push_back(quadruple("exponent", -2.5L, exponent_estimate(seq, rho), 0.1L));
    if (a.prefactor > 0) q.push_back(quadruple("prefactor at n = " + std::to_string(terms), a.prefactor,
                                               prefactor_at(seq, rho, terms), 0.02L, true));
    json j;
    j["schema_version"] = 1;
    j["class"] = catalog_entry(cls).name;
    j["terms"] = terms;
    j["backend"] = cfg.floating ? "float" : "exact";
    j["rho_interval"] = {iv.lo.get_str(), iv.hi.get_str()};
    j["richardson_order"] = g.order;
    bool ok = true;
    for (const auto& x : q) {
        j["values"].push_back(quad_json(x));
        ok = ok && x.pass;
    }
    j["pass"] = ok;
    emit(cfg, j.dump(2) + "\n");
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// oracle

int cmd_oracle(const RunConfig& cfg)
{
    const CrossCheckReport r = cross_check(cfg.edges);
    if (cfg.format == "json") {
        emit(cfg, r.to_json() + "\n");
    } else {
        std::ostringstream o;
        o << "E = " << r.E << ": " << r.maps << " maps\n";
        for (const auto& i : r.items) o << (i.pass ? "ok    " : "FAIL  ") << i.name << ": " << i.detail << "\n";
        o << "triangle predicate: " << r.triangle_winner << "\n";
        o << (r.all_pass() ? "all checks pass" : "first failure: " + r.first_failure()) << "\n";
        emit(cfg, o.str());
    }
    return r.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const RunConfig& cfg, const std::vector<int>& only)
{
    AcceptanceOptions opt;
    opt.only = only;
    opt.on_result = [](const CriterionResult& r) {
        std::cerr << r.summary_line() << "\n";
        for (const auto& q : r.values)
            if (!q.pass) std::cerr << "      FAIL  " << q.label << "\n";
    };
    const auto results = run_acceptance(opt);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.pass;
    if (cfg.format == "json" || !cfg.out.empty()) emit(cfg, to_json(results) + "\n");
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// oeis

struct OeisSequence {
    std::string id, cls;
    int shift;  // series index = b-file index + shift
    int first;  // first b-file index compared (a(0) conventions are skipped)
};

const std::vector<OeisSequence>& oeis_sequences()
{
    static const std::vector<OeisSequence> v = {
        {"A000260", "three-connected", 1, 1}, {"A000309", "two-connected", 0, 1}, {"A002005", "cubic", 0, 1},
        {"A058860", "two-connected-simple", 0, 1}, {"A058859", "simple", 0, 1},
    };
    return v;
}

const OeisSequence& oeis_sequence(const std::string& id)
{
    for (const auto& s : oeis_sequences())
        if (s.id == id) return s;
    throw std::invalid_argument("no catalog class for " + id);
}

std::string bfile_name(const std::string& id)
{
    return "b" + id.substr(1) + ".txt";
}

std::vector<std::pair<long, std::string>> parse_bfile(const fs::path& p)
{
    std::ifstream f(p);
    if (!f) throw std::runtime_error("missing fixture " + p.string());
    std::vector<std::pair<long, std::string>> rows;
    std::string line;
    while (std::getline(f, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream in(line);
        long n;
        std::string v;
        if (!(in >> n >> v)) throw std::runtime_error("bad b-file line in " + p.string() + ": " + line);
        rows.emplace_back(n, v);
    }
    return rows;
}

json oeis_check_one(const std::string& dir, const OeisSequence& s, int max_terms, bool& ok)
{
    const auto rows = parse_bfile(fs::path(dir) / bfile_name(s.id));
    std::vector<std::pair<long, std::string>> used;
    for (const auto& r : rows)
        if (r.first >= s.first && r.first + s.shift <= max_terms) used.push_back(r);
    json j;
    j["sequence"] = s.id;
    j["class"] = s.cls;
    if (used.empty()) {
        ok = false;
        j["match"] = false;
        j["error"] = "no comparable terms";
        return j;
    }
    const int N = static_cast<int>(used.back().first) + s.shift;
    const Series<Rational> series = catalog_entry(s.cls).exact(N);
    j["terms_compared"] = used.size();
    j["match"] = true;
    for (const auto& [n, v] : used) {
        const Rational want{mpz_class(v)};
        const Rational got = series[static_cast<int>(n) + s.shift];
        if (got != want) {
            j["match"] = false;
            j["first_mismatch"] = {{"index", n}, {"expected", v}, {"computed", got.get_str()}};
            j["values"].push_back(quad_json(quadruple("a(" + std::to_string(n) + ")", rational_to_real(want),
                                                      rational_to_real(got), 0)));
            ok = false;
            return j;
        }
    }
    const auto& [n, v] = used.back();
    j["values"].push_back(quad_json(quadruple("a(" + std::to_string(n) + ")", rational_to_real(Rational{mpz_class(v)}),
                                              rational_to_real(series[static_cast<int>(n) + s.shift]), 0)));
    return j;
}

int cmd_oeis(const RunConfig& cfg, const std::string& action, std::vector<std::string> ids, int max_terms)
{
    if (ids.empty())
        for (const auto& s : oeis_sequences()) ids.push_back(s.id);
    const std::string dir = fixtures_dir(cfg);
    if (action == "fetch") {
        httplib::SSLClient cli("oeis.org");
        cli.set_follow_location(true);
        cli.set_connection_timeout(10);
        fs::create_directories(dir);
        for (const auto& id : ids) {
            oeis_sequence(id);
            const auto res = cli.Get("/" + id + "/" + bfile_name(id));
            if (!res || res->status != 200) {
                std::cerr << id << ": fetch failed (" << (res ? std::to_string(res->status) : httplib::to_string(res.error()))
                          << ")\n";
                return 2;
            }
            RunConfig w = cfg;
            w.out = (fs::path(dir) / bfile_name(id)).string();
            emit(w, res->body);
            std::cerr << id << ": cached in " << w.out << "\n";
        }
        return 0;
    }
    if (action != "check") throw std::invalid_argument("oeis action must be check or fetch");
    json j;
    j["schema_version"] = 1;
    j["fixtures"] = dir;
    bool ok = true;
    for (const auto& id : ids) j["sequences"].push_back(oeis_check_one(dir, oeis_sequence(id), max_terms, ok));
    j["pass"] = ok;
    if (cfg.format == "json") {
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::ostringstream o;
        for (const auto& s : j["sequences"]) {
            o << s["sequence"].get<std::string>() << " (" << s["class"].get<std::string>() << "): ";
            if (s["match"].get<bool>())
                o << "match, " << s["terms_compared"] << " terms\n";
            else if (s.contains("first_mismatch"))
                o << "MISMATCH at index " << s["first_mismatch"]["index"] << ": expected "
                  << s["first_mismatch"]["expected"].get<std::string>() << ", computed "
                  << s["first_mismatch"]["computed"].get<std::string>() << "\n";
            else
                o << "ERROR " << s["error"].get<std::string>() << "\n";
        }
        emit(cfg, o.str());
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Exact and asymptotic enumeration of rooted planar cubic maps"};
    app.require_subcommand(1);

    auto add_output = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", cfg.out, "output file (written atomically; default stdout)");
    };
    auto add_backend = [&](CLI::App* sub) {
        sub->add_flag("--float", cfg.floating, "float backend instead of exact rationals");
        sub->add_option("--precision", cfg.precision, "float precision in bits (long double: 53..64)")
            ->check(CLI::Range(53, 64));
    };

    std::string cls;
    bool table = false;
    auto* count = app.add_subcommand("count", "coefficients of a counting class (index n = faces - 2)");
    count->add_option("--class", cls, "class name or table symbol (c, b, t, c*, b*, f, g, f*, g*)");
    count->add_option("--order", cfg.order, "truncation order N")->check(CLI::NonNegativeNumber);
    count->add_flag("--table", table, "all nine columns");
    add_backend(count);
    add_output(count, {"table", "csv", "json"});

    std::string kind = "root-degree";
    int n = 60, cap = 0;
    auto* dist = app.add_subcommand("dist", "finite-n distribution table");
    dist->add_option("--kind", kind,
                     "root-degree | two-core | cubic-block | three-core | largest-block | largest-cubic-block | "
                     "largest-three-connected | isthmuses | cut-vertices | loops");
    dist->add_option("--n", n, "size: faces - 2 for root-degree and marked kinds, edges for core kinds")
        ->check(CLI::PositiveNumber);
    dist->add_option("--cap", cap, "root-degree: aggregate degrees above the cap");
    add_backend(dist);
    add_output(dist, {"csv", "json"});

    double from = -4, to = 2, step = 0.05, c = 1;
    bool check = false;
    auto* airy_cmd = app.add_subcommand("airy", "Airy and map-Airy samples, or the numeric checks");
    airy_cmd->add_option("--from", from);
    airy_cmd->add_option("--to", to);
    airy_cmd->add_option("--step", step);
    airy_cmd->add_option("--c", c, "scale of the density cA(cx)");
    airy_cmd->add_flag("--check", check, "integral, ODE and tail checks");
    add_output(airy_cmd, {"csv", "json"});

    int terms = 400;
    auto* asym = app.add_subcommand("asym", "growth constant, exponent and prefactor of a class");
    asym->add_option("--class", cls)->required();
    asym->add_option("--terms", terms, "number of coefficients (>= 300)");
    add_backend(asym);
    add_output(asym, {"json"});

    auto* oracle = app.add_subcommand("oracle", "brute-force enumeration cross-check");
    oracle->add_option("--edges", cfg.edges, "E in {3, 6, 9, 12, 15}")->check(CLI::IsMember({3, 6, 9, 12, 15}));
    add_output(oracle, {"table", "json"});

    std::vector<int> only;
    auto* verify = app.add_subcommand("verify", "run the acceptance criteria; exit 0 iff all pass");
    verify->add_option("--only", only, "criterion ids")->check(CLI::Range(1, 10));
    add_output(verify, {"table", "json"});

    std::string action;
    std::vector<std::string> ids;
    int max_terms = 200;
    auto* oeis = app.add_subcommand("oeis", "compare catalog series with OEIS b-files");
    oeis->add_option("action", action, "check | fetch")->required()->check(CLI::IsMember({"check", "fetch"}));
    oeis->add_option("ids", ids, "sequence ids (default: all five)");
    oeis->add_option("--fixtures", cfg.fixtures, "b-file directory (env CUBICMAPS_FIXTURES)");
    oeis->add_option("--max-terms", max_terms, "largest series index compared");
    add_output(oeis, {"table", "json"});

    CLI11_PARSE(app, argc, argv);
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (*count) return cmd_count(cfg, cls.empty() && !table ? "cubic" : cls, table);
        if (*dist) return cmd_dist(cfg, kind, n, cap);
        if (*airy_cmd) return cmd_airy(cfg, from, to, step, c, check);
        if (*asym) return cmd_asym(cfg, cls, terms);
        if (*oracle) return cmd_oracle(cfg);
        if (*verify) return cmd_verify(cfg, only);
        if (*oeis) return cmd_oeis(cfg, action, ids, max_terms);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
