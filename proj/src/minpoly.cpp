#include "cubicmaps/minpoly.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace cubicmaps {

// ---------------------------------------------------------------------------
// BiPoly

BiPoly BiPoly::constant(QSqrt3 c) { return BiPoly({{std::move(c)}}); }
BiPoly BiPoly::y_var() { return BiPoly({{QSqrt3(0)}, {QSqrt3(1)}}); }
BiPoly BiPoly::z_var() { return BiPoly({{QSqrt3(0), QSqrt3(1)}}); }

int BiPoly::deg_z() const
{
    int d = -1;
    for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

bool BiPoly::rational() const
{
    for (const auto& row : c_)
        for (const auto& c : row)
            if (!is_zero(c.sqrt3_part())) return false;
    return true;
}

bool BiPoly::integral() const
{
    for (const auto& row : c_)
        for (const auto& c : row)
            if (c.rational_part().get_den() != 1 || c.sqrt3_part().get_den() != 1) return false;
    return true;
}

const QSqrt3& BiPoly::coeff(int i, int j) const
{
    static const QSqrt3 kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    const auto& row = c_[static_cast<std::size_t>(i)];
    if (j < 0 || j >= static_cast<int>(row.size())) return kZero;
    return row[static_cast<std::size_t>(j)];
}

std::vector<QSqrt3> BiPoly::y_coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(i)];
}

BiPoly BiPoly::derivative_y() const
{
    std::vector<std::vector<QSqrt3>> d;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        std::vector<QSqrt3> row = c_[i];
        for (auto& c : row) c *= QSqrt3(static_cast<int>(i));
        d.push_back(std::move(row));
    }
    return BiPoly(std::move(d));
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        auto& row = c_[i];
        if (row.size() < o.c_[i].size()) row.resize(o.c_[i].size(), QSqrt3(0));
        for (std::size_t j = 0; j < o.c_[i].size(); ++j) row[j] += o.c_[i][j];
    }
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    BiPoly neg = o;
    for (auto& row : neg.c_)
        for (auto& c : row) c = -c;
    return *this += neg;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    if (a.zero() || b.zero()) return BiPoly();
    std::vector<std::vector<QSqrt3>> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t k = 0; k < b.c_.size(); ++k) {
            const auto& ra = a.c_[i];
            const auto& rb = b.c_[k];
            if (ra.empty() || rb.empty()) continue;
            auto& row = r[i + k];
            if (row.size() < ra.size() + rb.size() - 1) row.resize(ra.size() + rb.size() - 1, QSqrt3(0));
            for (std::size_t j = 0; j < ra.size(); ++j) {
                if (is_zero(ra[j])) continue;
                for (std::size_t l = 0; l < rb.size(); ++l) row[j + l] += ra[j] * rb[l];
            }
        }
    return BiPoly(std::move(r));
}

BiPoly pow(const BiPoly& p, int k)
{
    BiPoly r = BiPoly::constant(QSqrt3(1));
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

void BiPoly::trim()
{
    for (auto& row : c_)
        while (!row.empty() && is_zero(row.back())) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

std::string BiPoly::str(char y, char z) const
{
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_[i].size(); ++j) {
            if (is_zero(c_[i][j])) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c_[i][j].str() + ")";
            if (i) out += std::string("*") + y + "^" + std::to_string(i);
            if (j) out += std::string("*") + z + "^" + std::to_string(j);
        }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent with implicit multiplication.

namespace {

class Parser {
public:
    Parser(const std::string& s, char y, char z) : s_(s), y_(y), z_(z) {}

    BiPoly run()
    {
        BiPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("polynomial parse error (" + what + ") at offset " + std::to_string(pos_));
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_primary()
    {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    BiPoly expr()
    {
        BiPoly r = term();
        for (;;) {
            char c = peek();
            if (c == '+') { ++pos_; r += term(); }
            else if (c == '-') { ++pos_; r -= term(); }
            else return r;
        }
    }
    BiPoly term()
    {
        BiPoly r = unary();
        for (;;) {
            if (peek() == '*') { ++pos_; r = r * unary(); }
            else if (starts_primary()) r = r * power();
            else return r;
        }
    }
    BiPoly unary()
    {
        char c = peek();
        if (c == '-') { ++pos_; return -unary(); }
        if (c == '+') { ++pos_; return unary(); }
        return power();
    }
    BiPoly power()
    {
        BiPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent");
            return pow(base, std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }
    BiPoly primary()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            BiPoly r = expr();
            if (peek() != ')') fail("missing )");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return BiPoly::constant(QSqrt3(Rational(mpz_class(s_.substr(start, pos_ - start)))));
        }
        if (s_.compare(pos_, 5, "sqrt3") == 0) {
            pos_ += 5;
            return BiPoly::constant(QSqrt3::sqrt3());
        }
        if (c == y_) { ++pos_; return BiPoly::y_var(); }
        if (c == z_) { ++pos_; return BiPoly::z_var(); }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    char y_, z_;
    std::size_t pos_ = 0;
};

} // namespace

BiPoly BiPoly::parse(const std::string& text, char y, char z) { return Parser(text, y, z).run(); }

// ---------------------------------------------------------------------------
// Stored data

namespace {

MinimalPolynomialRecord record(std::string name, std::string source, const std::string& text, char y = 'y',
                               char z = 'z')
{
    return {std::move(name), std::move(source), BiPoly::parse(text, y, z), y, z};
}

const std::map<std::string, MinimalPolynomialRecord>& records()
{
    static const std::map<std::string, MinimalPolynomialRecord> r = [] {
        std::map<std::string, MinimalPolynomialRecord> m;
        auto add = [&m](MinimalPolynomialRecord rec) { m.emplace(rec.series_name, std::move(rec)); };
        add(record("M", "quartic for 3-connected cubic maps",
                   "y^4 + (4z+3)y^3 + (6z^2+17z+3)y^2 + (4z^3+25z^2-14z+1)y + z^4 + 11z^3 - z^2"));
        add(record("C", "cubic for cubic maps",
                   "64z^3y^3 + (192z^3 - 96z^2 + z)y^2 + (192z^3 - 192z^2 + 32z - 1)y + 64z^3 - 96z^2 + 4z"));
        add(record("B", "cubic for 2-connected cubic maps",
                   "16z^2y^3 + (48z^2 + 8z)y^2 + (48z^2 - 20z + 1)y + 16z^2 - z"));
        const std::string p1 = "(784z^11 + 13524z^10 + 29478z^9 - 51033z^8 - 194686z^7 - 166400z^6 - 5454z^5 + 43746z^4"
                               " + 4030z^3 - 5652z^2 + 904z - 41)";
        const std::string p2 = "(-z(1743z^8 + 13968z^7 + 13344z^6 - 52888z^5 - 116934z^4 - 71248z^3 - 4064z^2 + 3768z - 41))";
        const std::string p3 = "(16z^3(57z^4 + 40z^3 + 24z^2 + 208z + 179))";
        const std::string tail = "(1568z^8 + 476z^7 - 7456z^6 - 8458z^5 - 27z^4 + 2672z^3 + 130z^2 - 330z + 41)";
        add(record("C*", "quartic for simple cubic maps (sign of the quadratic factor of p0 corrected)",
                   "64z^5y^4 + " + p3 + "y^3 + " + p2 + "y^2 + " + p1 + "y + z^2(1 - 11z - z^2)" + tail));
        add(record("C*-printed", "quartic for simple cubic maps as printed",
                   "64z^5y^4 + " + p3 + "y^3 + " + p2 + "y^2 + " + p1 + "y + z^2(z^2 - 11z + 1)" + tail));
        add(record("B*", "cubic for 2-connected simple cubic maps",
                   "16z^2y^3 - (16z^4 + 120z^3 - 48z^2 - 8z)y^2 + (4z^6 + 76z^5 + 121z^4 - 244z^3 + 118z^2 - 20z + 1)y"
                   " - 8z^7 - 76z^6 + 134z^5 - 77z^4 + 17z^3 - z^2"));
        const std::string a0 = "2(211sqrt3 - 534)u^4(4u^6sqrt3 + u^7 - 6u^5sqrt3 - 9u^6 + 12u^5 - 24u^2sqrt3 + 60usqrt3"
                               " + 36u^2 - 24sqrt3 - 90u + 36)";
        const std::string a1 = "2(956sqrt3 - 1701)u^2(36u^9sqrt3 - 2u^10 - 126u^8sqrt3 + 54u^9 + 126u^7sqrt3 - 81u^8"
                               " - 6u^6sqrt3 - 27u^7 - 60u^5sqrt3 + 54u^6 - 648u^4 + 1944u^3 - 2160u^2 + 864u - 216)";
        const std::string a3 = "9(12u^4sqrt3 + 23u^5 + 18u^3sqrt3 + 54u^4 + 24u^2sqrt3 + 81u^3 + 66usqrt3 + 108u^2"
                               " + 24sqrt3 + 90u + 108)(4u^2sqrt3 + 13u^3 - 26usqrt3 - 36u^2 + 24sqrt3 + 78u - 60)^3";
        add(record("Q", "cubic for the limiting root-face-degree pgf p(u)",
                   "(" + a3 + ")p^3 + (" + a1 + ")p + " + a0, 'p', 'u'));
        return m;
    }();
    return r;
}

UnivariateRecord univariate(std::string name, std::string source, const std::string& text, char var = 'z')
{
    BiPoly p = BiPoly::parse(text, '#', var);
    return {std::move(name), std::move(source), p.y_coeff(0)};
}

const std::map<std::string, UnivariateRecord>& univariates()
{
    static const std::map<std::string, UnivariateRecord> r = [] {
        std::map<std::string, UnivariateRecord> m;
        auto add = [&m](UnivariateRecord rec) { m.emplace(rec.name, std::move(rec)); };
        add(univariate("phi", "singularity of triangle-free cubic maps",
                       "22161087866383368192z^29 - 110805439331916840960z^28 + 128349633892803674112z^27"
                       " + 306063926988657131520z^26 - 1017316468360256421888z^25 + 731390086938712080384z^24"
                       " + 1412989605840194371584z^23 - 3904918887380696432640z^22 + 3286085170959772286976z^21"
                       " + 3062041896395210752000z^20 - 13636190761420628951040z^19 + 22452065614202935443456z^18"
                       " - 24015782846601940172800z^17 + 18890731381294758887424z^16 - 12618646835081595715584z^15"
                       " + 9454042977513918959616z^14 - 8938299800000420075520z^13 + 8330326495570886895360z^12"
                       " - 6335783442775792180480z^11 + 3739491505211342742768z^10 - 1707114753190595308440z^9"
                       " + 606877106680714207393z^8 - 169460055073349524800z^7 + 37432243036560849408z^6"
                       " - 6518789166080065536z^5 + 864781240587780096z^4 - 79062401625882624z^3"
                       " + 3851046019399680z^2 - 14872398004224z - 3131031158784"));
        add(univariate("phi*", "singularity of simple triangle-free cubic maps",
                       "22161087866383368192z^29 - 72023535565745946624z^28 - 217455674688886800384z^27"
                       " + 1366192402856046231552z^26 - 1408884772502960603136z^25 - 5273526725499791867904z^24"
                       " + 18711657605588519485440z^23 - 20661513660592621092864z^22 - 15535239133496397004800z^21"
                       " + 90959874721137062576128z^20 - 166070979940102503923712z^19 + 193400402328142378696704z^18"
                       " - 162268637001045608759296z^17 + 102897252166421987721216z^16 - 51989933333416282030080z^15"
                       " + 24221605189030571544576z^14 - 13520809952153729316864z^13 + 9265021383768406435584z^12"
                       " - 6064247347538996966656z^11 + 3267142329643563126000z^10 - 1396980037043271835032z^9"
                       " + 473034839943808953505z^8 - 127347508539288938304z^7 + 27332424367753886208z^6"
                       " - 4657078534989938688z^5 + 614598596098523136z^4 - 58444903901822976z^3"
                       " + 3329729331462144z^2 - 52444771909632z - 3131031158784"));
        add(univariate("rho*", "singularity of simple cubic maps",
                       "27z^6 + 216z^5 + 171z^4 - 208z^3 - 339z^2 + 24z + 1"));
        add(univariate("q-cubic", "reciprocal of the tail ratio of the root-face degree",
                       "13u^3 + (4sqrt3 - 36)u^2 + (78 - 26sqrt3)u + 24sqrt3 - 60", 'u'));
        return m;
    }();
    return r;
}

} // namespace

const MinimalPolynomialRecord& minimal_polynomial(const std::string& name)
{
    auto it = records().find(name);
    if (it == records().end()) throw std::invalid_argument("no stored polynomial for " + name);
    return it->second;
}

std::vector<std::string> minimal_polynomial_names()
{
    std::vector<std::string> v;
    for (const auto& [k, _] : records()) v.push_back(k);
    return v;
}

const UnivariateRecord& univariate_record(const std::string& name)
{
    auto it = univariates().find(name);
    if (it == univariates().end()) throw std::invalid_argument("no stored polynomial " + name);
    return it->second;
}

// ---------------------------------------------------------------------------
// Resultants

namespace {

using QSPoly = Poly<QSqrt3>;

QSPoly to_poly(const std::vector<QSqrt3>& v) { return QSPoly(v, QSPoly::kUnbounded); }

QSPoly bareiss_determinant(std::vector<std::vector<QSPoly>> m)
{
    const std::size_t n = m.size();
    if (n == 0) return QSPoly(1);
    QSPoly prev(1);
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].zero()) ++r;
            if (r == n) return QSPoly(0);
            std::swap(m[k], m[r]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    QSPoly d = m[n - 1][n - 1];
    return sgn > 0 ? d : -d;
}

} // namespace

std::vector<QSqrt3> discriminant_y(const BiPoly& p)
{
    const BiPoly q = p.derivative_y();
    const int d = p.deg_y();
    const int e = q.deg_y();
    if (d < 1) throw std::invalid_argument("discriminant needs degree >= 1 in y");
    const int n = d + e;
    std::vector<std::vector<QSPoly>> m(static_cast<std::size_t>(n), std::vector<QSPoly>(static_cast<std::size_t>(n)));
    // rows 0..e-1: shifted coefficients of p (highest first); rows e..n-1: those of q
    for (int r = 0; r < e; ++r)
        for (int i = 0; i <= d; ++i) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = to_poly(p.y_coeff(d - i));
    for (int r = 0; r < d; ++r)
        for (int i = 0; i <= e; ++i)
            m[static_cast<std::size_t>(e + r)][static_cast<std::size_t>(r + i)] = to_poly(q.y_coeff(e - i));
    const QSPoly det = bareiss_determinant(std::move(m));
    return det.coeffs();
}

QPoly rational_norm(const std::vector<QSqrt3>& p)
{
    bool rational = true;
    for (const auto& c : p) rational = rational && is_zero(c.sqrt3_part());
    QSPoly a = to_poly(p);
    if (!rational) {
        std::vector<QSqrt3> conj;
        for (const auto& c : p) conj.emplace_back(c.rational_part(), -c.sqrt3_part());
        a = a * to_poly(conj);
    }
    QPoly out;
    for (const auto& c : a.coeffs()) {
        if (!is_zero(c.sqrt3_part())) throw std::logic_error("norm is not rational");
        out.push_back(c.rational_part());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rational univariate polynomials

namespace {

void qtrim(QPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b)
{
    qtrim(a);
    if (b.empty()) throw std::domain_error("polynomial remainder by zero");
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        Rational f = a.back() / b.back();
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(da - db + i)] -= f * b[static_cast<std::size_t>(i)];
        a.pop_back();
        qtrim(a);
    }
    return a;
}

QPoly qquot(QPoly a, const QPoly& b)
{
    qtrim(a);
    const int db = static_cast<int>(b.size()) - 1;
    const int da = static_cast<int>(a.size()) - 1;
    if (da < db) return {};
    QPoly q(static_cast<std::size_t>(da - db) + 1, Rational(0));
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int dcur = static_cast<int>(a.size()) - 1;
        Rational f = a.back() / b.back();
        q[static_cast<std::size_t>(dcur - db)] = f;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(dcur - db + i)] -= f * b[static_cast<std::size_t>(i)];
        a.pop_back();
        qtrim(a);
    }
    qtrim(q);
    return q;
}

// scale to a primitive integer polynomial to keep the remainder sequence small
QPoly primitive(QPoly p)
{
    qtrim(p);
    if (p.empty()) return p;
    mpz_class l = 1;
    for (const auto& c : p) l = lcm(l, mpz_class(c.get_den()));
    mpz_class g = 0;
    for (auto& c : p) {
        c *= l;
        g = gcd(g, mpz_class(c.get_num()));
    }
    if (g != 0)
        for (auto& c : p) c /= g;
    return p;
}

} // namespace

QPoly qpoly_derivative(const QPoly& p)
{
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    qtrim(d);
    return d;
}

QPoly qpoly_gcd(QPoly a, QPoly b)
{
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    while (!b.empty()) {
        QPoly r = primitive(qrem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

QPoly qpoly_squarefree(const QPoly& p)
{
    QPoly g = qpoly_gcd(p, qpoly_derivative(p));
    if (g.size() <= 1) return primitive(p);
    return primitive(qquot(p, g));
}

Rational qpoly_eval(const QPoly& p, const Rational& x)
{
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

SturmChain::SturmChain(const QPoly& p)
{
    QPoly f = qpoly_squarefree(p);
    if (f.empty()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(f);
    QPoly d = primitive(qpoly_derivative(f));
    while (!d.empty()) {
        chain_.push_back(d);
        QPoly r = qrem(chain_[chain_.size() - 2], chain_.back());
        // keep the sign: next = -rem, scaled by a positive factor only
        QPoly pr = primitive(r);
        if (!r.empty() && sgn(pr.back()) != sgn(r.back()))
            for (auto& c : pr) c = -c;
        for (auto& c : pr) c = -c;
        d = std::move(pr);
    }
}

int SturmChain::variations(const Rational& x) const
{
    int count = 0;
    int last = 0;
    for (const auto& p : chain_) {
        int s = sgn(qpoly_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int SturmChain::roots_in(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

int sign(const QSqrt3& x)
{
    const int sa = sgn(x.rational_part());
    const int sb = sgn(x.sqrt3_part());
    if (sa >= 0 && sb >= 0) return (sa || sb) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    // opposite signs: compare a^2 with 3 b^2
    const Rational a2 = x.rational_part() * x.rational_part();
    const Rational b2 = 3 * x.sqrt3_part() * x.sqrt3_part();
    const int c = cmp(a2, b2);
    if (c == 0) return 0;
    return (c > 0) ? sa : sb;
}

bool RootInterval::contains(const QSqrt3& x) const
{
    return sign(x - QSqrt3(lo)) >= 0 && sign(QSqrt3(hi) - x) >= 0;
}

std::vector<RootInterval> isolate_roots(const QPoly& p, const Rational& lo, const Rational& hi, const Rational& tol)
{
    const SturmChain chain(p);
    std::vector<RootInterval> out;
    // (lo, hi) open: exclude a root exactly at hi
    Rational top = hi;
    const QPoly& f = chain.squarefree();
    std::vector<std::pair<Rational, Rational>> stack{{lo, top}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int n = chain.roots_in(a, b);
        if (b == hi && sgn(qpoly_eval(f, hi)) == 0) --n;
        if (n <= 0) continue;
        if (n == 1 && b - a < tol) {
            out.push_back({a, b});
            continue;
        }
        Rational mid = (a + b) / 2;
        stack.push_back({mid, b});
        stack.push_back({a, mid});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

RootInterval smallest_root(const QPoly& p, const Rational& lo, const Rational& hi, const Rational& tol)
{
    const SturmChain chain(p);
    const QPoly& f = chain.squarefree();
    auto count = [&](const Rational& a, const Rational& b) {
        int n = chain.roots_in(a, b);
        if (b == hi && sgn(qpoly_eval(f, hi)) == 0) --n;
        return n;
    };
    if (count(lo, hi) <= 0) throw std::domain_error("no root in window");
    Rational a = lo, b = hi;
    while (b - a >= tol || count(a, b) != 1) {
        Rational mid = (a + b) / 2;
        if (count(a, mid) >= 1) b = mid;
        else a = mid;
    }
    return {a, b};
}

RootInterval smallest_root_qsqrt3(const std::vector<QSqrt3>& p, const Rational& lo, const Rational& hi,
                                  const Rational& tol)
{
    auto eval = [&p](const Rational& x) {
        QSqrt3 acc(0);
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * QSqrt3(x) + *it;
        return sign(acc);
    };
    for (const auto& iv : isolate_roots(rational_norm(p), lo, hi, tol)) {
        const int sl = eval(iv.lo);
        const int sh = eval(iv.hi);
        if (sl == 0 || sh == 0 || sl != sh) return iv;
    }
    throw std::domain_error("no root of the polynomial itself in window");
}

} // namespace cubicmaps
