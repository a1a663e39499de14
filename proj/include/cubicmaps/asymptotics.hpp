#pragma once

#include <string>
#include <vector>

#include "cubicmaps/minpoly.hpp"
#include "cubicmaps/statistics.hpp"

namespace cubicmaps {

// ---------------------------------------------------------------------------
// Airy functions

struct AiryValue {
    long double ai = 0;
    long double aip = 0;  // Ai'
};

/// Ai and Ai' at real x, |x| <= kAiryBound.  Maclaurin series in 50-digit arithmetic below
/// the crossover, Poincare asymptotic expansions above it.
AiryValue airy(long double x);
constexpr long double kAiryBound = 1.0e6L;
/// |x| at which the asymptotic expansions take over (balances the series' cancellation
/// against the expansions' optimal truncation error).
long double airy_crossover();
/// Ai'' by a central difference of Ai' in extended precision.
long double airy_second_derivative(long double x);
/// Secondary route: Ai(x) = (1/pi) int_0^inf exp(-r^3/3) Im(w exp(-x r w)) dr, w = exp(i pi/3).
long double airy_ai_quadrature(long double x);

/// Map-Airy density 2 exp(-2x^3/3) (x Ai(x^2) - Ai'(x^2)).  For x < 0 the exponentials are
/// cancelled analytically inside the asymptotic expansion.
long double map_airy_density(long double x);
/// c A(c x).
inline long double map_airy_density(long double x, long double c) { return c * map_airy_density(c * x); }

struct MapAiryCheck {
    long double integral = 0;         // int A
    long double integral_scaled = 0;  // int cA(cx) for the given c
    long double left_tail = 0;        // A(-x) 4 sqrt(pi) x^{5/2}
    long double right_tail = 0;       // A(x) (sqrt(pi)/2) x^{-1/2} exp(4x^3/3)
    long double ode_residual = 0;     // max |Ai'' - x Ai| on the grid
};

/// Quadrature and tail checks of the density; tails are taken at |x| = tail_x.
MapAiryCheck map_airy_checks(long double c = 1, long double tail_x = 10);

// ---------------------------------------------------------------------------
// Singularities and coefficient asymptotics

/// Dominant singularity of a stored minimal polynomial: smallest root of the discriminant in
/// the open window (lo, hi), as a certified interval.
RootInterval locate_dominant_singularity(const MinimalPolynomialRecord& rec, const Rational& lo,
                                         const Rational& hi, const Rational& tol);
/// Same for a stored univariate polynomial (degree-29 and sextic records).
RootInterval locate_dominant_singularity(const UnivariateRecord& rec, const Rational& lo, const Rational& hi,
                                         const Rational& tol);

struct Extrapolation {
    long double value = 0;
    int order = 0;               // Richardson order chosen
    long double residual = 0;    // disagreement with the neighbouring estimate
};

/// Limit of s_k, k = first..first+len-1, assuming s_k = L + a_1/k + a_2/k^2 + ...
/// The order is chosen automatically as the one with the smallest residual.
Extrapolation richardson_limit(const std::vector<long double>& s, int first, int max_order = 8);

struct InsufficientTerms : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Growth constant of a_1..a_N (a[0] is a_0 and is ignored) from the ratios a_n / a_{n-1}.
/// Needs at least 50 positive terms.
Extrapolation growth_constant(const std::vector<long double>& a);
/// Slope of log(a_n rho^n) against log n over the upper half of the sequence.
long double exponent_estimate(const std::vector<long double>& a, long double rho);
/// a_n n^{5/2} rho^n at the given n.
long double prefactor_at(const std::vector<long double>& a, long double rho, int n);

/// Sequence a_0..a_N of a catalog class (faces-2 index), on the float backend when `exact`
/// is false.
std::vector<long double> class_sequence(const std::string& cls, int N, bool exact = true);

// ---------------------------------------------------------------------------
// Map-Airy predictions

/// Singular expansion A0 - A2 Z^2 + A3 Z^3 at rho (edge index).
struct SingularExpansion {
    std::string name;
    long double rho = 0;
    long double A0 = 0, A2 = 0, A3 = 0;
    std::string source;
};

/// The stored edge-indexed expansions: "B", "C", "L", "M", "D".
SingularExpansion singular_expansion(const std::string& name);

struct MapAirySpec {
    std::string name;  // "largest block", "largest cubic block", "largest 3-connected component"
    long double c = 0;
    long double c_closed = 0;       // closed form of c
    /// Scale from a direct saddle-point evaluation of the core weights; this is what the exact
    /// finite-n laws approach (c itself is larger by 4 (1 - alpha0)^{-4/3}).
    long double c_saddle = 0;
    long double center = 0;          // alpha0 or alpha0 (1 - beta0)
    long double center_closed = 0;
    long double alpha0 = 0, alpha0_closed = 0;
    long double beta0 = 0, beta0_closed = 0;
    long double sigma_sq_gauss = 0;  // variance constant of m given t (blocks only)
    /// max relative disagreement between the two routes for c, center, alpha0, beta0
    long double consistency = 0;
};

struct PredictedConstants {
    MapAirySpec block, cubic_block, three_connected;
    long double sigma_D = 0;   // singularity of D, edge index
    long double tau = 0;       // singularity of B, edge index
    long double theta = 0;     // singularity of M, edge index
    long double unit_constant_block = 0;  // (B3/C3)(1+tau L0)^{5/2} alpha0^{-5/2}, should be 1
    long double unit_constant_three = 0;  // (M3/C3)((1+2 sD0)/(1+sD0))^{5/2} alpha0^{-5/2}
};

/// Constants of the map-Airy limit laws from the singular expansions, each cross-checked
/// against its closed form.
PredictedConstants predicted_constants();

struct AiryComparison {
    long double sup_distance = 0;
    long double mean_offset = 0;   // (mean - center n) / n^{2/3}
    int points = 0;
    int step = 1;                  // lattice step of the support
};

/// Compare n^{2/3} P(X = t) / step with cA(cq), q = (t - center n)/n^{2/3}, over |q| <= window;
/// c defaults to spec.c.  With `reroot` the masses are first multiplied by n (1 - beta0) / t
/// (root core to largest component).
AiryComparison compare_to_airy(const DistTable<Real>& dist, const MapAirySpec& spec, long double window = 0.3L,
                               bool reroot = false, long double c = 0);

/// Root 2-core m given t at size n: conditional mean of m minus beta0 t, in units of sigma sqrt(t).
struct GaussianCheck {
    int n = 0, t = 0;
    long double mean_m = 0;
    long double predicted = 0;   // beta0 t
    long double z_score = 0;
};
GaussianCheck gaussian_factor_check(int n);

} // namespace cubicmaps
