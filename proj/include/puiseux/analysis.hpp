#pragma once

#include "puiseux/polygon.hpp"

#include <optional>

namespace puiseux {

struct not_a_solution : std::runtime_error {
    long long k;
    not_a_solution(long long k_, const std::string& detail)
        : std::runtime_error("not a solution at k = " + std::to_string(k_) + ": " + detail),
          k(k_) {}
};

// Phi_{P,mu}(C) = sum over the element of (A_{ij} + delta_mu B_{ij}) C^j
Poly initial_polynomial(const CoveredEquation& p, const Rat& mu);

// Phi == 0; exact test on exact backends, coefficient-wise epsilon test with
// a recorded margin otherwise.
struct DicriticalTest {
    bool dicritical = false;
    std::optional<Real> margin; // set in numeric mode: max|Phi_j| / scale
};
DicriticalTest dicritical_test(const CoveredEquation& p, const Rat& mu);
bool is_dicritical(const CoveredEquation& p, const Rat& mu);

// A-part / B-part split of Phi along the element line:
// Phi(C) = alpha(C) + delta * C * beta(C)
std::pair<Poly, Poly> alpha_beta(const CoveredEquation& p_prev, long long k, long long n);

// Coefficients of the k-th substitution along the supporting line, as
// polynomials in the parameter: entry j holds (A^k_{iota_j j}(C), B^k_{...}).
struct InitialFormEntry {
    long long j;
    Rat iota;
    Poly a;
    Poly b;
};
std::vector<InitialFormEntry> initial_form(const CoveredEquation& p_prev, long long k,
                                           long long n);

// Ratios A/B at the top and bottom points of E_k, read on P_k.
// nullopt encodes infinity (zero denominator).
struct Residues {
    std::optional<Scalar> tres;
    std::optional<Scalar> bres;
};
Residues residues(const CoveredEquation& p_k, long long k, long long n);

// least r with all cloud abscissas in (1/r)Z
long long grid_denominator(const std::vector<CloudPoint>& cloud);

struct StepRecord {
    long long k = 0;
    long long n = 1;
    Rat coslope;
    SupportElement element_before; // E_{k-1, k/n}
    Poly phi;
    bool dicritical = false;
    std::optional<Real> dicritical_margin; // numeric mode only
    Scalar root;                           // a_k
    int root_multiplicity = 0;
    Poly alpha;
    Poly beta;
    SupportElement element_after; // E_k
    long long rho = 1;
    bool is_characteristic = false;
    std::optional<Scalar> tres;
    std::optional<Scalar> bres;
    long long grid_before = 1;
    long long grid_after = 1;
};

struct StepOutcome {
    StepRecord record;
    CoveredEquation next;
};

// One substitution along a declared solution; throws not_a_solution when
// a_k is not a root of the initial polynomial.
StepOutcome step(const CoveredEquation& p_prev, long long k, long long n, const Scalar& a_k,
                 long long rho = 1, bool is_characteristic = false);

struct Trace {
    CharacteristicData characteristic;
    std::vector<StepRecord> steps;          // k = 1 .. k_last
    std::vector<CoveredEquation> equations; // equations[k] = P_k, equations[0] = P
    const CoveredEquation& equation_after(long long k) const {
        return equations[static_cast<size_t>(k)];
    }
};

// Drives step over k = 1..k_last with rho taken from the solution's
// characteristic data. k_last defaults to the top support index of s.
Trace trace_solution(const CoveredEquation& p, const PuiseuxPoly& s, long long k_last = 0);

} // namespace puiseux
