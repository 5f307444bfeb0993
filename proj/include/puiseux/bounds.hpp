#pragma once

#include "puiseux/analysis.hpp"
#include "puiseux/corpus.hpp"

namespace puiseux {

// prod r_j - sum over dicritical characteristic indices i of
// (prod_{j<=i} r_j - prod_{j<i} r_j); 1-based strictly increasing indices
long long theorem_main_rhs(const std::vector<long long>& factors,
                           const std::vector<long long>& dicritical_indices);
// prod_{j<=g-1} r_j - prod_{j<=g-2} r_j, empty products = 1
long long corollary_a_rhs(const std::vector<long long>& factors);
// prod_{j<=g-1} r_j
long long theorem_reasonable_rhs(const std::vector<long long>& factors);

// 2^{g-1} <= h, evaluated exactly
bool genus_log_ok(long long genus, long long h);

enum class Reasonable { reasonable, unreasonable, unknown };

struct ReasonablenessVerdict {
    Reasonable verdict = Reasonable::unknown;
    std::string basis;
    Poly witness;                     // improper polynomial vanishing at q^{1/n}
    std::vector<long long> witness_rhos;
};

// Remark criteria first (reasonable), then an exhaustive search over the
// residue-chain polynomials with rho sequences drawn from the factors in
// index order interleaved with 1's, length <= search_length.
ReasonablenessVerdict reasonableness(const OperatorSpec& op, long long n,
                                     const std::vector<long long>& factors,
                                     int search_length = 16,
                                     bool declared_transcendental = false);

struct ImproperCheck {
    bool improper = false;
    Rat upper = Rat(0); // annulus outer radius; inner radius is 1
    std::vector<std::pair<Scalar, int>> roots;
    bool roots_in_annulus = false;
};

// u_0..u_{m-1} constant coefficients of z^m + u_{m-1} z^{m-1} + ... + u_0
ImproperCheck improper_check(const std::vector<Rat>& u, const Real& tolerance);

struct BoundReport {
    long long h_p = 0;
    long long h_ps = 0;
    Rat nu0 = Rat(0);
    bool ord_at_least_one = false;
    bool one_covered = false; // theorem hypotheses ask for integer exponents
    CharacteristicData characteristic;
    std::vector<long long> dicritical_char_indices;
    std::vector<long long> terminally_dicritical_indices;
    std::vector<Rat> dicritical_exponents; // all dicritical step co-slopes
    long long rhs_theorem_main = 0;
    long long rhs_corollary_a = 0;
    long long rhs_theorem_reasonable = 0;
    ReasonablenessVerdict reasonableness;

    bool pass_h_vs_hps = false;
    bool pass_nu0_vs_hps = true; // when ord >= 1
    bool pass_theorem_main = false;
    bool pass_corollary_a = false;
    bool pass_theorem_reasonable = true; // when the verdict is reasonable
    bool pass_nu0_theorem_main = true;
    bool pass_nu0_corollary_a = true;
    bool pass_nu0_theorem_reasonable = true;
    bool pass_genus_log = false;

    bool strictness_checked = false;
    bool strictness_consistent = true;
    std::vector<std::string> notes;

    bool all_pass() const;
};

// s must be a verified solution jet whose trace covers every characteristic
// exponent. strictness additionally audits the equality characterization of
// the reasonable bound.
BoundReport bound_report(const CoveredEquation& p, const PuiseuxPoly& s, const Trace& trace,
                         bool strictness = false);

bool genus_bound_check(const BoundReport& report);

// true when gcd(A, B) is constant (integer-exponent polynomials)
bool xy_coprime(const XYPoly& a, const XYPoly& b);

struct FoliationReport {
    bool pass = false;
    long long nu0 = 0;
    long long genus = 0;
    long long rhs = 1; // r_1 ... r_{g-1}
    int tries = 0;
    bool changed_coordinates = false;
    bool reexpanded = false;
    std::vector<std::string> notes;
};

// omega = A dx + B dy with an invariant branch parametrized by s. Random
// integer linear changes are applied until the initial form is generic and
// the branch is not tangent to x = 0; never silently passes when that fails.
FoliationReport foliation_bound_check(const XYPoly& a, const XYPoly& b, const PuiseuxPoly& s,
                                      unsigned long long seed);

} // namespace puiseux
