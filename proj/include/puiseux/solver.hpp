#pragma once

#include "puiseux/analysis.hpp"

namespace puiseux {

enum class JetStatus { certified_extends, jet_only, dicritical_free_parameter };

struct BranchJet {
    PuiseuxPoly series;
    Rat certified_order = Rat(0);
    JetStatus status = JetStatus::jet_only;
    // dicritical families: prefix + c x^position with c free outside the
    // excluded special values
    Rat parameter_position = Rat(0);
    std::vector<Scalar> excluded;
    std::vector<StepRecord> trace;
};

struct ExpandOptions {
    long long max_ramification = 24;
    // generic sample values to follow through each dicritical element, in
    // addition to the special values which are always followed
    int dicritical_samples = 0;
    bool numeric_fallback = true; // unsolved exact factors -> numeric roots
    long long max_q_log_denominator = 24;
};

// Positive co-slopes of polygon sides plus per-vertex resonances
// A_{ij} + delta_mu B_{ij} = 0.
std::vector<Rat> candidate_exponents(const CoveredEquation& p, const ExpandOptions& opts = {});

// mu with q^mu == w, as a positive rational with bounded denominator.
std::optional<Rat> q_log_rational(const OperatorSpec& op, const Scalar& w, long long max_den);

// Depth-first enumeration of solution jets with exponents <= max_order.
std::vector<BranchJet> expand(const CoveredEquation& p, const Rat& max_order,
                              const ExpandOptions& opts = {});

struct VerifyReport {
    bool pass = false;
    bool exact_zero = false;            // residual is identically zero
    std::optional<long long> failed_k;  // first failing step
    std::string message;
    std::optional<Rat> residual_order;  // nullopt when the residual vanishes
    Rat threshold = Rat(0);             // x-intercept the residual must clear
    long long horizontal_height = 0;    // min ordinate of the final cloud
};

// Replays s through the step machinery up to index k_last and checks the
// residual order against the supporting-line intercept.
VerifyReport verify_solution(const CoveredEquation& p, const PuiseuxPoly& s, long long k_last);

} // namespace puiseux
