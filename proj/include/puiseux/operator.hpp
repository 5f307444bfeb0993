#pragma once

#include "puiseux/scalar.hpp"

namespace puiseux {

enum class OpKind { differential, q_difference };

// The sigma operator: d/dx or y(x) -> y(qx). For q-difference, q_root fixes
// the determination q^{1/root_den}; root_den == 0 means "principal branch,
// computed on demand".
struct OperatorSpec {
    OpKind kind = OpKind::differential;
    Scalar q = Scalar(0);
    Scalar q_root = Scalar(0);
    long long root_den = 0;

    int order() const { return kind == OpKind::differential ? 1 : 0; } // o_sigma
    bool is_differential() const { return kind == OpKind::differential; }
};

OperatorSpec differential_op();
OperatorSpec q_difference_op(const Scalar& q);
OperatorSpec q_difference_op(const Scalar& q, const Scalar& q_root, long long root_den);

// q^mu through the fixed root when it applies, else exact perfect-power /
// square-root extraction, else principal branch numerically.
Scalar q_power(const OperatorSpec& op, const Rat& mu);

// delta coefficient of a co-slope: mu (differential) or q^mu (q-difference).
Scalar delta_coeff(const OperatorSpec& op, const Rat& mu);

} // namespace puiseux
