#pragma once

#include "coproduct.hpp"

namespace ncps {

/// Two-leg exponential factor: exp(sum_i L_i (x) R_i), or the normal-ordered
/// variant where the exponential is expanded with classically commuting legs
/// and only then read as normal-ordered operators.
struct TwistFactor {
    std::vector<std::pair<Op, Op>> letters;
    bool normal_ordered = false;
};

/// Ordered product of exponential factors (leftmost factor outermost), each
/// leg acting on one tensor slot.  Reduces to the identity at deformation
/// degree zero.
struct TwistOperator {
    std::vector<TwistFactor> factors;
};

/// m(F^{-1} (|> (x) |>)(f (x) g)): left legs act on f, right legs act on g,
/// results multiply in S(g).
XSeries twist_apply(const TwistOperator& t, const XSeries& f, const XSeries& g);

/// m(F^{-1} (|> (x) id)(x_mu (x) 1)): left legs act on x_mu by the Fock
/// action, right legs remain operators.  `right_p_cap` bounds the momentum
/// degree kept in the composed right legs (pass the truncation order plus
/// safety margin; the cataloged models need no more than order + 2).
Op realization_from_twist(const TwistOperator& t, int mu, int right_p_cap);

/// F^{-1} = exp(-i p_a (x) x_a) exp(i p_b (x) xhat_b) for a realization.
TwistOperator weyl_twist_inverse(const Realization& r);

/// (F^op_{-C})^{-1} = exp(-i x_a (x) p_a) exp(i yhat_b (x) p_b) built from
/// the opposite-sign Weyl realization yhat.
TwistOperator opposite_twist_inverse(const Realization& yhat);

/// Single-factor graded twist exp(sum letters) (canonical theta, extended
/// tensorial, dilation).
TwistOperator graded_twist(std::vector<std::pair<Op, Op>> letters);

/// Normal-ordered form :exp(i (1 (x) x_a)(Delta - Delta_0)(p_a)): of the
/// inverse twist, assembled from a coproduct.
TwistOperator normal_ordered_twist_inverse(const Coproduct& cop, const Realization& r);

struct LnTwistReport {
    bool ok = false;
    std::string detail;
};

/// Computes ln F for F = exp(-i p (x) xhat) exp(i p (x) x) via the graded
/// Baker-Campbell-Hausdorff combination in the two-leg calculus, truncated
/// at second order, and compares it with the closed second-order expression
/// carrying coefficients 1/2, 1/12 and -1/24.
LnTwistReport ln_twist_check(const StructureConstants& C);

} // namespace ncps
