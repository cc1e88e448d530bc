#pragma once

#include "series.hpp"

#include <string>
#include <vector>

namespace ncps {

struct JacobiViolation {
    int mu, nu, tau, lambda;
    Rat value;
};

/// Rank-3 tensor C_{mu nu lambda} of rational structure constants with the
/// ambient metric signature.  Antisymmetry in the first two indices is
/// enforced and the Jacobi identity is validated at construction.
class StructureConstants {
public:
    StructureConstants(int dim, std::vector<int> signature);

    int dim() const { return dim_; }
    const std::vector<int>& signature() const { return sig_; }

    const Rat& c(int mu, int nu, int lambda) const;
    /// sets C_{mu nu lambda} and C_{nu mu lambda} = -C_{mu nu lambda}
    void set(int mu, int nu, int lambda, const Rat& value);

    bool is_zero() const;

    /// Completed, Jacobi-validated constructor.  Throws StructuralError on a
    /// non-antisymmetric tensor, DomainError when Jacobi fails.
    static StructureConstants validated(int dim, std::vector<int> signature,
                                        const std::vector<Rat>& dense);

    StructureConstants negated() const;

    std::vector<Rat> dense() const { return c_; }

private:
    int idx(int mu, int nu, int lambda) const;
    int dim_;
    std::vector<int> sig_;
    std::vector<Rat> c_;
};

/// All violations of the metric-contracted Jacobi identity
/// sum_cyclic(mu,nu,tau) C_{mu nu alpha} C_{alpha tau lambda} = 0.
/// `dense` is indexed [mu][nu][lambda] flattened; antisymmetry in the first
/// two indices is a precondition (violations of it throw StructuralError).
std::vector<JacobiViolation> check_jacobi(int dim, const std::vector<int>& signature,
                                          const std::vector<Rat>& dense);

/// C(v)_{mu nu} = C_{alpha mu nu} v_alpha (metric-contracted), entries
/// homogeneous linear in the chosen momentum vector symbol.
SeriesMatrix c_matrix(const StructureConstants& C, const VtPtr& vt, int order, int vec);

/// psi(t) = t / (1 - e^{-t}), the Bernoulli generating function, expanded
/// to degree `order` over a univariate table {t}.
Series bernoulli_psi(int order);
/// coefficient list psi_0..psi_order
std::vector<Rat> bernoulli_psi_coeffs(int order);

/// Matrix series psi(M) = sum_k psi_k M^k in the eta-contracted matrix
/// calculus; requires every entry of M to carry deformation degree >= 1.
SeriesMatrix psi_of_matrix(const SeriesMatrix& m, int order);
/// Generic f(M) = sum_k coeffs[k] M^k under the same grading requirement.
SeriesMatrix matrix_series(const SeriesMatrix& m, const std::vector<Rat>& coeffs);

} // namespace ncps
