#pragma once

#include "realization.hpp"

#include <optional>

namespace ncps {

/// A cataloged noncommutative space: its structure constants (when it is of
/// Lie type) or a direct realization, plus closed-form expectations used as
/// golden references against the generic engines.
struct ModelSpec {
    std::string name;
    int dim = 0;                 // flattened dimension
    std::vector<int> signature;  // flattened metric
    std::optional<StructureConstants> C;
    std::optional<Realization> realization; // direct (non-Lie or preferred form)
};

/// [xhat_mu, xhat_nu] = i l (a_mu xhat_nu - a_nu xhat_mu):
/// C_{mu nu lambda} = a_mu eta_{nu lambda} - a_nu eta_{mu lambda}.
ModelSpec kappa_minkowski(const std::vector<Rat>& a, int n);

/// Closed form xhat_mu = x_mu phi_S(A) - a_mu (xp) (1-phi_S(A))/A with
/// A = -l a_alpha p_alpha and phi_S(A) = A/(e^A - 1), series-expanded.
Realization kappa_closed_form_realization(const std::vector<Rat>& a, int n, int order);

/// Closed-form coproduct of momenta for kappa-Minkowski over a
/// {pL, pR} table: phi_S(D0 A)(p_mu/phi_S(A) (x) 1) +
/// phi_S(-D0 A)(1 (x) p_mu/phi_S(-A)).
std::vector<Series> kappa_closed_form_coproduct(const std::vector<Rat>& a, int n, int order);

/// A non-Weyl linear realization of kappa-Minkowski with a = (a,0,...,0):
/// xhat_0 = x_0 - l a sum_j x_j p_j, xhat_j = x_j.  Used as the K(k) != k
/// witness.
Realization kappa_left_realization(const Rat& a, int n, int order);

/// Minkowski space extended with antisymmetric tensorial coordinates,
/// flattened to dimension n + n(n-1)/2.  Pair slot (mu,nu), mu<nu, carries
/// metric eta_mu eta_nu; the structure constants on the restricted slots
/// are C_{mu nu (alpha beta)} = eta_{alpha mu} eta_{beta nu} -
/// eta_{alpha nu} eta_{beta mu} (the 1/2 of the unrestricted pair-index
/// convention is absorbed by summing each slot once).
ModelSpec extended_tensorial(int n);
/// flattened index of the pair slot (mu,nu), mu<nu
int tensorial_slot(int n, int mu, int nu);
/// Expected closed form xhat_mu = x_mu - (l/2) x_(mu alpha) p_alpha,
/// xhat_(mu nu) = x_(mu nu).
Realization extended_tensorial_closed_form(int n, int order);

/// Canonical theta deformation: affine realization
/// xhat_mu = x_mu - (l/2) theta_{mu alpha} p_alpha (theta antisymmetric,
/// the grading symbol l carries theta's smallness).
ModelSpec canonical_theta(const std::vector<std::vector<Rat>>& theta, int order);

/// Snyder realization family xhat_mu = x_mu phi1(u) + beta (xp) p_mu
/// phi2(u), u = beta p^2, with phi2 = (1 + 2 phi1' phi1)/(phi1 - 2u phi1').
/// `phi1` lists the Taylor coefficients of phi1 in u with phi1(0)=1.
ModelSpec snyder_family(const std::vector<Rat>& phi1, int n, int order);

/// Coefficients of the symmetric-ordering phi1 solving
/// 2u phi1' = phi1 - phi1^2 - u, phi1(0)=1.
std::vector<Rat> snyder_symmetric_phi1(int order);
ModelSpec snyder_symmetric(int n, int order);
/// phi2 from phi1 by the family formula, as coefficients in u.
std::vector<Rat> snyder_phi2(const std::vector<Rat>& phi1, int order);

} // namespace ncps
