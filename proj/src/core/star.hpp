#pragma once

#include "realization.hpp"

namespace ncps {

/// Deformed momentum addition D_mu(k, q) with e^{ikx} * e^{iqx} =
/// e^{iD(k,q)x}, as series over a two-momentum table {k, q}.
struct DFunction {
    std::vector<Series> D;
    std::string source; // ode-solver | diff-operator | free-algebra-oracle
};

/// Perturbative solution of dD_mu(tk,q)/dt = k_alpha psi(lC(s))_{alpha mu},
/// s = D(tk,q), D(0,q) = q, evaluated at t = 1.
DFunction d_function_ode(const StructureConstants& C, int order);

/// Same solver with the structure-constant entries supplied as series over
/// the working {k, q} table; admits fully symbolic C.
DFunction d_function_ode_generic(const VtPtr& vt, int order,
                                 const std::function<Series(int, int, int)>& entry);

/// D_mu(k,q) = exp( Kinv_beta(k) phi_{alpha beta}(q) d/dq_alpha ) q_mu for a
/// linear realization with computed K-function.
DFunction d_function_diffop(const Realization& r);

/// Independent oracle: log(e^{ik xhat} e^{iq xhat}) computed in the
/// truncated free algebra modulo the rewriting x_nu x_mu -> x_mu x_nu +
/// i l C_{nu mu alpha} x_alpha (nu > mu), read off on the PBW basis.
DFunction d_function_oracle(const StructureConstants& C, int order);

struct ResidualReport {
    bool ok = true;
    std::vector<std::string> lines; // "INDEX: residual-series"
};

/// Residual of D(D(k1,k2),k3) - D(k1,D(k2,k3)) over a three-momentum table.
ResidualReport check_associativity(const DFunction& d);
/// The composed residual series themselves (for witness extraction).
std::vector<Series> associativity_residual(const DFunction& d);

/// D with k and q swapped (for the opposite-algebra checks).
DFunction d_swap_arguments(const DFunction& d);

/// D(k, 0) and D(0, q) as component vectors.
std::vector<Series> d_at_q_zero(const DFunction& d);
std::vector<Series> d_at_k_zero(const DFunction& d);

/// Star product through Omega: f * g = Omega^{-1}(f) |> g, exact to the
/// realization's truncation order.
XSeries star_product(const Realization& r, const XSeries& f, const XSeries& g);

} // namespace ncps
