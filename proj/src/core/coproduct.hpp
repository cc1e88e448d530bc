#pragma once

#include "star.hpp"

namespace ncps {

/// Deformed coproduct of momenta over a {pL, pR} table: component mu is
/// Delta(p_mu) with the left tensor leg rendered as pL and the right as pR.
struct Coproduct {
    std::vector<Series> comp;

    const VtPtr& table_ptr() const { return comp.at(0).table_ptr(); }
    int order() const { return comp.at(0).order(); }
};

/// Delta p_mu = D_mu(p (x) 1, 1 (x) p): substitutes k -> pL, q -> pR.
Coproduct coproduct_from_d(const DFunction& d);

/// Primitive coproduct pL_mu + pR_mu.
Coproduct primitive_coproduct(int n, int order, const std::vector<std::string>& deforms,
                              const std::vector<int>& sig);

/// Counit laws: restriction pL = 0 gives pR and vice versa.
bool counit_ok(const Coproduct& cop);

/// Residual of (Delta (x) id) Delta - (id (x) Delta) Delta through the
/// substitution path over a three-copy table.
ResidualReport check_coassociativity(const Coproduct& cop);
std::vector<Series> coassociativity_residual(const Coproduct& cop);

/// Leibniz rule: m_*(Delta(p_mu) (|> (x) |>) (f (x) g)) = p_mu |> (f * g).
/// Residual per requested component.
ResidualReport check_leibniz(const Realization& r, const Coproduct& cop,
                             const XSeries& f, const XSeries& g);
XSeries leibniz_lhs(const Realization& r, const Coproduct& cop, int mu,
                    const XSeries& f, const XSeries& g);
XSeries leibniz_rhs(const Realization& r, int mu, const XSeries& f, const XSeries& g);

} // namespace ncps
