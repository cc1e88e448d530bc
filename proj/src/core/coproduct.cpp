#include "coproduct.hpp"

namespace ncps {

Coproduct coproduct_from_d(const DFunction& d) {
    const auto& vt = d.D.at(0).table_ptr();
    int n = vt->dim();
    auto cvt = VariableTable::make(n, {"pL", "pR"}, vt->deform_symbols(), vt->signature());
    std::vector<int> map(vt->var_count());
    for (int mu = 0; mu < n; ++mu) {
        map[vt->vector_var(0, mu)] = cvt->vector_var(0, mu);
        map[vt->vector_var(1, mu)] = cvt->vector_var(1, mu);
    }
    for (int j = 0; j < vt->deform_count(); ++j) map[vt->deform_var(j)] = cvt->deform_var(j);
    Coproduct out;
    for (int mu = 0; mu < n; ++mu) out.comp.push_back(d.D[mu].rename(cvt, map));
    return out;
}

Coproduct primitive_coproduct(int n, int order, const std::vector<std::string>& deforms,
                              const std::vector<int>& sig) {
    auto cvt = VariableTable::make(n, {"pL", "pR"}, deforms, sig);
    Coproduct out;
    for (int mu = 0; mu < n; ++mu)
        out.comp.push_back(Series::momentum(cvt, order, 0, mu) +
                           Series::momentum(cvt, order, 1, mu));
    return out;
}

bool counit_ok(const Coproduct& cop) {
    const auto& vt = cop.table_ptr();
    int n = vt->dim();
    for (int mu = 0; mu < n; ++mu) {
        if (!(cop.comp[mu].set_vector_zero(0) ==
              Series::momentum(vt, cop.order(), 1, mu)))
            return false;
        if (!(cop.comp[mu].set_vector_zero(1) ==
              Series::momentum(vt, cop.order(), 0, mu)))
            return false;
    }
    return true;
}

std::vector<Series> coassociativity_residual(const Coproduct& cop) {
    const auto& vt = cop.table_ptr();
    int n = vt->dim();
    int order = cop.order();
    auto vt3 = VariableTable::make(n, {"pA", "pB", "pC"}, vt->deform_symbols(),
                                   vt->signature());
    auto subst = [&](const Series& s, const std::vector<Series>& left,
                     const std::vector<Series>& right) {
        std::vector<Series> images(vt->var_count(), Series());
        for (int mu = 0; mu < n; ++mu) {
            images[vt->vector_var(0, mu)] = left[mu];
            images[vt->vector_var(1, mu)] = right[mu];
        }
        for (int j = 0; j < vt->deform_count(); ++j)
            images[vt->deform_var(j)] = Series::deform(vt3, order, j);
        return s.substitute(vt3, images);
    };
    std::vector<Series> pA(n), pB(n), pC(n);
    for (int mu = 0; mu < n; ++mu) {
        pA[mu] = Series::momentum(vt3, order, 0, mu);
        pB[mu] = Series::momentum(vt3, order, 1, mu);
        pC[mu] = Series::momentum(vt3, order, 2, mu);
    }
    std::vector<Series> dAB(n), dBC(n);
    for (int mu = 0; mu < n; ++mu) {
        dAB[mu] = subst(cop.comp[mu], pA, pB);
        dBC[mu] = subst(cop.comp[mu], pB, pC);
    }
    std::vector<Series> out(n, Series());
    for (int mu = 0; mu < n; ++mu)
        out[mu] = subst(cop.comp[mu], dAB, pC) - subst(cop.comp[mu], pA, dBC);
    return out;
}

ResidualReport check_coassociativity(const Coproduct& cop) {
    ResidualReport rep;
    auto res = coassociativity_residual(cop);
    for (size_t mu = 0; mu < res.size(); ++mu)
        if (!res[mu].is_zero()) {
            rep.ok = false;
            rep.lines.push_back(std::to_string(mu) + ": " + res[mu].text());
        }
    return rep;
}

namespace {

/// p^a as an operator over the realization's table.
Op p_monomial_op(const Realization& r, const std::vector<int>& a) {
    const auto& vt = r.table_ptr();
    Series s = Series::one(vt, r.order());
    for (int mu = 0; mu < vt->dim(); ++mu)
        for (int k = 0; k < a[mu]; ++k)
            s = s * Series::momentum(vt, r.order(), r.pvec(), mu);
    Op op(vt, r.order(), r.pvec());
    op.add_term(XExpo(vt->dim(), 0), s);
    return op;
}

} // namespace

XSeries leibniz_lhs(const Realization& r, const Coproduct& cop, int mu,
                    const XSeries& f, const XSeries& g) {
    const auto& rvt = r.table_ptr();
    const auto& cvt = cop.table_ptr();
    int n = rvt->dim();
    int order = r.order();
    XSeries out = XSeries::zero(rvt, order);
    for (const auto& [e, c] : cop.comp.at(mu).terms()) {
        std::vector<int> a(n, 0), b(n, 0);
        for (int m = 0; m < n; ++m) {
            a[m] = e[cvt->vector_var(0, m)];
            b[m] = e[cvt->vector_var(1, m)];
        }
        // carry the grading part of the term onto the realization table
        Series weight = Series::constant(rvt, order, c);
        for (int j = 0; j < cvt->deform_count(); ++j) {
            int dj = e[cvt->deform_var(j)];
            for (int rep = 0; rep < dj; ++rep)
                weight = weight * Series::deform(rvt, order, j);
        }
        XSeries fa = fock_apply(p_monomial_op(r, a), f);
        XSeries gb = fock_apply(p_monomial_op(r, b), g);
        if (fa.is_zero() || gb.is_zero()) continue;
        out += star_product(r, fa, gb) * weight;
    }
    return out;
}

XSeries leibniz_rhs(const Realization& r, int mu, const XSeries& f, const XSeries& g) {
    std::vector<int> unit(r.dim(), 0);
    unit[mu] = 1;
    return fock_apply(p_monomial_op(r, unit), star_product(r, f, g));
}

ResidualReport check_leibniz(const Realization& r, const Coproduct& cop,
                             const XSeries& f, const XSeries& g) {
    ResidualReport rep;
    for (int mu = 0; mu < r.dim(); ++mu) {
        XSeries res = leibniz_lhs(r, cop, mu, f, g) - leibniz_rhs(r, mu, f, g);
        if (!res.is_zero()) {
            rep.ok = false;
            rep.lines.push_back(std::to_string(mu) + ": " + res.text());
        }
    }
    return rep;
}

} // namespace ncps
