#include "verify.hpp"

#include "twist.hpp"

#include <sstream>

namespace ncps {

namespace {

bool same(const std::vector<Series>& a, const std::vector<Series>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

void weyl_property_check(VerifyReport& rep, const Realization& r, int nmax) {
    // (k xhat)^N |> 1 = (k x)^N with symbolic k, via the symmetrized words
    const auto& rvt = r.table_ptr();
    int n = r.dim();
    int order = r.order();
    auto vt = VariableTable::make(n, {"k", "p"}, rvt->deform_symbols(), rvt->signature());
    std::vector<int> map(rvt->var_count());
    for (int mu = 0; mu < n; ++mu) map[rvt->vector_var(0, mu)] = vt->vector_var(1, mu);
    for (int j = 0; j < rvt->deform_count(); ++j)
        map[rvt->deform_var(j)] = vt->deform_var(j);
    Op kx_hat(vt, order, 1);
    XSeries kx(vt, order);
    for (int mu = 0; mu < n; ++mu) {
        Series kmu = Series::momentum(vt, order, 0, mu) * EC(Rat(vt->eta(mu)));
        for (const auto& [e, s] : r.xhat(mu).terms())
            kx_hat.add_term(e, s.rename(vt, map) * kmu);
        XExpo xe(n, 0);
        xe[mu] = 1;
        kx.add_term(xe, kmu);
    }
    XSeries lhs = XSeries::one(vt, order);
    XSeries rhs = lhs;
    bool good = true;
    for (int N = 1; N <= nmax && good; ++N) {
        lhs = fock_apply(kx_hat, lhs);
        rhs = rhs * kx;
        good = lhs == rhs;
    }
    rep.check(good, "weyl-property (k.xhat)^N |> 1 = (k.x)^N, N <= " +
                        std::to_string(nmax));
}

} // namespace

std::string VerifyReport::text() const {
    std::ostringstream os;
    for (const auto& line : lines) os << line << "\n";
    return os.str();
}

VerifyReport verify_lie(const StructureConstants& C, int order) {
    VerifyReport rep;
    rep.check(check_jacobi(C.dim(), C.signature(), C.dense()).empty(), "jacobi-identity");

    auto r = weyl_realization(C, order);
    auto comm = verify_commutators(r, C);
    rep.check(comm.ok, "weyl-commutators [xhat,xhat] = ilC xhat",
              comm.lines.empty() ? "" : comm.lines.front());

    auto kf = k_function(r);
    bool kid = kf.L.is_zero();
    const auto& kvt = kf.K[0].table_ptr();
    for (int mu = 0; mu < C.dim(); ++mu)
        kid = kid && kf.K[mu] == Series::momentum(kvt, order, 0, mu);
    rep.check(kid, "weyl K(k) = k, L = 0");

    auto ode = d_function_ode(C, order);
    auto diff = d_function_diffop(r);
    auto oracle = d_function_oracle(C, order);
    rep.check(same(ode.D, diff.D), "solver-agreement ode = diff-operator");
    rep.check(same(ode.D, oracle.D), "solver-agreement ode = free-algebra-oracle");

    rep.check(check_associativity(ode).ok, "D-associativity");
    auto cop = coproduct_from_d(ode);
    rep.check(check_coassociativity(cop).ok, "coproduct-coassociativity");
    rep.check(counit_ok(cop), "coproduct-counit");

    // antipode: D(k, -k) = 0
    {
        const auto& vt = ode.D[0].table_ptr();
        std::vector<Series> mk;
        for (int mu = 0; mu < C.dim(); ++mu)
            mk.push_back(-Series::momentum(vt, order, 0, mu));
        bool good = true;
        for (int mu = 0; mu < C.dim(); ++mu)
            good = good && substitute_vector(ode.D[mu], 1, mk).is_zero();
        rep.check(good, "antipode D(k,-k) = 0");
    }

    {
        const auto& vt = r.table_ptr();
        bool good = true;
        for (int mu = 0; mu < std::min(C.dim(), 2) && good; ++mu)
            for (int nu = 0; nu < std::min(C.dim(), 2) && good; ++nu)
                good = check_leibniz(r, cop, XSeries::x(vt, order, mu),
                                     XSeries::x(vt, order, nu))
                           .ok;
        rep.check(good, "leibniz-rule on coordinates");
    }

    weyl_property_check(rep, r, 4);

    auto ln = ln_twist_check(C);
    rep.check(ln.ok, "ln-twist second order (1/2, 1/12, -1/24)", ln.detail);

    // opposite realization commutes
    {
        auto y = weyl_realization(C.negated(), order);
        bool good = true;
        for (int mu = 0; mu < C.dim() && good; ++mu)
            for (int nu = 0; nu < C.dim() && good; ++nu)
                good = op_commutator(r.xhat(mu), y.xhat(nu)).is_zero();
        rep.check(good, "opposite-algebra [xhat, yhat] = 0");
    }
    return rep;
}

VerifyReport verify_kappa(const std::vector<Rat>& a, int n, int order) {
    auto model = kappa_minkowski(a, n);
    VerifyReport rep = verify_lie(*model.C, order);

    auto r = weyl_realization(*model.C, order);
    auto closed = kappa_closed_form_realization(a, n, order);
    bool good = true;
    for (int mu = 0; mu < n; ++mu) good = good && r.xhat(mu) == closed.xhat(mu);
    rep.check(good, "kappa closed-form realization x phi_S(A) - a (xp)(1-phi_S)/A");

    auto cop = coproduct_from_d(d_function_ode(*model.C, order));
    auto cc = kappa_closed_form_coproduct(a, n, order);
    good = true;
    for (int mu = 0; mu < n; ++mu) good = good && cop.comp[mu] == cc[mu];
    rep.check(good, "kappa closed-form coproduct phi_S(D0 A)(...)");
    return rep;
}

VerifyReport verify_tensorial(int n, int order) {
    auto model = extended_tensorial(n);
    VerifyReport rep = verify_lie(*model.C, order);

    auto r = weyl_realization(*model.C, order);
    auto closed = extended_tensorial_closed_form(n, order);
    bool good = true;
    for (int A = 0; A < model.dim; ++A) good = good && r.xhat(A) == closed.xhat(A);
    rep.check(good, "tensorial closed form xhat_mu = x_mu - (l/2) x_(mu a) p_a");

    auto cop = coproduct_from_d(d_function_ode(*model.C, order));
    const auto& cvt = cop.table_ptr();
    good = true;
    for (int mu = 0; mu < n; ++mu)
        good = good && cop.comp[mu] == Series::momentum(cvt, order, 0, mu) +
                                           Series::momentum(cvt, order, 1, mu);
    rep.check(good, "tensorial Delta p_mu undeformed");
    return rep;
}

VerifyReport verify_theta(const std::vector<std::vector<Rat>>& theta, int order) {
    VerifyReport rep;
    auto model = canonical_theta(theta, order);
    const auto& r = *model.realization;
    const auto& vt = r.table_ptr();
    int n = r.dim();
    Series l = Series::deform(vt, order);

    bool good = true;
    for (int mu = 0; mu < n && good; ++mu)
        for (int nu = 0; nu < n && good; ++nu) {
            Op expect(vt, order, 0);
            if (theta[mu][nu] != 0)
                expect.add_term(XExpo(n, 0), l * EC(Rat(0), theta[mu][nu]));
            good = op_commutator(r.xhat(mu), r.xhat(nu)) == expect;
        }
    rep.check(good, "theta commutators [xhat,xhat] = i theta");

    auto kf = k_function(r);
    const auto& kvt = kf.K[0].table_ptr();
    good = kf.L.is_zero();
    for (int mu = 0; mu < n; ++mu)
        good = good && kf.K[mu] == Series::momentum(kvt, order, 0, mu);
    rep.check(good, "theta K(k) = k, L(k) = 0");

    good = true;
    for (int mu = 0; mu < n && good; ++mu)
        for (int nu = 0; nu < n && good; ++nu) {
            XSeries comm = star_product(r, XSeries::x(vt, order, mu),
                                        XSeries::x(vt, order, nu)) -
                           star_product(r, XSeries::x(vt, order, nu),
                                        XSeries::x(vt, order, mu));
            XSeries expect =
                XSeries::one(vt, order) * (l * EC(Rat(0), theta[mu][nu]));
            if (theta[mu][nu] == 0) expect = XSeries::zero(vt, order);
            good = comm == expect;
        }
    rep.check(good, "theta star commutator x*x - x*x = i theta");
    weyl_property_check(rep, r, 3);
    return rep;
}

VerifyReport verify_snyder(int n, int order) {
    VerifyReport rep;
    auto phi1 = snyder_symmetric_phi1(std::max(order, 3));
    // ODE residual through u^3
    {
        int O = 3;
        std::vector<Rat> res(O + 1, Rat(0));
        for (int m = 1; m <= O; ++m) res[m] += 2 * m * phi1[m];
        for (int m = 0; m <= O; ++m) res[m] -= phi1[m];
        for (int i = 0; i <= O; ++i)
            for (int j = 0; i + j <= O; ++j) res[i + j] += phi1[i] * phi1[j];
        res[1] += 1;
        bool good = true;
        for (int m = 0; m <= O; ++m) good = good && res[m] == 0;
        rep.check(good, "snyder ODE 2u phi1' = phi1 - phi1^2 - u to u^3");
    }
    auto model = snyder_symmetric(n, order);
    const auto& r = *model.realization;

    auto kf = k_function(r);
    const auto& kvt = kf.K[0].table_ptr();
    bool good = true;
    for (int mu = 0; mu < n; ++mu)
        good = good && kf.K[mu] == Series::momentum(kvt, order, 0, mu);
    rep.check(good, "snyder symmetric ordering K(k) = k");

    auto d = d_function_diffop(r);
    auto res = associativity_residual(d);
    bool nonzero = false;
    for (size_t mu = 0; mu < res.size() && !nonzero; ++mu)
        if (!res[mu].is_zero()) {
            nonzero = true;
            int dmin = res[mu].min_deform_degree();
            rep.check(true, "snyder non-associativity witnessed (residual != 0)");
            rep.lines.push_back("  witness component " + std::to_string(mu) +
                                " at order beta^" + std::to_string(dmin) + ": " +
                                res[mu].deform_part(dmin).text());
        }
    if (!nonzero) rep.fail("snyder non-associativity witnessed (residual != 0)");
    return rep;
}

VerifyReport verify_dilation(const std::vector<std::vector<Rat>>& a, int order) {
    VerifyReport rep;
    auto r = dilation_realization(a, order);
    int n = r.dim();
    bool good = true;
    for (int al = 0; al < n && good; ++al)
        for (int be = 0; be < n && good; ++be) {
            Op lhs = op_multiply(r.xhat(al), r.xhat(be));
            Op rhs = op_multiply(r.xhat(be), r.xhat(al)) *
                     dilation_q_squared(r, a, al, be);
            good = lhs == rhs;
        }
    rep.check(good, "dilation q-commutation xhat_a xhat_b = q^2 xhat_b xhat_a");

    auto t = dilation_twist_inverse(r, a);
    const auto& vt = r.table_ptr();
    auto star = [&](const XSeries& f, const XSeries& g) { return twist_apply(t, f, g); };
    good = true;
    for (int al = 0; al < n && good; ++al)
        for (int be = 0; be < n && good; ++be)
            good = star(XSeries::x(vt, order, al), XSeries::x(vt, order, be)) ==
                   star(XSeries::x(vt, order, be), XSeries::x(vt, order, al)) *
                       dilation_q_squared(r, a, al, be);
    rep.check(good, "dilation star q-commutation x_a * x_b = q^2 x_b * x_a");

    good = true;
    std::vector<XSeries> gens;
    for (int mu = 0; mu < n; ++mu) gens.push_back(XSeries::x(vt, order, mu));
    for (const auto& f : gens)
        for (const auto& g : gens)
            for (const auto& h : gens)
                good = good && star(star(f, g), h) == star(f, star(g, h));
    rep.check(good, "dilation star associativity (Abelian twist)");
    return rep;
}

} // namespace ncps
