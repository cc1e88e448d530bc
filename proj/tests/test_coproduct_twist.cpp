#include "doctest.h"

#include "models.hpp"
#include "twist.hpp"

using namespace ncps;

namespace {

const std::vector<Rat> kA = {Rat(1), Rat(0)};

Coproduct kappa_coproduct(int n, int order) {
    std::vector<Rat> a(n, Rat(0));
    a[0] = Rat(1);
    auto model = kappa_minkowski(a, n);
    return coproduct_from_d(d_function_ode(*model.C, order));
}

TwistOperator tensorial_twist_inverse(int n, int order) {
    // F^{-1} = exp(-(il/2) x_(ab) p_a (x) p_b), eta-contracted pairs a, b
    auto model = extended_tensorial(n);
    auto vt = VariableTable::make(model.dim, {"p"}, {"l"}, model.signature);
    Series l = Series::deform(vt, order);
    std::vector<std::pair<Op, Op>> letters;
    for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be) {
            if (al == be) continue;
            int slot = al < be ? tensorial_slot(n, al, be) : tensorial_slot(n, be, al);
            Rat orient = al < be ? Rat(1) : Rat(-1);
            XExpo xe(model.dim, 0);
            xe[slot] = 1;
            Op L(vt, order, 0);
            Series coef = Series::momentum(vt, order, 0, al) * l *
                          EC(Rat(0), orient * Rat(-1, 2) * Rat(vt->eta(al) * vt->eta(be)));
            L.add_term(xe, coef);
            letters.emplace_back(std::move(L), Op::p(vt, order, 0, be));
        }
    return graded_twist(std::move(letters));
}

} // namespace

TEST_CASE("coproduct basics: primitive part, counit, antipode") {
    auto cop = kappa_coproduct(2, 3);
    const auto& vt = cop.table_ptr();
    for (int mu = 0; mu < 2; ++mu)
        CHECK(cop.comp[mu].deform_part(0) ==
              Series::momentum(vt, 3, 0, mu) + Series::momentum(vt, 3, 1, mu));
    CHECK(counit_ok(cop));

    // S(p) = -p: D(k, -k) = 0
    std::vector<Series> minus_left;
    for (int mu = 0; mu < 2; ++mu)
        minus_left.push_back(-Series::momentum(vt, 3, 0, mu));
    for (int mu = 0; mu < 2; ++mu) {
        Series s = substitute_vector(cop.comp[mu], 1, minus_left);
        CHECK(s.is_zero());
    }

    // C = 0 gives the primitive coproduct
    StructureConstants zero(2, VariableTable::minkowski(2));
    auto prim = coproduct_from_d(d_function_ode(zero, 3));
    auto expect = primitive_coproduct(2, 3, {"l"}, zero.signature());
    for (int mu = 0; mu < 2; ++mu) CHECK(prim.comp[mu] == expect.comp[mu]);
}

TEST_CASE("coassociativity: Lie models pass, Snyder fails") {
    auto prim = primitive_coproduct(2, 3, {"l"}, VariableTable::minkowski(2));
    CHECK(check_coassociativity(prim).ok);

    CHECK(check_coassociativity(kappa_coproduct(2, 3)).ok);

    auto snyder = snyder_symmetric(2, 1);
    auto d = d_function_diffop(*snyder.realization);
    auto cop = coproduct_from_d(d);
    CHECK(!check_coassociativity(cop).ok);
}

TEST_CASE("Leibniz rule for kappa-Minkowski") {
    int O = 2;
    auto model = kappa_minkowski(kA, 2);
    auto r = weyl_realization(*model.C, O);
    auto cop = coproduct_from_d(d_function_ode(*model.C, O));
    const auto& vt = r.table_ptr();

    XSeries one = XSeries::one(vt, O);
    CHECK(leibniz_lhs(r, cop, 0, one, one).is_zero());
    CHECK(leibniz_rhs(r, 0, one, one).is_zero());

    std::vector<XSeries> polys = {XSeries::x(vt, O, 0), XSeries::x(vt, O, 1),
                                  XSeries::x(vt, O, 0) * XSeries::x(vt, O, 1)};
    for (const auto& f : polys)
        for (const auto& g : polys) CHECK(check_leibniz(r, cop, f, g).ok);
}

TEST_CASE("extended tensorial coproduct: undeformed vector part, deformed slots") {
    int n = 2, O = 3;
    auto model = extended_tensorial(n);
    auto cop = coproduct_from_d(d_function_ode(*model.C, O));
    const auto& vt = cop.table_ptr();
    // Delta p_mu undeformed
    for (int mu = 0; mu < n; ++mu)
        CHECK(cop.comp[mu] == Series::momentum(vt, O, 0, mu) +
                                  Series::momentum(vt, O, 1, mu));
    // Delta p_(mu nu) = primitive - (l/2)(pL_mu pR_nu - pL_nu pR_mu); the
    // Leibniz rule fixes this sign (and no factor i appears)
    int slot = tensorial_slot(n, 0, 1);
    Series l = Series::deform(vt, O);
    Series expect = Series::momentum(vt, O, 0, slot) + Series::momentum(vt, O, 1, slot) -
                    l * (Series::momentum(vt, O, 0, 0) * Series::momentum(vt, O, 1, 1) -
                         Series::momentum(vt, O, 0, 1) * Series::momentum(vt, O, 1, 0)) *
                        EC(Rat(1, 2));
    CHECK(cop.comp[slot] == expect);

    // Leibniz holds on coordinate pairs with the generic-engine coproduct
    auto r = weyl_realization(*model.C, O);
    const auto& rvt = r.table_ptr();
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            CHECK(check_leibniz(r, cop, XSeries::x(rvt, O, mu), XSeries::x(rvt, O, nu)).ok);

    // negative control: flipping in the extra factor i (as printed in one
    // display) breaks the Leibniz rule
    Coproduct wrong = cop;
    wrong.comp[slot] =
        Series::momentum(vt, O, 0, slot) + Series::momentum(vt, O, 1, slot) +
        l * (Series::momentum(vt, O, 0, 0) * Series::momentum(vt, O, 1, 1) -
             Series::momentum(vt, O, 0, 1) * Series::momentum(vt, O, 1, 0)) *
            EC(Rat(0), Rat(1, 2));
    CHECK(!check_leibniz(r, wrong, XSeries::x(rvt, O, 0), XSeries::x(rvt, O, 1)).ok);
}

TEST_CASE("twist apply: identity twist is the pointwise product") {
    auto vt = VariableTable::make(2, {"p"});
    int O = 2;
    TwistOperator t = graded_twist({});
    XSeries f = XSeries::x(vt, O, 0);
    XSeries g = XSeries::x(vt, O, 1);
    CHECK(twist_apply(t, f, g) == f * g);

    // identity twist written with a vanishing exponent: realization is x_mu
    TwistOperator tz = graded_twist({{Op::zero_op(vt, O, 0), Op::zero_op(vt, O, 0)}});
    for (int mu = 0; mu < 2; ++mu)
        CHECK(realization_from_twist(tz, mu, O) == Op::x(vt, O, 0, mu));
}

TEST_CASE("weyl twist reproduces the star product") {
    int O = 2;
    auto model = kappa_minkowski(kA, 2);
    auto r = weyl_realization(*model.C, O);
    auto t = weyl_twist_inverse(r);
    const auto& vt = r.table_ptr();
    std::vector<XSeries> polys = {XSeries::x(vt, O, 0), XSeries::x(vt, O, 1),
                                  XSeries::x(vt, O, 0) * XSeries::x(vt, O, 1),
                                  XSeries::x(vt, O, 1) * XSeries::x(vt, O, 1)};
    for (const auto& f : polys)
        for (const auto& g : polys)
            CHECK(twist_apply(t, f, g) == star_product(r, f, g));
}

TEST_CASE("canonical theta twist evaluation") {
    int n = 2, O = 2;
    std::vector<std::vector<Rat>> theta = {{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
    auto model = canonical_theta(theta, O);
    const auto& r = *model.realization;
    const auto& vt = r.table_ptr();
    Series l = Series::deform(vt, O);
    // F^{-1} = exp(-(i/2) theta_{ab} p_a (x) p_b) with the grading on theta
    std::vector<std::pair<Op, Op>> letters;
    for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be) {
            if (theta[al][be] == 0) continue;
            Op L = Op::p(vt, O, 0, al) *
                   (l * EC(Rat(0), Rat(-1, 2) * theta[al][be] *
                               Rat(vt->eta(al) * vt->eta(be))));
            letters.emplace_back(std::move(L), Op::p(vt, O, 0, be));
        }
    auto t = graded_twist(std::move(letters));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            XSeries got = twist_apply(t, XSeries::x(vt, O, mu), XSeries::x(vt, O, nu));
            XSeries expect = XSeries::x(vt, O, mu) * XSeries::x(vt, O, nu) +
                             XSeries::one(vt, O) *
                                 (l * EC(Rat(0), Rat(1, 2) * theta[mu][nu]));
            CHECK(got == expect);
            // cross-path: equals the Omega-route star product
            CHECK(got == star_product(r, XSeries::x(vt, O, mu), XSeries::x(vt, O, nu)));
        }
}

TEST_CASE("realization from the extended tensorial twist") {
    int n = 2, O = 3;
    auto t = tensorial_twist_inverse(n, O);
    auto closed = extended_tensorial_closed_form(n, O);
    for (int mu = 0; mu < n; ++mu)
        CHECK(realization_from_twist(t, mu, O + 2) == closed.xhat(mu));
    // tensorial coordinates are untouched
    auto model = extended_tensorial(n);
    for (int s = n; s < model.dim; ++s)
        CHECK(realization_from_twist(t, s, O + 2) == closed.xhat(s));
}

TEST_CASE("realization from the weyl twist reproduces the realization") {
    int O = 2;
    auto model = kappa_minkowski(kA, 2);
    auto r = weyl_realization(*model.C, O);
    auto t = weyl_twist_inverse(r);
    for (int mu = 0; mu < 2; ++mu)
        CHECK(realization_from_twist(t, mu, O + 2) == r.xhat(mu));
}

TEST_CASE("opposite twist generates the same realization") {
    int O = 2;
    auto model = kappa_minkowski(kA, 2);
    auto r = weyl_realization(*model.C, O);
    auto yhat = weyl_realization(model.C->negated(), O);
    auto t = opposite_twist_inverse(yhat);
    for (int mu = 0; mu < 2; ++mu)
        CHECK(realization_from_twist(t, mu, O + 2) == r.xhat(mu));
}

TEST_CASE("normal-ordered twist expression acts like the exponential-factor form") {
    int O = 2;
    auto model = kappa_minkowski(kA, 2);
    auto r = weyl_realization(*model.C, O);
    auto cop = coproduct_from_d(d_function_ode(*model.C, O));
    auto t_normal = normal_ordered_twist_inverse(cop, r);
    auto t_exp = weyl_twist_inverse(r);
    const auto& vt = r.table_ptr();
    std::vector<XSeries> polys = {XSeries::x(vt, O, 0), XSeries::x(vt, O, 1),
                                  XSeries::x(vt, O, 0) * XSeries::x(vt, O, 1)};
    for (const auto& f : polys)
        for (const auto& g : polys)
            CHECK(twist_apply(t_normal, f, g) == twist_apply(t_exp, f, g));
}

TEST_CASE("ln twist second-order check") {
    // C = 0: ln F = 0 and the reference vanishes too
    StructureConstants zero(2, VariableTable::minkowski(2));
    CHECK(ln_twist_check(zero).ok);

    auto model = kappa_minkowski(kA, 2);
    auto rep = ln_twist_check(*model.C);
    INFO(rep.detail);
    CHECK(rep.ok);

    auto model3 = kappa_minkowski({Rat(1, 2), Rat(0), Rat(1, 3)}, 3);
    CHECK(ln_twist_check(*model3.C).ok);

    auto ext = extended_tensorial(2);
    CHECK(ln_twist_check(*ext.C).ok);
}
