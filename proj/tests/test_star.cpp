#include "doctest.h"

#include "models.hpp"
#include "nc_testutil.hpp"
#include "pbw.hpp"

using namespace ncps;
using namespace ncps::testutil;

namespace {

const std::vector<Rat> kA = {Rat(1), Rat(0)};

DFunction trivial_d(int n, int order) {
    auto vt = VariableTable::make(n, {"k", "q"});
    DFunction d;
    d.source = "trivial";
    for (int mu = 0; mu < n; ++mu)
        d.D.push_back(Series::momentum(vt, order, 0, mu) +
                      Series::momentum(vt, order, 1, mu));
    return d;
}

bool same_components(const std::vector<Series>& a, const std::vector<Series>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

} // namespace

TEST_CASE("d_function_ode: C = 0 gives k + q") {
    StructureConstants zero(2, VariableTable::minkowski(2));
    auto d = d_function_ode(zero, 3);
    auto t = trivial_d(2, 3);
    CHECK(same_components(d.D, t.D));
    // the undeformed limit holds through every solver
    CHECK(same_components(d_function_oracle(zero, 3).D, t.D));
    CHECK(same_components(d_function_diffop(weyl_realization(zero, 3)).D, t.D));
}

TEST_CASE("d_function_ode: first order is (l/2) k C(q)") {
    auto model = kappa_minkowski(kA, 2);
    auto d = d_function_ode(*model.C, 1);
    const auto& vt = d.D[0].table_ptr();
    auto entry = rational_entries(*model.C, vt, 1);
    auto Cq = cmat_of(entry, vt, 1, 1);
    std::vector<Series> k(2), q(2);
    for (int mu = 0; mu < 2; ++mu) {
        k[mu] = Series::momentum(vt, 1, 0, mu);
        q[mu] = Series::momentum(vt, 1, 1, mu);
    }
    auto kCq = row_contract(k, Cq);
    Series l = Series::deform(vt, 1);
    for (int mu = 0; mu < 2; ++mu)
        CHECK(d.D[mu] == k[mu] + q[mu] + l * kCq[mu] * EC(Rat(1, 2)));
}

TEST_CASE("d_function_ode: third order matches the displayed formula (rational C)") {
    for (int n : {2, 3}) {
        std::vector<Rat> a(n, Rat(0));
        a[0] = Rat(2, 3);
        if (n > 2) a[2] = Rat(-1, 5);
        auto model = kappa_minkowski(a, n);
        auto d = d_function_ode(*model.C, 3);
        const auto& vt = d.D[0].table_ptr();
        auto ref = third_order_reference(rational_entries(*model.C, vt, 3), vt, 3);
        CHECK(same_components(d.D, ref));
    }
}

TEST_CASE("D boundary conditions") {
    auto model = kappa_minkowski(kA, 2);
    auto d = d_function_ode(*model.C, 3);
    const auto& vt = d.D[0].table_ptr();
    auto at_q0 = d_at_q_zero(d);
    auto at_k0 = d_at_k_zero(d);
    for (int mu = 0; mu < 2; ++mu) {
        CHECK(at_q0[mu] == Series::momentum(vt, 3, 0, mu));
        CHECK(at_k0[mu] == Series::momentum(vt, 3, 1, mu));
    }
}

TEST_CASE("A12 structure: D - q - k psi(lC(q)) is O(k^2)") {
    auto model = kappa_minkowski(kA, 2);
    int O = 3;
    auto d = d_function_ode(*model.C, O);
    const auto& vt = d.D[0].table_ptr();
    Series l = Series::deform(vt, O);
    auto lcq = mat_scale(cmat_of(rational_entries(*model.C, vt, O), vt, O, 1), l);
    auto psi = psi_of_matrix(lcq, O);
    std::vector<Series> k(2);
    for (int mu = 0; mu < 2; ++mu) k[mu] = Series::momentum(vt, O, 0, mu);
    auto kpsi = row_contract(k, psi);
    for (int mu = 0; mu < 2; ++mu) {
        Series rem = d.D[mu] - Series::momentum(vt, O, 1, mu) - kpsi[mu];
        for (const auto& [e, c] : rem.terms())
            CHECK(vec_degree(*vt, e, 0) >= 2);
    }
}

TEST_CASE("diffop solver equals ode solver for weyl kappa") {
    for (int n : {2, 3}) {
        std::vector<Rat> a(n, Rat(0));
        a[0] = Rat(1);
        auto model = kappa_minkowski(a, n);
        int O = 3;
        auto ode = d_function_ode(*model.C, O);
        auto diff = d_function_diffop(weyl_realization(*model.C, O));
        CHECK(same_components(ode.D, diff.D));
    }
}

TEST_CASE("oracle solver equals ode solver") {
    // kappa n=2 at O=4 (the [xhat_0, xhat_1] = i l xhat_1 subcase)
    auto model = kappa_minkowski(kA, 2);
    auto ode = d_function_ode(*model.C, 4);
    auto orc = d_function_oracle(*model.C, 4);
    CHECK(same_components(ode.D, orc.D));
    // extended tensorial n=2 at O=3
    auto ext = extended_tensorial(2);
    auto ode2 = d_function_ode(*ext.C, 3);
    auto orc2 = d_function_oracle(*ext.C, 3);
    CHECK(same_components(ode2.D, orc2.D));
}

TEST_CASE("opposite algebra: D_{-C}(q,k) = D_C(k,q)") {
    auto model = kappa_minkowski(kA, 2);
    int O = 3;
    auto d = d_function_ode(*model.C, O);
    auto dop = d_function_ode(model.C->negated(), O);
    auto swapped = d_swap_arguments(dop);
    CHECK(same_components(d.D, swapped.D));
}

TEST_CASE("associativity of Lie-type D") {
    auto t = trivial_d(2, 2);
    CHECK(check_associativity(t).ok);

    auto model = kappa_minkowski(kA, 2);
    auto d = d_function_ode(*model.C, 3);
    auto rep = check_associativity(d);
    CHECK(rep.ok);
    CHECK(rep.lines.empty());
}

TEST_CASE("snyder diffop D at first order and its non-associativity witness") {
    int n = 2, O = 1;
    auto model = snyder_symmetric(n, O);
    auto d = d_function_diffop(*model.realization);
    const auto& vt = d.D[0].table_ptr();
    // D = k + q + beta[ -(1/3) q^2 k + (1/3)(k.q) q - (1/6)(k.q) k + (1/6) k^2 q ]
    std::vector<Series> k(n), q(n);
    for (int mu = 0; mu < n; ++mu) {
        k[mu] = Series::momentum(vt, O, 0, mu);
        q[mu] = Series::momentum(vt, O, 1, mu);
    }
    const auto& sig = vt->signature();
    Series kk = eta_dot(k, k, sig), qq = eta_dot(q, q, sig), kq = eta_dot(k, q, sig);
    Series beta = Series::deform(vt, O);
    for (int mu = 0; mu < n; ++mu) {
        Series expect = k[mu] + q[mu] +
                        beta * (qq * k[mu] * EC(Rat(-1, 3)) + kq * q[mu] * EC(Rat(1, 3)) +
                                kq * k[mu] * EC(Rat(-1, 6)) + kk * q[mu] * EC(Rat(1, 6)));
        CHECK(d.D[mu] == expect);
    }

    // residual_mu = (beta/2) [ (k2.k3) k1_mu - (k1.k3) k2_mu ] + O(beta^2)
    auto res = associativity_residual(d);
    auto rep = check_associativity(d);
    CHECK(!rep.ok);
    const auto& vt3 = res[0].table_ptr();
    std::vector<Series> k1(n), k2(n), k3(n);
    for (int mu = 0; mu < n; ++mu) {
        k1[mu] = Series::momentum(vt3, O, 0, mu);
        k2[mu] = Series::momentum(vt3, O, 1, mu);
        k3[mu] = Series::momentum(vt3, O, 2, mu);
    }
    Series beta3 = Series::deform(vt3, O);
    for (int mu = 0; mu < n; ++mu) {
        Series expect = beta3 * (eta_dot(k2, k3, sig) * k1[mu] -
                                 eta_dot(k1, k3, sig) * k2[mu]) *
                        EC(Rat(1, 2));
        CHECK(res[mu] == expect);
    }
}

TEST_CASE("star product: unit and first-order commutator") {
    auto model = kappa_minkowski(kA, 2);
    int O = 3;
    auto r = weyl_realization(*model.C, O);
    const auto& vt = r.table_ptr();
    XSeries one = XSeries::one(vt, O);
    XSeries x0 = XSeries::x(vt, O, 0);
    XSeries x1 = XSeries::x(vt, O, 1);

    CHECK(star_product(r, x0, one) == x0);
    CHECK(star_product(r, one, x0) == x0);

    Series l = Series::deform(vt, O);
    XSeries comm = star_product(r, x0, x1) - star_product(r, x1, x0);
    XSeries expect = XSeries::zero(vt, O);
    for (int al = 0; al < 2; ++al) {
        const Rat& c = model.C->c(0, 1, al);
        if (c != 0)
            expect += XSeries::x(vt, O, al) * (l * EC(Rat(0), Rat(vt->eta(al)) * c));
    }
    CHECK(comm == expect);
}

TEST_CASE("star product associativity on monomials") {
    auto model = kappa_minkowski(kA, 2);
    int O = 3;
    auto r = weyl_realization(*model.C, O);
    const auto& vt = r.table_ptr();
    std::vector<XSeries> gens = {XSeries::x(vt, O, 0), XSeries::x(vt, O, 1),
                                 XSeries::x(vt, O, 0) * XSeries::x(vt, O, 1)};
    for (const auto& f : gens)
        for (const auto& g : gens)
            for (const auto& h : gens) {
                if (f.x_degree() + g.x_degree() + h.x_degree() > 4) continue;
                CHECK(star_product(r, star_product(r, f, g), h) ==
                      star_product(r, f, star_product(r, g, h)));
            }
}

TEST_CASE("opposite star product reverses arguments") {
    auto model = kappa_minkowski(kA, 2);
    int O = 3;
    auto r = weyl_realization(*model.C, O);
    auto rop = weyl_realization(model.C->negated(), O);
    const auto& vt = r.table_ptr();
    std::vector<XSeries> gens = {XSeries::x(vt, O, 0), XSeries::x(vt, O, 1),
                                 XSeries::x(vt, O, 0) * XSeries::x(vt, O, 0)};
    for (const auto& f : gens)
        for (const auto& g : gens)
            CHECK(star_product(rop, f, g) == star_product(r, g, f));
}

TEST_CASE("PBW degree-3 confluence matches the Jacobi verdict") {

    int n = 3;
    auto sig = VariableTable::minkowski(n);
    StructureConstants good(n, sig);
    good.set(0, 1, 1, Rat(1));
    good.set(0, 2, 2, Rat(1)); // kappa a=(1,0,0)
    StructureConstants bad = good;
    bad.set(1, 2, 0, Rat(1, 2)); // breaks Jacobi

    CHECK(check_jacobi(n, sig, good.dense()).empty());
    CHECK(pbw_degree3_violations(good).empty());

    CHECK(!check_jacobi(n, sig, bad.dense()).empty());
    CHECK(!pbw_degree3_violations(bad).empty());

    // and for the extended tensorial algebra (dimension 3 flattened)
    auto ext = extended_tensorial(2);
    CHECK(pbw_degree3_violations(*ext.C).empty());
}
