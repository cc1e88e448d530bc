#include "doctest.h"

#include "qdeform.hpp"

#include <numeric>

using namespace ncps;

namespace {

Rat classical_multinomial(const std::vector<int>& m) {
    int N = std::accumulate(m.begin(), m.end(), 0);
    Rat out = 1;
    for (int k = 2; k <= N; ++k) out *= k;
    for (int mi : m)
        for (int k = 2; k <= mi; ++k) out /= k;
    return out;
}

std::vector<Rat> qplane_theta(int n, const std::vector<std::vector<Rat>>& c) {
    // theta_{ab, ba} = c_{ab} for a < b, antisymmetric completion in (a,b)
    std::vector<Rat> th(n * n * n * n, Rat(0));
    auto at = [&](int mu, int nu, int ga, int de) -> Rat& {
        return th[((mu * n + nu) * n + ga) * n + de];
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            at(a, b, b, a) = c[a][b];
            at(b, a, b, a) = -c[a][b];
        }
    return th;
}

} // namespace

TEST_CASE("q word normal order") {
    // word (1,2) in the 1-based convention is (0,1) internally
    auto [c01, m01] = q_word_normal_order({0, 1}, 2);
    CHECK(c01 == LaurentQ::q(2, 0, 1));
    CHECK(m01 == std::vector<int>{1, 1});
    auto [c10, m10] = q_word_normal_order({1, 0}, 2);
    CHECK(c10 == LaurentQ::q(2, 1, 0));
    CHECK(c01 * c10 == LaurentQ::one(2));

    auto [c112, m112] = q_word_normal_order({0, 0, 1}, 2);
    CHECK(c112 == LaurentQ::q(2, 0, 1) * LaurentQ::q(2, 0, 1));
    CHECK(m112 == std::vector<int>{2, 1});

    // sum over the three distinct words of x1^2 x2
    LaurentQ sum = LaurentQ::zero(2);
    for (auto& w : std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})
        sum = sum + q_word_normal_order(w, 2).first;
    CHECK(sum.text() == "q12^2 + 1 + q12^-2");
}

TEST_CASE("q multinomials reproduce the low-order displays") {
    CHECK(q_multinomial({1, 1}).text() == "q12 + q12^-1");
    CHECK(q_multinomial({2, 1}).text() == "q12^2 + 1 + q12^-2");

    // N=3 in n=3: six triple products
    LaurentQ expect = LaurentQ::zero(3);
    for (auto& w : std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                                 {1, 0, 2}, {0, 2, 1}, {2, 1, 0}})
        expect = expect + q_word_normal_order(w, 3).first;
    CHECK(q_multinomial({1, 1, 1}) == expect);
    CHECK(q_multinomial({1, 1, 1}).text() ==
          "q12*q13*q23 + q12*q13*q23^-1 + q12*q13^-1*q23^-1 + "
          "q12^-1*q13*q23 + q12^-1*q13^-1*q23 + q12^-1*q13^-1*q23^-1");
}

TEST_CASE("q multinomials collapse to classical multinomials at q = 1") {
    for (auto& m : std::vector<std::vector<int>>{{3, 0},
                                                 {2, 2},
                                                 {4, 2},
                                                 {3, 2, 1},
                                                 {2, 2, 2},
                                                 {1, 1, 4}}) {
        CHECK(q_multinomial(m).at_one() == classical_multinomial(m));
    }
}

TEST_CASE("inversion duality of q multinomials") {
    // negating every exponent (q -> q^{-1}) maps the coefficient onto itself
    for (auto& m : std::vector<std::vector<int>>{{2, 1}, {2, 2}, {1, 2, 1}}) {
        LaurentQ c = q_multinomial(m);
        LaurentQ flipped = LaurentQ::zero(static_cast<int>(m.size()));
        for (const auto& [e, cc] : c.terms()) {
            std::vector<int> neg(e.size());
            for (size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
            flipped.add_term(neg, cc);
        }
        CHECK(c == flipped);
    }
}

TEST_CASE("single-parameter q-Pascal recurrence") {
    // B(m1, m2) with all pair symbols collapsed to one q obeys
    // B(m1, m2) = q^{-m2} B(m1-1, m2) + q^{m1} B(m1, m2-1)
    auto B = [](int m1, int m2) {
        return q_multinomial({m1, m2}).collapse_single_parameter();
    };
    auto qpow = [](int k) {
        LaurentQ out(2);
        out.add_term({k}, Rat(1));
        return out;
    };
    for (int N = 1; N <= 6; ++N)
        for (int m2 = 0; m2 <= N; ++m2) {
            int m1 = N - m2;
            LaurentQ rhs = LaurentQ::zero(2);
            if (m1 > 0) rhs = rhs + qpow(-m2) * B(m1 - 1, m2);
            if (m2 > 0) rhs = rhs + qpow(m1) * B(m1, m2 - 1);
            CHECK(B(m1, m2) == rhs);
        }
}

TEST_CASE("consistency: sum over distinct words equals the q multinomial") {
    for (auto& m : std::vector<std::vector<int>>{{2, 1}, {2, 3}, {1, 2, 2}}) {
        int n = static_cast<int>(m.size());
        std::vector<int> word;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m[i]; ++k) word.push_back(i);
        std::sort(word.begin(), word.end());
        LaurentQ sum = LaurentQ::zero(n);
        do {
            auto [c, mono] = q_word_normal_order(word, n);
            CHECK(mono == m);
            sum = sum + c;
        } while (std::next_permutation(word.begin(), word.end()));
        CHECK(sum == q_multinomial(m));
    }
}

TEST_CASE("quadratic jacobi checker") {
    // zero tensor valid
    CHECK(quadratic_jacobi_check(2, std::vector<Rat>(16, Rat(0))).empty());

    // q-plane tensor from the dilation relations (n=2, rational q^2-1)
    auto th2 = qplane_theta(2, {{Rat(0), Rat(1, 2)}, {Rat(0), Rat(0)}});
    CHECK(quadratic_jacobi_check(2, th2).empty());
    auto qs = QuadraticStructure::validated(2, th2);
    CHECK(qs.nondegenerate());

    // at n=3 the same naive representative leaves a six-term residual
    // (theta_{01,1g} theta_{g2,20} = c^2 at slot (0,1,2;1,2,0)): the
    // identity constrains the tensor itself, not just the relation ideal
    std::vector<std::vector<Rat>> cu(3, std::vector<Rat>(3, Rat(0)));
    cu[0][1] = cu[0][2] = cu[1][2] = Rat(1, 3);
    auto v3 = quadratic_jacobi_check(3, qplane_theta(3, cu));
    CHECK(!v3.empty());
    bool found = false;
    for (const auto& v : v3)
        if (v.mu == 0 && v.nu == 1 && v.tau == 2 && v.rho == 1 && v.sigma == 2 &&
            v.delta == 0 && v.value == Rat(1, 9))
            found = true;
    CHECK(found);

    // random dense antisymmetric tensor: violations reported
    std::vector<Rat> dense(81, Rat(0));
    int n = 3;
    auto set = [&](int mu, int nu, int ga, int de, Rat v) {
        dense[((mu * n + nu) * n + ga) * n + de] = v;
        dense[((nu * n + mu) * n + ga) * n + de] = -v;
    };
    set(0, 1, 0, 0, Rat(1));
    set(0, 2, 1, 1, Rat(2));
    set(1, 2, 2, 2, Rat(3));
    set(0, 1, 1, 2, Rat(1, 2));
    CHECK(!quadratic_jacobi_check(n, dense).empty());

    // non-antisymmetric input is structural
    std::vector<Rat> badsym(16, Rat(0));
    badsym[((0 * 2 + 1) * 2 + 0) * 2 + 0] = Rat(1);
    CHECK_THROWS_AS(quadratic_jacobi_check(2, badsym), StructuralError);
}

TEST_CASE("dilation realization q-commutation") {
    std::vector<std::vector<Rat>> a = {{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
    int O = 3;
    auto r = dilation_realization(a, O);
    CHECK(r.xhat(0).table().scalar_count() == 0);
    // a = 0 gives xhat = x
    std::vector<std::vector<Rat>> zero = {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
    auto r0 = dilation_realization(zero, O);
    for (int mu = 0; mu < 2; ++mu)
        CHECK(r0.xhat(mu) == Op::x(r0.table_ptr(), O, 0, mu));

    // xhat_a xhat_b = exp(2 a_{ab}) xhat_b xhat_a through O=3
    for (int al = 0; al < 2; ++al)
        for (int be = 0; be < 2; ++be) {
            Op lhs = op_multiply(r.xhat(al), r.xhat(be));
            Op rhs = op_multiply(r.xhat(be), r.xhat(al)) *
                     dilation_q_squared(r, a, al, be);
            CHECK(lhs == rhs);
        }
    // xhat_a |> 1 = x_a
    for (int mu = 0; mu < 2; ++mu)
        CHECK(fock_apply_one(r.xhat(mu)) == XSeries::x(r.table_ptr(), O, mu));
}

TEST_CASE("dilation star product q-commutes and is associative") {
    std::vector<std::vector<Rat>> a = {{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
    int O = 3;
    auto r = dilation_realization(a, O);
    auto t = dilation_twist_inverse(r, a);
    const auto& vt = r.table_ptr();
    auto star = [&](const XSeries& f, const XSeries& g) { return twist_apply(t, f, g); };

    XSeries x0 = XSeries::x(vt, O, 0), x1 = XSeries::x(vt, O, 1);
    CHECK(star(x0, x1) == star(x1, x0) * dilation_q_squared(r, a, 0, 1));

    // Abelian twist: the star product is associative
    std::vector<XSeries> gens = {x0, x1, x0 * x1, x1 * x1};
    for (const auto& f : gens)
        for (const auto& g : gens)
            for (const auto& h : gens)
                CHECK(star(star(f, g), h) == star(f, star(g, h)));

    // twist route consistency with the operator route on coordinates:
    // x_a * x_b = m(F^{-1}(xhat_a |> .)...) reduces to fock of products
    for (int al = 0; al < 2; ++al)
        for (int be = 0; be < 2; ++be)
            CHECK(star(XSeries::x(vt, O, al), XSeries::x(vt, O, be)) ==
                  fock_apply(r.xhat(al), XSeries::x(vt, O, be)));
}

TEST_CASE("generalized weyl realization at first order") {
    // theta = 0 gives xhat = x
    auto zero = QuadraticStructure::validated(2, std::vector<Rat>(16, Rat(0)));
    auto rz = generalized_weyl_first_order(zero, 2);
    for (int mu = 0; mu < 2; ++mu)
        CHECK(rz.xhat(mu) == Op::x(rz.table_ptr(), 2, 0, mu));

    // single-pair family theta_{01,10} = 1/2
    auto th = QuadraticStructure::validated(
        2, qplane_theta(2, {{Rat(0), Rat(1, 2)}, {Rat(0), Rat(0)}}));
    int O = 1;
    auto r = generalized_weyl_first_order(th, O);
    const auto& vt = r.table_ptr();
    Series l = Series::deform(vt, O);

    // xhat_mu |> 1 = x_mu
    for (int mu = 0; mu < 2; ++mu)
        CHECK(fock_apply_one(r.xhat(mu)) == XSeries::x(vt, O, mu));

    // [xhat_mu, xhat_nu] = theta_{mu nu g d} x_g x_d + O(theta^2)
    for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu) {
            Op lhs = op_commutator(r.xhat(mu), r.xhat(nu));
            Op rhs(vt, O, 0);
            for (int ga = 0; ga < 2; ++ga)
                for (int de = 0; de < 2; ++de) {
                    const Rat& t = th.theta(mu, nu, ga, de);
                    if (t == 0) continue;
                    XExpo xe(2, 0);
                    xe[ga] += 1;
                    xe[de] += 1;
                    Rat etas = Rat(vt->eta(ga) * vt->eta(de));
                    rhs.add_term(xe, l * EC(t * etas));
                }
            CHECK(lhs == rhs);
        }
}
