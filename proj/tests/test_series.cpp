#include "doctest.h"

#include "series.hpp"

#include <random>

using namespace ncps;

namespace {

VtPtr table_p(int order_dim = 2) {
    return VariableTable::make(order_dim, {"p"});
}

Series lp0(const VtPtr& vt, int order) {
    return Series::deform(vt, order) * Series::momentum(vt, order, 0, 0);
}

Series random_series(const VtPtr& vt, int order, std::mt19937& rng, int nterms = 6) {
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> num(-4, 4);
    Series s(vt, order);
    for (int t = 0; t < nterms; ++t) {
        Expo e(vt->var_count(), 0);
        for (auto& x : e) x = expo(rng);
        s.add_term(e, EC(Rat(num(rng)), Rat(num(rng))));
    }
    return s;
}

} // namespace

TEST_CASE("exact complex arithmetic") {
    EC a(Rat(1, 3), Rat(1, 2));
    EC b(Rat(2, 3), Rat(-1, 2));
    CHECK(a + b == EC(Rat(1)));
    CHECK(a * EC::i() == EC(Rat(-1, 2), Rat(1, 3)));
    CHECK((a / a) == EC(Rat(1)));
    CHECK(EC(Rat(3, 6)).text() == "1/2");
    CHECK(EC(Rat(0), Rat(-2, 3)).text() == "-2/3*i");
    CHECK(EC(Rat(1, 2), Rat(1, 3)).text() == "(1/2+1/3*i)");
    CHECK(rat_parse("-7/21") == Rat(-1, 3));
    CHECK_THROWS_AS(rat_parse("x"), StructuralError);
}

TEST_CASE("difference of squares with truncation") {
    auto vt = table_p();
    int O = 2;
    Series one = Series::one(vt, O);
    Series a = one + lp0(vt, O);
    Series b = one - lp0(vt, O);
    Series expect = one - lp0(vt, O) * lp0(vt, O);
    CHECK(a * b == expect);

    // additive identity
    CHECK(a + Series::zero(vt, O) == a);

    // truncation kills the degree-2 term at O=1
    Series t = lp0(vt, 1) * lp0(vt, 1);
    CHECK(t.is_zero());
}

TEST_CASE("series exp") {
    auto vt = table_p();
    CHECK(Series::zero(vt, 3).exp() == Series::one(vt, 3));

    Series a = lp0(vt, 2);
    Series e = a.exp();
    Series expect = Series::one(vt, 2) + a + a * a * EC(Rat(1, 2));
    CHECK(e == expect);

    // exp(a) exp(-a) = 1 at O=3
    Series b = lp0(vt, 3);
    CHECK(b.exp() * (-b).exp() == Series::one(vt, 3));

    // ungraded argument is rejected
    Series p = Series::momentum(vt, 2, 0, 0);
    CHECK_THROWS_AS(p.exp(), DomainError);
    CHECK_THROWS_AS(Series::one(vt, 2).exp(), DomainError);
}

TEST_CASE("ring axioms on random sparse series") {
    auto vt = VariableTable::make(2, {"k", "q"});
    std::mt19937 rng(20240811);
    for (int order : {2, 4, 6}) {
        for (int rep = 0; rep < 8; ++rep) {
            Series a = random_series(vt, order, rng);
            Series b = random_series(vt, order, rng);
            Series c = random_series(vt, order, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("truncation is a ring homomorphism") {
    auto vt = table_p();
    std::mt19937 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        Series a = random_series(vt, 6, rng);
        Series b = random_series(vt, 6, rng);
        for (int O : {0, 1, 3}) {
            CHECK((a * b).truncated(O) == (a.truncated(O) * b.truncated(O)).truncated(O));
        }
    }
}

TEST_CASE("series inverse") {
    auto vt = table_p();
    Series a = Series::one(vt, 4) + lp0(vt, 4) * EC(Rat(2));
    CHECK(a * a.inverse() == Series::one(vt, 4));
    CHECK_THROWS_AS(Series::zero(vt, 2).inverse(), DomainError);
}

TEST_CASE("diff operator translation") {
    // exp(k_b d/dq_b) q_mu = q_mu + k_mu
    auto vt = VariableTable::make(2, {"k", "q"});
    int O = 3;
    std::vector<Series> coeffs;
    for (int mu = 0; mu < 2; ++mu) coeffs.push_back(Series::momentum(vt, O, 0, mu));
    for (int mu = 0; mu < 2; ++mu) {
        Series qmu = Series::momentum(vt, O, 1, mu);
        Series kmu = Series::momentum(vt, O, 0, mu);
        CHECK(apply_diff_operator_exp(coeffs, 1, qmu) == qmu + kmu);
    }
    // non-terminating coefficient (depends on target, ungraded) is rejected
    std::vector<Series> bad = {Series::momentum(vt, O, 1, 0), Series::zero(vt, O)};
    CHECK_THROWS_AS(apply_diff_operator_exp(bad, 1, Series::momentum(vt, O, 1, 0)),
                    DomainError);
    // finite repetition mode
    Series q0 = Series::momentum(vt, O, 1, 0);
    CHECK(apply_diff_operator(coeffs, 1, q0 * q0, 1) ==
          Series::momentum(vt, O, 0, 0) * q0 * EC(Rat(2)));
}

TEST_CASE("invert vector series") {
    auto vt = VariableTable::make(2, {"k"});
    int O = 4;
    // identity inverts to identity
    std::vector<Series> K;
    for (int mu = 0; mu < 2; ++mu) K.push_back(Series::momentum(vt, O, 0, mu));
    auto G = invert_vector_series(K, 0);
    CHECK(G == K);

    // K_mu = k_mu + l c k_mu k_0 (toy) inverts such that K(G(k)) = k
    Series l = Series::deform(vt, O);
    std::vector<Series> K2 = K;
    for (int mu = 0; mu < 2; ++mu)
        K2[mu] += l * K[mu] * K[0] * EC(Rat(1, 3));
    auto G2 = invert_vector_series(K2, 0);
    for (int mu = 0; mu < 2; ++mu) {
        CHECK(substitute_vector(K2[mu], 0, G2) == K[mu]);
        CHECK(substitute_vector(G2[mu], 0, K2) == K[mu]); // two-sided
    }

    // leading part must be the identity
    std::vector<Series> bad = {K[0] * EC(Rat(2)), K[1]};
    CHECK_THROWS_AS(invert_vector_series(bad, 0), DomainError);
}

TEST_CASE("canonical text rendering") {
    auto vt = table_p();
    int O = 2;
    Series s = Series::one(vt, O) - lp0(vt, O) * lp0(vt, O);
    CHECK(s.text() == "1 - l^2*p0^2");
    Series t = Series::momentum(vt, O, 0, 1) * EC(Rat(0), Rat(1, 2));
    CHECK(t.text() == "1/2*i*p1");
    CHECK(Series::zero(vt, O).text() == "0");
}
