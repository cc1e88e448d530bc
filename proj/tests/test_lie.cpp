#include "doctest.h"

#include "lie.hpp"

#include <random>

using namespace ncps;

namespace {

// kappa-Minkowski structure constants C_{mu nu lambda} = a_mu eta_{nu lambda}
// - a_nu eta_{mu lambda}
std::vector<Rat> kappa_dense(int n, const std::vector<Rat>& a, const std::vector<int>& sig) {
    std::vector<Rat> c(n * n * n, Rat(0));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int lam = 0; lam < n; ++lam) {
                Rat v = 0;
                if (nu == lam) v += a[mu] * sig[nu];
                if (mu == lam) v -= a[nu] * sig[mu];
                c[(mu * n + nu) * n + lam] = v;
            }
    return c;
}

} // namespace

TEST_CASE("jacobi: zero tensor is valid") {
    int n = 3;
    std::vector<Rat> zero(n * n * n, Rat(0));
    CHECK(check_jacobi(n, VariableTable::minkowski(n), zero).empty());
}

TEST_CASE("jacobi: kappa-Minkowski valid for any a and n") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int n : {2, 3, 4}) {
        auto sig = VariableTable::minkowski(n);
        for (int rep = 0; rep < 4; ++rep) {
            std::vector<Rat> a(n);
            for (auto& v : a) v = Rat(num(rng), 1 + rep);
            CHECK(check_jacobi(n, sig, kappa_dense(n, a, sig)).empty());
        }
    }
}

TEST_CASE("jacobi: perturbed kappa tensor reports violations") {
    int n = 3;
    auto sig = VariableTable::minkowski(n);
    std::vector<Rat> a = {Rat(1), Rat(0), Rat(0)};
    auto c = kappa_dense(n, a, sig);
    // perturb one antisymmetric pair
    c[(1 * n + 2) * n + 0] += Rat(1, 2);
    c[(2 * n + 1) * n + 0] -= Rat(1, 2);
    auto violations = check_jacobi(n, sig, c);
    CHECK(!violations.empty());
    // non-antisymmetric input is a structural error
    c[(1 * n + 2) * n + 0] += 1;
    CHECK_THROWS_AS(check_jacobi(n, sig, c), StructuralError);
}

TEST_CASE("c_matrix contraction") {
    int n = 2;
    auto sig = VariableTable::minkowski(n);
    std::vector<Rat> a = {Rat(1), Rat(0)};
    auto C = StructureConstants::validated(n, sig, kappa_dense(n, a, sig));

    auto vt = VariableTable::make(n, {"p", "q"});
    int O = 2;
    auto m = c_matrix(C, vt, O, 0);
    // C(p)_{mu nu} = C_{alpha mu nu} p_alpha (eta-contracted).  With
    // a=(1,0): C(p)_{mu nu} = (a.p) eta_{mu nu} - a_mu p_nu where
    // (a.p) = eta_00 p_0 = -p_0.
    Series p0 = Series::momentum(vt, O, 0, 0);
    Series p1 = Series::momentum(vt, O, 0, 1);
    CHECK(m[0][0] == p0 * EC(Rat(-1)) * EC(Rat(sig[0])) - p0); // (a.p)eta_00 - p_0
    CHECK(m[0][1] == -p1);
    CHECK(m[1][0] == Series::zero(vt, O));
    CHECK(m[1][1] == p0 * EC(Rat(-1)));
    // zero tensor gives the zero matrix
    auto zeroC = StructureConstants(n, sig);
    auto zm = c_matrix(zeroC, vt, O, 0);
    for (auto& row : zm)
        for (auto& e : row) CHECK(e.is_zero());
    // symbol renaming: matrix in q equals matrix in p under substitution
    auto mq = c_matrix(C, vt, O, 1);
    std::vector<int> map(vt->var_count());
    for (int mu = 0; mu < n; ++mu) {
        map[vt->vector_var(0, mu)] = vt->vector_var(1, mu);
        map[vt->vector_var(1, mu)] = vt->vector_var(0, mu);
    }
    map[vt->deform_var(0)] = vt->deform_var(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(m[i][j].rename(vt, map) == mq[i][j]);
}

TEST_CASE("bernoulli psi series") {
    Series psi = bernoulli_psi(4);
    auto vt = psi.table_ptr();
    auto t = [&](int k) {
        Expo e(vt->var_count(), 0);
        e[vt->deform_var(0)] = k;
        return e;
    };
    CHECK(psi.coeff(t(0)) == EC(Rat(1)));
    CHECK(psi.coeff(t(1)) == EC(Rat(1, 2)));
    CHECK(psi.coeff(t(2)) == EC(Rat(1, 12)));
    CHECK(psi.coeff(t(3)) == EC(Rat(0)));
    CHECK(psi.coeff(t(4)) == EC(Rat(-1, 720)));

    // psi(t) - psi(-t) = t (Bernoulli symmetry), checked to higher order
    auto c = bernoulli_psi_coeffs(8);
    for (int k = 0; k <= 8; ++k) {
        Rat diff = c[k] - Rat(k % 2 == 0 ? 1 : -1) * c[k];
        CHECK(diff == (k == 1 ? Rat(1) : Rat(0)));
    }
}

TEST_CASE("psi of matrix") {
    int n = 2;
    auto sig = VariableTable::minkowski(n);
    std::vector<Rat> a = {Rat(1), Rat(0)};
    auto C = StructureConstants::validated(n, sig, kappa_dense(n, a, sig));
    int O = 4;
    auto vt = VariableTable::make(n, {"p"});
    Series l = Series::deform(vt, O);
    auto lc = mat_scale(c_matrix(C, vt, O, 0), l);

    // M = 0 -> identity (eta in the all-lower-index calculus)
    SeriesMatrix zero(n, std::vector<Series>(n, Series::zero(vt, O)));
    CHECK(psi_of_matrix(zero, O) == eta_identity_matrix(vt, O));

    // first-order term (1/2) lM, second-order (1/12) (lM)^2
    auto psi = psi_of_matrix(lc, O);
    auto sq = eta_mat_mul(lc, lc);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CHECK(psi[i][j].deform_part(1) == lc[i][j] * EC(Rat(1, 2)));
            CHECK(psi[i][j].deform_part(2) == sq[i][j] * EC(Rat(1, 12)));
        }

    // defining identity psi(lM) (1 - e^{-lM}) = lM as matrix series
    // 1 - e^{-t} = sum_{k>=1} (-1)^{k+1} t^k / k!
    std::vector<Rat> one_minus_exp(O + 1, Rat(0));
    Rat fact = 1;
    for (int k = 1; k <= O; ++k) {
        fact *= k;
        one_minus_exp[k] = Rat(k % 2 == 1 ? 1 : -1) / fact;
    }
    auto rhs = matrix_series(lc, one_minus_exp);
    auto prod = eta_mat_mul(psi, rhs);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(prod[i][j] == lc[i][j]);

    // ungraded matrix is rejected
    auto ungraded = c_matrix(C, vt, O, 0);
    CHECK_THROWS_AS(psi_of_matrix(ungraded, O), DomainError);
}
