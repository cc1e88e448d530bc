#pragma once

#include "realization.hpp"
#include "twist.hpp"

namespace ncps {

/// Exact Laurent polynomial in the pair symbols q_{ab}, a < b, with
/// q_{ba} represented as q_{ab}^{-1} and q_{aa} = 1 eliminated.
class LaurentQ {
public:
    explicit LaurentQ(int n) : n_(n) {}

    static int pair_count(int n) { return n * (n - 1) / 2; }
    static int pair_index(int n, int a, int b); // requires a < b

    static LaurentQ zero(int n) { return LaurentQ(n); }
    static LaurentQ one(int n);
    static LaurentQ constant(int n, const Rat& c);
    /// q_{ab} for any a != b (inverse exponent when a > b)
    static LaurentQ q(int n, int a, int b);

    int n() const { return n_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentQ& add_term(const std::vector<int>& e, const Rat& c);

    friend LaurentQ operator+(const LaurentQ& a, const LaurentQ& b);
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
    friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentQ& a, const LaurentQ& b) { return !(a == b); }

    /// evaluation at q_{ab} = 1 for all pairs
    Rat at_one() const;
    /// substitute every pair symbol by the single symbol q (exponents add)
    LaurentQ collapse_single_parameter() const;

    /// canonical rendering, e.g. "q12^2 + 1 + q12^-2" (1-based indices,
    /// terms sorted by descending exponent vector)
    std::string text() const;

private:
    int n_;
    std::map<std::vector<int>, Rat> terms_;
};

/// coefficient and monomial of xhat_{w1} ... xhat_{wN} |> 1 =
/// prod_{k<l} q_{w_k w_l} x^m (0-based generator indices).
std::pair<LaurentQ, std::vector<int>> q_word_normal_order(const std::vector<int>& word,
                                                          int n);

/// q-deformed multinomial coefficient: the weight of
/// (k_1 x_1)^{m_1}...(k_n x_n)^{m_n} in (k xhat)^N |> 1, i.e. the sum of
/// q_word_normal_order coefficients over all distinct words of the multiset.
LaurentQ q_multinomial(const std::vector<int>& exponents);

/// Quadratic deformation tensor theta_{mu nu gamma delta}, antisymmetric in
/// the first index pair, validated against the six-term Jacobi identity and
/// the relation-span nondegeneracy condition.
class QuadraticStructure {
public:
    QuadraticStructure(int dim, std::vector<Rat> dense, std::vector<int> signature = {});

    int dim() const { return dim_; }
    const Rat& theta(int mu, int nu, int ga, int de) const;
    const std::vector<int>& signature() const { return sig_; }
    bool nondegenerate() const { return nondegenerate_; }

    static QuadraticStructure validated(int dim, std::vector<Rat> dense,
                                        std::vector<int> signature = {});

private:
    int dim_;
    std::vector<int> sig_;
    std::vector<Rat> t_;
    bool nondegenerate_ = false;
};

struct QuadraticJacobiViolation {
    int mu, nu, tau, rho, sigma, delta;
    Rat value;
};

/// Six-term quadratic Jacobi identity, contracted over the internal index
/// with the given metric (Euclidean when empty, matching the 1..n index
/// convention of the quadratic sector).
std::vector<QuadraticJacobiViolation> quadratic_jacobi_check(
    int dim, const std::vector<Rat>& dense, std::vector<int> signature = {});

/// Dimension of the span of the relations x_mu x_nu - x_nu x_mu -
/// theta_{mu nu g d} x_g x_d inside the second tensor power.
int quadratic_relation_rank(int dim, const std::vector<Rat>& dense,
                            const std::vector<int>& signature);

/// Dilation realization xhat_a = x_a exp(i sum_b a_{ab} D_b), D_b = x_b p_b
/// (no summation).  The matrix entries multiply one grading symbol per pair
/// (a carries the deformation degree); the metric is Euclidean.
Realization dilation_realization(const std::vector<std::vector<Rat>>& a, int order);

/// q^2_{ab} = exp(2 a_{ab}) as a series over the dilation realization's
/// table.
Series dilation_q_squared(const Realization& r, const std::vector<std::vector<Rat>>& a,
                          int alpha, int beta);

/// Inverse dilation twist F^{-1} = exp(-sum a_{ab} D_a (x) D_b).
TwistOperator dilation_twist_inverse(const Realization& r,
                                     const std::vector<std::vector<Rat>>& a);

/// Lowest-order generalized Weyl realization of a quadratic algebra:
/// xhat_mu = x_mu + (i/2) theta_{mu g b a} x_a x_b p_g + O(theta^2), with
/// the grading symbol carrying theta.
Realization generalized_weyl_first_order(const QuadraticStructure& th, int order);

} // namespace ncps
