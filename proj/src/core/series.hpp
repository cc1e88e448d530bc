#pragma once

#include "variables.hpp"

#include <functional>
#include <map>
#include <optional>

namespace ncps {

using Expo = std::vector<int>;

int expo_total(const Expo& e);

/// Truncated multivariate formal power series with exact complex-rational
/// coefficients.  Sparse canonical form: no stored zero coefficient, no
/// stored term whose total deformation degree exceeds the truncation order.
/// Momentum degrees are unbounded.
class Series {
public:
    Series() = default;
    Series(VtPtr vt, int order);

    static Series zero(VtPtr vt, int order) { return Series(std::move(vt), order); }
    static Series constant(VtPtr vt, int order, const EC& c);
    static Series one(VtPtr vt, int order) { return constant(std::move(vt), order, EC(1)); }
    static Series variable(VtPtr vt, int order, int var);
    static Series momentum(VtPtr vt, int order, int vec, int mu);
    static Series deform(VtPtr vt, int order, int j = 0);
    static Series scalar(VtPtr vt, int order, int j);

    const VariableTable& table() const { return *vt_; }
    const VtPtr& table_ptr() const { return vt_; }
    int order() const { return order_; }
    const std::map<Expo, EC>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    EC coeff(const Expo& e) const;
    EC constant_term() const;

    int deform_degree(const Expo& e) const;
    int min_deform_degree() const; // INT_MAX when zero
    /// Largest total degree in non-deformation variables.
    int max_momentum_degree() const;

    /// Part of the series with exact deformation degree d.
    Series deform_part(int d) const;
    Series truncated(int new_order) const;
    /// Drops terms above a deformation degree but keeps the ring order.
    Series capped(int max_degree) const;

    Series& add_term(const Expo& e, const EC& c);

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { a += b; return a; }
    friend Series operator-(Series a, const Series& b) { a -= b; return a; }
    friend Series operator*(const Series& a, const Series& b);
    Series& operator*=(const Series& o) { *this = *this * o; return *this; }
    friend Series operator*(const Series& a, const EC& c);
    friend Series operator*(const EC& c, const Series& a) { return a * c; }

    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// exp(a) truncated.  Requires every term to carry deformation degree
    /// >= 1 so the series is nilpotent under truncation.
    Series exp() const;

    /// Multiplicative inverse; requires an invertible constant term.
    Series inverse() const;

    /// Ordinary formal partial derivative with respect to one variable.
    Series derivative(int var) const;

    /// Substitutes a series (over `target`) for every variable.  `images`
    /// has one entry per variable of this series' table.
    Series substitute(const VtPtr& target, const std::vector<Series>& images) const;

    /// Renames this series onto another table via a variable-index map
    /// (var_map[i] = variable in target carrying source variable i).
    Series rename(const VtPtr& target, const std::vector<int>& var_map) const;

    /// Sets one momentum vector to zero.
    Series set_vector_zero(int vec) const;

    std::string text() const;

private:
    void check_same_table(const Series& o) const;

    VtPtr vt_;
    int order_ = 0;
    std::map<Expo, EC> terms_;
};

/// eta-contracted dot product of two component vectors of series:
/// sum_mu eta_mu a[mu] b[mu].
Series eta_dot(const std::vector<Series>& a, const std::vector<Series>& b,
               const std::vector<int>& sig);

/// Matrix calculus in the all-lower-index convention where every repeated
/// index pair carries one metric factor: (A.B)_{mu,nu} = sum_a eta_a
/// A_{mu,a} B_{a,nu}, and the identity element is eta itself.
using SeriesMatrix = std::vector<std::vector<Series>>;

SeriesMatrix eta_identity_matrix(const VtPtr& vt, int order);
SeriesMatrix eta_mat_mul(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix mat_add(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix mat_scale(const SeriesMatrix& a, const Series& s);
SeriesMatrix mat_scale(const SeriesMatrix& a, const EC& c);

/// Applies the first-order differential operator sum_a coeffs[a] d/d(target_a)
/// to `body`, where target_a are the components of one momentum vector and
/// the derivative is the ordinary one (all metric factors are expected to be
/// resolved into `coeffs` by the caller).  `repetitions` >= 0 applies the
/// operator that many times; exp mode computes the operator exponential.
Series apply_diff_operator(const std::vector<Series>& coeffs, int target_vec,
                           const Series& body, int repetitions);
Series apply_diff_operator_exp(const std::vector<Series>& coeffs, int target_vec,
                               const Series& body);

/// Compositional inverse of K(k) = k + O(deformation) in the vector symbol
/// `vec`: returns G with K(G(k)) = k up to the truncation order.
std::vector<Series> invert_vector_series(const std::vector<Series>& K, int vec);

/// Substitutes series for the components of one momentum vector, leaving
/// all other variables in place (images live over the same table).
Series substitute_vector(const Series& s, int vec, const std::vector<Series>& images);

} // namespace ncps
