#pragma once

#include "series.hpp"

namespace ncps {

using XExpo = std::vector<int>;

/// Polynomial in the commutative coordinates x_0..x_{n-1} whose
/// coefficients are truncated series (momenta, symbolic wave vectors and
/// the grading symbols all live in the coefficient ring).  Doubles as the
/// value type of the Fock action.
class XSeries {
public:
    XSeries() = default;
    XSeries(VtPtr vt, int order) : vt_(std::move(vt)), order_(order) {}

    static XSeries zero(VtPtr vt, int order) { return XSeries(std::move(vt), order); }
    static XSeries one(VtPtr vt, int order);
    static XSeries x(VtPtr vt, int order, int mu);
    static XSeries monomial(VtPtr vt, int order, const XExpo& e, const EC& c = EC(1));

    const VariableTable& table() const { return *vt_; }
    const VtPtr& table_ptr() const { return vt_; }
    int order() const { return order_; }
    const std::map<XExpo, Series>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int x_degree() const;
    Series coeff(const XExpo& e) const;

    XSeries& add_term(const XExpo& e, const Series& s);

    XSeries operator-() const;
    XSeries& operator+=(const XSeries& o);
    XSeries& operator-=(const XSeries& o);
    friend XSeries operator+(XSeries a, const XSeries& b) { a += b; return a; }
    friend XSeries operator-(XSeries a, const XSeries& b) { a -= b; return a; }
    /// Commutative product in S(g) (coefficients multiply as series).
    friend XSeries operator*(const XSeries& a, const XSeries& b);
    friend XSeries operator*(const XSeries& a, const Series& s);
    friend XSeries operator*(const XSeries& a, const EC& c);

    friend bool operator==(const XSeries& a, const XSeries& b);
    friend bool operator!=(const XSeries& a, const XSeries& b) { return !(a == b); }

    XSeries truncated(int new_order) const;
    XSeries drop_x_above(int xcap) const;
    /// log of a series with constant term 1 (in the joint grading where a
    /// term is small when it has positive x-degree or deformation degree).
    XSeries log() const;

    std::string text() const;

private:
    VtPtr vt_;
    int order_ = 0;
    std::map<XExpo, Series> terms_;
};

/// Exact polynomial in x with complex-rational coefficients.
struct XPoly {
    std::map<XExpo, EC> terms;

    XPoly() = default;
    static XPoly monomial(const XExpo& e, const EC& c = EC(1));
    XSeries lift(const VtPtr& vt, int order) const;
    bool is_zero() const { return terms.empty(); }
};

/// Normal-ordered element of the Heisenberg algebra H_n: a finite sum of
/// x-monomials times momentum series, x factors kept to the left.  The
/// distinguished vector symbol `pvec` of the table is the operator
/// momentum; all other vector symbols commute with everything.
class Op {
public:
    Op() = default;
    Op(VtPtr vt, int order, int pvec);
    Op(VtPtr vt, int order, const std::string& psymbol);

    static Op zero_op(VtPtr vt, int order, int pvec) { return Op(std::move(vt), order, pvec); }
    static Op identity(VtPtr vt, int order, int pvec);
    static Op x(VtPtr vt, int order, int pvec, int mu);
    static Op p(VtPtr vt, int order, int pvec, int mu);

    const VariableTable& table() const { return *vt_; }
    const VtPtr& table_ptr() const { return vt_; }
    int order() const { return order_; }
    int pvec() const { return pvec_; }
    const std::map<XExpo, Series>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Op& add_term(const XExpo& e, const Series& s);

    Op operator-() const;
    Op& operator+=(const Op& o);
    Op& operator-=(const Op& o);
    friend Op operator+(Op a, const Op& b) { a += b; return a; }
    friend Op operator-(Op a, const Op& b) { a -= b; return a; }
    friend Op operator*(const Op& a, const Series& s);
    friend Op operator*(const Op& a, const EC& c);

    friend bool operator==(const Op& a, const Op& b);
    friend bool operator!=(const Op& a, const Op& b) { return !(a == b); }

    Op truncated(int new_order) const;

    std::string text() const;

private:
    VtPtr vt_;
    int order_ = 0;
    int pvec_ = 0;
    std::map<XExpo, Series> terms_;
};

/// Normal-ordered operator product using [p_mu, x_nu] = -i eta_{mu nu}.
Op op_multiply(const Op& a, const Op& b);
Op op_commutator(const Op& a, const Op& b);

/// Fock action: x multiplies, p acts as the metric-contracted derivative
/// p_mu |> x_nu = -i eta_{mu nu}, 1 |> f = f.
XSeries fock_apply(const Op& a, const XSeries& f);
XSeries fock_apply_one(const Op& a);

/// sum_m (A^m / m!) |> f, keeping x-degrees <= xcap.  Throws DomainError
/// when the expansion cannot terminate within the structural bound.
XSeries op_exponential_apply(const Op& a, const XSeries& f, int xcap);

/// Embeds a p-free polynomial value as a multiplication operator.
Op embed_multiplier(const XSeries& f, int pvec);

} // namespace ncps
