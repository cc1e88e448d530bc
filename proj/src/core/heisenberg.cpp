#include "heisenberg.hpp"

#include <algorithm>
#include <sstream>

namespace ncps {

namespace {

void check_xexpo(const VariableTable& vt, const XExpo& e) {
    if (static_cast<int>(e.size()) != vt.dim())
        throw StructuralError("x-exponent length mismatch");
    for (int k : e)
        if (k < 0) throw StructuralError("negative x-exponent");
}

std::string xmono_text(const XExpo& e) {
    std::string out;
    for (size_t mu = 0; mu < e.size(); ++mu) {
        if (e[mu] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(mu);
        if (e[mu] > 1) out += "^" + std::to_string(e[mu]);
    }
    return out;
}

std::string terms_text(const std::map<XExpo, Series>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, s] : terms) {
        std::string mono = xmono_text(e);
        std::string coeff = s.text();
        bool needs_parens =
            coeff.find(' ') != std::string::npos || (!coeff.empty() && coeff[0] == '-');
        if (!first) os << " + ";
        first = false;
        if (mono.empty()) {
            os << (needs_parens && coeff[0] != '-' ? "(" + coeff + ")" : coeff);
        } else if (coeff == "1") {
            os << mono;
        } else {
            os << mono << "*" << (needs_parens ? "(" + coeff + ")" : coeff);
        }
    }
    return os.str();
}

} // namespace

XSeries XSeries::one(VtPtr vt, int order) {
    XSeries f(vt, order);
    f.add_term(XExpo(vt->dim(), 0), Series::one(vt, order));
    return f;
}

XSeries XSeries::x(VtPtr vt, int order, int mu) {
    XSeries f(vt, order);
    XExpo e(vt->dim(), 0);
    e.at(mu) = 1;
    f.add_term(e, Series::one(vt, order));
    return f;
}

XSeries XSeries::monomial(VtPtr vt, int order, const XExpo& e, const EC& c) {
    XSeries f(vt, order);
    f.add_term(e, Series::constant(vt, order, c));
    return f;
}

int XSeries::x_degree() const {
    int d = 0;
    for (const auto& [e, s] : terms_) d = std::max(d, expo_total(e));
    return d;
}

Series XSeries::coeff(const XExpo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Series::zero(vt_, order_) : it->second;
}

XSeries& XSeries::add_term(const XExpo& e, const Series& s) {
    check_xexpo(*vt_, e);
    if (s.is_zero()) return *this;
    Series t = s.order() == order_ ? s : s.truncated(order_);
    if (t.is_zero()) return *this;
    auto [it, fresh] = terms_.emplace(e, t);
    if (!fresh) {
        it->second += t;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

XSeries XSeries::operator-() const {
    XSeries out(vt_, order_);
    for (const auto& [e, s] : terms_) out.terms_.emplace(e, -s);
    return out;
}

XSeries& XSeries::operator+=(const XSeries& o) {
    if (*vt_ != *o.vt_) throw StructuralError("variable table mismatch");
    order_ = std::min(order_, o.order_);
    for (const auto& [e, s] : o.terms_) add_term(e, s);
    return *this;
}

XSeries& XSeries::operator-=(const XSeries& o) {
    if (*vt_ != *o.vt_) throw StructuralError("variable table mismatch");
    order_ = std::min(order_, o.order_);
    for (const auto& [e, s] : o.terms_) add_term(e, -s);
    return *this;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
    if (*a.vt_ != *b.vt_) throw StructuralError("variable table mismatch");
    XSeries out(a.vt_, std::min(a.order_, b.order_));
    XExpo e(a.vt_->dim(), 0);
    for (const auto& [ea, sa] : a.terms_)
        for (const auto& [eb, sb] : b.terms_) {
            Series s = sa * sb;
            if (s.is_zero()) continue;
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, s);
        }
    return out;
}

XSeries operator*(const XSeries& a, const Series& s) {
    XSeries out(a.vt_, std::min(a.order_, s.order()));
    for (const auto& [e, t] : a.terms_) out.add_term(e, t * s);
    return out;
}

XSeries operator*(const XSeries& a, const EC& c) {
    XSeries out(a.vt_, a.order_);
    for (const auto& [e, t] : a.terms_) out.add_term(e, t * c);
    return out;
}

bool operator==(const XSeries& a, const XSeries& b) {
    if (*a.vt_ != *b.vt_) throw StructuralError("variable table mismatch");
    return a.order_ == b.order_ && a.terms_ == b.terms_;
}

XSeries XSeries::truncated(int new_order) const {
    XSeries out(vt_, new_order);
    for (const auto& [e, s] : terms_) out.add_term(e, s.truncated(new_order));
    return out;
}

XSeries XSeries::drop_x_above(int xcap) const {
    XSeries out(vt_, order_);
    for (const auto& [e, s] : terms_)
        if (expo_total(e) <= xcap) out.terms_.emplace(e, s);
    return out;
}

XSeries XSeries::log() const {
    XExpo unit(vt_->dim(), 0);
    XSeries r = *this;
    Series c0 = r.coeff(unit);
    if (!(c0.deform_part(0) == Series::one(vt_, order_)))
        throw DomainError("log requires leading coefficient 1");
    r.add_term(unit, -Series::one(vt_, order_));
    // r is now small in the joint (x-degree + deformation) grading; the
    // x-degree of retained data bounds the power count.
    int xcap = x_degree();
    XSeries out = zero(vt_, order_);
    XSeries power = one(vt_, order_);
    int kmax = xcap + order_ + 1;
    for (int k = 1; k <= kmax; ++k) {
        power = (power * r).drop_x_above(xcap);
        if (power.is_zero()) break;
        EC c = EC(Rat(k % 2 == 1 ? 1 : -1, k));
        out += power * c;
    }
    return out;
}

std::string XSeries::text() const { return terms_text(terms_); }

XPoly XPoly::monomial(const XExpo& e, const EC& c) {
    XPoly p;
    if (!c.is_zero()) p.terms.emplace(e, c);
    return p;
}

XSeries XPoly::lift(const VtPtr& vt, int order) const {
    XSeries out(vt, order);
    for (const auto& [e, c] : terms)
        out.add_term(e, Series::constant(vt, order, c));
    return out;
}

Op::Op(VtPtr vt, int order, int pvec) : vt_(std::move(vt)), order_(order), pvec_(pvec) {
    if (pvec_ < 0 || pvec_ >= vt_->vector_count())
        throw StructuralError("operator momentum symbol out of range");
}

Op::Op(VtPtr vt, int order, const std::string& psymbol)
    : Op(vt, order, vt->vector_index(psymbol)) {}

Op Op::identity(VtPtr vt, int order, int pvec) {
    Op a(vt, order, pvec);
    a.add_term(XExpo(vt->dim(), 0), Series::one(vt, order));
    return a;
}

Op Op::x(VtPtr vt, int order, int pvec, int mu) {
    Op a(vt, order, pvec);
    XExpo e(vt->dim(), 0);
    e.at(mu) = 1;
    a.add_term(e, Series::one(vt, order));
    return a;
}

Op Op::p(VtPtr vt, int order, int pvec, int mu) {
    Op a(vt, order, pvec);
    a.add_term(XExpo(vt->dim(), 0), Series::momentum(vt, order, pvec, mu));
    return a;
}

Op& Op::add_term(const XExpo& e, const Series& s) {
    check_xexpo(*vt_, e);
    if (s.is_zero()) return *this;
    Series t = s.order() == order_ ? s : s.truncated(order_);
    if (t.is_zero()) return *this;
    auto [it, fresh] = terms_.emplace(e, t);
    if (!fresh) {
        it->second += t;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Op Op::operator-() const {
    Op out(vt_, order_, pvec_);
    for (const auto& [e, s] : terms_) out.terms_.emplace(e, -s);
    return out;
}

Op& Op::operator+=(const Op& o) {
    if (*vt_ != *o.vt_ || pvec_ != o.pvec_)
        throw StructuralError("operator table mismatch");
    order_ = std::min(order_, o.order_);
    for (const auto& [e, s] : o.terms_) add_term(e, s);
    return *this;
}

Op& Op::operator-=(const Op& o) {
    if (*vt_ != *o.vt_ || pvec_ != o.pvec_)
        throw StructuralError("operator table mismatch");
    order_ = std::min(order_, o.order_);
    for (const auto& [e, s] : o.terms_) add_term(e, -s);
    return *this;
}

Op operator*(const Op& a, const Series& s) {
    Op out(a.vt_, std::min(a.order_, s.order()), a.pvec_);
    for (const auto& [e, t] : a.terms_) out.add_term(e, t * s);
    return out;
}

Op operator*(const Op& a, const EC& c) {
    Op out(a.vt_, a.order_, a.pvec_);
    for (const auto& [e, t] : a.terms_) out.add_term(e, t * c);
    return out;
}

bool operator==(const Op& a, const Op& b) {
    if (*a.vt_ != *b.vt_ || a.pvec_ != b.pvec_)
        throw StructuralError("operator table mismatch");
    return a.order_ == b.order_ && a.terms_ == b.terms_;
}

Op Op::truncated(int new_order) const {
    Op out(vt_, new_order, pvec_);
    for (const auto& [e, s] : terms_) out.add_term(e, s.truncated(new_order));
    return out;
}

std::string Op::text() const { return terms_text(terms_); }

namespace {

/// f(p) * x^b re-expressed in normal order: returns pairs (c, h) with
/// f x^b = sum_c x^c h_c(p), via f x_nu = x_nu f - i eta_nu df/dp_nu.
std::vector<std::pair<XExpo, Series>> commute_past(const VariableTable& vt, int pvec,
                                                   const Series& f, const XExpo& b) {
    std::vector<std::pair<XExpo, Series>> cur;
    cur.emplace_back(XExpo(vt.dim(), 0), f);
    for (int nu = 0; nu < vt.dim(); ++nu) {
        EC mi_eta = EC(Rat(0), Rat(-vt.eta(nu))); // -i * eta_nu
        int pvar = vt.vector_var(pvec, nu);
        for (int rep = 0; rep < b[nu]; ++rep) {
            std::vector<std::pair<XExpo, Series>> next;
            next.reserve(cur.size() * 2);
            for (auto& [c, h] : cur) {
                XExpo c2 = c;
                c2[nu] += 1;
                next.emplace_back(std::move(c2), h);
                Series dh = h.derivative(pvar);
                if (!dh.is_zero()) next.emplace_back(c, dh * mi_eta);
            }
            cur = std::move(next);
        }
    }
    return cur;
}

} // namespace

Op op_multiply(const Op& a, const Op& b) {
    if (a.table() != b.table() || a.pvec() != b.pvec())
        throw StructuralError("operator table mismatch");
    Op out(a.table_ptr(), std::min(a.order(), b.order()), a.pvec());
    XExpo e(a.table().dim(), 0);
    for (const auto& [ea, fa] : a.terms()) {
        for (const auto& [eb, fb] : b.terms()) {
            auto moved = commute_past(a.table(), a.pvec(), fa, eb);
            for (const auto& [c, h] : moved) {
                Series s = h * fb;
                if (s.is_zero()) continue;
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + c[i];
                out.add_term(e, s);
            }
        }
    }
    return out;
}

Op op_commutator(const Op& a, const Op& b) {
    return op_multiply(a, b) - op_multiply(b, a);
}

XSeries fock_apply(const Op& a, const XSeries& f) {
    if (a.table() != f.table()) throw StructuralError("operator/target table mismatch");
    const auto& vt = a.table_ptr();
    int n = vt->dim();
    int order = std::min(a.order(), f.order());
    // target coefficients must not depend on the operator momentum
    for (const auto& [e, s] : f.terms())
        for (const auto& [se, c] : s.terms())
            for (int mu = 0; mu < n; ++mu)
                if (se[vt->vector_var(a.pvec(), mu)] != 0)
                    throw StructuralError("Fock target depends on the operator momentum");

    XSeries out(vt, order);
    XExpo newx(n, 0);
    for (const auto& [ax, s] : a.terms()) {
        for (const auto& [se, c] : s.terms()) {
            // split the coefficient monomial into p-part and the rest
            Expo rest = se;
            std::vector<int> m(n, 0);
            for (int mu = 0; mu < n; ++mu) {
                int v = vt->vector_var(a.pvec(), mu);
                m[mu] = se[v];
                rest[v] = 0;
            }
            for (const auto& [fx, fs] : f.terms()) {
                EC factor = c;
                bool dead = false;
                for (int mu = 0; mu < n && !dead; ++mu) {
                    for (int r = 0; r < m[mu]; ++r) {
                        int avail = fx[mu] - r;
                        if (avail <= 0) { dead = true; break; }
                        // p_mu acts as -i eta_mu d/dx_mu
                        factor *= EC(Rat(0), Rat(-vt->eta(mu))) * EC(Rat(avail));
                    }
                }
                if (dead || factor.is_zero()) continue;
                for (int mu = 0; mu < n; ++mu) newx[mu] = ax[mu] + fx[mu] - m[mu];
                Series stored(vt, order);
                stored.add_term(rest, factor);
                out.add_term(newx, stored * fs);
            }
        }
    }
    return out;
}

XSeries fock_apply_one(const Op& a) {
    return fock_apply(a, XSeries::one(a.table_ptr(), a.order()));
}

XSeries op_exponential_apply(const Op& a, const XSeries& f, int xcap) {
    const auto& vt = a.table_ptr();
    int order = std::min(a.order(), f.order());
    // Bound: each application changes the x-degree by at most
    // 1 + (max p-degree of the operator per term) while either staying at the
    // deformation degree (only for x-degree-raising, p-free parts) or
    // raising it.  See the realization module for the graded structure.
    int max_p_deg = 0;
    for (const auto& [e, s] : a.terms())
        for (const auto& [se, c] : s.terms()) {
            int pd = 0;
            for (int mu = 0; mu < vt->dim(); ++mu)
                pd += se[vt->vector_var(a.pvec(), mu)];
            max_p_deg = std::max(max_p_deg, pd);
        }
    int cap = xcap + f.x_degree() + (order + 1) * (max_p_deg + 1) + 2;
    XSeries out = f.drop_x_above(xcap).truncated(order);
    XSeries cur = out;
    for (int k = 1; !cur.is_zero(); ++k) {
        if (k > cap)
            throw DomainError("operator exponential action failed to terminate");
        cur = fock_apply(a, cur).drop_x_above(xcap) * EC(Rat(1, k));
        out += cur;
    }
    return out;
}

Op embed_multiplier(const XSeries& f, int pvec) {
    const auto& vt = f.table_ptr();
    Op out(vt, f.order(), pvec);
    for (const auto& [e, s] : f.terms()) {
        for (const auto& [se, c] : s.terms())
            for (int mu = 0; mu < vt->dim(); ++mu)
                if (se[vt->vector_var(pvec, mu)] != 0)
                    throw StructuralError("multiplier embedding requires p-free coefficients");
        out.add_term(e, s);
    }
    return out;
}

} // namespace ncps
