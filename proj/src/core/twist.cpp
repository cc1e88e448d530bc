#include "twist.hpp"

#include <algorithm>

namespace ncps {

namespace {

using State = std::vector<std::pair<XSeries, Op>>;

int op_min_p_degree(const Op& op) {
    const auto& vt = op.table_ptr();
    int best = INT32_MAX;
    for (const auto& [e, s] : op.terms())
        for (const auto& [se, c] : s.terms()) {
            int d = 0;
            for (int mu = 0; mu < vt->dim(); ++mu)
                d += se[vt->vector_var(op.pvec(), mu)];
            best = std::min(best, d);
        }
    return best;
}

int op_min_def_degree(const Op& op) {
    int best = INT32_MAX;
    for (const auto& [e, s] : op.terms())
        best = std::min(best, s.min_deform_degree());
    return best;
}

bool op_is_x_free(const Op& op) {
    for (const auto& [e, s] : op.terms())
        if (expo_total(e) != 0) return false;
    return true;
}

bool op_has_positive_p(const Op& op) {
    const auto& vt = op.table_ptr();
    for (const auto& [e, s] : op.terms())
        for (const auto& [se, c] : s.terms()) {
            int d = 0;
            for (int mu = 0; mu < vt->dim(); ++mu)
                d += se[vt->vector_var(op.pvec(), mu)];
            if (d == 0) return false;
        }
    return true;
}

enum class ExpMode { Graded, LeftLowers, RightRaises };

ExpMode classify_factor(const TwistFactor& f) {
    bool graded = true, left_lowers = true, right_raises = true;
    for (const auto& [L, R] : f.letters) {
        if (L.is_zero() || R.is_zero()) continue;
        if (op_min_def_degree(L) + op_min_def_degree(R) < 1) graded = false;
        if (!(op_is_x_free(L) && op_has_positive_p(L))) left_lowers = false;
        if (!(op_is_x_free(R) && op_has_positive_p(R))) right_raises = false;
    }
    if (graded) return ExpMode::Graded;
    if (left_lowers) return ExpMode::LeftLowers;
    if (right_raises) return ExpMode::RightRaises;
    throw DomainError("twist exponential does not terminate: letters neither "
                      "graded, nor polynomial-degree lowering, nor right-leg bounded");
}

State apply_letters(const std::vector<std::pair<Op, Op>>& letters, const State& st,
                    int right_p_cap) {
    State out;
    for (const auto& [poly, op] : st)
        for (const auto& [L, R] : letters) {
            XSeries p2 = fock_apply(L, poly);
            if (p2.is_zero()) continue;
            Op o2 = op_multiply(R, op);
            if (o2.is_zero()) continue;
            if (right_p_cap >= 0 && op_min_p_degree(o2) > right_p_cap) continue;
            out.emplace_back(std::move(p2), std::move(o2));
        }
    return out;
}

/// classical (normally-ordered-symbol) product of two operators
Op comm_op_mul(const Op& a, const Op& b) {
    Op out(a.table_ptr(), std::min(a.order(), b.order()), a.pvec());
    XExpo e(a.table().dim(), 0);
    for (const auto& [ea, sa] : a.terms())
        for (const auto& [eb, sb] : b.terms()) {
            Series s = sa * sb;
            if (s.is_zero()) continue;
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, s);
        }
    return out;
}

/// exp of a normal-ordered two-leg exponent, expanded with classically
/// commuting legs; requires a graded exponent.
std::vector<std::pair<Op, Op>> expand_normal_ordered(const TwistFactor& f, int order,
                                                     const VtPtr& vt, int pvec) {
    for (const auto& [L, R] : f.letters)
        if (!L.is_zero() && !R.is_zero() &&
            op_min_def_degree(L) + op_min_def_degree(R) < 1)
            throw DomainError("normal-ordered twist exponent must be graded");
    std::vector<std::pair<Op, Op>> out;
    out.emplace_back(Op::identity(vt, order, pvec), Op::identity(vt, order, pvec));
    std::vector<std::pair<Op, Op>> power = out;
    for (int m = 1; m <= order; ++m) {
        std::vector<std::pair<Op, Op>> next;
        EC inv_m = EC(Rat(1, m));
        for (const auto& [pl, pr] : power)
            for (const auto& [L, R] : f.letters) {
                Op nl = comm_op_mul(pl, L) * inv_m;
                Op nr = comm_op_mul(pr, R);
                if (nl.is_zero() || nr.is_zero()) continue;
                next.emplace_back(std::move(nl), std::move(nr));
            }
        if (next.empty()) break;
        out.insert(out.end(), next.begin(), next.end());
        power = std::move(next);
    }
    return out;
}

State apply_factor(const TwistFactor& f, const State& st, int right_p_cap) {
    if (st.empty()) return st;
    const auto& vt = st[0].first.table_ptr();
    int order = st[0].first.order();
    int pvec = st[0].second.pvec();
    if (f.normal_ordered) {
        auto pairs = expand_normal_ordered(f, order, vt, pvec);
        State out;
        for (const auto& [poly, op] : st)
            for (const auto& [L, R] : pairs) {
                XSeries p2 = fock_apply(L, poly);
                if (p2.is_zero()) continue;
                Op o2 = op_multiply(R, op);
                if (o2.is_zero()) continue;
                out.emplace_back(std::move(p2), std::move(o2));
            }
        return out;
    }
    ExpMode mode = classify_factor(f);
    int bound = 0;
    int max_deg = 0;
    for (const auto& [poly, op] : st) max_deg = std::max(max_deg, poly.x_degree());
    switch (mode) {
        case ExpMode::Graded: bound = order + 1; break;
        case ExpMode::LeftLowers: bound = max_deg + 1; break;
        case ExpMode::RightRaises:
            bound = (right_p_cap >= 0 ? right_p_cap : order) + 1;
            break;
    }
    int cap = (mode == ExpMode::RightRaises)
                  ? (right_p_cap >= 0 ? right_p_cap : order)
                  : right_p_cap;
    State total = st;
    State cur = st;
    for (int m = 1; m <= bound && !cur.empty(); ++m) {
        cur = apply_letters(f.letters, cur, cap);
        for (auto& [poly, op] : cur) poly = poly * EC(Rat(1, m));
        total.insert(total.end(), cur.begin(), cur.end());
    }
    if (!cur.empty())
        throw DomainError("twist exponential failed to terminate within its bound");
    return total;
}

State run_twist(const TwistOperator& t, const XSeries& first_slot, const Op& init_op,
                int right_p_cap) {
    State st;
    st.emplace_back(first_slot, init_op);
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it)
        st = apply_factor(*it, st, right_p_cap);
    return st;
}

} // namespace

XSeries twist_apply(const TwistOperator& t, const XSeries& f, const XSeries& g) {
    if (f.table() != g.table()) throw StructuralError("twist slots over different tables");
    const auto& vt = f.table_ptr();
    int order = f.order();
    int pvec = t.factors.empty() || t.factors[0].letters.empty()
                   ? 0
                   : t.factors[0].letters[0].first.pvec();
    auto st = run_twist(t, f, Op::identity(vt, order, pvec), -1);
    XSeries out = XSeries::zero(vt, order);
    for (const auto& [poly, op] : st) out += poly * fock_apply(op, g);
    return out;
}

Op realization_from_twist(const TwistOperator& t, int mu, int right_p_cap) {
    if (t.factors.empty() || t.factors[0].letters.empty())
        throw StructuralError("empty twist");
    const Op& sample = t.factors[0].letters[0].first;
    const auto& vt = sample.table_ptr();
    int order = sample.order();
    int pvec = sample.pvec();
    auto st = run_twist(t, XSeries::x(vt, order, mu), Op::identity(vt, order, pvec),
                        right_p_cap);
    Op out(vt, order, pvec);
    for (const auto& [poly, op] : st)
        out += op_multiply(embed_multiplier(poly, pvec), op);
    return out;
}

TwistOperator weyl_twist_inverse(const Realization& r) {
    const auto& vt = r.table_ptr();
    int order = r.order();
    int pv = r.pvec();
    TwistFactor f1, f2;
    for (int al = 0; al < vt->dim(); ++al) {
        EC mi = EC(Rat(0), Rat(-vt->eta(al)));
        EC pi = EC(Rat(0), Rat(vt->eta(al)));
        f1.letters.emplace_back(Op::p(vt, order, pv, al) * mi, Op::x(vt, order, pv, al));
        f2.letters.emplace_back(Op::p(vt, order, pv, al) * pi, r.xhat(al));
    }
    return TwistOperator{{f1, f2}};
}

TwistOperator opposite_twist_inverse(const Realization& yhat) {
    const auto& vt = yhat.table_ptr();
    int order = yhat.order();
    int pv = yhat.pvec();
    TwistFactor f1, f2;
    for (int al = 0; al < vt->dim(); ++al) {
        EC mi = EC(Rat(0), Rat(-vt->eta(al)));
        EC pi = EC(Rat(0), Rat(vt->eta(al)));
        f1.letters.emplace_back(Op::x(vt, order, pv, al) * mi, Op::p(vt, order, pv, al));
        f2.letters.emplace_back(yhat.xhat(al) * pi, Op::p(vt, order, pv, al));
    }
    return TwistOperator{{f1, f2}};
}

TwistOperator graded_twist(std::vector<std::pair<Op, Op>> letters) {
    TwistFactor f;
    f.letters = std::move(letters);
    return TwistOperator{{f}};
}

TwistOperator normal_ordered_twist_inverse(const Coproduct& cop, const Realization& r) {
    const auto& rvt = r.table_ptr();
    const auto& cvt = cop.table_ptr();
    int n = rvt->dim();
    int order = r.order();
    int pv = r.pvec();
    TwistFactor f;
    f.normal_ordered = true;
    // i (1 (x) x_a)(Delta - Delta_0)(p_a), eta-contracted over a
    for (int al = 0; al < n; ++al) {
        Series delta = cop.comp.at(al);
        delta -= Series::momentum(cvt, order, 0, al);
        delta -= Series::momentum(cvt, order, 1, al);
        for (const auto& [e, c] : delta.terms()) {
            // left leg: pL part; right leg: x_al times pR part
            Series left = Series::one(rvt, order);
            Series right = Series::one(rvt, order);
            for (int m = 0; m < n; ++m) {
                for (int k = 0; k < e[cvt->vector_var(0, m)]; ++k)
                    left = left * Series::momentum(rvt, order, pv, m);
                for (int k = 0; k < e[cvt->vector_var(1, m)]; ++k)
                    right = right * Series::momentum(rvt, order, pv, m);
            }
            for (int j = 0; j < cvt->deform_count(); ++j)
                for (int k = 0; k < e[cvt->deform_var(j)]; ++k)
                    left = left * Series::deform(rvt, order, j);
            Op L(rvt, order, pv);
            L.add_term(XExpo(n, 0), left * c * EC(Rat(0), Rat(rvt->eta(al))));
            Op R(rvt, order, pv);
            XExpo xe(n, 0);
            xe[al] = 1;
            R.add_term(xe, right);
            f.letters.emplace_back(std::move(L), std::move(R));
        }
    }
    return TwistOperator{{f}};
}

// ---------------------------------------------------------------------------
// ln F over the two-leg calculus with momentum left legs
// ---------------------------------------------------------------------------

namespace {

// left p-monomial exponent -> right operator
using PLeg = std::map<std::vector<int>, Op>;

void pleg_add(PLeg& into, const std::vector<int>& key, const Op& op) {
    if (op.is_zero()) return;
    auto [it, fresh] = into.emplace(key, op);
    if (!fresh) {
        it->second += op;
        if (it->second.is_zero()) into.erase(it);
    }
}

PLeg pleg_add(const PLeg& a, const PLeg& b) {
    PLeg out = a;
    for (const auto& [k, op] : b) pleg_add(out, k, op);
    return out;
}

PLeg pleg_scale(const PLeg& a, const EC& c) {
    PLeg out;
    for (const auto& [k, op] : a) {
        Op s = op * c;
        if (!s.is_zero()) out.emplace(k, s);
    }
    return out;
}

PLeg pleg_mul(const PLeg& a, const PLeg& b) {
    PLeg out;
    for (const auto& [ka, oa] : a)
        for (const auto& [kb, ob] : b) {
            std::vector<int> k(ka.size());
            for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            pleg_add(out, k, op_multiply(oa, ob));
        }
    return out;
}

PLeg pleg_comm(const PLeg& a, const PLeg& b) {
    return pleg_add(pleg_mul(a, b), pleg_scale(pleg_mul(b, a), EC(Rat(-1))));
}

bool pleg_zero(const PLeg& a) { return a.empty(); }

} // namespace

LnTwistReport ln_twist_check(const StructureConstants& C) {
    int n = C.dim();
    int order = 2; // the closed reference exists through second order
    auto r = weyl_realization(C, order);
    const auto& vt = r.table_ptr();
    int pv = r.pvec();

    auto leg = [&](int mu) {
        std::vector<int> k(n, 0);
        k[mu] = 1;
        return k;
    };

    // Y = i eta_a p_a (x) x_a ; Z = -i eta_b p_b (x) (xhat_b - x_b)
    PLeg Y, Z;
    for (int al = 0; al < n; ++al) {
        pleg_add(Y, leg(al), Op::x(vt, order, pv, al) * EC(Rat(0), Rat(vt->eta(al))));
        Op diff = r.xhat(al) - Op::x(vt, order, pv, al);
        pleg_add(Z, leg(al), diff * EC(Rat(0), Rat(-vt->eta(al))));
    }

    // graded BCH for ln(e^{-Y+Z} e^{Y}) through terms that can reach
    // second order; length-4 words are computed and must vanish here
    PLeg ZY = pleg_comm(Z, Y);
    PLeg f = pleg_add(Z, pleg_scale(ZY, EC(Rat(1, 2))));
    PLeg YYZ = pleg_comm(Y, pleg_comm(Y, Z));
    f = pleg_add(f, pleg_scale(YYZ, EC(Rat(1, 6))));
    PLeg ZZY = pleg_comm(Z, ZY);
    f = pleg_add(f, pleg_scale(ZZY, EC(Rat(1, 12))));
    PLeg H4 = pleg_comm(Y, pleg_add(YYZ, ZZY));

    LnTwistReport rep;
    if (!pleg_zero(H4)) {
        rep.detail = "length-4 bracket words unexpectedly nonzero at order 2";
        return rep;
    }

    // reference: f_ref = -i eta_a p_a (x) [ (1/2) x_b (lC)_{ab} +
    //   (1/12) x_b (lC)^2_{ab} ]  -  (i/24) eta_a eta_b p_a p_b (x)
    //   x_g (lC)_{bd} C_{dag} l   (all pair contractions carrying eta)
    Series l = Series::deform(vt, order);
    auto lc = mat_scale(c_matrix(C, vt, order, pv), l);
    auto lc2 = eta_mat_mul(lc, lc);
    PLeg ref;
    for (int al = 0; al < n; ++al) {
        Op right(vt, order, pv);
        for (int be = 0; be < n; ++be) {
            XExpo xe(n, 0);
            xe[be] = 1;
            Series s = lc[al][be] * EC(Rat(1, 2)) + lc2[al][be] * EC(Rat(1, 12));
            right.add_term(xe, s * EC(Rat(vt->eta(be))));
        }
        pleg_add(ref, leg(al), right * EC(Rat(0), Rat(-vt->eta(al))));
    }
    for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be) {
            std::vector<int> key(n, 0);
            key[al] += 1;
            key[be] += 1;
            Op right(vt, order, pv);
            for (int ga = 0; ga < n; ++ga) {
                XExpo xe(n, 0);
                xe[ga] = 1;
                Series s = Series::zero(vt, order);
                for (int de = 0; de < n; ++de) {
                    const Rat& cd = C.c(de, al, ga);
                    if (cd == 0) continue;
                    s += lc[be][de] * l *
                         EC(cd * Rat(vt->eta(de)) * Rat(vt->eta(ga)));
                }
                right.add_term(xe, s);
            }
            pleg_add(ref, key,
                     right * EC(Rat(0), Rat(1, 24) * Rat(vt->eta(al) * vt->eta(be))));
        }

    PLeg resid = pleg_add(f, pleg_scale(ref, EC(Rat(-1))));
    rep.ok = pleg_zero(resid);
    if (rep.ok) {
        rep.detail = "ln F matches the second-order expression with "
                     "coefficients 1/2, 1/12, -1/24";
    } else {
        std::string d = "ln F residual:";
        for (const auto& [k, op] : resid) {
            d += "\n  p-exponent (";
            for (size_t i = 0; i < k.size(); ++i)
                d += (i ? "," : "") + std::to_string(k[i]);
            d += "): " + op.text();
        }
        rep.detail = d;
    }
    return rep;
}

} // namespace ncps
