#include "realization.hpp"

#include <algorithm>

namespace ncps {

TPoly compose_tpoly(const Series& f, int source_vec, const std::vector<TPoly>& images) {
    const auto& vt = f.table_ptr();
    int order = f.order();
    TPoly out;
    for (const auto& [e, c] : f.terms()) {
        // start from the part of the monomial not involving source_vec
        Expo rest = e;
        std::vector<int> m(vt->dim(), 0);
        for (int mu = 0; mu < vt->dim(); ++mu) {
            int v = vt->vector_var(source_vec, mu);
            m[mu] = e[v];
            rest[v] = 0;
        }
        Series base(vt, order);
        base.add_term(rest, c);
        TPoly term = TPoly::constant(base);
        for (int mu = 0; mu < vt->dim() && !term.is_zero(); ++mu)
            for (int r = 0; r < m[mu]; ++r) term = (term * images[mu]).truncated(order);
        out += term;
    }
    return out;
}

Realization::Realization(std::vector<Op> xhat, RealKind kind, std::string source)
    : xhat_(std::move(xhat)), kind_(kind), source_(std::move(source)) {
    if (xhat_.empty()) throw StructuralError("empty realization");
    const auto& vt = xhat_[0].table_ptr();
    if (static_cast<int>(xhat_.size()) != vt->dim())
        throw StructuralError("realization component count != dimension");
    for (int mu = 0; mu < vt->dim(); ++mu) {
        const Op& op = xhat_[mu];
        if (op.table() != *vt) throw StructuralError("realization table mismatch");
        // degree-0 part must be exactly x_mu
        Op lead(vt, op.order(), op.pvec());
        for (const auto& [e, s] : op.terms()) lead.add_term(e, s.deform_part(0));
        if (lead != Op::x(vt, op.order(), op.pvec(), mu))
            throw StructuralError("realization does not reduce to x at degree 0");
        if (kind_ == RealKind::LinearInX) {
            for (const auto& [e, s] : op.terms())
                if (expo_total(e) != 1)
                    throw StructuralError("linear realization has non-linear term");
        }
        if (kind_ == RealKind::Affine) {
            for (const auto& [e, s] : op.terms())
                if (expo_total(e) > 1)
                    throw StructuralError("affine realization has x-degree > 1 term");
        }
    }
}

SeriesMatrix Realization::phi() const {
    if (kind_ == RealKind::QuadraticInX)
        throw DomainError("phi matrix undefined for quadratic realizations");
    const auto& vt = table_ptr();
    int n = dim();
    SeriesMatrix out(n, std::vector<Series>(n, Series::zero(vt, order())));
    for (int mu = 0; mu < n; ++mu) {
        for (const auto& [e, s] : xhat_[mu].terms()) {
            if (expo_total(e) == 0) continue;
            int alpha = -1;
            for (int a = 0; a < n; ++a)
                if (e[a] == 1) alpha = a;
            // stored coefficient of x_alpha is eta_alpha phi_{alpha mu}
            out[alpha][mu] = s * EC(Rat(vt->eta(alpha)));
        }
    }
    return out;
}

std::vector<Series> Realization::chi() const {
    const auto& vt = table_ptr();
    std::vector<Series> out(dim(), Series::zero(vt, order()));
    XExpo unit(vt->dim(), 0);
    for (int mu = 0; mu < dim(); ++mu) {
        auto it = xhat_[mu].terms().find(unit);
        if (it != xhat_[mu].terms().end()) out[mu] = it->second;
    }
    return out;
}

Realization weyl_realization(const StructureConstants& C, int order) {
    int n = C.dim();
    auto vt = VariableTable::make(n, {"p"}, {"l"}, C.signature());
    Series l = Series::deform(vt, order);
    SeriesMatrix lc = mat_scale(c_matrix(C, vt, order, 0), l);
    SeriesMatrix psi = psi_of_matrix(lc, order);
    std::vector<Op> xhat;
    xhat.reserve(n);
    for (int mu = 0; mu < n; ++mu) {
        Op op(vt, order, 0);
        for (int alpha = 0; alpha < n; ++alpha) {
            XExpo e(n, 0);
            e[alpha] = 1;
            op.add_term(e, psi[mu][alpha] * EC(Rat(vt->eta(alpha))));
        }
        xhat.push_back(std::move(op));
    }
    return Realization(std::move(xhat), RealKind::LinearInX, "weyl");
}

CommutatorReport verify_commutators(const Realization& r, const StructureConstants& C) {
    const auto& vt = r.table_ptr();
    int n = r.dim();
    if (C.dim() != n) throw StructuralError("structure constants dimension mismatch");
    int order = r.order();
    Series l = Series::deform(vt, order);
    CommutatorReport rep;
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu) {
            Op lhs = op_commutator(r.xhat(mu), r.xhat(nu));
            Op rhs(vt, order, r.pvec());
            for (int lam = 0; lam < n; ++lam) {
                const Rat& c = C.c(mu, nu, lam);
                if (c == 0) continue;
                rhs += r.xhat(lam) * (l * EC(Rat(0), Rat(vt->eta(lam)) * c));
            }
            Op res = lhs - rhs;
            if (!res.is_zero()) {
                rep.ok = false;
                rep.lines.push_back("[" + std::to_string(mu) + "," + std::to_string(nu) +
                                    "]: " + res.text());
            }
        }
    return rep;
}

KFunction k_function(const Realization& r) {
    if (r.kind() == RealKind::QuadraticInX)
        throw DomainError("k_function is unsupported for quadratic realizations; "
                          "use the Fock action directly");
    const auto& rvt = r.table_ptr();
    int n = r.dim();
    int order = r.order();
    auto kvt = VariableTable::make(n, {"k"}, rvt->deform_symbols(), rvt->signature());

    SeriesMatrix phi = r.phi(); // phi[alpha][mu] over rvt in p
    // move phi entries onto the k-table (the p variables become placeholders
    // to be composed with K(lambda); deformation symbols map across).
    std::vector<int> var_map(rvt->var_count());
    for (int mu = 0; mu < n; ++mu) var_map[rvt->vector_var(0, mu)] = kvt->vector_var(0, mu);
    for (int j = 0; j < rvt->deform_count(); ++j)
        var_map[rvt->deform_var(j)] = kvt->deform_var(j);
    auto on_ktable = [&](const Series& s) { return s.rename(kvt, var_map); };

    std::vector<Series> kvars(n, Series());
    for (int mu = 0; mu < n; ++mu) kvars[mu] = Series::momentum(kvt, order, 0, mu);

    std::vector<TPoly> K(n);
    for (int mu = 0; mu < n; ++mu) K[mu].add(1, kvars[mu]);
    for (int it = 0; it <= order; ++it) {
        std::vector<TPoly> rhs(n);
        for (int mu = 0; mu < n; ++mu) {
            TPoly acc;
            for (int beta = 0; beta < n; ++beta) {
                const Series& phi_mb = phi[mu][beta];
                if (phi_mb.is_zero()) continue;
                TPoly comp = compose_tpoly(on_ktable(phi_mb), 0, K);
                acc += comp * (kvars[beta] * EC(Rat(kvt->eta(beta))));
            }
            rhs[mu] = acc.truncated(order);
        }
        std::vector<TPoly> next(n);
        for (int mu = 0; mu < n; ++mu) next[mu] = rhs[mu].integrated().truncated(order);
        if (next == K) break;
        K = std::move(next);
    }

    KFunction out;
    out.K.reserve(n);
    for (int mu = 0; mu < n; ++mu) out.K.push_back(K[mu].at_one(kvt, order));
    out.L = Series::zero(kvt, order);
    if (r.kind() == RealKind::Affine) {
        auto chi = r.chi();
        TPoly Lacc;
        for (int beta = 0; beta < n; ++beta) {
            if (chi[beta].is_zero()) continue;
            TPoly comp = compose_tpoly(on_ktable(chi[beta]), 0, K);
            Lacc += comp * (kvars[beta] * EC(Rat(kvt->eta(beta))));
        }
        out.L = Lacc.integrated().truncated(order).at_one(kvt, order);
    }
    return out;
}

std::vector<std::pair<Rat, std::vector<int>>> symmetrize(const std::vector<int>& word) {
    if (word.empty()) throw StructuralError("symmetrize requires a nonempty word");
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    // weight of each distinct arrangement: (prod multiplicities!) / N!
    Rat weight = 1;
    int n = static_cast<int>(sorted.size());
    for (int i = 2; i <= n; ++i) weight /= i;
    int run = 1;
    for (size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) { ++run; weight *= run; }
        else run = 1;
    }
    std::vector<std::pair<Rat, std::vector<int>>> out;
    do {
        out.emplace_back(weight, sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

XSeries omega_word(const Realization& r, const std::vector<int>& word) {
    const auto& vt = r.table_ptr();
    XSeries one = XSeries::one(vt, r.order());
    // right-to-left application avoids forming the full operator product
    XSeries cur = one;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = fock_apply(r.xhat(*it), cur);
    return cur;
}

XSeries omega(const Realization& r, const UEl& el) {
    const auto& vt = r.table_ptr();
    XSeries out = XSeries::zero(vt, r.order());
    for (const auto& [word, w] : el) {
        XSeries v = word.empty() ? XSeries::one(vt, r.order()) : omega_word(r, word);
        out += v * w;
    }
    return out;
}

UEl omega_inverse(const Realization& r, const XSeries& f) {
    const auto& vt = r.table_ptr();
    int order = r.order();
    UEl out;
    auto add_word = [&](const std::vector<int>& w, const Series& s) {
        if (s.is_zero()) return;
        auto [it, fresh] = out.emplace(w, s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    XSeries rem = f;
    int guard = 0;
    while (!rem.is_zero()) {
        if (++guard > order + 2)
            throw DomainError("omega_inverse failed to converge: "
                              "realization is not unitriangular in the grading");
        XSeries image = XSeries::zero(vt, order);
        for (const auto& [e, s] : rem.terms()) {
            std::vector<int> word;
            for (int mu = 0; mu < vt->dim(); ++mu)
                for (int k = 0; k < e[mu]; ++k) word.push_back(mu);
            if (word.empty()) {
                add_word(word, s);
                image += XSeries::monomial(vt, order, e) * s;
                continue;
            }
            for (const auto& [wt, perm] : symmetrize(word)) {
                Series v = s * EC(wt);
                add_word(perm, v);
                image += omega_word(r, perm) * v;
            }
        }
        rem -= image;
    }
    return out;
}

XSeries uel_apply(const Realization& r, const UEl& el, const XSeries& g) {
    const auto& vt = r.table_ptr();
    XSeries out = XSeries::zero(vt, r.order());
    for (const auto& [word, w] : el) {
        XSeries cur = g;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = fock_apply(r.xhat(*it), cur);
        out += cur * w;
    }
    return out;
}

} // namespace ncps
