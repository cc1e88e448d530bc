#include "star.hpp"

#include "pbw.hpp"
#include "tpoly.hpp"

namespace ncps {

namespace {

VtPtr kq_table(int n, const std::vector<std::string>& deforms,
               const std::vector<int>& sig) {
    return VariableTable::make(n, {"k", "q"}, deforms, sig);
}

} // namespace

DFunction d_function_ode(const StructureConstants& C, int order) {
    auto vt = kq_table(C.dim(), {"l"}, C.signature());
    return d_function_ode_generic(vt, order, [&C, &vt, order](int al, int mu, int nu) {
        return Series::constant(vt, order, EC(C.c(al, mu, nu)));
    });
}

DFunction d_function_ode_generic(const VtPtr& vt, int order,
                                 const std::function<Series(int, int, int)>& entry) {
    int n = vt->dim();
    Series l = Series::deform(vt, order);
    auto psi_coeffs = bernoulli_psi_coeffs(order);

    std::vector<Series> kvar(n), qvar(n);
    for (int mu = 0; mu < n; ++mu) {
        kvar[mu] = Series::momentum(vt, order, 0, mu);
        qvar[mu] = Series::momentum(vt, order, 1, mu);
    }

    // D(t) with D(0) = q; iterate D -> q + int_0^t k_a psi(lC(D))_{a mu}
    std::vector<TPoly> D(n);
    for (int mu = 0; mu < n; ++mu) {
        D[mu].add(0, qvar[mu]);
        D[mu].add(1, kvar[mu]);
    }
    for (int it = 0; it <= order; ++it) {
        // C(s)_{mu nu} = C_{alpha mu nu} s_alpha (eta-contracted), s = D(t)
        std::vector<std::vector<TPoly>> cs(n, std::vector<TPoly>(n));
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu) {
                TPoly acc;
                for (int al = 0; al < n; ++al) {
                    Series c = entry(al, mu, nu);
                    if (c.is_zero()) continue;
                    acc += (D[al] * c) * EC(Rat(vt->eta(al)));
                }
                cs[mu][nu] = acc.truncated(order);
            }
        // rhs_mu = k_a psi(lC(s))_{a mu} = sum_j psi_j [k (lC)^j]_mu with
        // row recursion [k (lC)^j]_nu = sum_mu eta_mu [k (lC)^{j-1}]_mu (lC)_{mu nu}
        std::vector<TPoly> row(n);
        for (int mu = 0; mu < n; ++mu) row[mu] = TPoly::constant(kvar[mu]);
        std::vector<TPoly> rhs(n);
        for (int mu = 0; mu < n; ++mu) rhs[mu] = row[mu] * EC(psi_coeffs[0]);
        for (int j = 1; j <= order; ++j) {
            std::vector<TPoly> next(n);
            for (int nu = 0; nu < n; ++nu) {
                TPoly acc;
                for (int mu = 0; mu < n; ++mu) {
                    TPoly prod = row[mu] * cs[mu][nu];
                    acc += prod * EC(Rat(vt->eta(mu)));
                }
                next[nu] = (acc * l).truncated(order);
            }
            row = std::move(next);
            if (psi_coeffs[j] == 0) continue;
            for (int mu = 0; mu < n; ++mu) rhs[mu] += row[mu] * EC(psi_coeffs[j]);
        }
        std::vector<TPoly> newD(n);
        for (int mu = 0; mu < n; ++mu) {
            newD[mu] = rhs[mu].integrated().truncated(order);
            newD[mu].add(0, qvar[mu]);
        }
        if (newD == D) break;
        D = std::move(newD);
    }
    DFunction out;
    out.source = "ode-solver";
    for (int mu = 0; mu < n; ++mu) out.D.push_back(D[mu].at_one(vt, order));
    return out;
}

DFunction d_function_diffop(const Realization& r) {
    if (r.kind() != RealKind::LinearInX)
        throw DomainError("d_function_diffop requires a linear-in-x realization");
    int n = r.dim();
    int order = r.order();
    const auto& rvt = r.table_ptr();
    auto vt = kq_table(n, rvt->deform_symbols(), rvt->signature());

    KFunction kf = k_function(r);
    auto kinv = invert_vector_series(kf.K, 0);
    const auto& kvt = kf.K[0].table_ptr();

    // move K^{-1}(k) onto the {k,q} table
    std::vector<int> kmap(kvt->var_count());
    for (int mu = 0; mu < n; ++mu) kmap[kvt->vector_var(0, mu)] = vt->vector_var(0, mu);
    for (int j = 0; j < kvt->deform_count(); ++j)
        kmap[kvt->deform_var(j)] = vt->deform_var(j);
    std::vector<Series> kinv_kq(n, Series());
    for (int mu = 0; mu < n; ++mu) kinv_kq[mu] = kinv[mu].rename(vt, kmap);

    // move phi(p) onto the table with p -> q
    std::vector<int> pmap(rvt->var_count());
    for (int mu = 0; mu < n; ++mu) pmap[rvt->vector_var(0, mu)] = vt->vector_var(1, mu);
    for (int j = 0; j < rvt->deform_count(); ++j)
        pmap[rvt->deform_var(j)] = vt->deform_var(j);
    SeriesMatrix phi = r.phi();

    // coefficient of d/dq_alpha: sum_beta eta_beta Kinv_beta(k) phi_{alpha beta}(q)
    std::vector<Series> coeffs(n, Series());
    for (int al = 0; al < n; ++al) {
        Series acc = Series::zero(vt, order);
        for (int be = 0; be < n; ++be) {
            const Series& f = phi[al][be];
            if (f.is_zero()) continue;
            acc += kinv_kq[be] * f.rename(vt, pmap) * EC(Rat(vt->eta(be)));
        }
        coeffs[al] = acc;
    }

    DFunction out;
    out.source = "diff-operator";
    for (int mu = 0; mu < n; ++mu) {
        Series qmu = Series::momentum(vt, order, 1, mu);
        out.D.push_back(apply_diff_operator_exp(coeffs, 1, qmu));
    }
    return out;
}

DFunction d_function_oracle(const StructureConstants& C, int order) {
    int n = C.dim();
    auto vt = kq_table(n, {"l"}, C.signature());
    PbwAlgebra alg(C, vt, order, order + 1);

    auto letter = [&](int vec) {
        std::vector<Series> v(n, Series());
        for (int mu = 0; mu < n; ++mu)
            v[mu] = Series::momentum(vt, order, vec, mu) *
                    EC(Rat(0), Rat(vt->eta(mu))); // i eta k_mu per component
        return alg.linear(v);
    };

    auto product = alg.mul(alg.exp(letter(0)), alg.exp(letter(1)));
    auto remainder = alg.add(product, alg.scale(alg.one(), EC(Rat(-1))));
    auto lg = alg.log_one_plus(remainder);

    DFunction out;
    out.source = "free-algebra-oracle";
    out.D.assign(n, Series::zero(vt, order));
    for (const auto& [w, s] : lg) {
        if (w.size() != 1)
            throw DomainError("oracle: log of the product is not primitive "
                              "(word length " + std::to_string(w.size()) + ")");
        // log = i eta_mu D_mu xhat_mu summed, so D = -i eta * coefficient
        out.D[w[0]] = s * EC(Rat(0), Rat(-vt->eta(w[0])));
    }
    return out;
}

ResidualReport check_associativity(const DFunction& d) {
    ResidualReport rep;
    auto res = associativity_residual(d);
    for (size_t mu = 0; mu < res.size(); ++mu)
        if (!res[mu].is_zero()) {
            rep.ok = false;
            rep.lines.push_back(std::to_string(mu) + ": " + res[mu].text());
        }
    return rep;
}

std::vector<Series> associativity_residual(const DFunction& d) {
    const auto& vt = d.D.at(0).table_ptr();
    int n = vt->dim();
    int order = d.D[0].order();
    auto vt3 = VariableTable::make(n, {"k1", "k2", "k3"}, vt->deform_symbols(),
                                   vt->signature());
    // images for (k,q) -> (k1,k2) and -> (k2,k3)
    auto subst = [&](const Series& s, const std::vector<Series>& kimg,
                     const std::vector<Series>& qimg) {
        std::vector<Series> images(vt->var_count(), Series());
        for (int mu = 0; mu < n; ++mu) {
            images[vt->vector_var(0, mu)] = kimg[mu];
            images[vt->vector_var(1, mu)] = qimg[mu];
        }
        for (int j = 0; j < vt->deform_count(); ++j)
            images[vt->deform_var(j)] = Series::deform(vt3, order, j);
        return s.substitute(vt3, images);
    };
    std::vector<Series> k1(n), k2(n), k3(n);
    for (int mu = 0; mu < n; ++mu) {
        k1[mu] = Series::momentum(vt3, order, 0, mu);
        k2[mu] = Series::momentum(vt3, order, 1, mu);
        k3[mu] = Series::momentum(vt3, order, 2, mu);
    }
    std::vector<Series> d12(n), d23(n);
    for (int mu = 0; mu < n; ++mu) {
        d12[mu] = subst(d.D[mu], k1, k2);
        d23[mu] = subst(d.D[mu], k2, k3);
    }
    std::vector<Series> out(n, Series());
    for (int mu = 0; mu < n; ++mu)
        out[mu] = subst(d.D[mu], d12, k3) - subst(d.D[mu], k1, d23);
    return out;
}

DFunction d_swap_arguments(const DFunction& d) {
    const auto& vt = d.D.at(0).table_ptr();
    int n = vt->dim();
    std::vector<int> map(vt->var_count());
    for (int mu = 0; mu < n; ++mu) {
        map[vt->vector_var(0, mu)] = vt->vector_var(1, mu);
        map[vt->vector_var(1, mu)] = vt->vector_var(0, mu);
    }
    for (int j = 0; j < vt->deform_count(); ++j) map[vt->deform_var(j)] = vt->deform_var(j);
    DFunction out;
    out.source = d.source + "-swapped";
    for (int mu = 0; mu < n; ++mu) out.D.push_back(d.D[mu].rename(vt, map));
    return out;
}

std::vector<Series> d_at_q_zero(const DFunction& d) {
    std::vector<Series> out;
    for (const auto& s : d.D) out.push_back(s.set_vector_zero(1));
    return out;
}

std::vector<Series> d_at_k_zero(const DFunction& d) {
    std::vector<Series> out;
    for (const auto& s : d.D) out.push_back(s.set_vector_zero(0));
    return out;
}

XSeries star_product(const Realization& r, const XSeries& f, const XSeries& g) {
    UEl fhat = omega_inverse(r, f);
    return uel_apply(r, fhat, g);
}

} // namespace ncps
