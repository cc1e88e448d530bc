#pragma once

#include "star.hpp"

#include <functional>

namespace ncps::testutil {

using CEntry = std::function<Series(int, int, int)>; // (alpha, mu, nu) -> C_{alpha mu nu}

inline SeriesMatrix cmat_of(const CEntry& entry, const VtPtr& vt, int order, int vec) {
    int n = vt->dim();
    SeriesMatrix m(n, std::vector<Series>(n, Series::zero(vt, order)));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            Series s = Series::zero(vt, order);
            for (int al = 0; al < n; ++al)
                s += entry(al, mu, nu) * Series::momentum(vt, order, vec, al) *
                     EC(Rat(vt->eta(al)));
            m[mu][nu] = s;
        }
    return m;
}

inline std::vector<Series> row_contract(const std::vector<Series>& v, const SeriesMatrix& m) {
    int n = static_cast<int>(v.size());
    const auto& vt = v[0].table_ptr();
    std::vector<Series> out(n, Series::zero(vt, v[0].order()));
    for (int nu = 0; nu < n; ++nu) {
        Series s = Series::zero(vt, v[0].order());
        for (int mu = 0; mu < n; ++mu) s += v[mu] * m[mu][nu] * EC(Rat(vt->eta(mu)));
        out[nu] = s;
    }
    return out;
}

/// The displayed third-order deformed addition: k + q + (l/2) kC(q)
/// + (l^2/12)[k C(q)^2 + q C(k)^2] - (l^3/48)[k C(q)^2 C(k) - q C(k)^2 C(q)].
inline std::vector<Series> third_order_reference(const CEntry& entry, const VtPtr& vt,
                                                 int order) {
    int n = vt->dim();
    Series l = Series::deform(vt, order);
    std::vector<Series> k(n), q(n);
    for (int mu = 0; mu < n; ++mu) {
        k[mu] = Series::momentum(vt, order, 0, mu);
        q[mu] = Series::momentum(vt, order, 1, mu);
    }
    auto Cq = cmat_of(entry, vt, order, 1);
    auto Ck = cmat_of(entry, vt, order, 0);
    auto kCq = row_contract(k, Cq);
    auto kCq2 = row_contract(kCq, Cq);
    auto qCk = row_contract(q, Ck);
    auto qCk2 = row_contract(qCk, Ck);
    auto kCq2Ck = row_contract(kCq2, Ck);
    auto qCk2Cq = row_contract(qCk2, Cq);
    Series l2 = l * l, l3 = l2 * l;
    std::vector<Series> out(n, Series());
    for (int mu = 0; mu < n; ++mu) {
        out[mu] = k[mu] + q[mu] + l * kCq[mu] * EC(Rat(1, 2)) +
                  l2 * (kCq2[mu] + qCk2[mu]) * EC(Rat(1, 12)) -
                  l3 * (kCq2Ck[mu] - qCk2Cq[mu]) * EC(Rat(1, 48));
    }
    return out;
}

inline CEntry rational_entries(const StructureConstants& C, const VtPtr& vt, int order) {
    return [&C, vt, order](int al, int mu, int nu) {
        return Series::constant(vt, order, EC(C.c(al, mu, nu)));
    };
}

inline int vec_degree(const VariableTable& vt, const Expo& e, int vec) {
    int d = 0;
    for (int mu = 0; mu < vt.dim(); ++mu) d += e[vt.vector_var(vec, mu)];
    return d;
}

} // namespace ncps::testutil
