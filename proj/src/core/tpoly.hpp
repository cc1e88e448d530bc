#pragma once

#include "series.hpp"

#include <map>

namespace ncps {

/// Polynomial in one formal integration parameter (the ODE flow time) with
/// truncated-series coefficients; supports the exact order-by-order
/// integration used by the perturbative solvers.
struct TPoly {
    std::map<int, Series> c;

    static TPoly zero() { return {}; }
    static TPoly constant(Series s) {
        TPoly p;
        if (!s.is_zero()) p.c.emplace(0, std::move(s));
        return p;
    }

    bool is_zero() const { return c.empty(); }

    TPoly& add(int deg, const Series& s) {
        if (s.is_zero()) return *this;
        auto [it, fresh] = c.emplace(deg, s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero()) c.erase(it);
        }
        return *this;
    }

    TPoly& operator+=(const TPoly& o) {
        for (const auto& [d, s] : o.c) add(d, s);
        return *this;
    }
    friend TPoly operator+(TPoly a, const TPoly& b) { a += b; return a; }

    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        TPoly out;
        for (const auto& [da, sa] : a.c)
            for (const auto& [db, sb] : b.c) {
                Series s = sa * sb;
                if (!s.is_zero()) out.add(da + db, s);
            }
        return out;
    }
    friend TPoly operator*(const TPoly& a, const Series& s) {
        TPoly out;
        for (const auto& [d, t] : a.c) {
            Series v = t * s;
            if (!v.is_zero()) out.add(d, v);
        }
        return out;
    }
    friend TPoly operator*(const TPoly& a, const EC& cst) {
        TPoly out;
        for (const auto& [d, t] : a.c) {
            Series v = t * cst;
            if (!v.is_zero()) out.add(d, v);
        }
        return out;
    }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c == b.c; }

    /// definite integral from 0: t^d -> t^{d+1}/(d+1)
    TPoly integrated() const {
        TPoly out;
        for (const auto& [d, s] : c) out.add(d + 1, s * EC(Rat(1, d + 1)));
        return out;
    }

    Series at_one(const VtPtr& vt, int order) const {
        Series out = Series::zero(vt, order);
        for (const auto& [d, s] : c) out += s;
        return out;
    }

    TPoly truncated(int order) const {
        TPoly out;
        for (const auto& [d, s] : c) {
            Series t = s.truncated(order);
            if (!t.is_zero()) out.add(d, t);
        }
        return out;
    }
};

/// Composes a series with vector-of-TPoly arguments for one momentum
/// vector: every variable (source_vec, mu) is replaced by images[mu]; all
/// other variables are carried over as themselves (tables must agree).
TPoly compose_tpoly(const Series& f, int source_vec, const std::vector<TPoly>& images);

} // namespace ncps
