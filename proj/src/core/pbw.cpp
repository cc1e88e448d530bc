#include "pbw.hpp"

#include <algorithm>

namespace ncps {

PbwAlgebra::PbwAlgebra(const StructureConstants& C, VtPtr vt, int order, int window)
    : C_(C), vt_(std::move(vt)), order_(order), window_(window) {
    if (vt_->dim() != C_.dim()) throw StructuralError("PBW table dimension mismatch");
}

PbwAlgebra::El PbwAlgebra::one() const {
    El e;
    e.emplace(Word{}, Series::one(vt_, order_));
    return e;
}

PbwAlgebra::El PbwAlgebra::linear(const std::vector<Series>& v) const {
    El e;
    for (int mu = 0; mu < vt_->dim(); ++mu) {
        if (v.at(mu).is_zero()) continue;
        e.emplace(Word{mu}, v[mu]);
    }
    normalize(e);
    return e;
}

void PbwAlgebra::normalize(El& a) const {
    El out;
    for (auto& [w, s] : a) {
        int allowed = std::min(order_, window_ - static_cast<int>(w.size()));
        if (allowed < 0) continue;
        Series t = s.capped(allowed);
        if (t.is_zero()) continue;
        auto [it, fresh] = out.emplace(w, std::move(t));
        if (!fresh) {
            it->second += t;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    a = std::move(out);
}

PbwAlgebra::El PbwAlgebra::add(const El& a, const El& b) const {
    El out = a;
    for (const auto& [w, s] : b) {
        auto [it, fresh] = out.emplace(w, s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

PbwAlgebra::El PbwAlgebra::scale(const El& a, const EC& c) const {
    El out;
    if (c.is_zero()) return out;
    for (const auto& [w, s] : a) {
        Series t = s * c;
        if (!t.is_zero()) out.emplace(w, t);
    }
    return out;
}

bool PbwAlgebra::is_zero(const El& a) const {
    for (const auto& [w, s] : a)
        if (!s.is_zero()) return false;
    return true;
}

const PbwAlgebra::Reduced& PbwAlgebra::reduce(const Word& w) const {
    auto hit = cache_.find(w);
    if (hit != cache_.end()) return hit->second;
    Reduced red;
    // find the first adjacent inversion
    int pos = -1;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) { pos = static_cast<int>(i); break; }
    if (pos < 0) {
        red[w][0] = EC(1);
        return cache_.emplace(w, std::move(red)).first->second;
    }
    int nu = w[pos], mu = w[pos + 1];
    // x_nu x_mu = x_mu x_nu + i l C_{nu mu alpha} x_alpha  (eta-contracted)
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    for (const auto& [w2, powers] : reduce(swapped))
        for (const auto& [lp, c] : powers) {
            auto& slot = red[w2][lp];
            slot += c;
            if (slot.is_zero()) red[w2].erase(lp);
        }
    for (int alpha = 0; alpha < C_.dim(); ++alpha) {
        Rat cval = C_.c(nu, mu, alpha);
        if (cval == 0) continue;
        EC coeff = EC(Rat(0), Rat(vt_->eta(alpha)) * cval); // i eta C
        Word contracted;
        contracted.reserve(w.size() - 1);
        contracted.insert(contracted.end(), w.begin(), w.begin() + pos);
        contracted.push_back(alpha);
        contracted.insert(contracted.end(), w.begin() + pos + 2, w.end());
        for (const auto& [w2, powers] : reduce(contracted))
            for (const auto& [lp, c] : powers) {
                auto& slot = red[w2][lp + 1];
                slot += c * coeff;
                if (slot.is_zero()) red[w2].erase(lp + 1);
            }
    }
    for (auto it = red.begin(); it != red.end();)
        it = it->second.empty() ? red.erase(it) : std::next(it);
    return cache_.emplace(w, std::move(red)).first->second;
}

PbwAlgebra::El PbwAlgebra::mul(const El& a, const El& b) const {
    El out;
    Series lvar = Series::deform(vt_, order_);
    for (const auto& [wa, sa] : a)
        for (const auto& [wb, sb] : b) {
            if (static_cast<int>(wa.size() + wb.size()) > window_) continue;
            Series s = sa * sb;
            if (s.is_zero()) continue;
            Word cat = wa;
            cat.insert(cat.end(), wb.begin(), wb.end());
            for (const auto& [w2, powers] : reduce(cat)) {
                int allowed = std::min(order_, window_ - static_cast<int>(w2.size()));
                if (allowed < 0) continue;
                for (const auto& [lp, c] : powers) {
                    Series t = s * c;
                    for (int j = 0; j < lp; ++j) t = t * lvar;
                    t = t.capped(allowed);
                    if (t.is_zero()) continue;
                    auto [it, fresh] = out.emplace(w2, t);
                    if (!fresh) {
                        it->second += t;
                        if (it->second.is_zero()) out.erase(it);
                    }
                }
            }
        }
    return out;
}

PbwAlgebra::El PbwAlgebra::exp(const El& a) const {
    // terms of a all carry window weight >= 1, so powers terminate
    for (const auto& [w, s] : a)
        if (w.empty() && !s.is_zero() && s.min_deform_degree() < 1)
            throw DomainError("PBW exponential requires a window-graded argument");
    El out = one();
    El term = one();
    for (int m = 1; m <= window_; ++m) {
        term = mul(term, a);
        term = scale(term, EC(Rat(1, m)));
        if (is_zero(term)) break;
        out = add(out, term);
    }
    return out;
}

namespace {

// linear combination of words with (l-power, coefficient) weights
using Lin = std::map<std::vector<int>, std::map<int, EC>>;

void lin_add(Lin& into, const std::vector<int>& w, int lp, const EC& c) {
    if (c.is_zero()) return;
    auto& slot = into[w][lp];
    slot += c;
    if (slot.is_zero()) {
        into[w].erase(lp);
        if (into[w].empty()) into.erase(w);
    }
}

// single rewrite of the pair at `pos` when inverted; identity otherwise
Lin rewrite_at(const StructureConstants& C, const std::vector<int>& w, int pos) {
    Lin out;
    if (pos + 1 >= static_cast<int>(w.size()) || w[pos] <= w[pos + 1]) {
        lin_add(out, w, 0, EC(1));
        return out;
    }
    std::vector<int> swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    lin_add(out, swapped, 0, EC(1));
    for (int alpha = 0; alpha < C.dim(); ++alpha) {
        Rat cval = C.c(w[pos], w[pos + 1], alpha);
        if (cval == 0) continue;
        std::vector<int> contracted(w.begin(), w.begin() + pos);
        contracted.push_back(alpha);
        contracted.insert(contracted.end(), w.begin() + pos + 2, w.end());
        lin_add(out, contracted, 1, EC(Rat(0), Rat(C.signature()[alpha]) * cval));
    }
    return out;
}

// full reduction, resolving the first inversion from the chosen side
Lin reduce_full(const StructureConstants& C, const std::vector<int>& w, bool leftmost) {
    int pos = -1;
    int n = static_cast<int>(w.size());
    if (leftmost) {
        for (int i = 0; i + 1 < n; ++i)
            if (w[i] > w[i + 1]) { pos = i; break; }
    } else {
        for (int i = n - 2; i >= 0; --i)
            if (w[i] > w[i + 1]) { pos = i; break; }
    }
    Lin out;
    if (pos < 0) {
        lin_add(out, w, 0, EC(1));
        return out;
    }
    for (const auto& [w2, powers] : rewrite_at(C, w, pos))
        for (const auto& [lp, c] : powers)
            for (const auto& [w3, powers3] : reduce_full(C, w2, leftmost))
                for (const auto& [lp3, c3] : powers3)
                    lin_add(out, w3, lp + lp3, c * c3);
    return out;
}

} // namespace

std::vector<std::vector<int>> pbw_degree3_violations(const StructureConstants& C) {
    std::vector<std::vector<int>> bad;
    int n = C.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::vector<int> w = {a, b, c};
                if (reduce_full(C, w, true) != reduce_full(C, w, false))
                    bad.push_back(w);
            }
    return bad;
}

PbwAlgebra::El PbwAlgebra::log_one_plus(const El& r) const {
    for (const auto& [w, s] : r)
        if (w.empty() && !s.is_zero() && s.min_deform_degree() < 1)
            throw DomainError("PBW log requires a window-graded argument");
    El out;
    El power = one();
    for (int m = 1; m <= window_; ++m) {
        power = mul(power, r);
        if (is_zero(power)) break;
        out = add(out, scale(power, EC(Rat(m % 2 == 1 ? 1 : -1, m))));
    }
    return out;
}

} // namespace ncps
