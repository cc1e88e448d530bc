#include "series.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace ncps {

std::string rat_text(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rat rat_parse(const std::string& s) {
    auto bad = [&] { throw StructuralError("bad rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(boost::multiprecision::cpp_int(s));
        }
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::exception&) {
        bad();
    }
    return Rat(0);
}

std::string EC::text() const {
    if (im_ == 0) return rat_text(re_);
    std::string im_part = rat_text(im_) + "*i";
    if (re_ == 0) return im_part;
    std::string out = "(" + rat_text(re_);
    if (im_ > 0) out += "+";
    return out + im_part + ")";
}

VariableTable::VariableTable(int dim, std::vector<std::string> vector_symbols,
                             std::vector<std::string> deform_symbols,
                             std::vector<int> signature,
                             std::vector<std::string> scalar_symbols)
    : dim_(dim), vectors_(std::move(vector_symbols)),
      scalars_(std::move(scalar_symbols)),
      deforms_(std::move(deform_symbols)), sig_(std::move(signature)) {
    if (dim_ <= 0) throw StructuralError("dimension must be positive");
    if (sig_.empty()) sig_ = minkowski(dim_);
    if (static_cast<int>(sig_.size()) != dim_)
        throw StructuralError("signature length does not match dimension");
    for (int s : sig_)
        if (s != 1 && s != -1) throw StructuralError("metric entries must be +1 or -1");
    std::vector<std::string> all = vectors_;
    all.insert(all.end(), scalars_.begin(), scalars_.end());
    all.insert(all.end(), deforms_.begin(), deforms_.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw StructuralError("duplicate variable symbol");
    for (const auto& s : all)
        if (s.empty()) throw StructuralError("empty variable symbol");
}

VtPtr VariableTable::make(int dim, std::vector<std::string> vector_symbols,
                          std::vector<std::string> deform_symbols,
                          std::vector<int> signature,
                          std::vector<std::string> scalar_symbols) {
    return std::make_shared<const VariableTable>(
        dim, std::move(vector_symbols), std::move(deform_symbols), std::move(signature),
        std::move(scalar_symbols));
}

std::vector<int> VariableTable::minkowski(int dim) {
    std::vector<int> s(dim, 1);
    s[0] = -1;
    return s;
}

std::vector<int> VariableTable::euclidean(int dim) { return std::vector<int>(dim, 1); }

int VariableTable::vector_var(int v, int mu) const {
    if (v < 0 || v >= vector_count() || mu < 0 || mu >= dim_)
        throw StructuralError("momentum variable out of range");
    return v * dim_ + mu;
}

int VariableTable::scalar_var(int j) const {
    if (j < 0 || j >= scalar_count())
        throw StructuralError("scalar symbol out of range");
    return dim_ * vector_count() + j;
}

int VariableTable::deform_var(int j) const {
    if (j < 0 || j >= deform_count())
        throw StructuralError("deformation symbol out of range");
    return deform_base() + j;
}

std::pair<int, int> VariableTable::vector_of(int var) const {
    if (var < 0 || var >= dim_ * vector_count())
        throw StructuralError("not a momentum variable");
    return {var / dim_, var % dim_};
}

int VariableTable::vector_index(const std::string& symbol) const {
    for (int v = 0; v < vector_count(); ++v)
        if (vectors_[v] == symbol) return v;
    return -1;
}

std::string VariableTable::var_name(int var) const {
    if (is_deform_var(var)) return deforms_.at(var - deform_base());
    if (var >= dim_ * vector_count()) return scalars_.at(var - dim_ * vector_count());
    auto [v, mu] = vector_of(var);
    return vectors_[v] + std::to_string(mu);
}

int expo_total(const Expo& e) {
    int t = 0;
    for (int x : e) t += x;
    return t;
}

Series::Series(VtPtr vt, int order) : vt_(std::move(vt)), order_(order) {
    if (!vt_) throw StructuralError("series without variable table");
    if (order_ < 0) throw StructuralError("negative truncation order");
}

Series Series::constant(VtPtr vt, int order, const EC& c) {
    Series s(std::move(vt), order);
    if (!c.is_zero()) s.terms_.emplace(Expo(s.table().var_count(), 0), c);
    return s;
}

Series Series::variable(VtPtr vt, int order, int var) {
    Series s(std::move(vt), order);
    Expo e(s.table().var_count(), 0);
    e.at(var) = 1;
    s.add_term(e, EC(1));
    return s;
}

Series Series::momentum(VtPtr vt, int order, int vec, int mu) {
    int var = vt->vector_var(vec, mu);
    return variable(std::move(vt), order, var);
}

Series Series::deform(VtPtr vt, int order, int j) {
    int var = vt->deform_var(j);
    return variable(std::move(vt), order, var);
}

Series Series::scalar(VtPtr vt, int order, int j) {
    int var = vt->scalar_var(j);
    return variable(std::move(vt), order, var);
}

EC Series::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? EC(0) : it->second;
}

EC Series::constant_term() const { return coeff(Expo(vt_->var_count(), 0)); }

int Series::deform_degree(const Expo& e) const {
    int base = vt_->deform_base();
    int d = 0;
    for (int j = base; j < static_cast<int>(e.size()); ++j) d += e[j];
    return d;
}

int Series::min_deform_degree() const {
    int m = INT_MAX;
    for (const auto& [e, c] : terms_) m = std::min(m, deform_degree(e));
    return m;
}

int Series::max_momentum_degree() const {
    int base = vt_->dim() * vt_->vector_count();
    // scalar symbols are not momentum degrees
    int m = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int j = 0; j < base; ++j) d += e[j];
        m = std::max(m, d);
    }
    return m;
}

Series Series::deform_part(int d) const {
    Series out(vt_, order_);
    for (const auto& [e, c] : terms_)
        if (deform_degree(e) == d) out.terms_.emplace(e, c);
    return out;
}

Series Series::truncated(int new_order) const {
    if (new_order < 0) throw StructuralError("negative truncation order");
    Series out(vt_, new_order);
    for (const auto& [e, c] : terms_)
        if (deform_degree(e) <= new_order) out.terms_.emplace(e, c);
    return out;
}

Series Series::capped(int max_degree) const {
    Series out(vt_, order_);
    for (const auto& [e, c] : terms_)
        if (deform_degree(e) <= max_degree) out.terms_.emplace(e, c);
    return out;
}

Series& Series::add_term(const Expo& e, const EC& c) {
    if (static_cast<int>(e.size()) != vt_->var_count())
        throw StructuralError("exponent length mismatch");
    if (c.is_zero()) return *this;
    if (deform_degree(e) > order_) return *this;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

void Series::check_same_table(const Series& o) const {
    if (!vt_ || !o.vt_) throw StructuralError("uninitialized series");
    if (*vt_ != *o.vt_) throw StructuralError("variable table mismatch");
}

Series Series::operator-() const {
    Series out(vt_, order_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Series& Series::operator+=(const Series& o) {
    check_same_table(o);
    order_ = std::min(order_, o.order_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    // re-truncate in case our own order dropped
    std::erase_if(terms_, [&](const auto& t) { return deform_degree(t.first) > order_; });
    return *this;
}

Series& Series::operator-=(const Series& o) {
    check_same_table(o);
    order_ = std::min(order_, o.order_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    std::erase_if(terms_, [&](const auto& t) { return deform_degree(t.first) > order_; });
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    a.check_same_table(b);
    Series out(a.vt_, std::min(a.order_, b.order_));
    Expo e(a.vt_->var_count(), 0);
    for (const auto& [ea, ca] : a.terms_) {
        int da = a.deform_degree(ea);
        if (da > out.order_) continue;
        for (const auto& [eb, cb] : b.terms_) {
            if (da + b.deform_degree(eb) > out.order_) continue;
            for (size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Series operator*(const Series& a, const EC& c) {
    Series out(a.vt_, a.order_);
    if (c.is_zero()) return out;
    for (const auto& [e, t] : a.terms_) {
        EC v = t * c;
        if (!v.is_zero()) out.terms_.emplace(e, v);
    }
    return out;
}

bool operator==(const Series& a, const Series& b) {
    a.check_same_table(b);
    return a.order_ == b.order_ && a.terms_ == b.terms_;
}

Series Series::exp() const {
    if (!terms_.empty() && min_deform_degree() < 1)
        throw DomainError("series exponential does not terminate: "
                          "argument has deformation degree 0 content");
    Series out = one(vt_, order_);
    Series term = out;
    for (int k = 1; k <= order_; ++k) {
        term = term * *this * EC(Rat(1, k));
        if (term.is_zero()) break;
        out += term;
    }
    return out;
}

Series Series::inverse() const {
    EC c0 = constant_term();
    if (c0.is_zero())
        throw DomainError("series inverse requires an invertible constant term");
    // strictly we also need the non-constant momentum-degree-0 part to be
    // absent unless graded; here all in-scope inverses have unit leading
    // term plus graded remainder, so Neumann iteration in the deformation
    // grading terminates.
    Series r = *this - constant(vt_, order_, c0);
    if (!r.is_zero() && r.min_deform_degree() < 1)
        throw DomainError("series inverse requires graded non-constant part");
    EC inv0 = EC(1) / c0;
    Series out = constant(vt_, order_, inv0);
    Series term = out;
    for (int k = 1; k <= order_; ++k) {
        term = term * r * inv0;
        if (term.is_zero()) break;
        if (k % 2 == 1) out -= term;
        else out += term;
    }
    return out;
}

Series Series::derivative(int var) const {
    Series out(vt_, order_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo e2 = e;
        e2[var] -= 1;
        out.add_term(e2, c * EC(Rat(e[var])));
    }
    return out;
}

Series Series::substitute(const VtPtr& target, const std::vector<Series>& images) const {
    if (static_cast<int>(images.size()) != vt_->var_count())
        throw StructuralError("substitute: image count mismatch");
    int out_order = order_;
    for (const auto& im : images) out_order = std::min(out_order, im.order());
    Series out(target, out_order);
    // memoized powers per variable
    std::vector<std::vector<Series>> powers(images.size());
    auto power = [&](int var, int k) -> const Series& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Series::one(target, out_order));
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back(cache.back() * images[var]);
        return cache[k];
    };
    for (const auto& [e, c] : terms_) {
        Series term = Series::constant(target, out_order, c);
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            term = term * power(static_cast<int>(v), e[v]);
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

Series Series::rename(const VtPtr& target, const std::vector<int>& var_map) const {
    if (static_cast<int>(var_map.size()) != vt_->var_count())
        throw StructuralError("rename: map length mismatch");
    Series out(target, order_);
    Expo e2(target->var_count(), 0);
    for (const auto& [e, c] : terms_) {
        std::fill(e2.begin(), e2.end(), 0);
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            e2.at(var_map[v]) += e[v];
        }
        out.add_term(e2, c);
    }
    return out;
}

Series Series::set_vector_zero(int vec) const {
    Series out(vt_, order_);
    for (const auto& [e, c] : terms_) {
        bool kill = false;
        for (int mu = 0; mu < vt_->dim(); ++mu)
            if (e[vt_->vector_var(vec, mu)] != 0) { kill = true; break; }
        if (!kill) out.terms_.emplace(e, c);
    }
    return out;
}

std::string Series::text() const {
    if (terms_.empty()) return "0";
    // canonical ordering: (deformation degree, lexicographic exponent)
    std::vector<const std::pair<const Expo, EC>*> items;
    items.reserve(terms_.size());
    for (const auto& t : terms_) items.push_back(&t);
    std::stable_sort(items.begin(), items.end(), [&](auto* a, auto* b) {
        int da = deform_degree(a->first), db = deform_degree(b->first);
        if (da != db) return da < db;
        return a->first < b->first;
    });
    std::ostringstream os;
    bool first = true;
    int base = vt_->deform_base();
    for (auto* t : items) {
        std::string coeff = t->second.text();
        std::string mono;
        auto append_var = [&](int v) {
            int k = t->first[v];
            if (k == 0) return;
            if (!mono.empty()) mono += "*";
            mono += vt_->var_name(v);
            if (k > 1) mono += "^" + std::to_string(k);
        };
        // grading symbols first, then momentum and scalar variables in order
        for (int v = base; v < static_cast<int>(t->first.size()); ++v) append_var(v);
        for (int v = 0; v < base; ++v) append_var(v);
        std::string term;
        if (mono.empty()) term = coeff;
        else if (coeff == "1") term = mono;
        else if (coeff == "-1") term = "-" + mono;
        else term = coeff + "*" + mono;
        if (first) {
            os << term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            os << " - " << term.substr(1);
        } else {
            os << " + " << term;
        }
    }
    return os.str();
}

Series eta_dot(const std::vector<Series>& a, const std::vector<Series>& b,
               const std::vector<int>& sig) {
    if (a.size() != b.size() || a.size() != sig.size())
        throw StructuralError("eta_dot: length mismatch");
    Series out = Series::zero(a.at(0).table_ptr(), a.at(0).order());
    for (size_t m = 0; m < a.size(); ++m)
        out += a[m] * b[m] * EC(Rat(sig[m]));
    return out;
}

SeriesMatrix eta_identity_matrix(const VtPtr& vt, int order) {
    int n = vt->dim();
    SeriesMatrix m(n, std::vector<Series>(n, Series::zero(vt, order)));
    for (int i = 0; i < n; ++i)
        m[i][i] = Series::constant(vt, order, EC(Rat(vt->eta(i))));
    return m;
}

SeriesMatrix eta_mat_mul(const SeriesMatrix& a, const SeriesMatrix& b) {
    size_t n = a.size();
    const auto& vt = a.at(0).at(0).table_ptr();
    const auto& sig = vt->signature();
    SeriesMatrix out(n, std::vector<Series>(n, Series::zero(vt, a[0][0].order())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Series s = Series::zero(vt, a[0][0].order());
            for (size_t k = 0; k < n; ++k)
                s += a[i][k] * b[k][j] * EC(Rat(sig[k]));
            out[i][j] = s;
        }
    return out;
}

SeriesMatrix mat_add(const SeriesMatrix& a, const SeriesMatrix& b) {
    SeriesMatrix out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
    return out;
}

SeriesMatrix mat_scale(const SeriesMatrix& a, const Series& s) {
    SeriesMatrix out = a;
    for (auto& row : out)
        for (auto& e : row) e = e * s;
    return out;
}

SeriesMatrix mat_scale(const SeriesMatrix& a, const EC& c) {
    SeriesMatrix out = a;
    for (auto& row : out)
        for (auto& e : row) e = e * c;
    return out;
}

namespace {

Series apply_once(const std::vector<Series>& coeffs, int target_vec, const Series& body) {
    const auto& vt = body.table_ptr();
    Series out = Series::zero(vt, body.order());
    for (int mu = 0; mu < vt->dim(); ++mu) {
        if (coeffs[mu].is_zero()) continue;
        Series d = body.derivative(vt->vector_var(target_vec, mu));
        if (!d.is_zero()) out += coeffs[mu] * d;
    }
    return out;
}

} // namespace

Series apply_diff_operator(const std::vector<Series>& coeffs, int target_vec,
                           const Series& body, int repetitions) {
    if (repetitions < 0) throw StructuralError("negative repetition count");
    Series cur = body;
    for (int r = 0; r < repetitions && !cur.is_zero(); ++r)
        cur = apply_once(coeffs, target_vec, cur);
    return cur;
}

Series apply_diff_operator_exp(const std::vector<Series>& coeffs, int target_vec,
                               const Series& body) {
    const auto& vt = body.table_ptr();
    int order = body.order();
    // The constant (deformation-degree-0) part of each coefficient must not
    // depend on the target vector, otherwise the exponential cannot
    // terminate; graded parts terminate through the truncation order.
    int coeff_target_deg = 0;
    for (int mu = 0; mu < vt->dim(); ++mu) {
        const Series& c = coeffs.at(mu);
        for (const auto& [e, v] : c.terms()) {
            int tdeg = 0;
            for (int nu = 0; nu < vt->dim(); ++nu)
                tdeg += e[vt->vector_var(target_vec, nu)];
            if (c.deform_degree(e) == 0 && tdeg > 0)
                throw DomainError("operator exponential does not terminate: "
                                  "ungraded coefficient depends on the target vector");
            coeff_target_deg = std::max(coeff_target_deg, tdeg);
        }
    }
    // Each application either raises deformation degree or lowers the
    // target-vector degree, so this bound is safe.
    int cap = (order + 1) * (coeff_target_deg + 1) + body.max_momentum_degree() + 2;
    Series out = body;
    Series cur = body;
    for (int k = 1; !cur.is_zero(); ++k) {
        if (k > cap)
            throw DomainError("operator exponential failed to terminate");
        cur = apply_once(coeffs, target_vec, cur) * EC(Rat(1, k));
        out += cur;
    }
    return out;
}

Series substitute_vector(const Series& s, int vec, const std::vector<Series>& images) {
    const auto& vt = s.table_ptr();
    std::vector<Series> all(vt->var_count(), Series());
    for (int v = 0; v < vt->var_count(); ++v) {
        if (!vt->is_deform_var(v)) {
            auto [w, mu] = vt->vector_of(v);
            if (w == vec) {
                all[v] = images.at(mu);
                continue;
            }
        }
        all[v] = Series::variable(vt, s.order(), v);
    }
    return s.substitute(vt, all);
}

std::vector<Series> invert_vector_series(const std::vector<Series>& K, int vec) {
    if (K.empty()) throw StructuralError("empty vector series");
    const auto& vt = K[0].table_ptr();
    int n = vt->dim();
    int order = K[0].order();
    if (static_cast<int>(K.size()) != n)
        throw StructuralError("vector series has wrong component count");
    std::vector<Series> id(n, Series());
    for (int mu = 0; mu < n; ++mu) id[mu] = Series::momentum(vt, order, vec, mu);
    // leading linear part must be the identity
    for (int mu = 0; mu < n; ++mu) {
        Series lead = K[mu].deform_part(0);
        if (!(lead == id[mu]))
            throw DomainError("invert_vector_series: leading part is not the identity");
    }
    // G = k - F(G) with F = K - id carrying deformation degree >= 1
    std::vector<Series> F(n, Series());
    for (int mu = 0; mu < n; ++mu) F[mu] = K[mu] - id[mu];
    std::vector<Series> G = id;
    for (int it = 0; it < order + 1; ++it) {
        std::vector<Series> next(n, Series());
        for (int mu = 0; mu < n; ++mu)
            next[mu] = id[mu] - substitute_vector(F[mu], vec, G);
        if (next == G) break;
        G = next;
    }
    return G;
}

} // namespace ncps
