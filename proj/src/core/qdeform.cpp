#include "qdeform.hpp"

#include <algorithm>
#include <sstream>

namespace ncps {

int LaurentQ::pair_index(int n, int a, int b) {
    if (!(0 <= a && a < b && b < n)) throw StructuralError("bad q pair");
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (i == a && j == b) return idx;
            ++idx;
        }
    throw StructuralError("bad q pair");
}

LaurentQ LaurentQ::one(int n) { return constant(n, Rat(1)); }

LaurentQ LaurentQ::constant(int n, const Rat& c) {
    LaurentQ out(n);
    out.add_term(std::vector<int>(pair_count(n), 0), c);
    return out;
}

LaurentQ LaurentQ::q(int n, int a, int b) {
    if (a == b) return one(n);
    LaurentQ out(n);
    std::vector<int> e(pair_count(n), 0);
    if (a < b) e[pair_index(n, a, b)] = 1;
    else e[pair_index(n, b, a)] = -1;
    out.add_term(e, Rat(1));
    return out;
}

LaurentQ& LaurentQ::add_term(const std::vector<int>& e, const Rat& c) {
    if (static_cast<int>(e.size()) != pair_count(n_))
        throw StructuralError("q exponent length mismatch");
    if (c == 0) return *this;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

LaurentQ operator+(const LaurentQ& a, const LaurentQ& b) {
    if (a.n_ != b.n_) throw StructuralError("q arity mismatch");
    LaurentQ out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    if (a.n_ != b.n_) throw StructuralError("q arity mismatch");
    LaurentQ out(a.n_);
    std::vector<int> e(LaurentQ::pair_count(a.n_), 0);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Rat LaurentQ::at_one() const {
    Rat sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

LaurentQ LaurentQ::collapse_single_parameter() const {
    // all pair symbols become one symbol; reuse arity 2 (single pair q12)
    LaurentQ out(2);
    for (const auto& [e, c] : terms_) {
        int total = 0;
        for (int k : e) total += k;
        out.add_term(std::vector<int>{total}, c);
    }
    return out;
}

std::string LaurentQ::text() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const std::vector<int>, Rat>*> items;
    for (const auto& t : terms_) items.push_back(&t);
    std::sort(items.begin(), items.end(),
              [](auto* x, auto* y) { return x->first > y->first; });
    std::ostringstream os;
    bool first = true;
    for (auto* t : items) {
        std::string mono;
        int idx = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j, ++idx) {
                int k = t->first[idx];
                if (k == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "q" + std::to_string(i + 1) + std::to_string(j + 1);
                if (k != 1) mono += "^" + std::to_string(k);
            }
        Rat c = t->second;
        std::string term;
        if (mono.empty()) term = rat_text(c);
        else if (c == 1) term = mono;
        else if (c == -1) term = "-" + mono;
        else term = rat_text(c) + "*" + mono;
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

std::pair<LaurentQ, std::vector<int>> q_word_normal_order(const std::vector<int>& word,
                                                          int n) {
    for (int w : word)
        if (w < 0 || w >= n) throw StructuralError("generator index out of range");
    LaurentQ coeff = LaurentQ::one(n);
    for (size_t k = 0; k < word.size(); ++k)
        for (size_t l = k + 1; l < word.size(); ++l)
            coeff = coeff * LaurentQ::q(n, word[k], word[l]);
    std::vector<int> mono(n, 0);
    for (int w : word) mono[w] += 1;
    return {coeff, mono};
}

LaurentQ q_multinomial(const std::vector<int>& exponents) {
    int n = static_cast<int>(exponents.size());
    std::vector<int> word;
    for (int i = 0; i < n; ++i) {
        if (exponents[i] < 0) throw StructuralError("negative exponent");
        for (int k = 0; k < exponents[i]; ++k) word.push_back(i);
    }
    LaurentQ out = LaurentQ::zero(n);
    if (word.empty()) return LaurentQ::one(n);
    std::sort(word.begin(), word.end());
    do {
        out = out + q_word_normal_order(word, n).first;
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

namespace {

int theta_idx(int dim, int mu, int nu, int ga, int de) {
    return ((mu * dim + nu) * dim + ga) * dim + de;
}

} // namespace

std::vector<QuadraticJacobiViolation> quadratic_jacobi_check(
    int dim, const std::vector<Rat>& dense, std::vector<int> signature) {
    if (static_cast<int>(dense.size()) != dim * dim * dim * dim)
        throw StructuralError("theta tensor has wrong size");
    if (signature.empty()) signature = VariableTable::euclidean(dim);
    auto th = [&](int mu, int nu, int ga, int de) -> const Rat& {
        return dense[theta_idx(dim, mu, nu, ga, de)];
    };
    for (int mu = 0; mu < dim; ++mu)
        for (int nu = 0; nu <= mu; ++nu)
            for (int ga = 0; ga < dim; ++ga)
                for (int de = 0; de < dim; ++de)
                    if (th(mu, nu, ga, de) != -th(nu, mu, ga, de))
                        throw StructuralError(
                            "theta not antisymmetric in the first index pair");
    std::vector<QuadraticJacobiViolation> out;
    for (int mu = 0; mu < dim; ++mu)
        for (int nu = 0; nu < dim; ++nu)
            for (int tau = 0; tau < dim; ++tau)
                for (int rho = 0; rho < dim; ++rho)
                    for (int si = 0; si < dim; ++si)
                        for (int de = 0; de < dim; ++de) {
                            Rat sum = 0;
                            for (int ga = 0; ga < dim; ++ga) {
                                Rat eta = signature[ga];
                                sum += eta * (th(mu, nu, ga, de) * th(ga, tau, rho, si) +
                                              th(mu, nu, rho, ga) * th(ga, tau, si, de) +
                                              th(nu, tau, ga, de) * th(ga, mu, rho, si) +
                                              th(nu, tau, rho, ga) * th(ga, mu, si, de) +
                                              th(tau, mu, ga, de) * th(ga, nu, rho, si) +
                                              th(tau, mu, rho, ga) * th(ga, nu, si, de));
                            }
                            if (sum != 0)
                                out.push_back({mu, nu, tau, rho, si, de, sum});
                        }
    return out;
}

int quadratic_relation_rank(int dim, const std::vector<Rat>& dense,
                            const std::vector<int>& signature) {
    // rows: relations for mu < nu over the basis e_g (x) e_d of T^2
    std::vector<std::vector<Rat>> rows;
    auto sig = signature.empty() ? VariableTable::euclidean(dim) : signature;
    for (int mu = 0; mu < dim; ++mu)
        for (int nu = mu + 1; nu < dim; ++nu) {
            std::vector<Rat> row(dim * dim, Rat(0));
            row[mu * dim + nu] += 1;
            row[nu * dim + mu] -= 1;
            for (int ga = 0; ga < dim; ++ga)
                for (int de = 0; de < dim; ++de)
                    row[ga * dim + de] -=
                        Rat(sig[ga]) * Rat(sig[de]) *
                        dense[theta_idx(dim, mu, nu, ga, de)];
            rows.push_back(std::move(row));
        }
    // exact Gaussian elimination
    int rank = 0;
    size_t cols = dim * dim;
    for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) { pivot = static_cast<int>(r); break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
            Rat factor = rows[r][col] / rows[rank][col];
            for (size_t c2 = 0; c2 < cols; ++c2) rows[r][c2] -= factor * rows[rank][c2];
        }
        ++rank;
    }
    return rank;
}

QuadraticStructure::QuadraticStructure(int dim, std::vector<Rat> dense,
                                       std::vector<int> signature)
    : dim_(dim), sig_(signature.empty() ? VariableTable::euclidean(dim)
                                        : std::move(signature)),
      t_(std::move(dense)) {
    if (static_cast<int>(t_.size()) != dim * dim * dim * dim)
        throw StructuralError("theta tensor has wrong size");
    nondegenerate_ = quadratic_relation_rank(dim_, t_, sig_) == dim_ * (dim_ - 1) / 2;
}

const Rat& QuadraticStructure::theta(int mu, int nu, int ga, int de) const {
    return t_[theta_idx(dim_, mu, nu, ga, de)];
}

QuadraticStructure QuadraticStructure::validated(int dim, std::vector<Rat> dense,
                                                 std::vector<int> signature) {
    auto violations = quadratic_jacobi_check(dim, dense, signature);
    if (!violations.empty()) {
        const auto& v = violations.front();
        throw DomainError("quadratic Jacobi identity fails at (" + std::to_string(v.mu) +
                          "," + std::to_string(v.nu) + "," + std::to_string(v.tau) +
                          ";" + std::to_string(v.rho) + "," + std::to_string(v.sigma) +
                          "," + std::to_string(v.delta) + ")");
    }
    return QuadraticStructure(dim, std::move(dense), std::move(signature));
}

namespace {

std::vector<std::string> pair_symbols(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
    return out;
}

/// the graded symbol series for a_{alpha beta} (antisymmetric in the indices)
Series a_symbol(const VtPtr& vt, int order, const std::vector<std::vector<Rat>>& a,
                int al, int be) {
    int n = vt->dim();
    if (al == be || a[al][be] == 0) return Series::zero(vt, order);
    int idx = LaurentQ::pair_index(n, std::min(al, be), std::max(al, be));
    Series s = Series::deform(vt, order, idx);
    return s * EC(a[al][be]);
}

} // namespace

Realization dilation_realization(const std::vector<std::vector<Rat>>& a, int order) {
    int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw StructuralError("dilation matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j] != -a[j][i])
                throw StructuralError("dilation matrix is not antisymmetric");
    auto vt = VariableTable::make(n, {"p"}, pair_symbols(n), VariableTable::euclidean(n));
    std::vector<Op> xhat;
    for (int al = 0; al < n; ++al) {
        // exponent E = i sum_b a_{al b} D_b with D_b = x_b p_b
        Op E(vt, order, 0);
        for (int be = 0; be < n; ++be) {
            Series coef = a_symbol(vt, order, a, al, be);
            if (coef.is_zero()) continue;
            XExpo xe(n, 0);
            xe[be] = 1;
            E.add_term(xe, Series::momentum(vt, order, 0, be) * coef * EC::i());
        }
        Op expE = Op::identity(vt, order, 0);
        Op term = expE;
        for (int m = 1; m <= order; ++m) {
            term = op_multiply(term, E) * EC(Rat(1, m));
            if (term.is_zero()) break;
            expE += term;
        }
        xhat.push_back(op_multiply(Op::x(vt, order, 0, al), expE));
    }
    return Realization(std::move(xhat), RealKind::QuadraticInX, "dilation-twist");
}

Series dilation_q_squared(const Realization& r, const std::vector<std::vector<Rat>>& a,
                          int alpha, int beta) {
    const auto& vt = r.table_ptr();
    Series arg = a_symbol(vt, r.order(), a, alpha, beta) * EC(Rat(2));
    return arg.exp();
}

TwistOperator dilation_twist_inverse(const Realization& r,
                                     const std::vector<std::vector<Rat>>& a) {
    const auto& vt = r.table_ptr();
    int n = vt->dim();
    int order = r.order();
    std::vector<std::pair<Op, Op>> letters;
    for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be) {
            Series coef = a_symbol(vt, order, a, al, be);
            if (coef.is_zero()) continue;
            XExpo xa(n, 0), xb(n, 0);
            xa[al] = 1;
            xb[be] = 1;
            Op L(vt, order, 0);
            L.add_term(xa, Series::momentum(vt, order, 0, al) * (-coef));
            Op R(vt, order, 0);
            R.add_term(xb, Series::momentum(vt, order, 0, be));
            letters.emplace_back(std::move(L), std::move(R));
        }
    return graded_twist(std::move(letters));
}

Realization generalized_weyl_first_order(const QuadraticStructure& th, int order) {
    int n = th.dim();
    auto vt = VariableTable::make(n, {"p"}, {"l"}, th.signature());
    Series l = Series::deform(vt, order);
    std::vector<Op> xhat;
    for (int mu = 0; mu < n; ++mu) {
        Op op = Op::x(vt, order, 0, mu);
        // (i/2) theta_{mu g b a} x_a x_b p_g, each contracted pair carrying
        // one metric factor
        for (int ga = 0; ga < n; ++ga)
            for (int be = 0; be < n; ++be)
                for (int al = 0; al < n; ++al) {
                    const Rat& t = th.theta(mu, ga, be, al);
                    if (t == 0) continue;
                    XExpo xe(n, 0);
                    xe[al] += 1;
                    xe[be] += 1;
                    Rat etas = Rat(vt->eta(ga) * vt->eta(be) * vt->eta(al));
                    op.add_term(xe, Series::momentum(vt, order, 0, ga) * l *
                                        EC(Rat(0), Rat(1, 2) * t * etas));
                }
        xhat.push_back(std::move(op));
    }
    return Realization(std::move(xhat), RealKind::QuadraticInX, "generalized-weyl");
}

} // namespace ncps
