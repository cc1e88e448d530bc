#include "lie.hpp"

namespace ncps {

StructureConstants::StructureConstants(int dim, std::vector<int> signature)
    : dim_(dim), sig_(std::move(signature)), c_(dim * dim * dim, Rat(0)) {
    if (dim_ <= 0) throw StructuralError("dimension must be positive");
    if (sig_.empty()) sig_ = VariableTable::minkowski(dim_);
    if (static_cast<int>(sig_.size()) != dim_)
        throw StructuralError("signature length does not match dimension");
}

int StructureConstants::idx(int mu, int nu, int lambda) const {
    if (mu < 0 || nu < 0 || lambda < 0 || mu >= dim_ || nu >= dim_ || lambda >= dim_)
        throw StructuralError("structure constant index out of range");
    return (mu * dim_ + nu) * dim_ + lambda;
}

const Rat& StructureConstants::c(int mu, int nu, int lambda) const {
    return c_[idx(mu, nu, lambda)];
}

void StructureConstants::set(int mu, int nu, int lambda, const Rat& value) {
    if (mu == nu && value != 0)
        throw StructuralError("C_{mu mu lambda} must vanish");
    c_[idx(mu, nu, lambda)] = value;
    c_[idx(nu, mu, lambda)] = -value;
}

bool StructureConstants::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

StructureConstants StructureConstants::validated(int dim, std::vector<int> signature,
                                                 const std::vector<Rat>& dense) {
    auto violations = check_jacobi(dim, signature.empty()
                                            ? VariableTable::minkowski(dim)
                                            : signature,
                                   dense);
    if (!violations.empty()) {
        const auto& v = violations.front();
        throw DomainError("Jacobi identity fails at (mu,nu,tau,lambda)=(" +
                          std::to_string(v.mu) + "," + std::to_string(v.nu) + "," +
                          std::to_string(v.tau) + "," + std::to_string(v.lambda) +
                          "), value " + rat_text(v.value) +
                          (violations.size() > 1
                               ? " (+" + std::to_string(violations.size() - 1) + " more)"
                               : ""));
    }
    StructureConstants out(dim, std::move(signature));
    out.c_ = dense;
    return out;
}

StructureConstants StructureConstants::negated() const {
    StructureConstants out(dim_, sig_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

std::vector<JacobiViolation> check_jacobi(int dim, const std::vector<int>& signature,
                                          const std::vector<Rat>& dense) {
    if (static_cast<int>(dense.size()) != dim * dim * dim)
        throw StructuralError("structure constant tensor has wrong size");
    auto at = [&](int mu, int nu, int lam) -> const Rat& {
        return dense[(mu * dim + nu) * dim + lam];
    };
    for (int mu = 0; mu < dim; ++mu)
        for (int nu = 0; nu <= mu; ++nu)
            for (int lam = 0; lam < dim; ++lam)
                if (at(mu, nu, lam) != -at(nu, mu, lam))
                    throw StructuralError(
                        "tensor not antisymmetric in the first index pair at (" +
                        std::to_string(mu) + "," + std::to_string(nu) + "," +
                        std::to_string(lam) + ")");
    std::vector<JacobiViolation> out;
    for (int mu = 0; mu < dim; ++mu)
        for (int nu = mu + 1; nu < dim; ++nu)
            for (int tau = nu + 1; tau < dim; ++tau)
                for (int lam = 0; lam < dim; ++lam) {
                    Rat sum = 0;
                    for (int al = 0; al < dim; ++al) {
                        Rat eta = signature[al];
                        sum += eta * (at(mu, nu, al) * at(al, tau, lam) +
                                      at(nu, tau, al) * at(al, mu, lam) +
                                      at(tau, mu, al) * at(al, nu, lam));
                    }
                    if (sum != 0) out.push_back({mu, nu, tau, lam, sum});
                }
    return out;
}

SeriesMatrix c_matrix(const StructureConstants& C, const VtPtr& vt, int order, int vec) {
    int n = C.dim();
    if (vt->dim() != n) throw StructuralError("c_matrix dimension mismatch");
    SeriesMatrix m(n, std::vector<Series>(n, Series::zero(vt, order)));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            Series s = Series::zero(vt, order);
            for (int al = 0; al < n; ++al) {
                const Rat& c = C.c(al, mu, nu);
                if (c == 0) continue;
                s += Series::momentum(vt, order, vec, al) * EC(Rat(vt->eta(al)) * c);
            }
            m[mu][nu] = s;
        }
    return m;
}

std::vector<Rat> bernoulli_psi_coeffs(int order) {
    // psi(t) = t/(1-e^{-t}) = 1 / ((1-e^{-t})/t); the denominator has
    // constant term 1, so divide exactly degree by degree.
    // (1-e^{-t})/t = sum_{k>=0} (-1)^k t^k / (k+1)!
    std::vector<Rat> den(order + 1);
    Rat fact = 1;
    for (int k = 0; k <= order; ++k) {
        fact *= (k + 1);
        den[k] = Rat((k % 2 == 0) ? 1 : -1) / fact;
    }
    std::vector<Rat> out(order + 1, Rat(0));
    for (int k = 0; k <= order; ++k) {
        Rat acc = (k == 0) ? Rat(1) : Rat(0);
        for (int j = 1; j <= k; ++j) acc -= den[j] * out[k - j];
        out[k] = acc; // den[0] == 1
    }
    return out;
}

Series bernoulli_psi(int order) {
    auto vt = VariableTable::make(1, {}, {"t"}, {1});
    auto coeffs = bernoulli_psi_coeffs(order);
    Series out(vt, order);
    for (int k = 0; k <= order; ++k) {
        Expo e(vt->var_count(), 0);
        e[vt->deform_var(0)] = k;
        out.add_term(e, EC(coeffs[k]));
    }
    return out;
}

SeriesMatrix matrix_series(const SeriesMatrix& m, const std::vector<Rat>& coeffs) {
    if (m.empty()) throw StructuralError("empty matrix");
    const auto& vt = m[0][0].table_ptr();
    int order = m[0][0].order();
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero() && e.min_deform_degree() < 1)
                throw DomainError("matrix series requires graded entries");
    SeriesMatrix out = mat_scale(eta_identity_matrix(vt, order), EC(coeffs.at(0)));
    SeriesMatrix power = eta_identity_matrix(vt, order);
    for (size_t k = 1; k < coeffs.size(); ++k) {
        power = eta_mat_mul(power, m);
        bool all_zero = true;
        for (const auto& row : power)
            for (const auto& e : row)
                if (!e.is_zero()) all_zero = false;
        if (all_zero) break;
        if (coeffs[k] != 0) out = mat_add(out, mat_scale(power, EC(coeffs[k])));
    }
    return out;
}

SeriesMatrix psi_of_matrix(const SeriesMatrix& m, int order) {
    return matrix_series(m, bernoulli_psi_coeffs(order));
}

} // namespace ncps
