#include "models.hpp"

namespace ncps {

namespace {

Series poly_in_u(const std::vector<Rat>& coeffs, const Series& u) {
    const auto& vt = u.table_ptr();
    int order = u.order();
    Series out = Series::zero(vt, order);
    Series power = Series::one(vt, order);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) power = power * u;
        if (power.is_zero()) break;
        if (coeffs[k] != 0) out += power * EC(coeffs[k]);
    }
    return out;
}

} // namespace

ModelSpec kappa_minkowski(const std::vector<Rat>& a, int n) {
    if (static_cast<int>(a.size()) != n)
        throw StructuralError("kappa parameter vector length != n");
    auto sig = VariableTable::minkowski(n);
    std::vector<Rat> dense(n * n * n, Rat(0));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int lam = 0; lam < n; ++lam) {
                Rat v = 0;
                if (nu == lam) v += a[mu] * sig[nu];
                if (mu == lam) v -= a[nu] * sig[mu];
                dense[(mu * n + nu) * n + lam] = v;
            }
    ModelSpec m;
    m.name = "kappa";
    m.dim = n;
    m.signature = sig;
    m.C = StructureConstants::validated(n, sig, dense);
    return m;
}

Realization kappa_closed_form_realization(const std::vector<Rat>& a, int n, int order) {
    auto vt = VariableTable::make(n, {"p"}, {"l"});
    Series l = Series::deform(vt, order);
    // A = -l a_alpha p_alpha (metric contraction)
    Series A = Series::zero(vt, order);
    for (int al = 0; al < n; ++al)
        A += Series::momentum(vt, order, 0, al) * EC(Rat(-vt->eta(al)) * a[al]);
    A = A * l;
    // phi_S(A) = A/(e^A - 1) = psi(-A): use the Bernoulli coefficients
    auto psi = bernoulli_psi_coeffs(order);
    std::vector<Rat> phiS(psi.size());
    for (size_t k = 0; k < psi.size(); ++k)
        phiS[k] = (k % 2 == 0 ? psi[k] : -psi[k]);
    Series phi = poly_in_u(phiS, A);
    // (1 - phi_S(A))/A exactly: (1 - phi_S)(A) is divisible by A
    std::vector<Rat> ratio(phiS.size() - 1);
    for (size_t k = 0; k + 1 < phiS.size(); ++k) ratio[k] = -phiS[k + 1];
    Series one_minus_phi_over_A = poly_in_u(ratio, A);

    std::vector<Op> xhat;
    for (int mu = 0; mu < n; ++mu) {
        Op op(vt, order, 0);
        XExpo e(n, 0);
        e[mu] = 1;
        op.add_term(e, phi);
        // - a_mu (xp) (1-phi_S)/A with xp = x_alpha p_alpha eta-contracted,
        // and one grading factor from l a
        for (int al = 0; al < n; ++al) {
            XExpo xe(n, 0);
            xe[al] = 1;
            Series coef = Series::momentum(vt, order, 0, al) * EC(Rat(vt->eta(al)));
            op.add_term(xe, coef * one_minus_phi_over_A * l * EC(-a[mu]));
        }
        xhat.push_back(std::move(op));
    }
    return Realization(std::move(xhat), RealKind::LinearInX, "kappa-closed-form");
}

std::vector<Series> kappa_closed_form_coproduct(const std::vector<Rat>& a, int n, int order) {
    auto vt = VariableTable::make(n, {"pL", "pR"}, {"l"});
    Series l = Series::deform(vt, order);
    auto Aof = [&](int vec) {
        Series A = Series::zero(vt, order);
        for (int al = 0; al < n; ++al)
            A += Series::momentum(vt, order, vec, al) * EC(Rat(-vt->eta(al)) * a[al]);
        return A * l;
    };
    Series AL = Aof(0), AR = Aof(1);
    auto psi = bernoulli_psi_coeffs(order);
    std::vector<Rat> phiS(psi.size());
    for (size_t k = 0; k < psi.size(); ++k)
        phiS[k] = (k % 2 == 0 ? psi[k] : -psi[k]);
    auto phi = [&](const Series& arg) { return poly_in_u(phiS, arg); };

    Series d0A = AL + AR;
    Series left = phi(d0A) * phi(AL).inverse();
    Series right = phi(-d0A) * phi(-AR).inverse();
    std::vector<Series> out;
    for (int mu = 0; mu < n; ++mu) {
        Series pL = Series::momentum(vt, order, 0, mu);
        Series pR = Series::momentum(vt, order, 1, mu);
        out.push_back(left * pL + right * pR);
    }
    return out;
}

Realization kappa_left_realization(const Rat& a, int n, int order) {
    auto vt = VariableTable::make(n, {"p"}, {"l"});
    Series l = Series::deform(vt, order);
    std::vector<Op> xhat;
    for (int mu = 0; mu < n; ++mu) xhat.push_back(Op::x(vt, order, 0, mu));
    for (int j = 1; j < n; ++j) {
        XExpo e(n, 0);
        e[j] = 1;
        xhat[0].add_term(e, Series::momentum(vt, order, 0, j) * (l * EC(-a)));
    }
    return Realization(std::move(xhat), RealKind::LinearInX, "kappa-left");
}

int tensorial_slot(int n, int mu, int nu) {
    if (mu >= nu) throw StructuralError("tensorial slot needs mu < nu");
    int slot = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (i == mu && j == nu) return slot;
            ++slot;
        }
    throw StructuralError("tensorial slot out of range");
}

ModelSpec extended_tensorial(int n) {
    if (n < 2) throw StructuralError("extended tensorial model needs n >= 2");
    auto eta = VariableTable::minkowski(n);
    int dim = n + n * (n - 1) / 2;
    std::vector<int> sig(dim);
    for (int mu = 0; mu < n; ++mu) sig[mu] = eta[mu];
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu)
            sig[tensorial_slot(n, mu, nu)] = eta[mu] * eta[nu];
    std::vector<Rat> dense(dim * dim * dim, Rat(0));
    auto set = [&](int mu, int nu, int lam, Rat v) {
        dense[(mu * dim + nu) * dim + lam] = v;
        dense[(nu * dim + mu) * dim + lam] = -v;
    };
    // restricted to mu<nu slots: C_{mu nu (mu nu)} = eta_mu eta_nu (the 1/2
    // of the both-orders pair-index convention doubles away)
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu)
            set(mu, nu, tensorial_slot(n, mu, nu), Rat(eta[mu] * eta[nu]));
    ModelSpec m;
    m.name = "tensorial";
    m.dim = dim;
    m.signature = sig;
    m.C = StructureConstants::validated(dim, sig, dense);
    return m;
}

Realization extended_tensorial_closed_form(int n, int order) {
    auto model = extended_tensorial(n);
    int dim = model.dim;
    auto vt = VariableTable::make(dim, {"p"}, {"l"}, model.signature);
    Series l = Series::deform(vt, order);
    std::vector<Op> xhat;
    for (int A = 0; A < dim; ++A) xhat.push_back(Op::x(vt, order, 0, A));
    // xhat_mu = x_mu - (l/2) x_(mu alpha) p_alpha  (eta-contracted over alpha)
    for (int mu = 0; mu < n; ++mu)
        for (int al = 0; al < n; ++al) {
            if (al == mu) continue;
            int slot = al > mu ? tensorial_slot(n, mu, al) : tensorial_slot(n, al, mu);
            Rat orient = al > mu ? Rat(1) : Rat(-1); // x_(al mu) = -x_(mu al)
            XExpo e(dim, 0);
            e[slot] = 1;
            Series coef = Series::momentum(vt, order, 0, al) *
                          EC(Rat(vt->eta(al)) * orient * Rat(-1, 2));
            xhat[mu].add_term(e, coef * l);
        }
    return Realization(std::move(xhat), RealKind::LinearInX, "tensorial-closed-form");
}

ModelSpec canonical_theta(const std::vector<std::vector<Rat>>& theta, int order) {
    int n = static_cast<int>(theta.size());
    if (n == 0) throw StructuralError("empty theta matrix");
    for (const auto& row : theta)
        if (static_cast<int>(row.size()) != n)
            throw StructuralError("theta matrix is not square");
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            if (theta[mu][nu] != -theta[nu][mu])
                throw StructuralError("theta matrix is not antisymmetric");
    auto vt = VariableTable::make(n, {"p"}, {"l"});
    Series l = Series::deform(vt, order);
    std::vector<Op> xhat;
    for (int mu = 0; mu < n; ++mu) {
        Op op = Op::x(vt, order, 0, mu);
        Series chi = Series::zero(vt, order);
        for (int al = 0; al < n; ++al)
            chi += Series::momentum(vt, order, 0, al) *
                   EC(Rat(vt->eta(al)) * theta[mu][al] * Rat(-1, 2));
        op.add_term(XExpo(n, 0), chi * l);
        xhat.push_back(std::move(op));
    }
    ModelSpec m;
    m.name = "theta";
    m.dim = n;
    m.signature = vt->signature();
    m.realization = Realization(std::move(xhat), RealKind::Affine, "canonical-theta");
    return m;
}

std::vector<Rat> snyder_phi2(const std::vector<Rat>& phi1, int order) {
    if (phi1.empty() || phi1[0] != 1)
        throw DomainError("snyder family requires phi1(0) = 1");
    // series in u: num = 1 + 2 phi1' phi1, den = phi1 - 2u phi1'
    auto mul = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> out(order + 1, Rat(0));
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j)
                if (i < (int)a.size() && j < (int)b.size()) out[i + j] += a[i] * b[j];
        return out;
    };
    std::vector<Rat> d1(order + 1, Rat(0)); // phi1'
    for (int k = 0; k <= order && k + 1 < (int)phi1.size(); ++k)
        d1[k] = phi1[k + 1] * (k + 1);
    std::vector<Rat> p1(order + 1, Rat(0));
    for (int k = 0; k <= order && k < (int)phi1.size(); ++k) p1[k] = phi1[k];

    auto num = mul(d1, p1);
    for (auto& v : num) v *= 2;
    num[0] += 1;
    std::vector<Rat> den = p1;
    for (int k = 1; k <= order; ++k) den[k] -= 2 * d1[k - 1]; // -2u phi1'
    // exact division, den[0] = 1
    std::vector<Rat> out(order + 1, Rat(0));
    for (int k = 0; k <= order; ++k) {
        Rat acc = num[k];
        for (int j = 1; j <= k; ++j) acc -= den[j] * out[k - j];
        out[k] = acc / den[0];
    }
    return out;
}

ModelSpec snyder_family(const std::vector<Rat>& phi1, int n, int order) {
    auto phi2 = snyder_phi2(phi1, order);
    auto vt = VariableTable::make(n, {"p"}, {"beta"});
    Series beta = Series::deform(vt, order);
    std::vector<Series> p(n, Series());
    for (int mu = 0; mu < n; ++mu) p[mu] = Series::momentum(vt, order, 0, mu);
    Series u = eta_dot(p, p, vt->signature()) * beta;
    Series f1 = poly_in_u(std::vector<Rat>(phi1.begin(),
                                           phi1.begin() + std::min<size_t>(phi1.size(),
                                                                           order + 1)),
                          u);
    Series f2 = poly_in_u(phi2, u);
    std::vector<Op> xhat;
    for (int mu = 0; mu < n; ++mu) {
        Op op(vt, order, 0);
        XExpo e(n, 0);
        e[mu] = 1;
        op.add_term(e, f1);
        for (int al = 0; al < n; ++al) {
            XExpo xe(n, 0);
            xe[al] = 1;
            Series coef = p[al] * EC(Rat(vt->eta(al))) * p[mu] * f2 * beta;
            op.add_term(xe, coef);
        }
        xhat.push_back(std::move(op));
    }
    ModelSpec m;
    m.name = "snyder";
    m.dim = n;
    m.signature = vt->signature();
    m.realization = Realization(std::move(xhat), RealKind::LinearInX, "snyder-family");
    return m;
}

std::vector<Rat> snyder_symmetric_phi1(int order) {
    // 2u phi1' = phi1 - phi1^2 - u with phi1 = 1 + sum c_m u^m gives
    // c_m = -(delta_{m,1} + sum_{j=1}^{m-1} c_j c_{m-j}) / (2m + 1)
    std::vector<Rat> c(order + 1, Rat(0));
    c[0] = 1;
    for (int m = 1; m <= order; ++m) {
        Rat acc = (m == 1) ? Rat(1) : Rat(0);
        for (int j = 1; j < m; ++j) acc += c[j] * c[m - j];
        c[m] = -acc / (2 * m + 1);
    }
    return c;
}

ModelSpec snyder_symmetric(int n, int order) {
    auto m = snyder_family(snyder_symmetric_phi1(order), n, order);
    m.name = "snyder-symmetric";
    return m;
}

} // namespace ncps
