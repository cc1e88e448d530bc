#pragma once

#include "heisenberg.hpp"
#include "lie.hpp"
#include "tpoly.hpp"

#include <optional>

namespace ncps {

enum class RealKind { LinearInX, Affine, QuadraticInX };

/// A realization of noncommutative coordinates inside the undeformed phase
/// space: xhat[mu] as normal-ordered operators that reduce to x_mu at
/// deformation degree zero.
class Realization {
public:
    Realization(std::vector<Op> xhat, RealKind kind, std::string source);

    int dim() const { return static_cast<int>(xhat_.size()); }
    int order() const { return xhat_.at(0).order(); }
    int pvec() const { return xhat_.at(0).pvec(); }
    const VtPtr& table_ptr() const { return xhat_.at(0).table_ptr(); }
    RealKind kind() const { return kind_; }
    const std::string& source() const { return source_; }

    const Op& xhat(int mu) const { return xhat_.at(mu); }
    const std::vector<Op>& xhat() const { return xhat_; }

    /// phi_{alpha,mu}(p) from xhat_mu = x_alpha phi_{alpha mu} (metric
    /// contraction convention); defined for linear and affine kinds.
    SeriesMatrix phi() const;
    /// x-free part chi_mu(p); zero for linear realizations.
    std::vector<Series> chi() const;

private:
    std::vector<Op> xhat_;
    RealKind kind_;
    std::string source_;
};

/// e^{ik xhat} |> 1 = e^{i K(k) x + i L(k)}: the K vector over a table in
/// one momentum symbol k, and the scalar phase L (zero for linear kinds).
struct KFunction {
    std::vector<Series> K;
    Series L;
};

/// Universal Weyl realization xhat_mu = x_alpha psi(l C(p))_{mu alpha}.
Realization weyl_realization(const StructureConstants& C, int order);

struct CommutatorReport {
    bool ok = true;
    std::vector<std::string> lines; // one entry per failing pair
};

/// Checks [xhat_mu, xhat_nu] = i l C_{mu nu alpha} xhat_alpha through the
/// realization's truncation order; failures are report entries.
CommutatorReport verify_commutators(const Realization& r, const StructureConstants& C);

/// Solves dK_mu(lambda k)/dlambda = k_beta phi_{mu beta}(K(lambda k)) with
/// K(0) = 0 order by order in the deformation grading, then lambda -> 1.
/// Affine realizations also integrate the scalar phase.
KFunction k_function(const Realization& r);

/// (1/N!) sum over permutations of the word, collapsed over the multiset
/// symmetry: pairs of (weight, word).
std::vector<std::pair<Rat, std::vector<int>>> symmetrize(const std::vector<int>& word);

/// Realizes a word of generator indices and projects to S(g):
/// omega(word) = (xhat_{w1} ... xhat_{wN}) |> 1.
XSeries omega_word(const Realization& r, const std::vector<int>& word);

/// Weighted formal element of the enveloping algebra: finite sum of words
/// with series weights (used for Omega^{-1} and the star product).
using UEl = std::map<std::vector<int>, Series>;

XSeries omega(const Realization& r, const UEl& el);

/// Inverse of Omega by deformation-graded triangular solve: returns el
/// with Omega(el) = f, expressed in the symmetrized basis.
UEl omega_inverse(const Realization& r, const XSeries& f);

/// Right-multiplication action of a UEl element: el |> g.
XSeries uel_apply(const Realization& r, const UEl& el, const XSeries& g);

} // namespace ncps
