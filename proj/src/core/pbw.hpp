#pragma once

#include "lie.hpp"

#include <map>

namespace ncps {

/// Element of the truncated enveloping algebra over a series coefficient
/// ring: finite sum of PBW-ordered words (weakly increasing generator
/// indices) with series weights.  Storage keeps the combined grading
/// word-length + deformation-degree within a window, which multiplication
/// preserves because each rewriting step trades one unit of word length
/// for one unit of deformation degree.
class PbwAlgebra {
public:
    using Word = std::vector<int>;
    using El = std::map<Word, Series>;

    PbwAlgebra(const StructureConstants& C, VtPtr vt, int order, int window);

    const VtPtr& table_ptr() const { return vt_; }
    int order() const { return order_; }
    int window() const { return window_; }

    El one() const;
    /// i * (v . xhat) as an element, v given per component over the table.
    El linear(const std::vector<Series>& v_times_i) const;

    El add(const El& a, const El& b) const;
    El scale(const El& a, const EC& c) const;
    El mul(const El& a, const El& b) const;
    El exp(const El& a) const; // terminates through the window
    El log_one_plus(const El& r) const;

    /// prunes zero weights and terms outside the window
    void normalize(El& a) const;

    bool is_zero(const El& a) const;

private:
    // reduction of an arbitrary word to PBW form: word -> (lpow -> coeff)
    using Reduced = std::map<Word, std::map<int, EC>>;
    const Reduced& reduce(const Word& w) const;

    StructureConstants C_;
    VtPtr vt_;
    int order_;
    int window_;
    mutable std::map<Word, Reduced> cache_;
};

/// Degree-3 confluence of the rewriting system: reduces every length-3 word
/// starting from the left pair and from the right pair and lists the words
/// where the two normal forms differ.  Empty exactly when the tensor is
/// PBW-consistent at degree 3 (the Jacobi identity).
std::vector<std::vector<int>> pbw_degree3_violations(const StructureConstants& C);

} // namespace ncps
