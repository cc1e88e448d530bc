#pragma once

#include "rational.hpp"

#include <memory>
#include <vector>

namespace ncps {

class VariableTable;
using VtPtr = std::shared_ptr<const VariableTable>;

/// Names the scalar variables of a series ring: a set of momentum vector
/// symbols (each contributing `dim` components), optional ungraded scalar
/// symbols, plus one or more graded deformation symbols.  Truncation of
/// every series over this table is by the total degree in the deformation
/// symbols only.
///
/// Variable layout: vector v component mu -> v*dim + mu, then scalar
/// symbols, then deformation symbols.
class VariableTable {
public:
    VariableTable(int dim,
                  std::vector<std::string> vector_symbols,
                  std::vector<std::string> deform_symbols,
                  std::vector<int> signature,
                  std::vector<std::string> scalar_symbols = {});

    static VtPtr make(int dim,
                      std::vector<std::string> vector_symbols,
                      std::vector<std::string> deform_symbols = {"l"},
                      std::vector<int> signature = {},
                      std::vector<std::string> scalar_symbols = {});

    /// Minkowski default diag(-1,1,...,1).
    static std::vector<int> minkowski(int dim);
    static std::vector<int> euclidean(int dim);

    int dim() const { return dim_; }
    int vector_count() const { return static_cast<int>(vectors_.size()); }
    int scalar_count() const { return static_cast<int>(scalars_.size()); }
    int deform_count() const { return static_cast<int>(deforms_.size()); }
    int var_count() const { return dim_ * vector_count() + scalar_count() + deform_count(); }
    /// first deformation variable index
    int deform_base() const { return dim_ * vector_count() + scalar_count(); }

    const std::vector<std::string>& vector_symbols() const { return vectors_; }
    const std::vector<std::string>& scalar_symbols() const { return scalars_; }
    const std::vector<std::string>& deform_symbols() const { return deforms_; }
    const std::vector<int>& signature() const { return sig_; }

    int eta(int mu) const { return sig_.at(mu); }

    int vector_var(int v, int mu) const;
    int scalar_var(int j) const;
    int deform_var(int j) const;
    bool is_deform_var(int var) const { return var >= deform_base(); }
    /// (vector index, component) of a momentum variable.
    std::pair<int, int> vector_of(int var) const;

    int vector_index(const std::string& symbol) const; // -1 when absent
    std::string var_name(int var) const;

    friend bool operator==(const VariableTable& a, const VariableTable& b) {
        return a.dim_ == b.dim_ && a.vectors_ == b.vectors_ &&
               a.scalars_ == b.scalars_ && a.deforms_ == b.deforms_ &&
               a.sig_ == b.sig_;
    }
    friend bool operator!=(const VariableTable& a, const VariableTable& b) {
        return !(a == b);
    }

private:
    int dim_;
    std::vector<std::string> vectors_;
    std::vector<std::string> scalars_;
    std::vector<std::string> deforms_;
    std::vector<int> sig_;
};

} // namespace ncps
