#pragma once

#include "lie.hpp"

#include <string>

namespace ncps {

/// Structure-constant document: {"n": int, "signature": [+-1,...],
/// "C": [[mu, nu, lambda, "num/den"], ...]} listing only mu < nu entries;
/// the antisymmetric completion is automatic.  Construction validates the
/// Jacobi identity.
StructureConstants structure_constants_from_json(const std::string& text);

/// Canonical serialization (mu < nu entries sorted, zeros dropped);
/// round-trips through the parser.
std::string structure_constants_to_json(const StructureConstants& C);

/// Raw parse without the Jacobi validation (antisymmetry is still
/// structural): dimension, signature and dense tensor.
struct RawStructureConstants {
    int n = 0;
    std::vector<int> signature;
    std::vector<Rat> dense;
};
RawStructureConstants raw_structure_constants_from_json(const std::string& text);

} // namespace ncps
