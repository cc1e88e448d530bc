#pragma once

#include "models.hpp"
#include "qdeform.hpp"

#include <string>

namespace ncps {

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> lines;

    void pass(const std::string& what) { lines.push_back("PASS " + what); }
    void fail(const std::string& what, const std::string& detail = "") {
        ok = false;
        lines.push_back("FAIL " + what + (detail.empty() ? "" : ": " + detail));
    }
    void check(bool good, const std::string& what, const std::string& detail = "") {
        if (good) pass(what);
        else fail(what, detail);
    }
    std::string text() const;
};

/// Golden-identity suite for a Lie-type structure-constant tensor: Jacobi,
/// Weyl commutators, K = k, solver agreement, (co)associativity, counit,
/// Leibniz on coordinates, and the second-order ln F expansion.
VerifyReport verify_lie(const StructureConstants& C, int order);

/// Model suites (the Lie checks plus the model's closed-form expectations).
VerifyReport verify_kappa(const std::vector<Rat>& a, int n, int order);
VerifyReport verify_tensorial(int n, int order);
VerifyReport verify_theta(const std::vector<std::vector<Rat>>& theta, int order);
VerifyReport verify_snyder(int n, int order);
VerifyReport verify_dilation(const std::vector<std::vector<Rat>>& a, int order);

} // namespace ncps
