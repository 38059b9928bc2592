#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pdc {

struct ValidationOptions {
    int max_M = 40;
    std::uint64_t seed = 12345;
    int trials = 200;
    // Negative control: perturb one orthonormality weight so the harness
    // itself can be seen to fail.
    bool corrupt_weights = false;
};

struct FamilyResult {
    std::string name;
    double worst_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<FamilyResult> families;
    bool all_pass() const;
};

ValidationReport run_validation(const ValidationOptions& options);

std::string format_report(const ValidationReport& report);

}  // namespace pdc
