#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfharm/json_io.hpp"
#include "gfharm/symplectic.hpp"

namespace gfharm {

struct CheckResult {
    std::string suite;
    std::string identity;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct SuiteConfig {
    FieldPtr field;
    Backend backend = Backend::Exact;
    /// Frobenius-norm tolerance for the float backend; ignored when exact.
    double tolerance = kOperatorTolerance;
    /// Sweep all of Sp(2, GF(q)) when q <= kExhaustiveLimit.
    bool exhaustive = false;
    int half_phase_offset = 0;
    std::uint64_t seed = 20240601;
    /// Group elements drawn per symplectic check when not exhaustive.
    int samples = 12;
    /// Parameter triples compared against the closed form.
    int closed_form_samples = 50;
};

inline constexpr std::uint32_t kExhaustiveLimit = 9;

struct VerifyReport {
    int p = 0;
    int ell = 0;
    std::vector<int> modulus;
    Backend backend = Backend::Exact;
    std::vector<CheckResult> checks;

    bool ok() const;
    int count_passed() const;
    int count_failed() const;
    int count_skipped() const;
    void append(const VerifyReport& other);
};

/// "all", "gf", "fourier", "frobenius", "heisenberg", "symplectic".
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Runs one suite (or all of them) on cfg.field. The heisenberg and symplectic suites
/// report a single skipped entry in characteristic 2.
VerifyReport run_suite(std::string_view suite, const SuiteConfig& cfg);

/// The default (p, l) verification grid.
const std::vector<std::pair<int, int>>& default_grid();

Json to_json(const CheckResult& c);
Json to_json(const VerifyReport& r);

}  // namespace gfharm
