#pragma once

#include <array>
#include <string>
#include <vector>

#include "gfharm/symplectic.hpp"

namespace gfharm {

/// GF(9) realised modulo eps^2 + eps + 2, the reference field of the worked examples.
FieldPtr gf9_field();
/// Throws WrongFixture unless `field` is that realisation.
void require_gf9(const GaloisField& field);

namespace gf9 {

/// omega exponents on the diagonal of Z, canonical order.
inline constexpr std::array<int, 9> kZDiagonal{0, 2, 1, 2, 1, 0, 1, 0, 2};

/// Eigenspace memberships of Z (q_r) and Z^eps (Q_r), element text "m0,m1".
inline const std::array<std::vector<std::string>, 3> kZClasses{{
    {"0,0", "2,1", "1,2"},
    {"2,0", "1,1", "0,2"},
    {"1,0", "0,1", "2,2"},
}};
inline const std::array<std::vector<std::string>, 3> kZEpsClasses{{
    {"0,0", "0,1", "0,2"},
    {"2,0", "2,1", "2,2"},
    {"1,0", "1,1", "1,2"},
}};

/// Frobenius projectors, entries doubled so they are integers.
inline constexpr std::array<std::array<int, 9>, 9> kVarpi0Twice{{
    {2, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 2, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 2, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 1, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 1, 0},
    {0, 0, 0, 0, 1, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 1, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 1},
}};
inline constexpr std::array<std::array<int, 9>, 9> kVarpi1Twice{{
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, -1},
    {0, 0, 0, 0, 1, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, -1, 0},
    {0, 0, 0, 0, -1, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, -1, 0, 1, 0},
    {0, 0, 0, -1, 0, 0, 0, 0, 1},
}};

/// The symplectic example: S(r, s, t) applied to X^eps.
inline const std::string kSymR = "1,0";
inline const std::string kSymS = "1,1";
inline const std::string kSymT = "0,1";
inline const std::string kImageAlpha = "0,2";  // 2 eps
inline const std::string kImageBeta = "1,2";   // 1 + 2 eps
inline constexpr std::array<std::pair<int, int>, 2> kImageFactors{{{1, 1}, {0, 2}}};
inline const std::string kDualE0 = "0,2";

}  // namespace gf9

struct ZSpectrumExample {
    std::array<std::vector<std::string>, 3> z_classes;      // computed q_r
    std::array<std::vector<std::string>, 3> z_eps_classes;  // computed Q_r
    bool z_classes_match = false;
    bool z_eps_classes_match = false;
    bool z_decomposes = false;       // Z = sum omega^r q_r
    bool z_eps_decomposes = false;   // Z^eps = sum omega^r Q_r
    bool rank_three_idempotents = false;
    bool families_differ = false;
};

ZSpectrumExample z_spectrum_example(const GaloisField& field);

struct FixtureItem {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
    std::string note;
};

struct FixtureReport {
    std::vector<FixtureItem> items;
    bool ok() const;
};

/// Reproduces every GF(9) worked example and diffs it against the stored values.
FixtureReport run_fixtures();

}  // namespace gfharm
