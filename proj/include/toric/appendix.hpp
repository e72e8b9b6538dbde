#pragma once

#include "toric/mirrorweb.hpp"

#include <string>

namespace toric {

struct ReplayEntry {
    std::string label;
    bool pass = false;
    std::string detail;  // first mismatch, empty on success
};

struct ReplayResult {
    std::vector<ReplayEntry> entries;
    bool pass() const;
};

// MIRRORWEB_FIXTURES when set, otherwise the fixtures shipped with the sources.
std::string fixture_dir();

// Polynomials as a sorted list of sorted exponent-column multisets (variables in column order).
using PolynomialSet = std::vector<std::vector<std::vector<std::string>>>;
PolynomialSet polynomial_set(const std::vector<IntMatrix>& exponent_matrices);
PolynomialSet polynomial_set(const std::vector<std::vector<std::vector<long>>>& polys);

ReplayResult replay_appendix_a(const std::string& dir);
ReplayResult replay_appendix_b(const std::string& dir);
ReplayResult replay_appendix_c(const std::string& dir);
ReplayResult replay_appendix(char which, const std::string& dir);

}  // namespace toric
