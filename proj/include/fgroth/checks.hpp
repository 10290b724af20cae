#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgroth/groth.hpp"

namespace fgroth::checks {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long cases = 0;
    long failures = 0;
    std::string detail;  // first failure, or a short summary
    double seconds = 0;
};

/// All (lambda, mu) with lambda inside the box (exactly box.size() rows,
/// zero parts allowed) and mu inside lambda.
std::vector<std::pair<Partition, Partition>> shapes_in_box(const std::vector<int>& box);
/// All vectors of length r with entries in [lo, hi].
std::vector<std::vector<int>> all_flags(int r, int lo, int hi);

struct GridSpec {
    std::vector<int> box;  // lambda inside this box, rows = box.size()
    int f_lo = 1, f_hi = 3;
    int g_lo = 1, g_hi = 1;
    int n_vars = 3;
    std::optional<int> beta_cap;  // none: tableau-derived default
    std::optional<int> x_extra;   // x_cap = |lambda/mu| + x_extra; none: default
    bool increasing_f = false;    // keep only weakly increasing f
};

/// Every instance of the grid.
std::vector<SkewFlagged> grid_instances(const GridSpec& spec);
/// `count` instances drawn uniformly (shape, then flags) with a fixed seed.
std::vector<SkewFlagged> sampled_instances(const GridSpec& spec, int count, std::uint64_t seed,
                                           const std::function<bool(const SkewFlagged&)>& keep = {});

std::string describe(const SkewFlagged& inst);

/// fermionic == jt (double bracket).
SuiteResult fermionic_identity(const std::vector<SkewFlagged>& instances);
/// jt == set-valued tableau sum (g = 1 instances).
SuiteResult tableau_coincidence(const std::vector<SkewFlagged>& instances);
/// jt at beta_cap 0 == flagged semistandard tableau sum.
SuiteResult schur_reduction(const std::vector<SkewFlagged>& instances);
/// jt(matsumura) == jt(double bracket) on instances satisfying the coincidence condition.
SuiteResult variant_coincidence(const std::vector<SkewFlagged>& instances);
/// jt at (beta_cap + 1, x_cap + 1) truncates back to jt at the caps; for g = 1
/// the raised value has no monomial beyond the original caps.
SuiteResult stabilization(const std::vector<SkewFlagged>& instances);

struct AlgebraSpec {
    int max_energy = 6;
    int max_charge = 3;
    int index_radius = 7;  // fermion indices within charge +- radius
    int current_range = 4; // a_m with |m| <= range
    int t_cap = 6;         // degree cap for the single-variable alphabet
    int beta_cap = 4;
    int wick_length = 3;
    int wick_lo = -4, wick_hi = 3;
};

/// Anticommutators, current relations, vertex-operator conjugations, the
/// commutation of e^H past e^{-H*}, two-point functions and Wick's theorem.
std::vector<SuiteResult> operator_algebra(const AlgebraSpec& spec);

/// g_n_fermionic(n, f, g) against the z^n coefficient of the one-row generating function.
SuiteResult one_row(int n_lo, int n_hi, int f_lo, int f_hi, int g_lo, int g_hi, int beta_cap, int n_vars);

}  // namespace fgroth::checks
