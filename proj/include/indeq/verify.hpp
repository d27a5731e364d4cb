#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace indeq {

struct VerifyBounds {
  std::uint32_t equivalence_max = 100;  // C_n = D_n, P_2n = P_{n-1} u C_{n+1}
  std::uint32_t y_max = 40;             // Y_{m,2,1} = P_1 u C_{m+3}
  std::uint32_t grid_max = 10;          // E/A, F1/F5, F2/F4 grids
  std::uint32_t recurrence_max = 20;
  std::uint32_t brute_vertices = 14;    // recursion vs subset enumeration
  std::uint32_t factor_max = 200;
  std::uint32_t degree_max = 500;
  std::uint32_t coprime_max = 60;
  std::uint32_t elimination_max = 20;
  std::uint32_t screen_max = 40;
  std::uint32_t triple_max = 12;        // Y_{a,b,c}, c >= 2
  std::uint32_t oracle_path_max = 10;
  std::uint32_t oracle_cycle_max = 9;
  std::uint32_t class_max = 30;
  std::uint32_t search_max = 60;
};

// "small" or "full"; throws std::invalid_argument otherwise.
VerifyBounds verify_bounds(std::string_view name);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

const std::vector<std::string>& suite_names();  // identities, factorization, eliminations, classes-vs-oracle
// suite may also be "all"
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyBounds& b);

}  // namespace indeq
