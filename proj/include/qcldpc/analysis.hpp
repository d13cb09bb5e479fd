#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcldpc/linear_code.hpp"
#include "qcldpc/pcm.hpp"

namespace qcldpc {

struct RcViolation {
  bool row_pair = false;  // else column pair
  int i = 0, j = 0;
  int inner_product = 0;
};

// Empty iff the inner product of any two rows and any two columns is <= 1.
std::vector<RcViolation> check_rc(const ParityCheckMatrix& h);

struct GirthResult {
  int girth = 0;       // meaningful when !capped
  bool capped = false; // no cycle of length <= cap found
};

// Shortest cycle in the Tanner graph, by BFS from every variable node.
GirthResult girth(const ParityCheckMatrix& h, int cap = 12);

struct DistanceInterval {
  int lb = 1;
  std::optional<int> ub;
  std::string provenance;
};

struct CodeProfile {
  int m = 0;  // code length (columns)
  int x = 0;  // check count (rows)
  int rank = 0;
  int dim = 0;
  int rate_num = 0, rate_den = 1;  // dim / m
  double rate = 0.0;
  std::string rate_2dp;
  int col_weight_min = 0, col_weight_max = 0;
  std::map<int, int> row_weight_hist;
  GirthResult girth;
  bool rc_ok = false;
  int stopping_lb = 1;
  std::string stopping_provenance;
  DistanceInterval min_dist;
  // Construction 1: rank == 4a-3 (proven); Construction 2: rank == 4a-6
  // (proven <=, observed equal)
  std::optional<bool> rank_matches_theory;
};

CodeProfile profile(const ParityCheckMatrix& h, int girth_cap = 12);

// round to two decimals, e.g. "0.71"
std::string format_rate_2dp(int num, int den);

struct StoppingSearchResult {
  enum class Status { Found, NoneUpTo, Inconclusive };
  Status status = Status::NoneUpTo;
  int size = 0;                    // when Found
  std::vector<int> columns;        // when Found
  int searched_up_to = 0;          // when NoneUpTo / Inconclusive (last completed size)
  long long nodes = 0;
};

// Exhaustive branch-and-bound over column subsets of size <= max_size,
// smallest first. Throws ResourceLimitError with an "inconclusive" result
// when node_budget is exceeded.
StoppingSearchResult stopping_distance(const ParityCheckMatrix& h, int max_size,
                                       long long node_budget = 2'000'000'000);

// True when S, viewed as a set of columns, touches every row 0 or >= 2 times.
bool is_stopping_set(const ParityCheckMatrix& h, std::span<const int> columns);

// Minimum weight over all 2^dim - 1 non-zero codewords, Gray-code order.
// Refuses (std::invalid_argument) when dim exceeds dim_cap.
int min_distance_bruteforce(const LinearEncoder& e, int dim_cap = 26);

// The 8 columns of build_h_bar(build_dca(a), a/2) whose GF(2) sum is zero,
// in post-deletion numbering. Requires even a >= 8.
std::vector<int> witness_weight8(int a);

// The 10 columns of build_h(build_dm(a, (a-1)/2)) whose GF(2) sum is zero.
// Requires odd a > 3 with gcd(a,3) = gcd(a,5) = 1.
std::vector<int> witness_weight10(int a);

// gcd(a, alpha-2+i) = 1 for 0 <= i <= 3 and gcd(a, 2*alpha-1) = 1: the
// regime where the distance->=10 guarantee extends to a custom alpha.
bool check_alpha_conditions(int a, int alpha);

}  // namespace qcldpc
