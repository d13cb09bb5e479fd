#include "qcldpc/difference_array.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qcldpc/parse_error.hpp"

namespace qcldpc {

int mod_inverse(int v, int a) {
  // extended Euclid
  int old_r = mod_a(v, a), r = a;
  int old_s = 1, s = 0;
  while (r != 0) {
    int q = old_r / r;
    int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1)
    throw std::invalid_argument("no inverse of " + std::to_string(v) + " mod " +
                                std::to_string(a));
  return mod_a(old_s, a);
}

DifferenceArray build_dm(int a, int alpha) {
  if (a < 3 || a % 2 == 0)
    throw std::invalid_argument("build_dm: a must be odd and >= 3, got " + std::to_string(a));
  alpha = mod_a(alpha, a);
  if (std::gcd(alpha, a) != 1 || std::gcd(mod_a(alpha - 1, a), a) != 1)
    throw std::invalid_argument("build_dm: invalid generator alpha=" + std::to_string(alpha) +
                                " for a=" + std::to_string(a) +
                                " (need gcd(alpha,a)=gcd(alpha-1,a)=1)");
  DifferenceArray d;
  d.a = a;
  d.kind = ArrayKind::DM;
  d.alpha = alpha;
  d.builtin_family = true;
  d.grid.resize(a);
  for (int j = 0; j < a; ++j) d.grid[j] = {0, j, mod_a(static_cast<long long>(alpha) * j, a)};
  return d;
}

bool distance10_regime(int a) { return std::gcd(a, 3) == 1 && std::gcd(a, 5) == 1; }

int select_alpha(int a) {
  if (a < 3 || a % 2 == 0)
    throw std::invalid_argument("select_alpha: a must be odd and >= 3");
  if (distance10_regime(a)) return (a - 1) / 2;
  return 2;
}

DifferenceArray build_dca(int a) {
  if (a < 4 || a % 2 != 0)
    throw std::invalid_argument("build_dca: a must be even and >= 4, got " + std::to_string(a));
  DifferenceArray d;
  d.a = a;
  d.kind = ArrayKind::DCA;
  d.builtin_family = true;
  d.grid.resize(a);
  const int n = a / 2;
  for (int j = 0; j < a; ++j) {
    int third = (j < n) ? 2 * j + 1 : 2 * (j - n);
    d.grid[j] = {0, j, third};
  }
  return d;
}

namespace {

void check_column_permutation(const DifferenceArray& d, int j, ValidationReport& rep) {
  std::vector<int> seen(d.a, 0);
  for (int i = 0; i < d.a; ++i) {
    int v = d.entry(i, j);
    if (v < 0 || v >= d.a) {
      rep.violations.push_back("column " + std::to_string(j) + " row " + std::to_string(i) +
                               ": entry " + std::to_string(v) + " out of range [0," +
                               std::to_string(d.a - 1) + "]");
      return;
    }
    seen[v]++;
  }
  for (int v = 0; v < d.a; ++v) {
    if (seen[v] != 1) {
      rep.violations.push_back("column " + std::to_string(j) + " is not a permutation of 0.." +
                               std::to_string(d.a - 1) + " (value " + std::to_string(v) +
                               " appears " + std::to_string(seen[v]) + " times)");
      return;
    }
  }
}

}  // namespace

ValidationReport validate(const DifferenceArray& d) {
  ValidationReport rep;
  if (d.a < 3) {
    rep.violations.push_back("a must be >= 3");
    return rep;
  }
  if (static_cast<int>(d.grid.size()) != d.a) {
    rep.violations.push_back("grid has " + std::to_string(d.grid.size()) + " rows, expected " +
                             std::to_string(d.a));
    return rep;
  }
  if (d.kind == ArrayKind::DM && d.a % 2 == 0)
    rep.violations.push_back("kind=DM requires odd a");
  if (d.kind == ArrayKind::DCA && d.a % 2 != 0)
    rep.violations.push_back("kind=DCA requires even a");

  for (int i = 0; i < d.a; ++i) {
    if (d.entry(i, 0) != 0) {
      rep.violations.push_back("column 0 not all zeros (row " + std::to_string(i) + ")");
      break;
    }
  }
  for (int i = 0; i < d.a; ++i) {
    if (d.entry(i, 1) != i) {
      rep.violations.push_back("not standard form: D(" + std::to_string(i) + ",1) = " +
                               std::to_string(d.entry(i, 1)) + ", expected " + std::to_string(i));
      break;
    }
  }
  check_column_permutation(d, 1, rep);
  check_column_permutation(d, 2, rep);
  if (!rep.ok()) return rep;

  if (d.kind == ArrayKind::DM) {
    // every column pair: differences cover 0..a-1 exactly once
    for (int j = 0; j < DifferenceArray::kColumns; ++j) {
      for (int jp = j + 1; jp < DifferenceArray::kColumns; ++jp) {
        std::vector<int> count(d.a, 0);
        for (int i = 0; i < d.a; ++i) count[mod_a(d.entry(i, j) - d.entry(i, jp), d.a)]++;
        for (int v = 0; v < d.a; ++v) {
          if (count[v] != 1) {
            rep.violations.push_back("DM columns (" + std::to_string(j) + "," +
                                     std::to_string(jp) + "): difference " + std::to_string(v) +
                                     " appears " + std::to_string(count[v]) +
                                     " times, expected once");
          }
        }
      }
    }
  } else {
    // non-zero column pair (1,2): differences non-zero, cover 1..a-1,
    // with the repeated difference a/2 appearing exactly twice
    const int n = d.half();
    std::vector<int> count(d.a, 0);
    for (int i = 0; i < d.a; ++i) count[mod_a(d.entry(i, 2) - d.entry(i, 1), d.a)]++;
    if (count[0] != 0)
      rep.violations.push_back("DCA columns (1,2): difference 0 appears " +
                               std::to_string(count[0]) + " times, expected never");
    for (int v = 1; v < d.a; ++v) {
      int expected = (v == n) ? 2 : 1;
      if (count[v] != expected)
        rep.violations.push_back("DCA columns (1,2): difference " + std::to_string(v) +
                                 " appears " + std::to_string(count[v]) + " times, expected " +
                                 std::to_string(expected));
    }
  }
  return rep;
}

int find_r0(const DifferenceArray& d, std::optional<int> override_row) {
  if (d.kind != ArrayKind::DCA) throw std::invalid_argument("find_r0: array is not a DCA");
  const int n = d.half();
  std::vector<int> candidates;
  for (int i = 0; i < d.a; ++i)
    if (mod_a(d.entry(i, 2) - d.entry(i, 1), d.a) == n) candidates.push_back(i);
  if (candidates.size() != 2)
    throw std::invalid_argument("find_r0: " + std::to_string(candidates.size()) +
                                " rows have difference a/2, expected exactly 2 (invalid DCA)");
  if (override_row) {
    if (*override_row != candidates[0] && *override_row != candidates[1])
      throw std::invalid_argument("find_r0: row " + std::to_string(*override_row) +
                                  " does not satisfy D(r0,2)-D(r0,1) = a/2; candidates are " +
                                  std::to_string(candidates[0]) + " and " +
                                  std::to_string(candidates[1]));
    return *override_row;
  }
  if (candidates[0] == n || candidates[1] == n) return n;
  return candidates[0];
}

DifferenceArray load_difference_array(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw ParseError(name, 1, "empty file");
  ++lineno;
  std::istringstream head(line);
  int a = 0, k = 0;
  std::string kind_str;
  if (!(head >> a >> k >> kind_str))
    throw ParseError(name, lineno, "expected header \"a k kind\"");
  if (k != DifferenceArray::kColumns)
    throw ParseError(name, lineno, "k must be 3, got " + std::to_string(k));
  DifferenceArray d;
  d.a = a;
  std::string kind_lower = kind_str;
  std::transform(kind_lower.begin(), kind_lower.end(), kind_lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (kind_lower == "dm")
    d.kind = ArrayKind::DM;
  else if (kind_lower == "dca")
    d.kind = ArrayKind::DCA;
  else
    throw ParseError(name, lineno, "kind must be dm or dca, got \"" + kind_str + "\"");
  if (a < 3) throw ParseError(name, lineno, "a must be >= 3, got " + std::to_string(a));

  d.grid.resize(a);
  for (int i = 0; i < a; ++i) {
    if (!std::getline(in, line))
      throw ParseError(name, lineno + 1, "expected " + std::to_string(a) + " grid rows, got " +
                                             std::to_string(i));
    ++lineno;
    std::istringstream row(line);
    for (int j = 0; j < k; ++j) {
      if (!(row >> d.grid[i][j]))
        throw ParseError(name, lineno, "row " + std::to_string(i) + ": expected " +
                                           std::to_string(k) + " integers");
    }
  }
  return d;
}

void save_difference_array(const DifferenceArray& d, std::ostream& out) {
  out << d.a << ' ' << DifferenceArray::kColumns << ' '
      << (d.kind == ArrayKind::DM ? "dm" : "dca") << '\n';
  for (int i = 0; i < d.a; ++i)
    out << d.grid[i][0] << ' ' << d.grid[i][1] << ' ' << d.grid[i][2] << '\n';
}

}  // namespace qcldpc
