#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qcldpc {

enum class ArrayKind { DM, DCA };

// a x 3 array over Z_a. Column 0 is all zeros, column 1 is the row index
// (standard form) and column 2 carries the construction.
struct DifferenceArray {
  int a = 0;
  ArrayKind kind = ArrayKind::DM;
  std::optional<int> alpha;  // generator, when built from the alpha family
  // true for the two built-in families; externally loaded grids are general
  bool builtin_family = false;
  std::vector<std::array<int, 3>> grid;  // grid[i] = {D(i,0), D(i,1), D(i,2)}

  static constexpr int kColumns = 3;

  int entry(int i, int j) const { return grid[i][j]; }
  // the repeated difference of a DCA
  int half() const { return a / 2; }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// D(j,2) = alpha*j mod a. Requires a odd, gcd(alpha,a)=1, gcd(alpha-1,a)=1.
DifferenceArray build_dm(int a, int alpha);

// (a-1)/2 when 3 and 5 do not divide a (the minimum-distance-10 regime),
// otherwise 2. Always a valid build_dm generator.
int select_alpha(int a);

// True when gcd(a,3)=1 and gcd(a,5)=1, i.e. select_alpha returns (a-1)/2
// and the distance-10 guarantee applies.
bool distance10_regime(int a);

// D(j,2) = 2j+1 for j < a/2, 2(j-a/2) otherwise. Requires a even, a >= 4.
DifferenceArray build_dca(int a);

// Checks every invariant of the declared kind; violations are data.
ValidationReport validate(const DifferenceArray& d);

// Row r0 with D(r0,2)-D(r0,1) = a/2 (mod a). Exactly two rows qualify in a
// valid DCA; row a/2 is preferred, else the smaller. `override_row`, when
// given, must be one of the two.
int find_r0(const DifferenceArray& d, std::optional<int> override_row = std::nullopt);

// Plain text: line 1 "a k kind", then a lines of k integers.
DifferenceArray load_difference_array(std::istream& in, const std::string& name = "<stream>");
void save_difference_array(const DifferenceArray& d, std::ostream& out);

// mod-a arithmetic on non-negative representatives
inline int mod_a(long long v, int a) {
  int r = static_cast<int>(v % a);
  return r < 0 ? r + a : r;
}

// multiplicative inverse mod a; throws std::invalid_argument when none exists
int mod_inverse(int v, int a);

}  // namespace qcldpc
