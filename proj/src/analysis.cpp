#include "qcldpc/analysis.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace qcldpc {

std::vector<RcViolation> check_rc(const ParityCheckMatrix& h) {
  std::vector<RcViolation> out;

  // column pairs sharing >= 2 rows, enumerated through the rows
  std::vector<uint64_t> pairs;
  for (int r = 0; r < h.rows(); ++r) {
    auto cols = h.row(r);
    for (size_t i = 0; i < cols.size(); ++i)
      for (size_t j = i + 1; j < cols.size(); ++j)
        pairs.push_back((static_cast<uint64_t>(cols[i]) << 32) | static_cast<uint32_t>(cols[j]));
  }
  std::sort(pairs.begin(), pairs.end());
  for (size_t i = 0; i < pairs.size();) {
    size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    if (j - i >= 2)
      out.push_back(RcViolation{false, static_cast<int>(pairs[i] >> 32),
                                static_cast<int>(pairs[i] & 0xffffffffu),
                                static_cast<int>(j - i)});
    i = j;
  }

  // row pairs sharing >= 2 columns, enumerated through the columns
  pairs.clear();
  for (int b = 0; b < h.cols(); ++b) {
    auto rows = h.col(b);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = i + 1; j < rows.size(); ++j)
        pairs.push_back((static_cast<uint64_t>(rows[i]) << 32) | static_cast<uint32_t>(rows[j]));
  }
  std::sort(pairs.begin(), pairs.end());
  for (size_t i = 0; i < pairs.size();) {
    size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    if (j - i >= 2)
      out.push_back(RcViolation{true, static_cast<int>(pairs[i] >> 32),
                                static_cast<int>(pairs[i] & 0xffffffffu),
                                static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

GirthResult girth(const ParityCheckMatrix& h, int cap) {
  if (cap < 4 || cap % 2 != 0)
    throw std::invalid_argument("girth: cap must be even and >= 4");
  const int m = h.cols(), n = m + h.rows();
  const int depth_limit = cap / 2;
  std::vector<int> dist(n), parent(n), stamp(n, -1), queue;
  queue.reserve(n);
  int best = INT_MAX;

  auto neighbors = [&](int u, auto&& visit) {
    if (u < m) {
      for (int r : h.col(u)) visit(m + r);
    } else {
      for (int b : h.row(u - m)) visit(b);
    }
  };

  for (int s = 0; s < m && best > 4; ++s) {
    queue.clear();
    queue.push_back(s);
    stamp[s] = s;
    dist[s] = 0;
    parent[s] = -1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (dist[u] >= depth_limit) break;  // BFS order: all later nodes at least as deep
      neighbors(u, [&](int w) {
        if (stamp[w] != s) {
          stamp[w] = s;
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  if (best > cap) return GirthResult{0, true};
  return GirthResult{best, false};
}

std::string format_rate_2dp(int num, int den) {
  // round half away from zero at two decimals
  long long v100 = (200LL * num + den) / (2LL * den);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%02lld", v100 / 100, v100 % 100);
  return buf;
}

CodeProfile profile(const ParityCheckMatrix& h, int girth_cap) {
  CodeProfile p;
  p.m = h.cols();
  p.x = h.rows();
  p.rank = gf2_rank(h.to_dense());
  p.dim = p.m - p.rank;
  p.rate_num = p.dim;
  p.rate_den = p.m;
  p.rate = static_cast<double>(p.dim) / p.m;
  p.rate_2dp = format_rate_2dp(p.rate_num, p.rate_den);

  p.col_weight_min = INT_MAX;
  p.col_weight_max = 0;
  for (int b = 0; b < p.m; ++b) {
    int w = static_cast<int>(h.col(b).size());
    p.col_weight_min = std::min(p.col_weight_min, w);
    p.col_weight_max = std::max(p.col_weight_max, w);
  }
  if (p.m == 0) p.col_weight_min = 0;
  for (int r = 0; r < p.x; ++r) p.row_weight_hist[static_cast<int>(h.row(r).size())]++;

  p.girth = girth(h, girth_cap);
  p.rc_ok = check_rc(h).empty();

  const MatrixOrigin& o = h.origin();
  const int a = o.a;
  const bool family = o.builtin_family;
  switch (o.form) {
    case MatrixForm::Construction1:
    case MatrixForm::QuasiCyclic: {
      if (p.rank != 4 * a - 3)
        throw std::logic_error("profile: Construction-1 rank is " + std::to_string(p.rank) +
                               ", expected exactly " + std::to_string(4 * a - 3));
      p.rank_matches_theory = true;
      if (a % 3 != 0) {
        p.stopping_lb = 8;
        p.stopping_provenance = "structure (3 does not divide a)";
      } else {
        p.stopping_lb = 6;
        p.stopping_provenance = "structure (3 divides a; size-6 pattern not excluded)";
      }
      p.min_dist.lb = 8;
      p.min_dist.provenance = "structural bound";
      if (family && o.alpha && check_alpha_conditions(a, *o.alpha)) {
        p.min_dist.lb = 10;
        p.min_dist.provenance = "alpha conditions";
        if (*o.alpha == (a - 1) / 2 && distance10_regime(a)) {
          p.min_dist.ub = 10;
          p.min_dist.provenance = "alpha conditions + weight-10 witness";
        }
      }
      break;
    }
    case MatrixForm::Construction2: {
      if (p.rank > 4 * a - 6)
        throw std::logic_error("profile: Construction-2 rank is " + std::to_string(p.rank) +
                               ", above the proven bound " + std::to_string(4 * a - 6));
      p.rank_matches_theory = (p.rank == 4 * a - 6);
      if (a % 3 != 0) {
        p.stopping_lb = 8;
        p.stopping_provenance = "structure (3 does not divide a)";
      } else {
        p.stopping_lb = 6;
        p.stopping_provenance = "structure (3 divides a; size-6 pattern not excluded)";
      }
      p.min_dist.lb = 8;
      p.min_dist.provenance = "structural bound";
      if (family && a >= 8) {
        p.min_dist.ub = 8;
        p.min_dist.provenance = "structural bound + weight-8 witness";
      }
      break;
    }
    case MatrixForm::Imported: {
      bool zero_col = (p.m > 0 && p.col_weight_min == 0);
      if (zero_col) {
        p.stopping_lb = 1;
        p.stopping_provenance = "zero column";
      } else if (p.rc_ok) {
        p.stopping_lb = p.col_weight_min + 1;
        p.stopping_provenance = "girth >= 6 bound";
      } else {
        p.stopping_lb = 2;
        p.stopping_provenance = "trivial";
      }
      p.min_dist.lb = p.stopping_lb;
      p.min_dist.provenance = "via stopping distance";
      break;
    }
  }
  return p;
}

bool is_stopping_set(const ParityCheckMatrix& h, std::span<const int> columns) {
  std::vector<int> touch(h.rows(), 0);
  for (int b : columns)
    for (int r : h.col(b)) touch[r]++;
  for (int r = 0; r < h.rows(); ++r)
    if (touch[r] == 1) return false;
  return true;
}

namespace {

class StoppingSearcher {
 public:
  StoppingSearcher(const ParityCheckMatrix& h, long long budget)
      : h_(h), touch_(h.rows(), 0), budget_(budget) {
    // The q -> q+1 shift within every z-wide block is a Tanner-graph
    // automorphism of the constructed matrices, so the smallest column of a
    // minimal stopping set may be pinned to the first position of its block.
    if (h.origin().form != MatrixForm::Imported && h.origin().a > 1 &&
        h.cols() % h.origin().a == 0)
      first_col_stride_ = h.origin().a;
    wmax_ = std::max(1, h.max_col_weight());
  }

  long long nodes() const { return nodes_; }
  bool exhausted_budget() const { return exhausted_; }

  // smallest stopping set of exactly `target` columns, or empty
  std::vector<int> search(int target) {
    target_ = target;
    chosen_.clear();
    found_.clear();
    dfs(-1);
    return found_;
  }

 private:
  bool dfs(int last) {
    const int k = static_cast<int>(chosen_.size());
    if (k == target_) {
      if (deficient_ == 0) {
        found_ = chosen_;
        return true;
      }
      return false;
    }
    const int remaining = target_ - k;
    const int limit = h_.cols() - remaining;
    for (int c = (k == 0 ? 0 : last + 1); c <= limit; ++c) {
      if (k == 0 && first_col_stride_ > 1 && c % first_col_stride_ != 0) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      add(c);
      chosen_.push_back(c);
      // each later column repairs at most wmax deficient checks
      if (deficient_ <= wmax_ * (remaining - 1)) {
        if (dfs(c)) return true;
      }
      chosen_.pop_back();
      remove(c);
      if (exhausted_) return false;
    }
    return false;
  }

  void add(int c) {
    for (int r : h_.col(c)) {
      int t = ++touch_[r];
      if (t == 1)
        ++deficient_;
      else if (t == 2)
        --deficient_;
    }
  }
  void remove(int c) {
    for (int r : h_.col(c)) {
      int t = --touch_[r];
      if (t == 1)
        ++deficient_;
      else if (t == 0)
        --deficient_;
    }
  }

  const ParityCheckMatrix& h_;
  std::vector<int> touch_;
  std::vector<int> chosen_;
  std::vector<int> found_;
  int deficient_ = 0;
  int target_ = 0;
  int wmax_ = 1;
  int first_col_stride_ = 1;
  long long nodes_ = 0;
  long long budget_ = 0;
  bool exhausted_ = false;
};

}  // namespace

StoppingSearchResult stopping_distance(const ParityCheckMatrix& h, int max_size,
                                       long long node_budget) {
  if (max_size < 1) throw std::invalid_argument("stopping_distance: max_size must be >= 1");
  StoppingSearchResult res;
  StoppingSearcher searcher(h, node_budget);
  for (int size = 1; size <= max_size; ++size) {
    std::vector<int> found = searcher.search(size);
    res.nodes = searcher.nodes();
    if (searcher.exhausted_budget()) {
      res.status = StoppingSearchResult::Status::Inconclusive;
      res.searched_up_to = size - 1;
      return res;
    }
    if (!found.empty()) {
      res.status = StoppingSearchResult::Status::Found;
      res.size = size;
      res.columns = std::move(found);
      return res;
    }
  }
  res.status = StoppingSearchResult::Status::NoneUpTo;
  res.searched_up_to = max_size;
  return res;
}

int min_distance_bruteforce(const LinearEncoder& e, int dim_cap) {
  if (e.dim > dim_cap)
    throw std::invalid_argument("min_distance_bruteforce: dim " + std::to_string(e.dim) +
                                " exceeds cap " + std::to_string(dim_cap));
  if (e.dim == 0) return 0;  // only the zero word
  const int words = e.generator.words_per_row();
  std::vector<uint64_t> cw(words, 0);
  int best = INT_MAX;
  const uint64_t total = uint64_t{1} << e.dim;
  for (uint64_t k = 1; k < total; ++k) {
    const int i = std::countr_zero(k);
    const uint64_t* row = e.generator.row_words(i);
    int weight = 0;
    for (int w = 0; w < words; ++w) {
      cw[w] ^= row[w];
      weight += std::popcount(cw[w]);
    }
    best = std::min(best, weight);
  }
  return best;
}

std::vector<int> witness_weight8(int a) {
  if (a < 8 || a % 2 != 0)
    throw std::invalid_argument("witness_weight8: a must be even and >= 8 "
                                "(the column formulas degenerate below 8)");
  const int half = a / 2;
  const int r0 = half;
  // columns of H (pre-deletion numbering)
  std::vector<int> pre = {
      1,
      half - 2,
      3 * half - 2,
      2 * a - 1,
      a * (half - 2) + 1,
      a * (half - 2) + half + 2,
      a * (half - 1) + half + 2,
      a * (half - 1) + a - 1,
  };
  std::vector<int> cols;
  cols.reserve(pre.size());
  for (int b : pre) {
    const int v = b / a;
    if (v == r0)
      throw std::logic_error("witness_weight8: column falls in the deleted block");
    cols.push_back(v > r0 ? b - a : b);
  }
  std::sort(cols.begin(), cols.end());

  ParityCheckMatrix h = build_h_bar(build_dca(a), r0);
  std::vector<uint8_t> v(h.cols(), 0);
  for (int b : cols) v[b] = 1;
  if (syndrome_weight(h, v) != 0)
    throw std::logic_error("witness_weight8: column set is not dependent");
  return cols;
}

std::vector<int> witness_weight10(int a) {
  if (a <= 3 || a % 2 == 0)
    throw std::invalid_argument("witness_weight10: a must be odd and > 3");
  if (!distance10_regime(a))
    throw std::invalid_argument("witness_weight10: requires gcd(a,3) = gcd(a,5) = 1");
  const int alpha = (a - 1) / 2;
  const int beta = mod_inverse(alpha, a);
  std::vector<int> cols = {
      2,
      alpha + 1,
      a + 2,
      a + alpha,
      2 * a,
      2 * a + 1,
      beta * a + 1,
      beta * a + alpha + 1,
      (beta + 1) * a,
      (beta + 1) * a + alpha,
  };
  std::sort(cols.begin(), cols.end());

  ParityCheckMatrix h = build_h(build_dm(a, alpha));
  std::vector<uint8_t> v(h.cols(), 0);
  for (int b : cols) v[b] = 1;
  if (syndrome_weight(h, v) != 0)
    throw std::logic_error("witness_weight10: column set is not dependent");
  return cols;
}

bool check_alpha_conditions(int a, int alpha) {
  if (a % 2 == 0) throw std::invalid_argument("check_alpha_conditions: a must be odd");
  for (int i = 0; i <= 3; ++i) {
    if (std::gcd(a, mod_a(alpha - 2 + i, a)) != 1) return false;
  }
  return std::gcd(a, mod_a(2 * alpha - 1, a)) == 1;
}

}  // namespace qcldpc
