#include "qcldpc/alist.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "qcldpc/parse_error.hpp"

namespace qcldpc {

namespace {

void write_padded_line(std::ostream& out, std::span<const int> entries, size_t width,
                       int index_base) {
  for (size_t i = 0; i < width; ++i) {
    if (i) out << ' ';
    if (i < entries.size())
      out << entries[i] + index_base;
    else
      out << 0;
  }
  out << '\n';
}

class LineReader {
 public:
  LineReader(std::istream& in, const std::string& name) : in_(in), name_(name) {}

  std::vector<long long> next_ints(const std::string& what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      std::istringstream ss(line);
      std::vector<long long> vals;
      long long v;
      while (ss >> v) vals.push_back(v);
      if (!ss.eof()) fail("unexpected token while reading " + what);
      if (!vals.empty()) return vals;  // skip blank lines
    }
    fail("unexpected end of file while reading " + what);
    return {};
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(name_, lineno_, msg); }
  int lineno() const { return lineno_; }

 private:
  std::istream& in_;
  std::string name_;
  int lineno_ = 0;
};

}  // namespace

void export_alist(const ParityCheckMatrix& h, std::ostream& out) {
  const int m = h.cols(), x = h.rows();
  const size_t wc = static_cast<size_t>(h.max_col_weight());
  const size_t wr = static_cast<size_t>(h.max_row_weight());
  out << m << ' ' << x << '\n';
  out << wc << ' ' << wr << '\n';
  for (int b = 0; b < m; ++b) out << (b ? " " : "") << h.col(b).size();
  out << '\n';
  for (int r = 0; r < x; ++r) out << (r ? " " : "") << h.row(r).size();
  out << '\n';
  for (int b = 0; b < m; ++b) write_padded_line(out, h.col(b), wc, 1);
  for (int r = 0; r < x; ++r) write_padded_line(out, h.row(r), wr, 1);
}

void export_alist(const BitMatrix& g, std::ostream& out) {
  std::vector<std::vector<int>> cols(g.cols());
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c)
      if (g.get(r, c)) cols[c].push_back(r);
  ParityCheckMatrix as_pcm(g.rows(), g.cols(), std::move(cols));
  export_alist(as_pcm, out);
}

ParityCheckMatrix import_alist(std::istream& in, const std::string& name) {
  LineReader reader(in, name);

  auto header = reader.next_ints("header");
  if (header.size() != 2) reader.fail("expected \"m x\" on line 1");
  const long long m = header[0], x = header[1];
  if (m <= 0 || x <= 0 || m > 1'000'000 || x > 1'000'000)
    reader.fail("unreasonable dimensions " + std::to_string(m) + " x " + std::to_string(x));

  auto maxima = reader.next_ints("max weights");
  if (maxima.size() != 2) reader.fail("expected \"max_col_weight max_row_weight\"");
  const long long wc = maxima[0], wr = maxima[1];
  if (wc < 0 || wc > x || wr < 0 || wr > m) reader.fail("max weights out of range");

  auto col_deg = reader.next_ints("column weights");
  if (static_cast<long long>(col_deg.size()) != m)
    reader.fail("expected " + std::to_string(m) + " column weights, got " +
                std::to_string(col_deg.size()));
  auto row_deg = reader.next_ints("row weights");
  if (static_cast<long long>(row_deg.size()) != x)
    reader.fail("expected " + std::to_string(x) + " row weights, got " +
                std::to_string(row_deg.size()));

  for (long long b = 0; b < m; ++b)
    if (col_deg[b] < 0 || col_deg[b] > wc)
      reader.fail("column " + std::to_string(b + 1) + ": weight " + std::to_string(col_deg[b]) +
                  " exceeds declared maximum " + std::to_string(wc));
  for (long long r = 0; r < x; ++r)
    if (row_deg[r] < 0 || row_deg[r] > wr)
      reader.fail("row " + std::to_string(r + 1) + ": weight " + std::to_string(row_deg[r]) +
                  " exceeds declared maximum " + std::to_string(wr));

  std::vector<std::vector<int>> cols(m);
  for (long long b = 0; b < m; ++b) {
    auto entries = reader.next_ints("column support");
    // degree entries, optionally zero-padded to wc
    if (static_cast<long long>(entries.size()) < col_deg[b] ||
        static_cast<long long>(entries.size()) > wc)
      reader.fail("column " + std::to_string(b + 1) + ": expected " + std::to_string(col_deg[b]) +
                  " indices");
    for (long long k = 0; k < static_cast<long long>(entries.size()); ++k) {
      long long v = entries[k];
      if (k < col_deg[b]) {
        if (v < 1 || v > x)
          reader.fail("column " + std::to_string(b + 1) + ": row index " + std::to_string(v) +
                      " out of range 1.." + std::to_string(x));
        cols[b].push_back(static_cast<int>(v - 1));
      } else if (v != 0) {
        reader.fail("column " + std::to_string(b + 1) + ": expected zero padding, got " +
                    std::to_string(v));
      }
    }
    std::sort(cols[b].begin(), cols[b].end());
    for (size_t k = 1; k < cols[b].size(); ++k)
      if (cols[b][k] == cols[b][k - 1])
        reader.fail("column " + std::to_string(b + 1) + ": duplicate row index " +
                    std::to_string(cols[b][k] + 1));
  }

  // row lists: validated for consistency against the column lists
  std::vector<std::vector<int>> rows(x);
  for (long long r = 0; r < x; ++r) {
    auto entries = reader.next_ints("row support");
    if (static_cast<long long>(entries.size()) < row_deg[r] ||
        static_cast<long long>(entries.size()) > wr)
      reader.fail("row " + std::to_string(r + 1) + ": expected " + std::to_string(row_deg[r]) +
                  " indices");
    for (long long k = 0; k < static_cast<long long>(entries.size()); ++k) {
      long long v = entries[k];
      if (k < row_deg[r]) {
        if (v < 1 || v > m)
          reader.fail("row " + std::to_string(r + 1) + ": column index " + std::to_string(v) +
                      " out of range 1.." + std::to_string(m));
        rows[r].push_back(static_cast<int>(v - 1));
      } else if (v != 0) {
        reader.fail("row " + std::to_string(r + 1) + ": expected zero padding, got " +
                    std::to_string(v));
      }
    }
    std::sort(rows[r].begin(), rows[r].end());
  }

  ParityCheckMatrix h(static_cast<int>(x), static_cast<int>(m), std::move(cols),
                      MatrixOrigin{MatrixForm::Imported, 0, std::nullopt, std::nullopt});
  for (long long r = 0; r < x; ++r) {
    auto got = h.row(static_cast<int>(r));
    if (!std::equal(got.begin(), got.end(), rows[r].begin(), rows[r].end()))
      throw ParseError(name, reader.lineno(),
                       "row " + std::to_string(r + 1) +
                           " support disagrees with the column supports");
  }
  return h;
}

void export_expgrid(const BlockGrid& g, std::ostream& out) {
  out << g.z << ' ' << g.band_rows << ' ' << g.band_cols << '\n';
  for (int k = 0; k < g.band_rows; ++k) {
    for (int j = 0; j < g.band_cols; ++j) {
      if (j) out << ' ';
      const BlockEntry& e = g.at(k, j);
      switch (e.kind) {
        case BlockKind::Zero: out << '-'; break;
        case BlockKind::Circulant: out << e.value; break;
        case BlockKind::RowBlock: out << "R:" << e.value; break;
      }
    }
    out << '\n';
  }
}

BlockGrid import_expgrid(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw ParseError(name, 1, "empty file");
  ++lineno;
  std::istringstream head(line);
  BlockGrid g;
  if (!(head >> g.z >> g.band_rows >> g.band_cols) || g.z <= 0 || g.band_rows <= 0 ||
      g.band_cols <= 0)
    throw ParseError(name, lineno, "expected header \"z K L\"");
  g.cells.resize(static_cast<size_t>(g.band_rows) * g.band_cols);
  for (int k = 0; k < g.band_rows; ++k) {
    if (!std::getline(in, line))
      throw ParseError(name, lineno + 1, "expected " + std::to_string(g.band_rows) +
                                             " grid rows, got " + std::to_string(k));
    ++lineno;
    std::istringstream row(line);
    for (int j = 0; j < g.band_cols; ++j) {
      std::string tok;
      if (!(row >> tok))
        throw ParseError(name, lineno, "expected " + std::to_string(g.band_cols) + " entries");
      BlockEntry e;
      try {
        if (tok == "-") {
          e = {BlockKind::Zero, 0};
        } else if (tok.rfind("R:", 0) == 0) {
          e = {BlockKind::RowBlock, std::stoi(tok.substr(2))};
        } else {
          e = {BlockKind::Circulant, std::stoi(tok)};
        }
      } catch (const std::exception&) {
        throw ParseError(name, lineno, "bad entry \"" + tok + "\"");
      }
      if (e.value < 0 || e.value >= g.z)
        throw ParseError(name, lineno, "entry \"" + tok + "\" out of range for z=" +
                                           std::to_string(g.z));
      g.at(k, j) = e;
    }
  }
  return g;
}

}  // namespace qcldpc
