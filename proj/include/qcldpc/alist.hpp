#pragma once

#include <iosfwd>
#include <string>

#include "qcldpc/pcm.hpp"

namespace qcldpc {

// MacKay alist, columns first:
//   line 1: "m x"  (variable count, check count)
//   line 2: "max_col_weight max_row_weight"
//   line 3: the m column weights
//   line 4: the x row weights
//   m lines of 1-based row indices per column, zero-padded to max_col_weight
//   x lines of 1-based column indices per row, zero-padded to max_row_weight
// The writer is canonical (sorted supports, single spaces, zero padding) so
// import followed by export is byte-stable.
void export_alist(const ParityCheckMatrix& h, std::ostream& out);
ParityCheckMatrix import_alist(std::istream& in, const std::string& name = "<alist>");

// Same container for a dense generator matrix (role conveyed by the
// .gen.alist extension; alist has no comment syntax).
void export_alist(const BitMatrix& m, std::ostream& out);

// Exponent grid for QC matrices: "z K L" then K lines of L entries, each a
// circulant shift, "R:v" for the all-ones row v, or "-" for a zero block.
void export_expgrid(const BlockGrid& g, std::ostream& out);
BlockGrid import_expgrid(std::istream& in, const std::string& name = "<expgrid>");

}  // namespace qcldpc
