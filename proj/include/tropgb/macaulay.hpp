#pragma once

#include "tropgb/signature.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tropgb {

struct MatrixEntry {
  std::uint32_t col;
  Coeff coef;
};

struct MatrixRow {
  Signature sig;
  std::vector<MatrixEntry> entries;  // nonzero, increasing column index
  std::int32_t pivot = -1;           // set by the reductions; -1 for zero rows
  bool is_zero() const noexcept { return entries.empty(); }
};

/// Rows in increasing signature, columns in decreasing tropical monomial order.
struct MacaulayMatrix {
  std::vector<Monomial> columns;
  std::vector<MatrixRow> rows;

  std::size_t nrows() const noexcept { return rows.size(); }
  std::size_t ncols() const noexcept { return columns.size(); }
};

/// Sorts rows by the signature order; throws std::invalid_argument on a duplicate signature.
MacaulayMatrix build_matrix(std::vector<std::pair<Signature, Polynomial>> rows, const PolyRing& ring,
                            const SignatureOrderContext& ctx);
/// Rows kept in the given order; signatures are placeholders.
MacaulayMatrix build_matrix_unsigned(const std::vector<Polynomial>& rows, const PolyRing& ring);

Polynomial row_polynomial(const MacaulayMatrix& m, std::size_t r, const PolyRing& ring);
Coeff matrix_entry(const MacaulayMatrix& m, std::size_t r, std::size_t c);

/// Column of the greatest term of a row under the tropical term order, or -1.
std::int32_t greatest_term_column(const MatrixRow& row, const MacaulayMatrix& m, const PolyRing& ring);

/// U-factor of the tropical LUP form. Rows are never swapped; each row pivots
/// on its greatest term after elimination by the earlier pivots.
MacaulayMatrix tropical_lup(const MacaulayMatrix& m, const PolyRing& ring);

enum class EchelonMode { full, leading_only };

/// Signature-free elimination picking the greatest remaining term over all
/// rows at each step. In full mode pivots are also cleared above.
MacaulayMatrix tropical_row_echelon(const MacaulayMatrix& m, EchelonMode mode, const PolyRing& ring);

/// True iff, in row order, every nonzero row's greatest term sits in a
/// column that is zero in every later row.
bool is_tropical_row_echelon(const MacaulayMatrix& m, const PolyRing& ring);

struct ExtractResult {
  std::vector<LabeledPolynomial> fresh;
  std::vector<Signature> zero_rows;
  std::size_t nonzero_rows = 0;
};

/// Nonzero rows of U whose leading monomial is not already reached as
/// LM(t·g), g ∈ G, with sugar(t·S(g)) ≤ d and t·S(g) ≤ the row's signature.
/// Elements whose signature index is below exempt_below skip the sugar bound.
ExtractResult extract_new_polynomials(const MacaulayMatrix& u, const std::vector<LabeledPolynomial>& g,
                                      const SignatureOrderContext& ctx, const PolyRing& ring, unsigned d,
                                      std::size_t exempt_below = 0);

/// Columns header line, then one "sig=<mon>*e<i> | <polynomial>" line per row.
std::string dump_matrix(const MacaulayMatrix& m, const PolyRing& ring);

}  // namespace tropgb
