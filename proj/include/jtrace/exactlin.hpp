#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jtrace/rational.hpp"

namespace jtrace::exactlin {

// Sparse row: (column, value) pairs with strictly increasing columns and no
// stored zeros.
using Entry = std::pair<int, Rational>;
using SparseRow = std::vector<Entry>;

SparseRow row_scale(const SparseRow& r, const Rational& c);
SparseRow row_add(const SparseRow& a, const SparseRow& b);
SparseRow row_axpy(const SparseRow& a, const Rational& c, const SparseRow& b);  // a + c*b
Rational row_get(const SparseRow& r, int col);
bool row_is_zero(const SparseRow& r);

struct ExactSparseMatrix {
    int nrows = 0;
    int ncols = 0;
    std::vector<SparseRow> rows;

    ExactSparseMatrix() = default;
    ExactSparseMatrix(int nr, int nc) : nrows(nr), ncols(nc), rows(nr) {}

    static ExactSparseMatrix identity(int n);

    // Appends a row, checking column bounds and ordering.
    void add_row(SparseRow r);
    ExactSparseMatrix transposed() const;
};

// Row rank over the rationals. Deterministic: fraction-free elimination,
// columns in ambient order, pivot = smallest nonzero magnitude, ties broken
// by lowest row index.
int rank(const ExactSparseMatrix& m);

// Rank of the reduction mod `prime`. Throws std::domain_error if any entry
// has a denominator divisible by the prime (caller retries with another).
int modular_rank(const ExactSparseMatrix& m, std::uint64_t prime);

// Deterministic stream of verification primes > 2^20 derived from a seed.
std::uint64_t verification_prime(std::uint64_t seed, int index);

struct QuotientModule {
    int ambient_dim = 0;
    std::vector<int> pivot_columns;              // sorted
    std::vector<int> free_columns;               // sorted; the quotient basis
    ExactSparseMatrix reduced_relation_rows;     // RREF, one row per pivot, pivot value 1

    int dim() const { return static_cast<int>(free_columns.size()); }

    // Canonical representative of [v], as coordinates on free_columns
    // (indices are positions into free_columns). Linear; kills relation rows.
    SparseRow project(const SparseRow& v) const;

    // Writes free coordinates back into the ambient space.
    SparseRow embed(const SparseRow& coords) const;
};

QuotientModule build_quotient(int ambient_dim, const ExactSparseMatrix& relations);

}  // namespace jtrace::exactlin
