// SPDX-License-Identifier: Apache-2.0
// Exact sparse linear algebra over Q.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace artifact {

using Rat = mpq_class;
using Col = std::uint32_t;

// Sorted by column, no stored zeros.
class SparseVec {
public:
    using Entry = std::pair<Col, Rat>;

    SparseVec() = default;
    static SparseVec unit(Col c, const Rat& v = 1);
    // Accepts unsorted input with repeats; sums duplicates and drops zeros.
    static SparseVec from_entries(std::vector<Entry> e);

    bool empty() const { return e_.empty(); }
    std::size_t size() const { return e_.size(); }
    const std::vector<Entry>& entries() const { return e_; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    Col lead() const { return e_.front().first; }
    const Rat& lead_coef() const { return e_.front().second; }
    // Zero if absent.
    Rat at(Col c) const;

    // this += s * w
    void axpy(const Rat& s, const SparseVec& w);
    void scale(const Rat& s);
    SparseVec operator-() const;

    bool operator==(const SparseVec& o) const { return e_ == o.e_; }
    bool operator!=(const SparseVec& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::vector<Entry> e_;
};

SparseVec operator+(const SparseVec& a, const SparseVec& b);
SparseVec operator-(const SparseVec& a, const SparseVec& b);

// Fully reduced row echelon form; pivot = smallest column, leading entry 1.
struct EchelonBasis {
    std::vector<SparseVec> rows;
    std::vector<Col> pivots;

    std::size_t rank() const { return rows.size(); }
    // Index of the row with this pivot, or -1.
    long find_pivot(Col c) const;
};

EchelonBasis echelonize(const std::vector<SparseVec>& rows);

SparseVec reduce(const SparseVec& v, const EchelonBasis& b);

struct AffineSolution {
    std::optional<SparseVec> particular;
    EchelonBasis kernel;
};

// Solves A x = b, A given by rows over columns [0, nunknowns).
// Free variables are set to zero in the particular solution.
AffineSolution solve_affine(const std::vector<SparseVec>& A, const SparseVec& b,
                            Col nunknowns);

// Row-vector product: returns (A x) as a vector indexed by row.
SparseVec apply_rows(const std::vector<SparseVec>& A, const SparseVec& x);

}  // namespace artifact
