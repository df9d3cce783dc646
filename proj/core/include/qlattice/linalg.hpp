#pragma once

#include <cstdint>
#include <vector>

#include "qlattice/finite_field.hpp"

namespace qlattice {

/// Dense row-major matrix over GF(q) element codes.
struct MatrixGF {
    const FieldSpec* field = nullptr;
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> a; // rows * cols entries

    MatrixGF() = default;
    MatrixGF(const FieldSpec& f, int r, int c)
        : field(&f), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::uint8_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// Reduces m to reduced row echelon form in place, drops zero rows, and
/// returns the pivot columns (strictly increasing). Rows end up with leading
/// coefficient 1 and zeros above and below each pivot. Uses an XOR word path
/// for GF(2) with cols <= 64.
std::vector<std::uint8_t> rref_in_place(MatrixGF& m);

int rank_of(MatrixGF m);

/// Rows of a followed by rows of b; ambient checks are the caller's job.
MatrixGF stack_rows(const MatrixGF& a, const MatrixGF& b);

/// Basis of rowspace(a) ∩ rowspace(b) via the Zassenhaus construction,
/// returned in RREF.
MatrixGF intersection_basis(const MatrixGF& a, const MatrixGF& b);

} // namespace qlattice
