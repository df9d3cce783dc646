#include "qlattice/linalg.hpp"

#include <algorithm>

namespace qlattice {

namespace {

// GF(2) rows packed as words, column c at bit (cols-1-c) so the leading
// column of a row is its highest set bit.
std::vector<std::uint8_t> rref_gf2(MatrixGF& m) {
    const int n = m.cols;
    std::vector<std::uint64_t> w(m.rows, 0);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < n; ++c)
            if (m.at(r, c)) w[r] |= std::uint64_t(1) << (n - 1 - c);

    std::vector<std::uint8_t> pivots;
    int rr = 0;
    for (int c = 0; c < n && rr < static_cast<int>(w.size()); ++c) {
        const std::uint64_t bit = std::uint64_t(1) << (n - 1 - c);
        int pr = -1;
        for (int r = rr; r < static_cast<int>(w.size()); ++r)
            if (w[r] & bit) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(w[rr], w[pr]);
        for (int r = 0; r < static_cast<int>(w.size()); ++r)
            if (r != rr && (w[r] & bit)) w[r] ^= w[rr];
        pivots.push_back(static_cast<std::uint8_t>(c));
        ++rr;
    }

    m.rows = rr;
    m.a.assign(static_cast<std::size_t>(rr) * n, 0);
    for (int r = 0; r < rr; ++r)
        for (int c = 0; c < n; ++c)
            if (w[r] & (std::uint64_t(1) << (n - 1 - c))) m.at(r, c) = 1;
    return pivots;
}

} // namespace

std::vector<std::uint8_t> rref_in_place(MatrixGF& m) {
    if (m.field->q() == 2 && m.cols <= 64) return rref_gf2(m);

    const FieldSpec& f = *m.field;
    std::vector<std::uint8_t> pivots;
    int rr = 0;
    for (int c = 0; c < m.cols && rr < m.rows; ++c) {
        int pr = -1;
        for (int r = rr; r < m.rows; ++r)
            if (m.at(r, c) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != rr)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(rr, j));
        const std::uint8_t lead = m.at(rr, c);
        if (lead != 1) {
            const std::uint8_t s = f.inv(lead);
            for (int j = c; j < m.cols; ++j) m.at(rr, j) = f.mul(m.at(rr, j), s);
        }
        for (int r = 0; r < m.rows; ++r) {
            if (r == rr) continue;
            const std::uint8_t x = m.at(r, c);
            if (x == 0) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(r, j) = f.sub(m.at(r, j), f.mul(x, m.at(rr, j)));
        }
        pivots.push_back(static_cast<std::uint8_t>(c));
        ++rr;
    }
    m.rows = rr;
    m.a.resize(static_cast<std::size_t>(rr) * m.cols);
    return pivots;
}

int rank_of(MatrixGF m) {
    rref_in_place(m);
    return m.rows;
}

MatrixGF stack_rows(const MatrixGF& a, const MatrixGF& b) {
    MatrixGF s(*a.field, a.rows + b.rows, a.cols);
    std::copy(a.a.begin(), a.a.end(), s.a.begin());
    std::copy(b.a.begin(), b.a.end(), s.a.begin() + a.a.size());
    return s;
}

MatrixGF intersection_basis(const MatrixGF& a, const MatrixGF& b) {
    const FieldSpec& f = *a.field;
    const int n = a.cols;
    // [A | A] over [B | 0]; after elimination the rows whose left half is
    // zero carry a basis of the intersection in their right half.
    MatrixGF z(f, a.rows + b.rows, 2 * n);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < n; ++c) {
            z.at(r, c) = a.at(r, c);
            z.at(r, n + c) = a.at(r, c);
        }
    for (int r = 0; r < b.rows; ++r)
        for (int c = 0; c < n; ++c) z.at(a.rows + r, c) = b.at(r, c);

    // The GF(2) fast path needs cols <= 64; fall back to the generic loop by
    // running it on the wide matrix directly (the generic path has no width
    // limit, and rref_in_place only takes the word path when 2n <= 64).
    rref_in_place(z);

    MatrixGF out(f, 0, n);
    for (int r = 0; r < z.rows; ++r) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c)
            if (z.at(r, c) != 0) left_zero = false;
        if (!left_zero) continue;
        out.rows += 1;
        for (int c = 0; c < n; ++c) out.a.push_back(z.at(r, n + c));
    }
    rref_in_place(out);
    return out;
}

} // namespace qlattice
