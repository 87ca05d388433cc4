#include "subspace_codec/fq_linalg.hpp"

#include <cstddef>
#include <stdexcept>

#include "subspace_codec/errors.hpp"

namespace subcodec {

Digit fq_pow(Digit a, std::uint64_t e, Digit q) {
    Digit r = 1 % q;
    Digit base = a % q;
    while (e) {
        if (e & 1) r = fq_mul(r, base, q);
        base = fq_mul(base, base, q);
        e >>= 1;
    }
    return r;
}

Digit fq_inv(Digit a, Digit q) {
    if (a % q == 0) throw std::invalid_argument("fq_inv: zero has no inverse");
    // q is prime, so Fermat works and avoids signed extended-gcd bookkeeping.
    return fq_pow(a, q - 2, q);
}

std::vector<std::size_t> rref_in_place(DigitMat& m, Digit q) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        const Digit inv = fq_inv(m[r][c], q);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = fq_mul(m[r][j], inv, q);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Digit f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = fq_sub(m[i][j], fq_mul(f, m[r][j], q), q);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t matrix_rank(DigitMat m, Digit q) { return rref_in_place(m, q).size(); }

DigitMat kernel_basis(const DigitMat& m, std::size_t cols, Digit q) {
    DigitMat red = m;
    const auto pivots = rref_in_place(red, q);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    DigitMat basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        DigitVec x(cols, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = fq_neg(red[i][free], q);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<DigitVec> solve_linear(const DigitMat& a, const DigitVec& b, Digit q) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
    if (a.empty()) return DigitVec{};
    const std::size_t cols = a[0].size();
    DigitMat aug(a.size(), DigitVec(cols + 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j] % q;
        aug[i][cols] = b[i] % q;
    }
    const auto pivots = rref_in_place(aug, q);
    DigitVec x(cols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) return std::nullopt;  // 0 = nonzero row
        x[pivots[i]] = aug[i][cols];
    }
    return x;
}

DigitVec mat_vec(const DigitMat& m, const DigitVec& x, Digit q) {
    DigitVec y(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != x.size()) throw InternalError("mat_vec: dimension mismatch");
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            acc += static_cast<std::uint64_t>(m[i][j]) * x[j];
            if (acc >= (std::uint64_t{1} << 62)) acc %= q;
        }
        y[i] = static_cast<Digit>(acc % q);
    }
    return y;
}

}  // namespace subcodec
