#include "subspace_codec/subspace.hpp"

#include <stdexcept>

#include "subspace_codec/errors.hpp"

namespace subcodec {

Subspace Subspace::span(Digit q, std::size_t n, const DigitMat& vectors) {
    Subspace s(q, n);
    DigitMat m;
    m.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != n) throw std::invalid_argument("span: vector length mismatch");
        DigitVec row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = v[i] % q;
        m.push_back(std::move(row));
    }
    const auto pivots = rref_in_place(m, q);
    m.resize(pivots.size());
    s.rows_ = std::move(m);
    return s;
}

bool Subspace::contains(const DigitVec& v) const {
    if (v.size() != n_) throw std::invalid_argument("contains: ambient mismatch");
    DigitVec w(n_);
    for (std::size_t i = 0; i < n_; ++i) w[i] = v[i] % q_;
    for (const auto& row : rows_) {
        std::size_t p = 0;
        while (p < n_ && row[p] == 0) ++p;
        if (p == n_ || w[p] == 0) continue;
        const Digit f = w[p];  // pivot of an RREF row is 1
        for (std::size_t j = p; j < n_; ++j) w[j] = fq_sub(w[j], fq_mul(f, row[j], q_), q_);
    }
    for (auto c : w)
        if (c != 0) return false;
    return true;
}

namespace {
void require_compatible(const Subspace& u, const Subspace& v, const char* op) {
    if (u.ambient_dim() != v.ambient_dim() || u.q() != v.q())
        throw std::invalid_argument(std::string(op) + ": ambient space mismatch");
}
}  // namespace

Subspace sum(const Subspace& u, const Subspace& v) {
    require_compatible(u, v, "sum");
    DigitMat m = u.basis();
    for (const auto& row : v.basis()) m.push_back(row);
    return Subspace::span(u.q(), u.ambient_dim(), m);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    require_compatible(u, v, "intersect");
    const std::size_t n = u.ambient_dim();
    const Digit q = u.q();
    // Zassenhaus: rows [x | x] for x in U and [y | 0] for y in V; after
    // elimination, rows with zero left half carry an intersection basis on
    // the right.
    DigitMat m;
    for (const auto& x : u.basis()) {
        DigitVec row(2 * n, 0);
        for (std::size_t i = 0; i < n; ++i) row[i] = row[n + i] = x[i];
        m.push_back(std::move(row));
    }
    for (const auto& y : v.basis()) {
        DigitVec row(2 * n, 0);
        for (std::size_t i = 0; i < n; ++i) row[i] = y[i];
        m.push_back(std::move(row));
    }
    rref_in_place(m, q);
    DigitMat inter;
    for (const auto& row : m) {
        bool left_zero = true;
        for (std::size_t i = 0; i < n && left_zero; ++i) left_zero = row[i] == 0;
        if (!left_zero) continue;
        DigitVec r(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
        bool zero = true;
        for (auto c : r)
            if (c != 0) zero = false;
        if (!zero) inter.push_back(std::move(r));
    }
    return Subspace::span(q, n, inter);
}

std::size_t distance(const Subspace& u, const Subspace& v) {
    require_compatible(u, v, "distance");
    return u.dim() + v.dim() - 2 * intersect(u, v).dim();
}

bool is_subspace_of(const Subspace& u, const Subspace& v) {
    require_compatible(u, v, "is_subspace_of");
    for (const auto& row : u.basis())
        if (!v.contains(row)) return false;
    return true;
}

Subspace random_subspace(Digit q, std::size_t n, std::size_t d, Rng& rng) {
    if (d > n) throw std::invalid_argument("random_subspace: dimension exceeds ambient");
    if (d == 0) return Subspace(q, n);
    for (;;) {
        DigitMat m(d, DigitVec(n));
        for (auto& row : m)
            for (auto& c : row) c = rng.digit(q);
        if (matrix_rank(m, q) == d) return Subspace::span(q, n, m);
    }
}

Subspace random_subspace_of(const Subspace& v, std::size_t d, Rng& rng) {
    if (d > v.dim()) throw std::invalid_argument("random_subspace_of: dimension exceeds dim(V)");
    if (d == 0) return Subspace(v.q(), v.ambient_dim());
    const std::size_t k = v.dim();
    for (;;) {
        DigitMat coeff(d, DigitVec(k));
        for (auto& row : coeff)
            for (auto& c : row) c = rng.digit(v.q());
        if (matrix_rank(coeff, v.q()) != d) continue;
        DigitMat rows;
        for (const auto& cr : coeff) {
            DigitVec w(v.ambient_dim(), 0);
            for (std::size_t b = 0; b < k; ++b) {
                if (cr[b] == 0) continue;
                for (std::size_t j = 0; j < w.size(); ++j)
                    w[j] = fq_add(w[j], fq_mul(cr[b], v.basis()[b][j], v.q()), v.q());
            }
            rows.push_back(std::move(w));
        }
        return Subspace::span(v.q(), v.ambient_dim(), rows);
    }
}

}  // namespace subcodec
