// Independent reference implementations used as test oracles. Everything here
// deliberately avoids the library's own code paths where a check is supposed
// to be independent: ranks are computed by plain elimination without RREF
// normalization, memberships by exhaustive span enumeration, and decoders by
// enumerating every message.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "subspace_codec/channel.hpp"
#include "subspace_codec/gf.hpp"
#include "subspace_codec/subspace.hpp"

namespace oracles {

using subcodec::Digit;
using subcodec::DigitMat;
using subcodec::DigitVec;

// Rank by forward elimination only (no pivot normalization, no back-substitution).
inline std::size_t plain_rank(DigitMat m, Digit q) {
    using subcodec::fq_inv;
    using subcodec::fq_mul;
    using subcodec::fq_sub;
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (m[i][c] % q != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[rank], m[sel]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c] % q == 0) continue;
            const Digit f = fq_mul(m[i][c] % q, fq_inv(m[rank][c] % q, q), q);
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = fq_sub(m[i][j] % q, fq_mul(f, m[rank][j] % q, q), q);
        }
        ++rank;
    }
    return rank;
}

// All vectors of the row span, found by closing the set under row additions.
inline std::set<DigitVec> span_elements(const DigitMat& rows, std::size_t n, Digit q) {
    std::set<DigitVec> out;
    out.insert(DigitVec(n, 0));
    for (const auto& r : rows) {
        std::set<DigitVec> next = out;
        for (const auto& v : out)
            for (Digit c = 1; c < q; ++c) {
                DigitVec w = v;
                for (std::size_t i = 0; i < n; ++i)
                    w[i] = subcodec::fq_add(w[i], subcodec::fq_mul(c, r[i] % q, q), q);
                next.insert(w);
            }
        out = std::move(next);
    }
    return out;
}

// Every subspace of F_q^n as a canonical Subspace, by spanning all subsets of
// nonzero vectors. Only sane for q = 2 and n <= 4.
inline std::vector<subcodec::Subspace> all_subspaces(Digit q, std::size_t n) {
    std::vector<DigitVec> vecs;
    const std::size_t total = static_cast<std::size_t>(1) << n;  // q = 2 only
    for (std::size_t v = 1; v < total; ++v) {
        DigitVec w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = (v >> i) & 1;
        vecs.push_back(w);
    }
    std::set<std::vector<DigitVec>> seen;
    std::vector<subcodec::Subspace> out;
    const std::size_t subsets = static_cast<std::size_t>(1) << vecs.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        DigitMat rows;
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if ((mask >> i) & 1) rows.push_back(vecs[i]);
        auto s = subcodec::Subspace::span(q, n, rows);
        if (seen.insert(s.basis()).second) out.push_back(std::move(s));
    }
    return out;
}

// Definition-level reachability: T = H_p(V) + E for some subspace H of V and
// error space E with E cap V = 0, dim E <= t, ell - p <= r. Enumerates H and
// E over all subspaces of a tiny ambient.
inline bool within_by_definition(const subcodec::Subspace& v, const subcodec::Subspace& t,
                                 std::size_t t_ins, std::size_t r_del,
                                 const std::vector<subcodec::Subspace>& all) {
    for (const auto& h : all) {
        if (!subcodec::is_subspace_of(h, v)) continue;
        if (v.dim() - h.dim() > r_del) continue;
        for (const auto& e : all) {
            if (e.dim() > t_ins) continue;
            if (subcodec::intersect(e, v).dim() != 0) continue;
            if (sum(h, e) == t) return true;
        }
    }
    return false;
}

// Brute-force list decoder: all messages whose codeword lies within (t, r).
template <typename EncodeFn>
std::vector<DigitVec> brute_force_list(Digit q, std::size_t k, EncodeFn&& encode,
                                                const subcodec::Subspace& received,
                                                std::size_t t, std::size_t r) {
    std::vector<DigitVec> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= q;
    for (std::size_t v = 0; v < total; ++v) {
            DigitVec msg(k);
        std::size_t x = v;
        for (std::size_t i = 0; i < k; ++i) {
            msg[i] = static_cast<Digit>(x % q);
            x /= q;
        }
        if (subcodec::within(encode(msg), received, t, r)) out.push_back(msg);
    }
    return out;
}

inline std::vector<DigitVec> sorted_msgs(std::vector<DigitVec> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace oracles
