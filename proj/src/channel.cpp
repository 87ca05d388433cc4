#include "subspace_codec/channel.hpp"

#include <stdexcept>

#include "subspace_codec/errors.hpp"

namespace subcodec {

ChannelOutcome transmit(const Subspace& v, const ChannelSpec& spec, Rng& rng) {
    const std::size_t n = v.ambient_dim();
    const Digit q = v.q();
    const std::size_t r = spec.deletions, t = spec.insertions;
    if (r > v.dim()) throw RegimeError("transmit: more deletions than transmitted dimensions");
    if (t > n - v.dim())
        throw RegimeError("transmit: no room for an error space meeting V trivially");

    Subspace h(q, n), e(q, n);
    if (spec.adversarial) {
        h = spec.adversarial->h;
        e = spec.adversarial->e;
        if (h.ambient_dim() != n || e.ambient_dim() != n || h.q() != q || e.q() != q)
            throw std::invalid_argument("transmit: adversarial spaces have wrong ambient");
        if (!is_subspace_of(h, v) || h.dim() != v.dim() - r)
            throw std::invalid_argument("transmit: adversarial H is not a valid retained space");
        if (e.dim() != t || intersect(e, v).dim() != 0)
            throw std::invalid_argument("transmit: adversarial E must meet V only in 0");
    } else {
        h = random_subspace_of(v, v.dim() - r, rng);
        // Error space: grow vector by vector, rejecting anything that falls
        // into V plus the part collected so far. That forces E + V direct.
        Subspace acc = v;
        DigitMat evecs;
        while (evecs.size() < t) {
            DigitVec w(n);
            for (auto& c : w) c = rng.digit(q);
            if (acc.contains(w)) continue;
            evecs.push_back(w);
            acc = sum(acc, Subspace::span(q, n, {w}));
        }
        e = Subspace::span(q, n, evecs);
    }

    ChannelOutcome out{sum(h, e), 0, 0};
    const auto [ins, del] = measure(v, out.received);
    out.realized_insertions = ins;
    out.realized_deletions = del;
    return out;
}

std::pair<std::size_t, std::size_t> measure(const Subspace& v, const Subspace& t) {
    if (v.ambient_dim() != t.ambient_dim() || v.q() != t.q())
        throw std::invalid_argument("measure: ambient space mismatch");
    const std::size_t k = intersect(v, t).dim();
    return {t.dim() - k, v.dim() - k};
}

bool within(const Subspace& v, const Subspace& t, std::size_t t_ins, std::size_t r_del) {
    const auto [ins, del] = measure(v, t);
    return ins <= t_ins && del <= r_del;
}

}  // namespace subcodec
