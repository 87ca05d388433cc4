#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "subspace_codec/rng.hpp"
#include "subspace_codec/subspace.hpp"

namespace subcodec {

/// Deletion/insertion plan for one use of the operator channel. In random
/// mode the retained subspace and the error space are sampled; adversarial
/// mode takes them explicitly (H must be a subspace of the transmitted V with
/// dim(V)-r dimensions, E must meet V trivially with t dimensions).
struct ChannelSpec {
    std::size_t deletions = 0;   // r
    std::size_t insertions = 0;  // t
    struct Adversarial {
        Subspace h;
        Subspace e;
    };
    std::optional<Adversarial> adversarial;
};

struct ChannelOutcome {
    Subspace received;
    std::size_t realized_deletions = 0;
    std::size_t realized_insertions = 0;
};

/// One channel use: received = H + E with H a (dim V - r)-dimensional
/// subspace of V and E a t-dimensional error space meeting V only in 0.
ChannelOutcome transmit(const Subspace& v, const ChannelSpec& spec, Rng& rng);

/// Minimal (insertions, deletions) turning V into T:
/// (dim T - dim(V cap T), dim V - dim(V cap T)).
std::pair<std::size_t, std::size_t> measure(const Subspace& v, const Subspace& t);

/// Whether T is reachable from V with at most t_ins insertions and r_del
/// deletions. This is the oracle predicate behind every brute-force decoding
/// reference in the test suite.
bool within(const Subspace& v, const Subspace& t, std::size_t t_ins, std::size_t r_del);

}  // namespace subcodec
