#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "subspace_codec/json_io.hpp"

namespace subcodec::experiment {

/// Worker count: SUBSPACE_CODEC_THREADS if set, hardware concurrency
/// otherwise, always at least 1.
std::size_t thread_cap();

/// Index-parallel loop with deterministic output: body(i) must only touch
/// slot i of whatever it writes.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Deterministic parameter generation. Evaluation points are the Frobenius
/// orbit of a seeded normal element (which keeps every alpha_i normal, as kk
/// requires); the decoder gamma comes from a derived seed.
lfrs::Params gen_lfrs_params(std::uint32_t q, std::size_t m, std::size_t ell, std::size_t k,
                             std::size_t s, std::uint64_t seed);
kk::Params gen_kk_params(std::uint32_t q, std::size_t m, std::size_t ell, std::size_t k,
                         std::size_t s, std::uint64_t seed);

struct RoundtripConfig {
    std::string family;  // lfrs | kk | mv
    Json params;         // embedded params document
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (t, r)
    bool sweep = false;  // replace pairs by the whole feasible radius region
    std::size_t trials = 1;
    std::uint64_t seed = 0;
};

/// Runs encode -> transmit -> decode trials per (t, r) pair and aggregates
/// success (transmitted message in the verified list), list sizes and branch
/// counts. The report embeds the resolved config and carries no timing, so
/// identical config and seed give byte-identical output.
Json run_roundtrip(const RoundtripConfig& config);

Json parse_roundtrip_report_config(const Json& report);

}  // namespace subcodec::experiment
