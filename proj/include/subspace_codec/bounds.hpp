#pragma once

#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <string>

#include "subspace_codec/fq_linalg.hpp"

namespace subcodec::bounds {

using Rat = boost::rational<long long>;

/// Parses "a/b", plain integers, and finite decimals ("0.4") exactly.
Rat parse_rational(const std::string& s);
std::string rational_str(const Rat& r);

/// Query against the random-coding trade-off: insertion fraction tau = t/ell,
/// deletion fraction rho = r/ell, list size L, rate R.
struct TradeoffQuery {
    Rat tau;
    Rat rho;
    long long list_size = 1;
    Rat rate;
};

/// Exact evaluation of tau + (L+1) rho < L - (L+1) R. With sharp set, the
/// unproven tightening tau + L rho < L - (L+1) R is used instead.
bool radius_ok(const TradeoffQuery& query, bool sharp = false);

struct McParams {
    Digit q = 2;
    std::size_t n = 0;
    std::size_t ell = 0;
    std::size_t code_size = 0;  // M
    std::size_t t = 0;
    std::size_t r = 0;
    std::size_t list_size = 0;  // L
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

struct McReport {
    McParams params;
    std::size_t max_list_observed = 0;
    std::size_t violations = 0;  // trials where some T exceeded L
    bool violation_found = false;
};

/// Monte-Carlo falsification harness for the trade-off: samples random codes
/// of M uniform ell-dimensional subspaces, then received spaces of every
/// dimension in [ell-r, ell+t], and counts codewords within (t, r). Reports
/// the largest list seen. This searches for counterexamples; it proves
/// nothing.
McReport mc_check(const McParams& params);

}  // namespace subcodec::bounds
