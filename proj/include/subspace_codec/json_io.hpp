#pragma once

#include <string>

#include <json.hpp>

#include "subspace_codec/bounds.hpp"
#include "subspace_codec/channel.hpp"
#include "subspace_codec/gf.hpp"
#include "subspace_codec/kk.hpp"
#include "subspace_codec/lfrs.hpp"
#include "subspace_codec/linpoly.hpp"
#include "subspace_codec/mv.hpp"

namespace subcodec {

using Json = nlohmann::json;

// Field elements travel as lowercase hex digit strings (most-significant
// digit first); contexts as {q, d, modulus}; subspaces as {q, n, rows} with
// RREF rows rendered coordinate 0 first; messages and linearized polynomials
// index 0 first.

Json field_ctx_to_json(const FieldCtx& ctx);
FieldCtx field_ctx_from_json(const Json& j);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json linpoly_to_json(const FieldCtx& ctx, const LinPoly& f);
LinPoly linpoly_from_json(const FieldCtx& ctx, const Json& j);

std::string message_to_hex(const FieldCtx& ctx, const Message& msg);
Message message_from_hex(const FieldCtx& ctx, const std::string& s, std::size_t k);

Json lfrs_params_to_json(const lfrs::Params& p);
lfrs::Params lfrs_params_from_json(const Json& j);

Json kk_params_to_json(const kk::Params& p);
kk::Params kk_params_from_json(const Json& j);

Json mv_params_to_json(const mv::Params& p);
mv::Params mv_params_from_json(const Json& j);

Json decode_output_to_json(const FieldCtx& ctx, const DecodeOutput& out);

Json channel_outcome_to_json(const ChannelOutcome& out);

Json mc_report_to_json(const bounds::McReport& report);

/// Canonical dump used for every report the tool writes: sorted keys and a
/// fixed indent, so identical runs produce identical bytes.
std::string dump_report(const Json& j);

}  // namespace subcodec
