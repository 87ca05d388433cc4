#include "subspace_codec/json_io.hpp"

#include <stdexcept>

#include "subspace_codec/errors.hpp"

namespace subcodec {

namespace {

char hex_char(Digit v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

Digit hex_val(char c) {
    if (c >= '0' && c <= '9') return static_cast<Digit>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<Digit>(10 + c - 'a');
    throw std::invalid_argument("bad hex character");
}

std::string digits_to_hex(const DigitVec& v, std::uint32_t width) {
    std::string s;
    s.reserve(v.size() * width);
    for (Digit d : v)
        for (std::uint32_t w = width; w-- > 0;) s.push_back(hex_char((d >> (4 * w)) & 0xf));
    return s;
}

DigitVec digits_from_hex(const std::string& s, std::size_t count, std::uint32_t width, Digit q) {
    if (s.size() != count * width) throw std::invalid_argument("digit string has wrong length");
    DigitVec v(count, 0);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < count; ++i) {
        Digit d = 0;
        for (std::uint32_t w = 0; w < width; ++w) d = (d << 4) | hex_val(s[pos++]);
        if (d >= q) throw std::invalid_argument("digit out of range");
        v[i] = d;
    }
    return v;
}

std::uint32_t hex_width_for(Digit q) {
    std::uint32_t w = 1;
    Digit m = q - 1;
    while (m >= 16) {
        m /= 16;
        ++w;
    }
    return w;
}

}  // namespace

Json field_ctx_to_json(const FieldCtx& ctx) {
    return Json{{"q", ctx.q()}, {"d", ctx.degree()}, {"modulus", ctx.modulus()}};
}

FieldCtx field_ctx_from_json(const Json& j) {
    FieldCtx ctx = make_field(j.at("q").get<std::uint32_t>(), j.at("d").get<std::uint32_t>());
    if (j.contains("modulus") && j.at("modulus").get<DigitVec>() != ctx.modulus())
        throw std::invalid_argument(
            "field context: stored modulus differs from the deterministic choice");
    return ctx;
}

Json subspace_to_json(const Subspace& s) {
    const std::uint32_t w = hex_width_for(s.q());
    Json rows = Json::array();
    for (const auto& row : s.basis()) rows.push_back(digits_to_hex(row, w));
    return Json{{"q", s.q()}, {"n", s.ambient_dim()}, {"rows", rows}};
}

Subspace subspace_from_json(const Json& j) {
    const Digit q = j.at("q").get<Digit>();
    const std::size_t n = j.at("n").get<std::size_t>();
    const std::uint32_t w = hex_width_for(q);
    DigitMat rows;
    for (const auto& r : j.at("rows"))
        rows.push_back(digits_from_hex(r.get<std::string>(), n, w, q));
    return Subspace::span(q, n, rows);
}

Json linpoly_to_json(const FieldCtx& ctx, const LinPoly& f) {
    Json arr = Json::array();
    for (const auto& c : f.coeffs) arr.push_back(ctx.to_hex(c));
    return arr;
}

LinPoly linpoly_from_json(const FieldCtx& ctx, const Json& j) {
    std::vector<FieldElem> coeffs;
    for (const auto& c : j) coeffs.push_back(ctx.from_hex(c.get<std::string>()));
    return lp_from_coeffs(ctx, std::move(coeffs));
}

std::string message_to_hex(const FieldCtx& ctx, const Message& msg) {
    return digits_to_hex(msg, hex_width_for(ctx.q()));
}

Message message_from_hex(const FieldCtx& ctx, const std::string& s, std::size_t k) {
    return digits_from_hex(s, k, hex_width_for(ctx.q()), ctx.q());
}

Json lfrs_params_to_json(const lfrs::Params& p) {
    Json alphas = Json::array();
    for (const auto& a : p.alphas) alphas.push_back(p.field.to_hex(a));
    return Json{{"family", "lfrs"},       {"field", field_ctx_to_json(p.field)},
                {"ell", p.ell},           {"s", p.s},
                {"k", p.k},               {"alphas", alphas},
                {"gamma", p.field.to_hex(p.gamma)}};
}

lfrs::Params lfrs_params_from_json(const Json& j) {
    if (j.at("family").get<std::string>() != "lfrs")
        throw std::invalid_argument("params file is not an lfrs params file");
    lfrs::Params p;
    p.field = field_ctx_from_json(j.at("field"));
    p.ell = j.at("ell").get<std::size_t>();
    p.s = j.at("s").get<std::size_t>();
    p.k = j.at("k").get<std::size_t>();
    for (const auto& a : j.at("alphas")) p.alphas.push_back(p.field.from_hex(a.get<std::string>()));
    p.gamma = p.field.from_hex(j.at("gamma").get<std::string>());
    p.validate();
    return p;
}

Json kk_params_to_json(const kk::Params& p) {
    Json alphas = Json::array();
    for (const auto& a : p.alphas) alphas.push_back(p.field.to_hex(a));
    return Json{{"family", "kk"},         {"field", field_ctx_to_json(p.field)},
                {"ell", p.ell},           {"s", p.s},
                {"k", p.k},               {"alphas", alphas},
                {"gamma", p.field.to_hex(p.gamma)}};
}

kk::Params kk_params_from_json(const Json& j) {
    if (j.at("family").get<std::string>() != "kk")
        throw std::invalid_argument("params file is not a kk params file");
    kk::Params p;
    p.field = field_ctx_from_json(j.at("field"));
    p.ell = j.at("ell").get<std::size_t>();
    p.s = j.at("s").get<std::size_t>();
    p.k = j.at("k").get<std::size_t>();
    for (const auto& a : j.at("alphas")) p.alphas.push_back(p.field.from_hex(a.get<std::string>()));
    p.gamma = p.field.from_hex(j.at("gamma").get<std::string>());
    p.validate();
    return p;
}

Json mv_params_to_json(const mv::Params& p) {
    Json alphas = Json::array();
    for (const auto& a : p.alphas) alphas.push_back(p.field.to_hex(a));
    Json basis = Json::array();
    for (const auto& b : p.subfield_basis) basis.push_back(p.field.to_hex(b));
    return Json{{"family", "mv"},
                {"field", field_ctx_to_json(p.field)},
                {"m", p.m},
                {"ell", p.ell},
                {"k", p.k},
                {"s", p.s},
                {"e", p.roots_of_unity},
                {"beta", p.field.to_hex(p.beta)},
                {"alphas", alphas},
                {"gamma", p.field.to_hex(p.gamma)},
                {"subfield_basis", basis}};
}

mv::Params mv_params_from_json(const Json& j) {
    if (j.at("family").get<std::string>() != "mv")
        throw std::invalid_argument("params file is not an mv params file");
    mv::Params p;
    p.field = field_ctx_from_json(j.at("field"));
    p.m = j.at("m").get<std::size_t>();
    p.ell = j.at("ell").get<std::size_t>();
    p.k = j.at("k").get<std::size_t>();
    p.s = j.at("s").get<std::size_t>();
    p.roots_of_unity = j.at("e").get<std::vector<Digit>>();
    p.beta = p.field.from_hex(j.at("beta").get<std::string>());
    for (const auto& a : j.at("alphas")) p.alphas.push_back(p.field.from_hex(a.get<std::string>()));
    p.gamma = p.field.from_hex(j.at("gamma").get<std::string>());
    for (const auto& b : j.at("subfield_basis"))
        p.subfield_basis.push_back(p.field.from_hex(b.get<std::string>()));
    p.validate();
    return p;
}

Json decode_output_to_json(const FieldCtx& ctx, const DecodeOutput& out) {
    Json cands = Json::array();
    for (const auto& c : out.candidates) cands.push_back(message_to_hex(ctx, c));
    Json verified = Json::array();
    for (bool v : out.verified) verified.push_back(v);
    return Json{{"branch_positions", out.branch_positions},
                {"candidates", cands},
                {"verified", verified},
                {"folding_used", out.folding_used}};
}

Json channel_outcome_to_json(const ChannelOutcome& out) {
    return Json{{"received", subspace_to_json(out.received)},
                {"realized_insertions", out.realized_insertions},
                {"realized_deletions", out.realized_deletions}};
}

Json mc_report_to_json(const bounds::McReport& r) {
    return Json{{"q", r.params.q},
                {"n", r.params.n},
                {"ell", r.params.ell},
                {"M", r.params.code_size},
                {"t", r.params.t},
                {"r", r.params.r},
                {"L", r.params.list_size},
                {"trials", r.params.trials},
                {"seed", r.params.seed},
                {"max_list_observed", r.max_list_observed},
                {"violations", r.violations},
                {"violation_found", r.violation_found}};
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace subcodec
