#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "subspace_codec/errors.hpp"
#include "subspace_codec/experiment.hpp"
#include "subspace_codec/lfrs.hpp"
#include "subspace_codec/rng.hpp"

using namespace subcodec;

namespace {

lfrs::Params small_params() {  // q=2, m=6, ell=4, k=2, s=2
    return experiment::gen_lfrs_params(2, 6, 4, 2, 2, 1);
}

Message random_msg(const lfrs::Params& p, Rng& rng) {
    Message m(p.k);
    for (auto& d : m) d = rng.digit(p.field.q());
    return m;
}

// Symbolic expansion of Q-hat(X) = A_0(X) + sum_j A_j(f(gamma^{[j-1]} X)).
LinPoly qhat(const lfrs::Params& p, const lfrs::InterpPoly& q, const Message& msg) {
    const FieldCtx& F = p.field;
    const LinPoly f = lp_from_message(F, msg);
    LinPoly acc = q.a0;
    for (std::size_t j = 0; j < q.ay.size(); ++j) {
        const LinPoly shifted = lp_scale_arg(F, f, F.frobenius(p.gamma, j));
        acc = lp_add(F, acc, lp_compose(F, q.ay[j], shifted));
    }
    return acc;
}

}  // namespace

TEST_CASE("params validation") {
    const lfrs::Params p = small_params();
    CHECK_NOTHROW(p.validate());
    lfrs::Params bad = p;
    bad.alphas[3] = bad.field.add(bad.alphas[0], bad.alphas[1]);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.k = 5;  // k > ell
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("rate of the code") {
    lfrs::Params p;
    p.field = make_field(2, 4);
    p.ell = 3;
    p.s = 2;
    p.k = 2;
    // rate = k / (ell (ell + m s)) = 2/33
    CHECK(lfrs::rate(p) == std::pair<long long, long long>{2, 33});
}

TEST_CASE("encode: zero message spans the alpha block only") {
    const lfrs::Params p = small_params();
    const Subspace v = lfrs::encode(p, Message(p.k, 0));
    CHECK(v.dim() == p.ell);
    for (const auto& row : v.basis())
        for (std::size_t j = p.ell; j < p.ambient_dim(); ++j) CHECK(row[j] == 0);
}

TEST_CASE("encode: identity message matches direct field arithmetic") {
    // q=2, m=4, ell=3, k=1, f=X^{[0]}: rows are (alpha_i, gamma alpha_i, gamma^{[1]} alpha_i)
    const lfrs::Params p = experiment::gen_lfrs_params(2, 4, 3, 1, 2, 5);
    const FieldCtx& F = p.field;
    for (std::size_t i = 0; i < p.ell; ++i) {
        const DigitVec row = lfrs::codeword_vector(p, {1}, i);
        const FieldElem y1 = F.mul(p.gamma, p.alphas[i]);
        const FieldElem y2 = F.mul(F.frobenius(p.gamma, 1), p.alphas[i]);
        for (std::size_t b = 0; b < 4; ++b) {
            CHECK(row[p.ell + b] == y1.coeffs[b]);
            CHECK(row[p.ell + 4 + b] == y2.coeffs[b]);
        }
        for (std::size_t j = 0; j < p.ell; ++j) CHECK(row[j] == (i == j ? 1u : 0u));
    }
}

TEST_CASE("encode always yields an ell-dimensional space") {
    const lfrs::Params p = small_params();
    Rng rng(7);
    for (int t = 0; t < 50; ++t) CHECK(lfrs::encode(p, random_msg(p, rng)).dim() == p.ell);
}

TEST_CASE("interpolation degree bound and unknown count") {
    // ell=3, t=2, r=0, k=1, s=2: D = 1 and 6 unknowns versus 5 conditions.
    const lfrs::Params p = experiment::gen_lfrs_params(2, 4, 3, 1, 2, 5);
    Rng rng(11);
    const Message msg = random_msg(p, rng);
    const Subspace v = lfrs::encode(p, msg);
    const auto out = transmit(v, ChannelSpec{0, 2, {}}, rng);
    const lfrs::InterpPoly q = lfrs::interpolate(p, out.received.basis(), 2, 0);
    CHECK(q.degree_bound == 1);
    CHECK(q.a0.coeffs.size() <= static_cast<std::size_t>(q.degree_bound) + p.k);
    for (const auto& a : q.ay) CHECK(a.coeffs.size() <= static_cast<std::size_t>(q.degree_bound) + 1);
    CHECK_FALSE(q.is_zero(p.field));
    // Q vanishes on every received basis tuple by construction.
    for (const auto& row : out.received.basis())
        CHECK(p.field.is_zero(q.eval(p.field, lfrs::row_to_tuple(p, row))));
}

TEST_CASE("noiseless interpolation annihilates the codeword symbolically") {
    const lfrs::Params p = small_params();
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Message msg = random_msg(p, rng);
        const Subspace v = lfrs::encode(p, msg);
        const lfrs::InterpPoly q = lfrs::interpolate(p, v.basis(), 0, 0);
        CHECK(qhat(p, q, msg).is_zero());
    }
}

TEST_CASE("lemma: Q-hat vanishes whenever ell - r > D + k - 1") {
    const lfrs::Params p = small_params();
    Rng rng(17);
    int checked = 0;
    while (checked < 100) {
        const std::size_t r = rng.below(3), t = rng.below(6);
        if (!lfrs::radius_ok(p, t, r)) continue;
        const Message msg = random_msg(p, rng);
        const auto out = transmit(lfrs::encode(p, msg), ChannelSpec{r, t, {}}, rng);
        const lfrs::InterpPoly q = lfrs::interpolate(p, out.received.basis(), t, r);
        REQUIRE(p.ell - r > static_cast<std::size_t>(q.degree_bound) + p.k - 1);
        CHECK(qhat(p, q, msg).is_zero());
        ++checked;
    }
}

TEST_CASE("interpolate rejects degenerate inputs") {
    const lfrs::Params p = small_params();
    DigitMat zero_rows(2, DigitVec(p.ambient_dim(), 0));
    CHECK_THROWS_AS(lfrs::interpolate(p, zero_rows, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(lfrs::interpolate(p, {}, 0, 4), RegimeError);  // D < 0
}

TEST_CASE("normalize_shift") {
    const lfrs::Params p = small_params();
    const FieldCtx& F = p.field;
    Rng rng(19);

    SUBCASE("already normalized polynomials pass through") {
        const Message msg = random_msg(p, rng);
        const Subspace v = lfrs::encode(p, msg);
        lfrs::InterpPoly q = lfrs::interpolate(p, v.basis(), 0, 0);
        bool has_const = false;
        for (const auto& a : q.ay) has_const = has_const || (!a.coeffs.empty() && !F.is_zero(a.coeffs[0]));
        if (has_const) CHECK(lfrs::normalize_shift(F, q) == *lfrs::try_normalize_shift(F, q));
    }
    SUBCASE("monomial Y_1^{[2]} normalizes to Y_1 support") {
        lfrs::InterpPoly q;
        q.degree_bound = 2;
        q.a0 = LinPoly{};
        q.ay = {lp_monomial(F, 2, F.one()), LinPoly{}};
        const lfrs::InterpPoly n = lfrs::normalize_shift(F, q);
        REQUIRE(!n.ay[0].is_zero());
        CHECK(n.ay[0].qdeg() == 0);
        CHECK(n.a0.is_zero());
    }
    SUBCASE("synthetic shifted polynomial keeps its vanishing set") {
        // Build Q with every index-0 coefficient zero by Frobenius-lifting a
        // random normalized Q.
        const Message msg = random_msg(p, rng);
        const Subspace v = lfrs::encode(p, msg);
        const lfrs::InterpPoly base = lfrs::interpolate(p, v.basis(), 0, 0);
        const std::size_t j = 2;
        auto lift = [&](const LinPoly& a) {
            std::vector<FieldElem> c(a.coeffs.size() + j, F.zero());
            for (std::size_t i = 0; i < a.coeffs.size(); ++i)
                c[i + j] = F.frobenius(a.coeffs[i], j);
            return lp_from_coeffs(F, std::move(c));
        };
        lfrs::InterpPoly lifted;
        lifted.degree_bound = base.degree_bound + static_cast<long>(j);
        lifted.a0 = lift(base.a0);
        for (const auto& a : base.ay) lifted.ay.push_back(lift(a));
        const lfrs::InterpPoly n = lfrs::normalize_shift(F, lifted);
        // the shifted polynomial vanishes on the same tuples
        for (const auto& row : v.basis()) {
            const auto tup = lfrs::row_to_tuple(p, row);
            CHECK(F.is_zero(lifted.eval(F, tup)));
            CHECK(F.is_zero(n.eval(F, tup)));
        }
        bool has_const = false;
        for (const auto& a : n.ay) has_const = has_const || (!a.coeffs.empty() && !F.is_zero(a.coeffs[0]));
        CHECK(has_const);
    }
    SUBCASE("pathological A_0-only polynomial is an internal error") {
        lfrs::InterpPoly q;
        q.degree_bound = 1;
        q.a0 = lp_identity(F);
        q.ay = {LinPoly{}, LinPoly{}};
        CHECK_THROWS_AS(lfrs::normalize_shift(F, q), InternalError);
        CHECK_FALSE(lfrs::try_normalize_shift(F, q).has_value());
    }
}

TEST_CASE("recover on a noiseless instance is fully determined") {
    const lfrs::Params p = small_params();
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const Message msg = random_msg(p, rng);
        const Subspace v = lfrs::encode(p, msg);
        const lfrs::InterpPoly q =
            lfrs::normalize_shift(p.field, lfrs::interpolate(p, v.basis(), 0, 0));
        const DecodeOutput out = lfrs::recover(p, q);
        CHECK(out.branch_positions.size() <= p.s - 1);
        CHECK(out.candidates.size() <= 1u << out.branch_positions.size());
        CHECK(std::find(out.candidates.begin(), out.candidates.end(), msg) !=
              out.candidates.end());
    }
}

TEST_CASE("decode: noiseless round trip") {
    const lfrs::Params p = small_params();
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const Message msg = random_msg(p, rng);
        const DecodeOutput out = lfrs::decode(p, lfrs::encode(p, msg), 0, 0);
        CHECK(out.verified_messages() == std::vector<Message>{msg});
    }
}

TEST_CASE("decode equals brute force at q=2, m=6, ell=4, k=2, s=2, r=1, t=3") {
    const lfrs::Params p = small_params();
    Rng rng(31);
    auto enc = [&](const Message& m) { return lfrs::encode(p, m); };
    for (int trial = 0; trial < 60; ++trial) {
        const Message msg = random_msg(p, rng);
        const auto out = transmit(enc(msg), ChannelSpec{1, 3, {}}, rng);
        const DecodeOutput dec = lfrs::decode(p, out.received, 3, 1);
        const auto expect = oracles::sorted_msgs(
            oracles::brute_force_list(p.field.q(), p.k, enc, out.received, 3, 1));
        CHECK(oracles::sorted_msgs(dec.verified_messages()) == expect);
        const auto verified = dec.verified_messages();
        CHECK(std::find(verified.begin(), verified.end(), msg) != verified.end());
    }
}

TEST_CASE("decode rejects out-of-regime requests") {
    const lfrs::Params p = small_params();
    Rng rng(37);
    const Subspace v = lfrs::encode(p, random_msg(p, rng));
    // r = ell violates the radius for any t when k >= 1
    CHECK_THROWS_AS(lfrs::decode(p, Subspace(2, p.ambient_dim()), 0, p.ell), RegimeError);
    // dimension mismatch
    CHECK_THROWS_AS(lfrs::decode(p, v, 1, 0), std::invalid_argument);
}

TEST_CASE("decode is basis independent") {
    const lfrs::Params p = small_params();
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const Message msg = random_msg(p, rng);
        const auto out = transmit(lfrs::encode(p, msg), ChannelSpec{1, 2, {}}, rng);
        // randomize the basis of the received space, interpolate on both
        const std::size_t dim = out.received.dim();
        DigitMat altered;
        for (;;) {
            DigitMat coeff(dim, DigitVec(dim));
            for (auto& row : coeff)
                for (auto& c : row) c = rng.digit(2);
            if (matrix_rank(coeff, 2) != dim) continue;
            for (const auto& cr : coeff) {
                DigitVec w(p.ambient_dim(), 0);
                for (std::size_t b = 0; b < dim; ++b)
                    if (cr[b])
                        for (std::size_t j = 0; j < w.size(); ++j)
                            w[j] = fq_add(w[j], out.received.basis()[b][j], 2);
                altered.push_back(std::move(w));
            }
            break;
        }
        const lfrs::InterpPoly q1 = lfrs::interpolate(p, out.received.basis(), 2, 1);
        const lfrs::InterpPoly q2 = lfrs::interpolate(p, altered, 2, 1);
        auto finish = [&](const lfrs::InterpPoly& q) {
            auto n = lfrs::try_normalize_shift(p.field, q);
            REQUIRE(n.has_value());
            auto rr = lfrs::recover_core(p.field, *n, p.gamma, p.k);
            std::vector<Message> ver;
            for (const auto& c : rr.candidates)
                if (within(lfrs::encode(p, c), out.received, 2, 1)) ver.push_back(c);
            return oracles::sorted_msgs(ver);
        };
        CHECK(finish(q1) == finish(q2));
    }
}

TEST_CASE("candidate affine structure: closure under msg1 + c(msg2 - msg3)") {
    // Arrange a received space containing a whole affine line of codewords:
    // q=5, m=4, ell=3, k=2, s=2, T = span(enc(f), enc(g)) with t=3, r=0.
    const lfrs::Params p = experiment::gen_lfrs_params(5, 4, 3, 2, 2, 3);
    Rng rng(43);
    int built = 0;
    for (int attempt = 0; attempt < 50 && built < 10; ++attempt) {
        const Message f = random_msg(p, rng), g = random_msg(p, rng);
        if (f == g) continue;
        const Subspace t = sum(lfrs::encode(p, f), lfrs::encode(p, g));
        if (t.dim() != p.ell + 3) continue;
        ++built;
        const DecodeOutput out = lfrs::decode(p, t, 3, 0);
        const auto& cands = out.candidates;
        REQUIRE(cands.size() >= 3);
        std::set<Message> cset(cands.begin(), cands.end());
        // the whole line f + c (g - f) must be verified
        for (Digit c = 0; c < 5; ++c) {
            Message line(p.k);
            for (std::size_t i = 0; i < p.k; ++i)
                line[i] = fq_add(f[i], fq_mul(c, fq_sub(g[i], f[i], 5), 5), 5);
            CHECK(cset.count(line) == 1);
        }
        // closure under affine recombination of any three candidates
        for (std::size_t a = 0; a < std::min<std::size_t>(cands.size(), 4); ++a)
            for (std::size_t b = 0; b < std::min<std::size_t>(cands.size(), 4); ++b)
                for (std::size_t c = 0; c < std::min<std::size_t>(cands.size(), 4); ++c)
                    for (Digit lam = 0; lam < 5; ++lam) {
                        Message combo(p.k);
                        for (std::size_t i = 0; i < p.k; ++i)
                            combo[i] = fq_add(
                                cands[a][i],
                                fq_mul(lam, fq_sub(cands[b][i], cands[c][i], 5), 5), 5);
                        CHECK(cset.count(combo) == 1);
                    }
    }
    CHECK(built > 0);
}

TEST_CASE("decode_infer unions the feasible radius line") {
    const lfrs::Params p = small_params();
    Rng rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        const Message msg = random_msg(p, rng);
        const auto out = transmit(lfrs::encode(p, msg), ChannelSpec{1, 2, {}}, rng);
        const auto inferred = lfrs::decode_infer(p, out.received);
        CHECK(!inferred.per_radius.empty());
        bool found = false;
        for (const auto& m : inferred.verified_union) found = found || m == msg;
        CHECK(found);
        for (const auto& e : inferred.per_radius) {
            CHECK(e.t >= 1);  // t - r = dim(T) - ell = 1 on this line
            CHECK(e.t - e.r == 1);
        }
    }
}

TEST_CASE("list bound holds on adversarial received spaces") {
    const lfrs::Params p = small_params();
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = rng.below(3);
        std::size_t t = rng.below(6);
        if (!lfrs::radius_ok(p, t, r)) continue;
        const Subspace tspace = random_subspace(2, p.ambient_dim(), p.ell + t - r, rng);
        const DecodeOutput out = lfrs::decode(p, tspace, t, r);
        CHECK(out.branch_positions.size() <= p.s - 1);
        CHECK(out.candidates.size() <= 1u << (p.s - 1));
        // soundness: every verified candidate really is within (t, r)
        for (std::size_t i = 0; i < out.candidates.size(); ++i)
            if (out.verified[i])
                CHECK(within(lfrs::encode(p, out.candidates[i]), tspace, t, r));
    }
}
