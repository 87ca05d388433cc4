#include "subspace_codec/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <thread>

#include "subspace_codec/errors.hpp"
#include "subspace_codec/rng.hpp"

namespace subcodec::experiment {

std::size_t thread_cap() {
    if (const char* env = std::getenv("SUBSPACE_CODEC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min(thread_cap(), std::max<std::size_t>(count, 1));
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                body(i);
            }
        });
    for (auto& th : pool) th.join();
}

lfrs::Params gen_lfrs_params(std::uint32_t q, std::size_t m, std::size_t ell, std::size_t k,
                             std::size_t s, std::uint64_t seed) {
    lfrs::Params p;
    p.field = make_field(q, static_cast<std::uint32_t>(m));
    p.ell = ell;
    p.s = s;
    p.k = k;
    const FieldElem base = find_normal_element(p.field, seed);
    for (std::size_t i = 0; i < ell; ++i) p.alphas.push_back(p.field.frobenius(base, i));
    p.gamma = find_normal_element(p.field, derive_seed(seed, 1));
    p.validate();
    return p;
}

kk::Params gen_kk_params(std::uint32_t q, std::size_t m, std::size_t ell, std::size_t k,
                         std::size_t s, std::uint64_t seed) {
    kk::Params p;
    p.field = make_field(q, static_cast<std::uint32_t>(m));
    p.ell = ell;
    p.s = s;
    p.k = k;
    const FieldElem base = find_normal_element(p.field, seed);
    for (std::size_t i = 0; i < ell; ++i) p.alphas.push_back(p.field.frobenius(base, i));
    p.gamma = find_normal_element(p.field, derive_seed(seed, 1));
    p.validate();
    return p;
}

namespace {

struct TrialRecord {
    bool success = false;
    std::size_t list_size = 0;      // verified list
    std::size_t candidates = 0;     // pre-verification
    std::size_t branches = 0;
    std::size_t folding_used = 0;
};

struct FamilyOps {
    std::size_t k = 0;
    std::size_t ell = 0;
    std::size_t ambient = 0;
    Digit q = 2;
    std::function<Subspace(const Message&)> encode;
    std::function<DecodeOutput(const Subspace&, std::size_t, std::size_t)> decode;
    std::function<bool(std::size_t, std::size_t)> radius;
};

FamilyOps make_ops(const std::string& family, const Json& params) {
    FamilyOps ops;
    if (family == "lfrs") {
        auto p = std::make_shared<lfrs::Params>(lfrs_params_from_json(params));
        ops.k = p->k;
        ops.ell = p->ell;
        ops.ambient = p->ambient_dim();
        ops.q = p->field.q();
        ops.encode = [p](const Message& m) { return lfrs::encode(*p, m); };
        ops.decode = [p](const Subspace& t, std::size_t ti, std::size_t r) {
            return lfrs::decode(*p, t, ti, r);
        };
        ops.radius = [p](std::size_t t, std::size_t r) { return lfrs::radius_ok(*p, t, r); };
    } else if (family == "kk") {
        auto p = std::make_shared<kk::Params>(kk_params_from_json(params));
        ops.k = p->k;
        ops.ell = p->ell;
        ops.ambient = p->ambient_dim();
        ops.q = p->field.q();
        ops.encode = [p](const Message& m) { return kk::encode(*p, m); };
        ops.decode = [p](const Subspace& t, std::size_t ti, std::size_t r) {
            if (r != 0) throw RegimeError("kk decoding supports insertions only");
            return kk::decode(*p, t, ti);
        };
        ops.radius = [p](std::size_t t, std::size_t r) {
            return r == 0 && kk::radius_ok(*p, t);
        };
    } else if (family == "mv") {
        auto p = std::make_shared<mv::Params>(mv_params_from_json(params));
        ops.k = p->k;
        ops.ell = p->ell;
        ops.ambient = p->ambient_dim();
        ops.q = p->field.q();
        ops.encode = [p](const Message& m) { return mv::encode(*p, m); };
        ops.decode = [p](const Subspace& t, std::size_t ti, std::size_t r) {
            if (r != 0) throw RegimeError("mv decoding supports insertions only");
            return mv::decode(*p, t, ti);
        };
        ops.radius = [p](std::size_t t, std::size_t r) {
            return r == 0 && mv::radius_ok(*p, t);
        };
    } else {
        throw std::invalid_argument("unknown code family: " + family);
    }
    return ops;
}

}  // namespace

Json run_roundtrip(const RoundtripConfig& config) {
    FamilyOps ops = make_ops(config.family, config.params);

    std::vector<std::pair<std::size_t, std::size_t>> pairs = config.pairs;
    if (config.sweep) {
        pairs.clear();
        const std::size_t rmax = config.family == "lfrs" ? ops.ell : 0;
        for (std::size_t r = 0; r <= rmax; ++r)
            for (std::size_t t = 0; t <= ops.ambient - ops.ell; ++t)
                if (ops.radius(t, r)) pairs.emplace_back(t, r);
    }
    if (pairs.empty()) throw std::invalid_argument("run_roundtrip: no (t, r) pairs to run");
    for (const auto& [t, r] : pairs) {
        if (!ops.radius(t, r))
            throw RegimeError("run_roundtrip: pair (t=" + std::to_string(t) +
                              ", r=" + std::to_string(r) + ") is outside the decoding radius");
    }

    Json results = Json::array();
    std::uint64_t pair_index = 0;
    for (const auto& [t, r] : pairs) {
        std::vector<TrialRecord> records(config.trials);
        parallel_for(config.trials, [&](std::size_t trial) {
            Rng rng(derive_seed(config.seed, pair_index * 1000003ULL + trial));
            Message msg(ops.k);
            for (auto& d : msg) d = rng.digit(ops.q);
            const Subspace v = ops.encode(msg);
            ChannelSpec spec;
            spec.insertions = t;
            spec.deletions = r;
            const ChannelOutcome outcome = transmit(v, spec, rng);
            const DecodeOutput out = ops.decode(outcome.received, t, r);
            TrialRecord rec;
            const auto verified = out.verified_messages();
            rec.success = std::find(verified.begin(), verified.end(), msg) != verified.end();
            rec.list_size = verified.size();
            rec.candidates = out.candidates.size();
            rec.branches = out.branch_positions.size();
            rec.folding_used = out.folding_used;
            records[trial] = rec;
        });
        std::size_t successes = 0, max_list = 0, max_branches = 0, max_candidates = 0,
                    max_folding = 0;
        double sum_list = 0;
        for (const auto& rec : records) {
            successes += rec.success ? 1 : 0;
            max_list = std::max(max_list, rec.list_size);
            max_branches = std::max(max_branches, rec.branches);
            max_candidates = std::max(max_candidates, rec.candidates);
            max_folding = std::max(max_folding, rec.folding_used);
            sum_list += static_cast<double>(rec.list_size);
        }
        results.push_back(Json{{"t", t},
                               {"r", r},
                               {"trials", config.trials},
                               {"successes", successes},
                               {"success_rate", static_cast<double>(successes) /
                                                    static_cast<double>(config.trials)},
                               {"mean_list_size", sum_list / static_cast<double>(config.trials)},
                               {"max_list_size", max_list},
                               {"max_candidates", max_candidates},
                               {"max_branches", max_branches},
                               {"max_folding_used", max_folding}});
        ++pair_index;
    }

    Json cfg{{"family", config.family},
             {"params", config.params},
             {"trials", config.trials},
             {"seed", config.seed},
             {"sweep", config.sweep}};
    Json jpairs = Json::array();
    for (const auto& [t, r] : pairs) jpairs.push_back(Json{{"t", t}, {"r", r}});
    cfg["pairs"] = jpairs;
    return Json{{"config", cfg}, {"results", results}};
}

Json parse_roundtrip_report_config(const Json& report) { return report.at("config"); }

}  // namespace subcodec::experiment
