#include "subspace_codec/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "subspace_codec/channel.hpp"
#include "subspace_codec/errors.hpp"
#include "subspace_codec/rng.hpp"
#include "subspace_codec/subspace.hpp"

namespace subcodec::bounds {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const long long num = std::stoll(s.substr(0, slash));
        const long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rat(num, den);
    }
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        const std::string frac = s.substr(dot + 1);
        const std::string whole = s.substr(0, dot);
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const long long w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        long long f = frac.empty() ? 0 : std::stoll(frac);
        if (!whole.empty() && whole[0] == '-') f = -f;
        return Rat(w * den + f, den);
    }
    return Rat(std::stoll(s), 1);
}

std::string rational_str(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool radius_ok(const TradeoffQuery& query, bool sharp) {
    if (query.tau < 0 || query.rho < 0 || query.rate < 0 || query.rate > 1 ||
        query.list_size < 1)
        throw std::invalid_argument("radius_ok: query out of domain");
    const Rat l(query.list_size, 1);
    const Rat lhs = query.tau + (sharp ? l : l + 1) * query.rho;
    const Rat rhs = l - (l + 1) * query.rate;
    return lhs < rhs;
}

McReport mc_check(const McParams& p) {
    if (p.n == 0 || p.ell == 0 || p.ell > p.n || p.code_size == 0 || p.trials == 0)
        throw std::invalid_argument("mc_check: bad parameters");
    if (p.r > p.ell) throw std::invalid_argument("mc_check: r exceeds ell");
    if (p.ell + p.t > p.n) throw std::invalid_argument("mc_check: ell + t exceeds n");
    // Feasibility guard: the within checks are Gaussian elimination in
    // F_q^n, so keep q^n away from enumeration-scale blowups.
    double logsize = p.n * std::log2(static_cast<double>(p.q));
    if (logsize > 40) throw RegimeError("mc_check: q^n too large for the harness");

    McReport report;
    report.params = p;
    for (std::size_t trial = 0; trial < p.trials; ++trial) {
        Rng rng(derive_seed(p.seed, trial));
        std::vector<Subspace> code;
        code.reserve(p.code_size);
        for (std::size_t i = 0; i < p.code_size; ++i)
            code.push_back(random_subspace(p.q, p.n, p.ell, rng));
        // Independent uniform picks may repeat; a repeated subspace is one
        // codeword, so count distinct ones.
        std::vector<const Subspace*> distinct;
        for (const auto& c : code) {
            bool seen = false;
            for (auto* d : distinct) seen = seen || (*d == c);
            if (!seen) distinct.push_back(&c);
        }
        bool violated = false;
        for (std::size_t dim = p.ell - p.r; dim <= p.ell + p.t; ++dim) {
            const Subspace t = random_subspace(p.q, p.n, dim, rng);
            std::size_t list = 0;
            for (auto* c : distinct)
                if (within(*c, t, p.t, p.r)) ++list;
            report.max_list_observed = std::max(report.max_list_observed, list);
            violated = violated || list > p.list_size;
        }
        if (violated) ++report.violations;
    }
    report.violation_found = report.violations > 0;
    return report;
}

}  // namespace subcodec::bounds
