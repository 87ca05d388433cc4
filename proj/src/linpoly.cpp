#include "subspace_codec/linpoly.hpp"

#include <stdexcept>

#include "subspace_codec/errors.hpp"

namespace subcodec {
namespace {

LinPoly trimmed(const FieldCtx& ctx, std::vector<FieldElem> coeffs) {
    while (!coeffs.empty() && ctx.is_zero(coeffs.back())) coeffs.pop_back();
    return LinPoly{std::move(coeffs)};
}

}  // namespace

LinPoly lp_from_coeffs(const FieldCtx& ctx, std::vector<FieldElem> coeffs) {
    return trimmed(ctx, std::move(coeffs));
}

LinPoly lp_monomial(const FieldCtx& ctx, std::size_t i, const FieldElem& c) {
    if (ctx.is_zero(c)) return LinPoly{};
    std::vector<FieldElem> coeffs(i + 1, ctx.zero());
    coeffs[i] = c;
    return LinPoly{std::move(coeffs)};
}

LinPoly lp_identity(const FieldCtx& ctx) { return lp_monomial(ctx, 0, ctx.one()); }

LinPoly lp_from_message(const FieldCtx& ctx, const DigitVec& msg) {
    std::vector<FieldElem> coeffs;
    coeffs.reserve(msg.size());
    for (auto d : msg) coeffs.push_back(ctx.from_base(d));
    return trimmed(ctx, std::move(coeffs));
}

LinPoly lp_add(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g) {
    std::vector<FieldElem> coeffs(std::max(f.coeffs.size(), g.coeffs.size()), ctx.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        FieldElem a = i < f.coeffs.size() ? f.coeffs[i] : ctx.zero();
        FieldElem b = i < g.coeffs.size() ? g.coeffs[i] : ctx.zero();
        coeffs[i] = ctx.add(a, b);
    }
    return trimmed(ctx, std::move(coeffs));
}

LinPoly lp_sub(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g) {
    std::vector<FieldElem> coeffs(std::max(f.coeffs.size(), g.coeffs.size()), ctx.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        FieldElem a = i < f.coeffs.size() ? f.coeffs[i] : ctx.zero();
        FieldElem b = i < g.coeffs.size() ? g.coeffs[i] : ctx.zero();
        coeffs[i] = ctx.sub(a, b);
    }
    return trimmed(ctx, std::move(coeffs));
}

FieldElem lp_eval(const FieldCtx& ctx, const LinPoly& f, const FieldElem& x) {
    FieldElem acc = ctx.zero();
    FieldElem xi = x;  // x^{[i]}, advanced by one Frobenius per term
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (!ctx.is_zero(f.coeffs[i])) acc = ctx.add(acc, ctx.mul(f.coeffs[i], xi));
        if (i + 1 < f.coeffs.size()) xi = ctx.frobenius(xi, 1);
    }
    return acc;
}

LinPoly lp_compose(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g) {
    if (f.is_zero() || g.is_zero()) return LinPoly{};
    std::vector<FieldElem> h(f.coeffs.size() + g.coeffs.size() - 1, ctx.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (ctx.is_zero(f.coeffs[i])) continue;
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
            if (ctx.is_zero(g.coeffs[j])) continue;
            h[i + j] = ctx.add(h[i + j], ctx.mul(f.coeffs[i], ctx.frobenius(g.coeffs[j], i)));
        }
    }
    return trimmed(ctx, std::move(h));
}

LinPoly lp_scale_arg(const FieldCtx& ctx, const LinPoly& f, const FieldElem& c) {
    std::vector<FieldElem> coeffs(f.coeffs.size(), ctx.zero());
    FieldElem ci = c;  // c^{[i]}
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        coeffs[i] = ctx.mul(f.coeffs[i], ci);
        if (i + 1 < f.coeffs.size()) ci = ctx.frobenius(ci, 1);
    }
    return trimmed(ctx, std::move(coeffs));
}

Subspace lp_root_space(const FieldCtx& ctx, const LinPoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("lp_root_space: zero polynomial vanishes everywhere");
    const std::uint32_t d = ctx.degree();
    // Matrix of the F_q-linear evaluation map; column j is f(x^j).
    DigitMat m(d, DigitVec(d, 0));
    for (std::uint32_t j = 0; j < d; ++j) {
        FieldElem y = lp_eval(ctx, f, ctx.basis_elem(j));
        for (std::uint32_t i = 0; i < d; ++i) m[i][j] = y.coeffs[i];
    }
    return Subspace::span(ctx.q(), d, kernel_basis(m, d, ctx.q()));
}

LinPoly lp_frobenius_shift(const FieldCtx& ctx, const LinPoly& f, std::size_t j) {
    if (j == 0) return f;
    for (std::size_t i = 0; i < j && i < f.coeffs.size(); ++i)
        if (!ctx.is_zero(f.coeffs[i]))
            throw std::invalid_argument("lp_frobenius_shift: nonzero coefficient below shift");
    if (f.coeffs.size() <= j) return LinPoly{};
    std::vector<FieldElem> coeffs(f.coeffs.size() - j, ctx.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] = ctx.frobenius(f.coeffs[i + j], ctx.degree() - (j % ctx.degree()));
    return trimmed(ctx, std::move(coeffs));
}

}  // namespace subcodec
