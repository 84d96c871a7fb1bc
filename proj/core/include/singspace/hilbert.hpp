#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "singspace/slices.hpp"

namespace singspace {

// Inclusive degree range to sample.
struct DegreeWindow {
    int lo;
    int hi;
};

// Default sampling window for an ideal presentation: generous enough to
// get past stabilization on low-degree curves, capped so the largest
// slice stays at desk scale.
DegreeWindow default_window(int max_generator_degree, int n);

// An exactly interpolated dimension function over a degree window.
// coeffs holds the polynomial in ascending powers of l with exact
// rational coefficients; it reproduces every sampled dimension at
// degrees >= stable_from.
struct HilbertRecord {
    std::vector<std::pair<int, long long>> dims;
    std::vector<int> skipped;
    int stable_from;
    std::vector<mpq_class> coeffs;

    int poly_degree() const { return static_cast<int>(coeffs.size()) - 1; }
    mpq_class eval(long long l) const;
    mpq_class leading() const { return coeffs.back(); }
    mpq_class constant() const { return coeffs.front(); }

    // Curve-convention readings of a linear record, per dim = d*l + 1 - p_a.
    long long degree_d() const;
    long long genus_pa() const;
};

// Renders ascending coefficients as a polynomial in l, e.g. "3*l - 1".
std::string render_poly_in_l(const std::vector<mpq_class>& coeffs);

// Samples dim_fn over the window (empty results are recorded as skipped
// degrees) and finds the largest suffix of the samples interpolated
// exactly by one polynomial, requiring at least degree+3 supporting
// points. Fails with NoStabilization if no suffix qualifies.
HilbertRecord hilbert_data(const std::function<std::optional<long long>(int)>& dim_fn,
                           DegreeWindow window);

// Degree and arithmetic genus read off a linear Hilbert record.
struct CurveInvariants {
    long long d = 0;
    long long p_a = 0;
    std::optional<long long> g_plus_mu;
    std::optional<long long> mu;
};

// Verdict of one verification check; ERROR verdicts carry the message of
// the exception that stopped the check.
struct CheckResult {
    std::string name;
    std::string verdict;  // PASS, FAIL, SKIP, or ERROR
    std::string detail;
    std::optional<int> first_failure;

    bool ok() const { return verdict == "PASS" || verdict == "SKIP"; }
};

template <Field F>
HilbertRecord quotient_hilbert(const SliceContext<F>& ctx, DegreeWindow window) {
    return hilbert_data(
        [&](int l) -> std::optional<long long> { return ctx.quotient(l)->dim_quotient(); }, window);
}

// Hilbert record of the restricted-differentials dimensions; degrees
// where the characteristic divides l are skipped, not errors.
template <Field F>
HilbertRecord omega_hilbert(const SliceContext<F>& ctx, DegreeWindow window) {
    return hilbert_data(
        [&](int l) -> std::optional<long long> {
            if (l < 1 || ctx.field().char_divides(l)) return std::nullopt;
            return omega_slice_dim(ctx, l);
        },
        window);
}

template <Field F>
CurveInvariants curve_invariants(const SliceContext<F>& ctx, DegreeWindow window) {
    HilbertRecord record = quotient_hilbert(ctx, window);
    return CurveInvariants{record.degree_d(), record.genus_pa(), std::nullopt, std::nullopt};
}

// Reads g + mu off an interpolated omega record, checking that its shape
// is the expected d*l + (g - 1 + mu).
long long g_plus_mu_from_omega(const HilbertRecord& omega, long long d);

template <Field F>
long long mu_plus_gtilde(const SliceContext<F>& ctx, DegreeWindow window) {
    CurveInvariants inv = curve_invariants(ctx, window);
    return g_plus_mu_from_omega(omega_hilbert(ctx, window), inv.d);
}

// mu from the combined invariant once the user supplies the genus of the
// normalization. Negative values are reported, not rejected.
long long mu_given_genus(const CurveInvariants& inv, long long g_tilde);

// Codimension of the degree-l square slice of I = (f, x_{b+2}, ..., x_n)
// by the closed formula; requires l >= 2d.
long long beta_closed_form(int n, int b, int d, long long l);

// The same codimension measured directly: builds the ideal, computes the
// square slice, and counts. f lives in the first b+2 variables.
template <Field F>
long long beta_bruteforce(const F& field, int n, int b, const Polynomial<F>& f, int l) {
    if (n < 1 || b < 0 || b > n - 1) {
        throw Error(Errc::DomainError, "beta needs 0 <= b <= n-1");
    }
    if (l < 0) {
        throw Error(Errc::DomainError, "beta needs l >= 0");
    }
    if (f.nvars() != b + 2) {
        throw Error(Errc::DomainError, "beta polynomial must use exactly the first b+2 variables");
    }
    auto fdeg = f.homogeneous_degree();
    if (!fdeg.has_value() || *fdeg < 1) {
        throw Error(Errc::DomainError, "beta polynomial must be homogeneous nonzero of degree >= 1");
    }
    const int nvars = n + 1;
    std::vector<std::string> variables;
    variables.reserve(static_cast<std::size_t>(nvars));
    for (int j = 0; j < nvars; ++j) variables.push_back("x" + std::to_string(j));

    std::vector<Polynomial<F>> gens;
    Polynomial<F> lifted(nvars);
    for (const auto& [mono, coeff] : f.terms()) {
        std::vector<int> exps(mono.exponents().begin(), mono.exponents().end());
        exps.resize(static_cast<std::size_t>(nvars), 0);
        lifted.add_term(field, Monomial(std::move(exps)), coeff);
    }
    gens.push_back(std::move(lifted));
    for (int j = b + 2; j < nvars; ++j) {
        std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
        exps[static_cast<std::size_t>(j)] = 1;
        gens.push_back(monomial_poly(field, Monomial(std::move(exps)), field.one()));
    }
    SliceContext<F> ctx(IdealPresentation<F>{field, std::move(variables), std::move(gens)});
    return ctx.dim_full(l) - ideal_square_slice(ctx, l).dim();
}

// Checks dim S_l - dim (W_C)_l = n*d*l + 1 + (n+1)(1-d-p_a) - (g+mu) on
// every valid degree at or beyond the detected stabilization of the
// codimension sequence.
template <Field F>
CheckResult verify_codim_formula(const SliceContext<F>& ctx, long long g_plus_mu,
                                 DegreeWindow window) {
    CurveInvariants inv = curve_invariants(ctx, window);
    HilbertRecord codim = hilbert_data(
        [&](int l) -> std::optional<long long> {
            if (l < 1 || ctx.field().char_divides(l)) return std::nullopt;
            return ctx.dim_full(l) - singular_slice(ctx, l).dim();
        },
        window);
    const long long n = ctx.n();
    CheckResult result;
    result.name = "codim_formula";
    for (const auto& [l, dim] : codim.dims) {
        if (l < codim.stable_from) continue;
        long long expected = n * inv.d * l + 1 + (n + 1) * (1 - inv.d - inv.p_a) - g_plus_mu;
        if (dim != expected) {
            result.verdict = "FAIL";
            result.first_failure = l;
            result.detail = "degree " + std::to_string(l) + ": codim " + std::to_string(dim) +
                            " != formula value " + std::to_string(expected);
            return result;
        }
    }
    long long constant = 1 + (n + 1) * (1 - inv.d - inv.p_a) - g_plus_mu;
    result.verdict = "PASS";
    result.detail = "codim matches " +
                    render_poly_in_l({mpq_class(static_cast<long>(constant)),
                                      mpq_class(static_cast<long>(n * inv.d))}) +
                    " from degree " + std::to_string(codim.stable_from);
    return result;
}

// Asserts the plane-curve identity: the omega record interpolates to
// d*l + (p_a - 1) exactly. Throws TheoremViolation with both
// polynomials when they differ.
template <Field F>
CheckResult verify_plane_theorem(const SliceContext<F>& ctx, DegreeWindow window) {
    if (ctx.n() != 2 || ctx.ideal().generators.size() != 1) {
        throw Error(Errc::DomainError, "plane-curve check needs n=2 and a single generator");
    }
    CurveInvariants inv = curve_invariants(ctx, window);
    HilbertRecord omega = omega_hilbert(ctx, window);
    std::vector<mpq_class> expected{mpq_class(static_cast<long>(inv.p_a - 1)),
                                    mpq_class(static_cast<long>(inv.d))};
    std::string got = render_poly_in_l(omega.coeffs);
    if (omega.coeffs != expected) {
        throw Error(Errc::TheoremViolation, "interpolated omega polynomial " + got +
                                                " differs from " + render_poly_in_l(expected));
    }
    CheckResult result;
    result.name = "plane_theorem";
    result.verdict = "PASS";
    result.detail = "omega polynomial = " + got;
    return result;
}

}  // namespace singspace
