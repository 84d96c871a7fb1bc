#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <singspace/document.hpp>
#include <singspace/hilbert.hpp>
#include <singspace/parse.hpp>
#include <singspace/report.hpp>
#include <singspace/slices.hpp>

#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace singspace;

namespace {

const std::vector<std::string> P2{"x", "y", "z"};
const std::vector<std::string> P3{"x", "y", "z", "w"};

const std::string nodal_cubic = "y^2*z - x^3 - x^2*z";
const std::string cuspidal_cubic = "y^2*z - x^3";
const std::string smooth_conic = "x*z - y^2";
const std::string smooth_quartic = "x^4 + y^4 + z^4";
const std::vector<std::string> twisted_cubic{"x*z - y^2", "x*w - y*z", "y*w - z^2"};
const std::vector<std::string> coordinate_axes{"x*y", "x*z", "y*z"};

struct Criterion {
    std::string name;
    std::function<std::string()> run;  // returns "" on success, else the failure detail
};

// expected == actual or a diagnostic.
template <class T>
std::string same(const std::string& what, const T& expected, const T& actual) {
    if (expected == actual) return "";
    std::ostringstream out;
    out << what << ": expected " << expected << ", got " << actual;
    return out.str();
}

std::string nodal_cubic_criterion() {
    PrimeField f(10007);
    auto ctx = testgen::make_context(f, P2, {nodal_cubic});

    CurveInvariants inv = curve_invariants(ctx, DegreeWindow{1, 14});
    if (auto r = same<long long>("d", 3, inv.d); !r.empty()) return r;
    if (auto r = same<long long>("p_a", 1, inv.p_a); !r.empty()) return r;

    for (int l = 6; l <= 14; ++l) {
        long long codim = ctx.dim_full(l) - singular_slice(ctx, l).dim();
        if (auto r = same<long long>("codim at l=" + std::to_string(l), 6LL * l - 9, codim);
            !r.empty()) {
            return r;
        }
        if (!singular_slice(ctx, l).space.equals(f, ideal_square_slice(ctx, l).space)) {
            return "W and I^2 differ as subspaces at l=" + std::to_string(l);
        }
        if (auto r = same<long long>("omega at l=" + std::to_string(l), 3LL * l,
                                     omega_slice_dim(ctx, l));
            !r.empty()) {
            return r;
        }
    }
    return "";
}

std::string plane_theorem_criterion() {
    PrimeField f(10007);
    struct Case {
        std::string generator;
        std::vector<mpq_class> expected;  // ascending: {p_a - 1, d}
        std::string rendered;
    };
    std::vector<Case> cases{{smooth_conic, {mpq_class(-1), mpq_class(2)}, "2*l - 1"},
                            {nodal_cubic, {mpq_class(0), mpq_class(3)}, "3*l"},
                            {cuspidal_cubic, {mpq_class(0), mpq_class(3)}, "3*l"},
                            {smooth_quartic, {mpq_class(2), mpq_class(4)}, "4*l + 2"}};
    for (const auto& c : cases) {
        auto ctx = testgen::make_context(f, P2, {c.generator});
        CheckResult check = verify_plane_theorem(ctx, DegreeWindow{1, 14});
        if (check.verdict != "PASS") {
            return c.generator + ": " + check.detail;
        }
        HilbertRecord omega = omega_hilbert(ctx, DegreeWindow{1, 14});
        if (omega.coeffs != c.expected) {
            return c.generator + ": omega polynomial " + render_poly_in_l(omega.coeffs) +
                   " instead of " + c.rendered;
        }
    }
    return "";
}

std::string twisted_cubic_criterion() {
    PrimeField f(10007);
    auto ctx = testgen::make_context(f, P3, twisted_cubic);
    DegreeWindow window{1, 12};

    CurveInvariants inv = curve_invariants(ctx, window);
    if (auto r = same<long long>("d", 3, inv.d); !r.empty()) return r;
    if (auto r = same<long long>("p_a", 0, inv.p_a); !r.empty()) return r;

    HilbertRecord codim = hilbert_data(
        [&](int l) -> std::optional<long long> {
            return ctx.dim_full(l) - singular_slice(ctx, l).dim();
        },
        window);
    for (const auto& [l, value] : codim.dims) {
        if (l < codim.stable_from) continue;
        if (auto r = same<long long>("codim at l=" + std::to_string(l), 9LL * l - 7, value);
            !r.empty()) {
            return r;
        }
    }

    for (int l = 1; l <= 12; ++l) {
        if (!singular_slice(ctx, l).space.equals(f, ideal_square_slice(ctx, l).space)) {
            return "W and I^2 differ as subspaces at l=" + std::to_string(l);
        }
    }

    HilbertRecord omega = omega_hilbert(ctx, window);
    if (render_poly_in_l(omega.coeffs) != "3*l - 1") {
        return "omega polynomial " + render_poly_in_l(omega.coeffs) + " instead of 3*l - 1";
    }
    return same<long long>("g+mu", 0, g_plus_mu_from_omega(omega, inv.d));
}

std::string beta_sweep_criterion() {
    PrimeField f(10007);
    auto gen = oracle::rng(2601);
    int cells = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int b = 0; b <= n - 1; ++b) {
            for (int d = 1; d <= 3; ++d) {
                for (long long l = 2 * d; l <= 2 * d + 4; ++l) {
                    ++cells;
                    long long closed = beta_closed_form(n, b, d, l);

                    Polynomial<PrimeField> monomial_f(b + 2);
                    std::vector<int> exps(static_cast<std::size_t>(b + 2), 0);
                    exps[0] = d;
                    monomial_f.add_term(f, Monomial(std::move(exps)), f.one());
                    long long brute_monomial =
                        beta_bruteforce(f, n, b, monomial_f, static_cast<int>(l));

                    auto dense_f = testgen::dense_homogeneous(f, b + 2, d, gen);
                    long long brute_dense = beta_bruteforce(f, n, b, dense_f, static_cast<int>(l));

                    if (brute_monomial != closed || brute_dense != closed) {
                        std::ostringstream out;
                        out << "mismatch at (n=" << n << ", b=" << b << ", d=" << d
                            << ", l=" << l << "): closed " << closed << ", monomial "
                            << brute_monomial << ", dense " << brute_dense;
                        return out.str();
                    }
                }
            }
        }
    }
    if (cells != 150) {
        return "expected 150 sweep cells, visited " + std::to_string(cells);
    }
    return "";
}

std::string non_lci_witness_criterion() {
    PrimeField f(10007);
    auto ctx = testgen::make_context(f, P3, coordinate_axes);
    bool witness = false;
    for (int l = 1; l <= 8; ++l) {
        const Subspace<PrimeField>& w = singular_slice(ctx, l).space;
        const Subspace<PrimeField>& i2 = ideal_square_slice(ctx, l).space;
        const Subspace<PrimeField>& ideal = ideal_slice(ctx, l).space;
        if (!subspace_contains(f, w, i2) || !subspace_contains(f, ideal, w)) {
            return "containment chain broken at l=" + std::to_string(l);
        }
        if (w.dim() > i2.dim()) witness = true;
    }
    if (!witness) {
        return "no degree l <= 8 with dim W > dim I^2";
    }
    return "";
}

std::string property_suite_criterion() {
    PrimeField f(10007);
    auto gen = oracle::rng(2602);

    // Euler identity on 500 random homogeneous polynomials.
    for (int trial = 0; trial < 500; ++trial) {
        int nvars = 2 + static_cast<int>(gen() % 4);
        int degree = 1 + static_cast<int>(gen() % 8);
        auto p = testgen::random_homogeneous(f, nvars, degree, gen);
        Polynomial<PrimeField> acc(nvars);
        for (int j = 0; j < nvars; ++j) {
            std::vector<int> unit(static_cast<std::size_t>(nvars), 0);
            unit[static_cast<std::size_t>(j)] = 1;
            acc = add(f, acc,
                      multiply(f, monomial_poly(f, Monomial(std::move(unit)), f.one()),
                               partial_derivative(f, p, j)));
        }
        if (!acc.equals(f, scale(f, f.from_int(degree), p))) {
            return "Euler identity failed on trial " + std::to_string(trial);
        }
    }

    // rref idempotence and rank-nullity on 500 random matrices.
    for (int trial = 0; trial < 500; ++trial) {
        int rows = 1 + static_cast<int>(gen() % 8);
        int cols = 1 + static_cast<int>(gen() % 8);
        auto m = testgen::random_matrix(f, rows, cols, gen, -5, 5);
        auto r = rref(f, m);
        auto again = rref(f, r.mat);
        if (!again.mat.equals(f, r.mat)) {
            return "rref not idempotent on trial " + std::to_string(trial);
        }
        auto ker = kernel_basis(f, m);
        if (ker.dim() + r.rank != cols) {
            return "rank-nullity failed on trial " + std::to_string(trial);
        }
        for (int i = 0; i < ker.dim(); ++i) {
            for (const auto& e : matrix_apply(f, m, ker.basis.row_span(i))) {
                if (!f.is_zero(e)) {
                    return "kernel vector not annihilated on trial " + std::to_string(trial);
                }
            }
        }
    }

    // Canonical bases are stable under respanning and shuffling.
    for (int trial = 0; trial < 100; ++trial) {
        int dim = 1 + static_cast<int>(gen() % 4);
        int ambient = dim + 1 + static_cast<int>(gen() % 4);
        auto m = testgen::random_matrix(f, dim, ambient, gen, -9, 9);
        Subspace<PrimeField> original = subspace_from_rows(f, m);
        Matrix<PrimeField> bigger(f, dim * 2, ambient);
        for (int i = 0; i < dim; ++i) bigger.set_row(i, m.row_span(i));
        for (int e = 0; e < dim; ++e) {
            for (int i = 0; i < dim; ++i) {
                PrimeField::Element c = f.from_int(testgen::draw(gen, -20, 20));
                for (int j = 0; j < ambient; ++j) {
                    bigger.at(dim + e, j) = f.add(bigger.at(dim + e, j), f.mul(c, m.at(i, j)));
                }
            }
        }
        for (int i = dim * 2 - 1; i > 0; --i) {
            bigger.swap_rows(i, static_cast<int>(gen() % static_cast<std::uint64_t>(i + 1)));
        }
        if (!subspace_from_rows(f, bigger).equals(f, original)) {
            return "canonical basis depends on the spanning set on trial " +
                   std::to_string(trial);
        }
    }

    // Determinism: identical reports from two independent runs.
    InputDocument doc = parse_document(R"({
        "field": "prime:10007",
        "variables": ["x", "y", "z"],
        "generators": ["y^2*z - x^3 - x^2*z"],
        "options": {"window": [1, 10], "g_tilde": 0}
    })");
    RunResult first = run_verify(doc, RunOverrides{}, false);
    RunResult second = run_verify(doc, RunOverrides{}, false);
    if (first.json != second.json || first.human != second.human) {
        return "verify reports differ between runs";
    }
    if (run_hilbert(doc, RunOverrides{}).json != run_hilbert(doc, RunOverrides{}).json) {
        return "hilbert reports differ between runs";
    }
    return "";
}

std::string backend_agreement_criterion() {
    PrimeField f(10007);
    RationalField q;
    auto a = testgen::make_context(f, P2, {nodal_cubic});
    auto b = testgen::make_context(q, P2, {nodal_cubic});
    for (int l = 1; l <= 10; ++l) {
        if (a.dim_full(l) != b.dim_full(l) ||
            ideal_slice(a, l).dim() != ideal_slice(b, l).dim() ||
            ideal_square_slice(a, l).dim() != ideal_square_slice(b, l).dim() ||
            singular_slice(a, l).dim() != singular_slice(b, l).dim() ||
            euler_kernel(a, l).dim() != euler_kernel(b, l).dim() ||
            omega_slice_dim(a, l) != omega_slice_dim(b, l)) {
            return "backend disagreement at l=" + std::to_string(l);
        }
    }
    return "";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"nodal cubic invariants, codimension, lci, omega", nodal_cubic_criterion},
        {"plane-curve theorem suite", plane_theorem_criterion},
        {"twisted cubic codimension and omega", twisted_cubic_criterion},
        {"closed-form vs brute-force codimension sweep", beta_sweep_criterion},
        {"coordinate-axes non-lci witness with nesting", non_lci_witness_criterion},
        {"property suites and determinism", property_suite_criterion},
        {"prime vs rational backend agreement", backend_agreement_criterion},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        try {
            detail = criteria[i].run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        bool pass = detail.empty();
        if (!pass) ++failures;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
                  << criteria[i].name << (pass ? "" : " (" + detail + ")") << "\n";
    }
    return failures == 0 ? 0 : 1;
}
