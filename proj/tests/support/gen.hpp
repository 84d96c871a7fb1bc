#pragma once

// Deterministic random data builders for property tests. These use the
// library types but never the operations under test.

#include <random>
#include <string>
#include <vector>

#include <singspace/linalg.hpp>
#include <singspace/parse.hpp>
#include <singspace/polynomial.hpp>
#include <singspace/slices.hpp>

namespace testgen {

// Uniform draw from [lo, hi] without distribution objects, so the
// sequence is identical on every standard library.
inline long long draw(std::mt19937_64& gen, long long lo, long long hi) {
    return lo + static_cast<long long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Random homogeneous polynomial of the given degree; roughly 70% of the
// slice monomials appear, and the result is never zero.
template <singspace::Field F>
singspace::Polynomial<F> random_homogeneous(const F& field, int nvars, int degree,
                                            std::mt19937_64& gen) {
    auto monos = singspace::monomials_of_degree(nvars, degree);
    singspace::Polynomial<F> p(nvars);
    for (const auto& m : monos) {
        if (draw(gen, 0, 9) < 7) {
            p.add_term(field, m, field.from_int(draw(gen, 1, 2000)));
        }
    }
    if (p.is_zero()) {
        p.add_term(field, monos.front(), field.one());
    }
    return p;
}

// Dense homogeneous polynomial: every monomial of the slice appears with
// a nonzero coefficient.
template <singspace::Field F>
singspace::Polynomial<F> dense_homogeneous(const F& field, int nvars, int degree,
                                           std::mt19937_64& gen) {
    singspace::Polynomial<F> p(nvars);
    for (const auto& m : singspace::monomials_of_degree(nvars, degree)) {
        p.add_term(field, m, field.from_int(draw(gen, 1, 2000)));
    }
    return p;
}

template <singspace::Field F>
singspace::Matrix<F> random_matrix(const F& field, int rows, int cols, std::mt19937_64& gen,
                                   long long lo = -9, long long hi = 9) {
    singspace::Matrix<F> m(field, rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            m.at(i, j) = field.from_int(draw(gen, lo, hi));
        }
    }
    return m;
}

// Slice context for generator expressions over a named variable list.
template <singspace::Field F>
singspace::SliceContext<F> make_context(const F& field, std::vector<std::string> variables,
                                        const std::vector<std::string>& generator_exprs) {
    std::vector<singspace::Polynomial<F>> gens;
    gens.reserve(generator_exprs.size());
    for (const auto& text : generator_exprs) {
        gens.push_back(singspace::parse_polynomial<F>(text, variables, field));
    }
    return singspace::SliceContext<F>(
        singspace::IdealPresentation<F>{field, std::move(variables), std::move(gens)});
}

}  // namespace testgen
