#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "singspace/field.hpp"
#include "singspace/monomial.hpp"

namespace singspace {

// Sparse multivariate polynomial with terms kept in descending grevlex
// order, so iteration order doubles as the canonical rendering order.
template <Field F>
class Polynomial {
  public:
    using Elem = typename F::Element;
    using TermMap = std::map<Monomial, Elem, GrevlexGreater>;

    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 1) {
            throw Error(Errc::DomainError, "polynomial needs at least one variable");
        }
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    // Degree if all terms share it, otherwise empty. Zero counts as
    // homogeneous of every degree and reports -1.
    std::optional<int> homogeneous_degree() const {
        int deg = -1;
        for (const auto& [m, c] : terms_) {
            if (deg == -1) {
                deg = m.degree();
            } else if (m.degree() != deg) {
                return std::nullopt;
            }
        }
        return deg;
    }

    void add_term(const F& field, const Monomial& m, const Elem& c) {
        if (m.nvars() != nvars_) {
            throw Error(Errc::DimensionMismatch, "term has wrong variable count");
        }
        if (field.is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = field.add(it->second, c);
            if (field.is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    Elem coefficient(const F& field, const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? field.zero() : it->second;
    }

    bool equals(const F& field, const Polynomial& other) const {
        if (terms_.size() != other.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = other.terms_.begin();
        for (; a != terms_.end(); ++a, ++b) {
            if (!(a->first == b->first) || !field.eq(a->second, b->second)) return false;
        }
        return true;
    }

  private:
    int nvars_;
    TermMap terms_;
};

template <Field F>
Polynomial<F> monomial_poly(const F& field, const Monomial& m, const typename F::Element& c) {
    Polynomial<F> p(m.nvars());
    p.add_term(field, m, c);
    return p;
}

template <Field F>
Polynomial<F> add(const F& field, const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.nvars() != b.nvars()) {
        throw Error(Errc::DimensionMismatch, "sum across different variable counts");
    }
    Polynomial<F> out = a;
    for (const auto& [m, c] : b.terms()) {
        out.add_term(field, m, c);
    }
    return out;
}

template <Field F>
Polynomial<F> neg(const F& field, const Polynomial<F>& a) {
    Polynomial<F> out(a.nvars());
    for (const auto& [m, c] : a.terms()) {
        out.add_term(field, m, field.neg(c));
    }
    return out;
}

template <Field F>
Polynomial<F> sub(const F& field, const Polynomial<F>& a, const Polynomial<F>& b) {
    return add(field, a, neg(field, b));
}

template <Field F>
Polynomial<F> scale(const F& field, const typename F::Element& c, const Polynomial<F>& a) {
    Polynomial<F> out(a.nvars());
    for (const auto& [m, coeff] : a.terms()) {
        out.add_term(field, m, field.mul(c, coeff));
    }
    return out;
}

template <Field F>
Polynomial<F> multiply(const F& field, const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.nvars() != b.nvars()) {
        throw Error(Errc::DimensionMismatch, "product across different variable counts");
    }
    Polynomial<F> out(a.nvars());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            out.add_term(field, ma.times(mb), field.mul(ca, cb));
        }
    }
    return out;
}

template <Field F>
Polynomial<F> power(const F& field, const Polynomial<F>& a, int e) {
    if (e < 0) {
        throw Error(Errc::DomainError, "negative polynomial power");
    }
    Polynomial<F> out(a.nvars());
    out.add_term(field, Monomial::unit(a.nvars()), field.one());
    Polynomial<F> base = a;
    while (e > 0) {
        if (e & 1) out = multiply(field, out, base);
        e >>= 1;
        if (e > 0) base = multiply(field, base, base);
    }
    return out;
}

template <Field F>
Polynomial<F> partial_derivative(const F& field, const Polynomial<F>& a, int j) {
    if (j < 0 || j >= a.nvars()) {
        throw Error(Errc::DomainError, "derivative variable index out of range");
    }
    Polynomial<F> out(a.nvars());
    for (const auto& [m, c] : a.terms()) {
        int e = m.exp(j);
        if (e == 0) continue;
        std::vector<int> exps(m.exponents().begin(), m.exponents().end());
        exps[static_cast<std::size_t>(j)] -= 1;
        out.add_term(field, Monomial(std::move(exps)), field.mul(c, field.from_int(e)));
    }
    return out;
}

// Dense coefficient vector of a homogeneous polynomial with respect to a
// degree-slice basis. The zero polynomial maps to the zero vector.
template <Field F>
std::vector<typename F::Element> coefficient_vector(const F& field, const Polynomial<F>& p,
                                                    const MonomialBasis& basis) {
    std::vector<typename F::Element> v(static_cast<std::size_t>(basis.size()), field.zero());
    for (const auto& [m, c] : p.terms()) {
        v[static_cast<std::size_t>(basis.index_of(m))] = c;
    }
    return v;
}

template <Field F>
Polynomial<F> polynomial_from_vector(const F& field, std::span<const typename F::Element> v,
                                     const MonomialBasis& basis) {
    if (static_cast<int>(v.size()) != basis.size()) {
        throw Error(Errc::DimensionMismatch, "coefficient vector does not match basis size");
    }
    Polynomial<F> p(basis.nvars());
    for (int i = 0; i < basis.size(); ++i) {
        p.add_term(field, basis.at(i), v[static_cast<std::size_t>(i)]);
    }
    return p;
}

// Canonical text form: terms in grevlex-descending order, explicit `*`
// and `^`, coefficient 1 omitted, negatives folded into the separators.
template <Field F>
std::string render(const F& field, const Polynomial<F>& p, std::span<const std::string> variables) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        typename F::Element coeff = c;
        bool negative = false;
        if constexpr (std::is_same_v<F, RationalField>) {
            if (sgn(coeff) < 0) {
                negative = true;
                coeff = field.neg(coeff);
            }
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono = render_monomial(m, variables);
        if (field.eq(coeff, field.one())) {
            out += mono;
        } else if (m.degree() == 0) {
            out += field.to_string(coeff);
        } else {
            out += field.to_string(coeff) + "*" + mono;
        }
    }
    return out;
}

// A homogeneous ideal given by explicit generators in P^n.
template <Field F>
struct IdealPresentation {
    F field;
    std::vector<std::string> variables;
    std::vector<Polynomial<F>> generators;

    int nvars() const { return static_cast<int>(variables.size()); }
    int n() const { return nvars() - 1; }

    int max_generator_degree() const {
        int d = 0;
        for (const auto& g : generators) d = std::max(d, g.degree());
        return d;
    }

    // Checks the structural invariants: distinct nonempty variable names,
    // at least two variables, generators homogeneous of degree >= 1.
    void validate() const {
        if (nvars() < 2) {
            throw Error(Errc::BadDocument, "need at least two variables (ambient P^n with n >= 1)");
        }
        for (std::size_t i = 0; i < variables.size(); ++i) {
            if (variables[i].empty()) {
                throw Error(Errc::BadDocument, "variable name " + std::to_string(i) + " is empty");
            }
            for (std::size_t k = i + 1; k < variables.size(); ++k) {
                if (variables[i] == variables[k]) {
                    throw Error(Errc::BadDocument, "duplicate variable name '" + variables[i] + "'");
                }
            }
        }
        if (generators.empty()) {
            throw Error(Errc::BadDocument, "need at least one generator");
        }
        for (std::size_t i = 0; i < generators.size(); ++i) {
            const auto& g = generators[i];
            if (g.nvars() != nvars()) {
                throw Error(Errc::DimensionMismatch,
                            "generator " + std::to_string(i) + " has wrong variable count");
            }
            auto deg = g.homogeneous_degree();
            if (!deg.has_value()) {
                throw Error(Errc::NonHomogeneousGenerator,
                            "generator " + std::to_string(i) + " is not homogeneous");
            }
            if (*deg < 1) {
                throw Error(Errc::NonHomogeneousGenerator,
                            "generator " + std::to_string(i) + " must be nonzero of degree >= 1");
            }
        }
    }
};

}  // namespace singspace
