#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "singspace/linalg.hpp"
#include "singspace/polynomial.hpp"

namespace singspace {

// A degree slice of the ring S/I: the subspace I_m of S_m together with
// the non-pivot monomial columns, which serve as a canonical basis of
// the quotient (S/I)_m.
template <Field F>
struct QuotientSlice {
    using Elem = typename F::Element;

    int degree;
    MonomialBasis monomials;  // basis of S_m in grevlex-descending order
    Subspace<F> ideal;        // I_m inside S_m
    std::vector<int> quotient_cols;

    long long ambient_dim() const { return monomials.size(); }
    long long dim_ideal() const { return ideal.dim(); }
    long long dim_quotient() const { return static_cast<long long>(quotient_cols.size()); }

    // Quotient coordinates of a vector in S_m coordinates.
    std::vector<Elem> project(const F& field, std::vector<Elem> v) const {
        reduce_against(field, ideal, v);
        std::vector<Elem> out;
        out.reserve(quotient_cols.size());
        for (int c : quotient_cols) out.push_back(v[static_cast<std::size_t>(c)]);
        return out;
    }

    // Quotient coordinates of the image of a single scaled monomial;
    // cheap because at most one elimination step applies.
    std::vector<Elem> project_unit(const F& field, int col, const Elem& coeff) const {
        std::vector<Elem> out(quotient_cols.size(), field.zero());
        if (field.is_zero(coeff)) return out;
        auto piv = std::lower_bound(ideal.pivot_cols.begin(), ideal.pivot_cols.end(), col);
        if (piv != ideal.pivot_cols.end() && *piv == col) {
            int k = static_cast<int>(piv - ideal.pivot_cols.begin());
            const Elem* row = ideal.basis.row(k);
            Elem neg_coeff = field.neg(coeff);
            for (std::size_t q = 0; q < quotient_cols.size(); ++q) {
                int qc = quotient_cols[q];
                if (!field.is_zero(row[qc])) out[q] = field.mul(neg_coeff, row[qc]);
            }
        } else {
            auto it = std::lower_bound(quotient_cols.begin(), quotient_cols.end(), col);
            out[static_cast<std::size_t>(it - quotient_cols.begin())] = coeff;
        }
        return out;
    }
};

// One graded piece of a construction, carried as a canonical subspace of
// the stated ambient space.
template <Field F>
struct DegreeSlice {
    int degree;
    std::string ambient;
    long long ambient_dim;
    Subspace<F> space;

    long long dim() const { return space.dim(); }
};

namespace detail {

// Span of {mu * g : g in gens of degree d_g <= m, mu monomial of degree
// m - d_g} as a row matrix over the degree-m monomial basis. Products of
// single-term generators are unit rows up to scale, so duplicates are
// dropped by target monomial.
template <Field F>
Matrix<F> generator_multiples_matrix(const F& field, const std::vector<Polynomial<F>>& gens,
                                     const MonomialBasis& basis) {
    struct RowPlan {
        int gen;
        Monomial mu;
    };
    std::vector<RowPlan> plan;
    std::vector<bool> seen_monomial(static_cast<std::size_t>(basis.size()), false);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const Polynomial<F>& g = gens[gi];
        int dg = g.degree();
        if (dg < 0 || dg > basis.degree()) continue;
        for (const Monomial& mu : monomials_of_degree(basis.nvars(), basis.degree() - dg)) {
            if (g.term_count() == 1) {
                int col = basis.index_of(mu.times(g.terms().begin()->first));
                if (seen_monomial[static_cast<std::size_t>(col)]) continue;
                seen_monomial[static_cast<std::size_t>(col)] = true;
            }
            plan.push_back({static_cast<int>(gi), mu});
        }
    }
    Matrix<F> m(field, static_cast<int>(plan.size()), basis.size());
    for (std::size_t r = 0; r < plan.size(); ++r) {
        for (const auto& [mono, coeff] : gens[static_cast<std::size_t>(plan[r].gen)].terms()) {
            m.at(static_cast<int>(r), basis.index_of(plan[r].mu.times(mono))) = coeff;
        }
    }
    return m;
}

}  // namespace detail

// Degree-by-degree view of one ideal presentation. Every slice is
// memoized in a write-once table guarded by a mutex, so independent
// degrees can be computed concurrently and repeated sweeps are free.
template <Field F>
class SliceContext {
  public:
    explicit SliceContext(IdealPresentation<F> ideal) : ideal_(std::move(ideal)) {
        ideal_.validate();
    }

    const IdealPresentation<F>& ideal() const { return ideal_; }
    const F& field() const { return ideal_.field; }
    int nvars() const { return ideal_.nvars(); }
    int n() const { return ideal_.n(); }

    long long dim_full(int m) const { return m < 0 ? 0 : binom(m + n(), n()); }

    std::shared_ptr<const QuotientSlice<F>> quotient(int m) const {
        return memoized_quotient(quotients_, ideal_.generators, m);
    }

    std::shared_ptr<const QuotientSlice<F>> square_quotient(int l) const {
        return memoized_quotient(square_quotients_, square_generators(), l);
    }

    // Pairwise products g_i * g_j (i <= j), generating I^2.
    const std::vector<Polynomial<F>>& square_generators() const {
        std::scoped_lock lock(mutex_);
        if (!square_gens_.has_value()) {
            std::vector<Polynomial<F>> squares;
            for (std::size_t i = 0; i < ideal_.generators.size(); ++i) {
                for (std::size_t j = i; j < ideal_.generators.size(); ++j) {
                    squares.push_back(
                        multiply(field(), ideal_.generators[i], ideal_.generators[j]));
                }
            }
            square_gens_ = std::move(squares);
        }
        return *square_gens_;
    }

    const DegreeSlice<F>& ideal_at(int m) const {
        return memoized_slice(ideal_slices_, m, [&] {
            auto q = quotient(m);
            return DegreeSlice<F>{m, "S_" + std::to_string(m), q->ambient_dim(), q->ideal};
        });
    }

    const DegreeSlice<F>& square_at(int l) const {
        return memoized_slice(square_slices_, l, [&] {
            auto q = square_quotient(l);
            return DegreeSlice<F>{l, "S_" + std::to_string(l), q->ambient_dim(), q->ideal};
        });
    }

    const DegreeSlice<F>& euler_at(int l) const {
        if (l < 1) {
            throw Error(Errc::DomainError, "euler_kernel needs degree >= 1");
        }
        return memoized_slice(euler_slices_, l, [&] { return compute_euler(l); });
    }

    const DegreeSlice<F>& singular_at(int l) const {
        if (l < 1) {
            throw Error(Errc::DomainError, "singular_slice needs degree >= 1");
        }
        if (field().char_divides(l)) {
            throw Error(Errc::CharDividesDegree,
                        "characteristic divides degree " + std::to_string(l) +
                            "; the partial-derivative criterion is invalid there");
        }
        return memoized_slice(singular_slices_, l, [&] { return compute_singular(l); });
    }

  private:
    using QuotientTable = std::map<int, std::shared_ptr<const QuotientSlice<F>>>;
    using SliceTable = std::map<int, std::shared_ptr<const DegreeSlice<F>>>;

    std::shared_ptr<const QuotientSlice<F>> memoized_quotient(
        QuotientTable& table, const std::vector<Polynomial<F>>& gens, int m) const {
        if (m < 0) {
            throw Error(Errc::DomainError, "slice degree must be nonnegative");
        }
        {
            std::scoped_lock lock(mutex_);
            auto it = table.find(m);
            if (it != table.end()) return it->second;
        }
        MonomialBasis basis(nvars(), m);
        Subspace<F> space =
            subspace_from_rows(field(), detail::generator_multiples_matrix(field(), gens, basis));
        std::vector<int> quotient_cols;
        quotient_cols.reserve(static_cast<std::size_t>(basis.size() - space.dim()));
        auto piv = space.pivot_cols.begin();
        for (int c = 0; c < basis.size(); ++c) {
            if (piv != space.pivot_cols.end() && *piv == c) {
                ++piv;
            } else {
                quotient_cols.push_back(c);
            }
        }
        auto slice = std::make_shared<const QuotientSlice<F>>(QuotientSlice<F>{
            m, std::move(basis), std::move(space), std::move(quotient_cols)});
        std::scoped_lock lock(mutex_);
        auto [it, inserted] = table.emplace(m, std::move(slice));
        return it->second;
    }

    template <class Compute>
    const DegreeSlice<F>& memoized_slice(SliceTable& table, int l, Compute&& compute) const {
        {
            std::scoped_lock lock(mutex_);
            auto it = table.find(l);
            if (it != table.end()) return *it->second;
        }
        auto slice = std::make_shared<const DegreeSlice<F>>(compute());
        std::scoped_lock lock(mutex_);
        auto [it, inserted] = table.emplace(l, std::move(slice));
        return *it->second;
    }

    // K_l = ker( (S/I)_{l-1}^{n+1} -> (S/I)_l, (A_j) |-> sum_j x_j A_j ),
    // in quotient coordinates on both sides.
    DegreeSlice<F> compute_euler(int l) const {
        const F& f = field();
        auto prev = quotient(l - 1);
        auto cur = quotient(l);
        const int nv = nvars();
        const int dom_block = static_cast<int>(prev->dim_quotient());
        const int dom = nv * dom_block;
        const int target = static_cast<int>(cur->dim_quotient());

        Matrix<F> m(f, target, dom);
        for (int j = 0; j < nv; ++j) {
            std::vector<int> unit(static_cast<std::size_t>(nv), 0);
            unit[static_cast<std::size_t>(j)] = 1;
            Monomial xj(std::move(unit));
            for (int b = 0; b < dom_block; ++b) {
                const Monomial& mu =
                    prev->monomials.at(prev->quotient_cols[static_cast<std::size_t>(b)]);
                auto coords =
                    cur->project_unit(f, cur->monomials.index_of(mu.times(xj)), f.one());
                int col = j * dom_block + b;
                for (int t = 0; t < target; ++t) {
                    m.at(t, col) = coords[static_cast<std::size_t>(t)];
                }
            }
        }
        std::string ambient = "(S/I)_" + std::to_string(l - 1) + "^" + std::to_string(nv);
        return DegreeSlice<F>{l, std::move(ambient), dom, kernel_basis(f, m)};
    }

    // (W_C)_l = {F in S_l : dF/dx_j lies in I_{l-1} for all j}, the forms
    // singular along the whole subscheme; computed as the kernel of the
    // Jacobian map into ((S/I)_{l-1})^{n+1}.
    DegreeSlice<F> compute_singular(int l) const {
        const F& f = field();
        auto prev = quotient(l - 1);
        MonomialBasis basis(nvars(), l);
        const int nv = nvars();
        const int block = static_cast<int>(prev->dim_quotient());
        Matrix<F> m(f, nv * block, basis.size());
        for (int col = 0; col < basis.size(); ++col) {
            const Monomial& mono = basis.at(col);
            for (int j = 0; j < nv; ++j) {
                int e = mono.exp(j);
                if (e == 0) continue;
                std::vector<int> exps(mono.exponents().begin(), mono.exponents().end());
                exps[static_cast<std::size_t>(j)] -= 1;
                int down = prev->monomials.index_of(Monomial(std::move(exps)));
                auto coords = prev->project_unit(f, down, f.from_int(e));
                for (int t = 0; t < block; ++t) {
                    m.at(j * block + t, col) = coords[static_cast<std::size_t>(t)];
                }
            }
        }
        Subspace<F> w = kernel_basis(f, m);
        if (!subspace_contains(f, quotient(l)->ideal, w)) {
            throw Error(Errc::DomainError,
                        "internal: singular slice escaped the ideal slice at degree " +
                            std::to_string(l));
        }
        return DegreeSlice<F>{l, "S_" + std::to_string(l), basis.size(), std::move(w)};
    }

    IdealPresentation<F> ideal_;
    mutable std::mutex mutex_;
    mutable QuotientTable quotients_;
    mutable QuotientTable square_quotients_;
    mutable std::optional<std::vector<Polynomial<F>>> square_gens_;
    mutable SliceTable ideal_slices_;
    mutable SliceTable square_slices_;
    mutable SliceTable euler_slices_;
    mutable SliceTable singular_slices_;
};

// I_m as the span of generator multiples inside S_m. In low degrees this
// can be a proper subspace of the saturated ideal's slice; consumers that
// need asymptotic identities must restrict to stabilized degrees.
template <Field F>
const DegreeSlice<F>& ideal_slice(const SliceContext<F>& ctx, int m) {
    return ctx.ideal_at(m);
}

// Slice of the ideal generated by all pairwise products of generators.
template <Field F>
const DegreeSlice<F>& ideal_square_slice(const SliceContext<F>& ctx, int l) {
    return ctx.square_at(l);
}

template <Field F>
const DegreeSlice<F>& euler_kernel(const SliceContext<F>& ctx, int l) {
    return ctx.euler_at(l);
}

// Sound only when the characteristic does not divide l, where the Euler
// relation recovers F from its partials; otherwise CharDividesDegree.
template <Field F>
const DegreeSlice<F>& singular_slice(const SliceContext<F>& ctx, int l) {
    return ctx.singular_at(l);
}

// dim of the degree-l piece of the restricted differentials, assembled
// as dim K_l - dim I_l + dim (W_C)_l.
template <Field F>
long long omega_slice_dim(const SliceContext<F>& ctx, int l) {
    return euler_kernel(ctx, l).dim() - ideal_slice(ctx, l).dim() + singular_slice(ctx, l).dim();
}

}  // namespace singspace
