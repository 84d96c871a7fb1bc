#pragma once

#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "singspace/field.hpp"

namespace singspace {

// Dense row-major matrix over a coefficient field.
template <Field F>
class Matrix {
  public:
    using Elem = typename F::Element;

    Matrix(const F& field, int rows, int cols)
        : rows_(rows),
          cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), field.zero()) {
        if (rows < 0 || cols < 0) {
            throw Error(Errc::DomainError, "matrix dimensions must be nonnegative");
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem& at(int r, int c) { return data_[index(r, c)]; }
    const Elem& at(int r, int c) const { return data_[index(r, c)]; }

    Elem* row(int r) { return data_.data() + index(r, 0); }
    const Elem* row(int r) const { return data_.data() + index(r, 0); }

    std::span<const Elem> row_span(int r) const { return {row(r), static_cast<std::size_t>(cols_)}; }

    void set_row(int r, std::span<const Elem> values) {
        if (static_cast<int>(values.size()) != cols_) {
            throw Error(Errc::DimensionMismatch, "row length does not match column count");
        }
        std::copy(values.begin(), values.end(), row(r));
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        Elem* pa = row(a);
        Elem* pb = row(b);
        for (int j = 0; j < cols_; ++j) std::swap(pa[j], pb[j]);
    }

    bool equals(const F& field, const Matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) return false;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (!field.eq(data_[i], other.data_[i])) return false;
        }
        return true;
    }

  private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_;
    int cols_;
    std::vector<Elem> data_;
};

template <Field F>
Matrix<F> identity_matrix(const F& field, int size) {
    Matrix<F> m(field, size, size);
    for (int i = 0; i < size; ++i) m.at(i, i) = field.one();
    return m;
}

template <Field F>
struct RrefResult {
    Matrix<F> mat;
    int rank;
    std::vector<int> pivot_cols;
};

// Reduced row-echelon form by Gauss-Jordan elimination. Over F_p the
// first nonzero entry in a column is the pivot; over the rationals the
// candidate with the fewest numerator+denominator bits is preferred to
// limit coefficient swell. Zero rows sink to the bottom.
template <Field F>
RrefResult<F> rref(const F& field, Matrix<F> m) {
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        if constexpr (std::is_same_v<F, RationalField>) {
            std::size_t best = 0;
            for (int i = r; i < rows; ++i) {
                if (field.is_zero(m.at(i, c))) continue;
                std::size_t size = RationalField::bit_size(m.at(i, c));
                if (piv < 0 || size < best) {
                    piv = i;
                    best = size;
                }
            }
        } else {
            for (int i = r; i < rows; ++i) {
                if (!field.is_zero(m.at(i, c))) {
                    piv = i;
                    break;
                }
            }
        }
        if (piv < 0) continue;
        m.swap_rows(piv, r);
        typename F::Element scale = field.inv(m.at(r, c));
        typename F::Element* pr = m.row(r);
        if (!field.eq(scale, field.one())) {
            for (int j = c; j < cols; ++j) {
                if (!field.is_zero(pr[j])) pr[j] = field.mul(scale, pr[j]);
            }
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            typename F::Element factor = m.at(i, c);
            if (field.is_zero(factor)) continue;
            typename F::Element neg_factor = field.neg(factor);
            typename F::Element* pi = m.row(i);
            for (int j = c; j < cols; ++j) {
                if (!field.is_zero(pr[j])) {
                    pi[j] = field.add(pi[j], field.mul(neg_factor, pr[j]));
                }
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return {std::move(m), static_cast<int>(pivot_cols.size()), std::move(pivot_cols)};
}

// A linear subspace of k^ambient in canonical form: the basis matrix is
// the RREF of any spanning set, so equal subspaces compare entry-wise
// equal no matter how they were produced.
template <Field F>
struct Subspace {
    int ambient;
    Matrix<F> basis;  // dim() rows, no zero rows
    std::vector<int> pivot_cols;

    int dim() const { return basis.rows(); }

    bool equals(const F& field, const Subspace& other) const {
        return ambient == other.ambient && pivot_cols == other.pivot_cols &&
               basis.equals(field, other.basis);
    }
};

template <Field F>
Subspace<F> subspace_from_rows(const F& field, Matrix<F> spanning) {
    int ambient = spanning.cols();
    RrefResult<F> r = rref(field, std::move(spanning));
    Matrix<F> basis(field, r.rank, ambient);
    for (int i = 0; i < r.rank; ++i) {
        basis.set_row(i, r.mat.row_span(i));
    }
    return Subspace<F>{ambient, std::move(basis), std::move(r.pivot_cols)};
}

// Canonical residue of v modulo a subspace: entries at pivot columns are
// eliminated, so v lies in the subspace iff the residue is zero, and the
// non-pivot coordinates of the residue are the quotient coordinates.
template <Field F>
void reduce_against(const F& field, const Subspace<F>& space, std::vector<typename F::Element>& v) {
    if (static_cast<int>(v.size()) != space.ambient) {
        throw Error(Errc::DimensionMismatch, "vector length does not match ambient dimension");
    }
    for (int k = 0; k < space.dim(); ++k) {
        int pc = space.pivot_cols[static_cast<std::size_t>(k)];
        typename F::Element factor = v[static_cast<std::size_t>(pc)];
        if (field.is_zero(factor)) continue;
        typename F::Element neg_factor = field.neg(factor);
        const typename F::Element* row = space.basis.row(k);
        for (int j = pc; j < space.ambient; ++j) {
            if (!field.is_zero(row[j])) {
                v[static_cast<std::size_t>(j)] =
                    field.add(v[static_cast<std::size_t>(j)], field.mul(neg_factor, row[j]));
            }
        }
    }
}

template <Field F>
bool subspace_contains(const F& field, const Subspace<F>& space,
                       std::span<const typename F::Element> v) {
    std::vector<typename F::Element> residue(v.begin(), v.end());
    reduce_against(field, space, residue);
    for (const auto& e : residue) {
        if (!field.is_zero(e)) return false;
    }
    return true;
}

// True iff span(inner) is contained in span(outer).
template <Field F>
bool subspace_contains(const F& field, const Subspace<F>& outer, const Subspace<F>& inner) {
    if (outer.ambient != inner.ambient) {
        throw Error(Errc::DimensionMismatch, "subspaces live in different ambient spaces");
    }
    for (int i = 0; i < inner.dim(); ++i) {
        if (!subspace_contains(field, outer, inner.basis.row_span(i))) return false;
    }
    return true;
}

// Basis of the null space {v : Mv = 0}, one vector per non-pivot column,
// re-reduced so the result is canonical.
template <Field F>
Subspace<F> kernel_basis(const F& field, const Matrix<F>& m) {
    RrefResult<F> r = rref(field, m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    Matrix<F> spanning(field, cols - r.rank, cols);
    int row = 0;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        spanning.at(row, fc) = field.one();
        for (int k = 0; k < r.rank; ++k) {
            const typename F::Element& coeff = r.mat.at(k, fc);
            if (!field.is_zero(coeff)) {
                spanning.at(row, r.pivot_cols[static_cast<std::size_t>(k)]) = field.neg(coeff);
            }
        }
        ++row;
    }
    return subspace_from_rows(field, std::move(spanning));
}

// Applies M to v.
template <Field F>
std::vector<typename F::Element> matrix_apply(const F& field, const Matrix<F>& m,
                                              std::span<const typename F::Element> v) {
    if (static_cast<int>(v.size()) != m.cols()) {
        throw Error(Errc::DimensionMismatch, "vector length does not match column count");
    }
    std::vector<typename F::Element> out(static_cast<std::size_t>(m.rows()), field.zero());
    for (int i = 0; i < m.rows(); ++i) {
        const typename F::Element* row = m.row(i);
        typename F::Element acc = field.zero();
        for (int j = 0; j < m.cols(); ++j) {
            if (!field.is_zero(row[j]) && !field.is_zero(v[static_cast<std::size_t>(j)])) {
                acc = field.add(acc, field.mul(row[j], v[static_cast<std::size_t>(j)]));
            }
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

}  // namespace singspace
