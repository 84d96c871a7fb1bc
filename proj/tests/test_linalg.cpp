#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include <singspace/linalg.hpp>

#include "support/expect.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace singspace;

namespace {

// Structural definition of reduced row echelon form, checked entry-wise.
template <Field F>
void check_rref_shape(const F& field, const RrefResult<F>& r) {
    int prev_pivot = -1;
    for (int i = 0; i < r.rank; ++i) {
        int pc = r.pivot_cols[static_cast<std::size_t>(i)];
        CHECK(pc > prev_pivot);
        prev_pivot = pc;
        for (int j = 0; j < pc; ++j) CHECK(field.is_zero(r.mat.at(i, j)));
        CHECK(field.eq(r.mat.at(i, pc), field.one()));
        for (int k = 0; k < r.rank; ++k) {
            if (k != i) CHECK(field.is_zero(r.mat.at(k, pc)));
        }
    }
    for (int i = r.rank; i < r.mat.rows(); ++i) {
        for (int j = 0; j < r.mat.cols(); ++j) CHECK(field.is_zero(r.mat.at(i, j)));
    }
}

std::vector<std::vector<std::uint64_t>> to_rows_mod(const Matrix<PrimeField>& m) {
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        out.emplace_back(m.row(i), m.row(i) + m.cols());
    }
    return out;
}

}  // namespace

TEST_CASE("rref of pinned matrices") {
    PrimeField f(10007);

    auto id = rref(f, identity_matrix(f, 4));
    CHECK(id.rank == 4);
    CHECK(id.pivot_cols == std::vector<int>{0, 1, 2, 3});
    CHECK(id.mat.equals(f, identity_matrix(f, 4)));

    auto zero = rref(f, Matrix<PrimeField>(f, 3, 5));
    CHECK(zero.rank == 0);
    CHECK(zero.pivot_cols.empty());

    // Two distinct rows plus their sum: rank 2.
    Matrix<PrimeField> m(f, 3, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 1) = 1;
    m.at(1, 2) = 5;
    m.at(2, 0) = 1;
    m.at(2, 1) = 3;
    m.at(2, 2) = 8;
    auto r = rref(f, m);
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<int>{0, 1});
}

TEST_CASE("rref rank agrees with an independent elimination on 500 random matrices") {
    PrimeField f(10007);
    auto gen = oracle::rng(81);
    for (int trial = 0; trial < 500; ++trial) {
        int rows = 1 + static_cast<int>(gen() % 8);
        int cols = 1 + static_cast<int>(gen() % 8);
        auto m = testgen::random_matrix(f, rows, cols, gen, -4, 4);
        auto r = rref(f, m);
        CHECK(r.rank == oracle::rank_mod(to_rows_mod(m), 10007));
        check_rref_shape(f, r);

        // Idempotence: reducing the reduced matrix changes nothing.
        auto again = rref(f, r.mat);
        CHECK(again.mat.equals(f, r.mat));
        CHECK(again.pivot_cols == r.pivot_cols);

        // Rank-nullity, with the kernel vectors verified against the
        // original matrix by direct multiplication.
        auto ker = kernel_basis(f, m);
        CHECK(ker.dim() + r.rank == cols);
        for (int i = 0; i < ker.dim(); ++i) {
            auto image = matrix_apply(f, m, ker.basis.row_span(i));
            for (const auto& e : image) CHECK(f.is_zero(e));
        }
    }
}

TEST_CASE("rational rref matches the fraction-free rank oracle") {
    RationalField q;
    auto gen = oracle::rng(82);
    for (int trial = 0; trial < 120; ++trial) {
        int rows = 1 + static_cast<int>(gen() % 6);
        int cols = 1 + static_cast<int>(gen() % 6);
        auto m = testgen::random_matrix(q, rows, cols, gen, -9, 9);
        std::vector<std::vector<mpz_class>> lifted;
        lifted.reserve(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            std::vector<mpz_class> row;
            row.reserve(static_cast<std::size_t>(cols));
            for (int j = 0; j < cols; ++j) row.emplace_back(m.at(i, j).get_num());
            lifted.push_back(std::move(row));
        }
        auto r = rref(q, m);
        CHECK(r.rank == oracle::rank_bareiss(lifted));
        check_rref_shape(q, r);
    }
}

TEST_CASE("rational rref keeps exact fractions") {
    RationalField q;
    Matrix<RationalField> m(q, 2, 3);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(0, 2) = 1;
    m.at(1, 0) = 3;
    m.at(1, 1) = 7;
    m.at(1, 2) = 1;
    auto r = rref(q, m);
    CHECK(r.rank == 2);
    // Hand elimination gives x-column (3/2, -1/2).
    CHECK(q.eq(r.mat.at(0, 2), mpq_class(3, 2)));
    CHECK(q.eq(r.mat.at(1, 2), mpq_class(-1, 2)));
}

TEST_CASE("kernels of pinned matrices") {
    PrimeField f(10007);

    CHECK(kernel_basis(f, identity_matrix(f, 4)).dim() == 0);

    Subspace<PrimeField> all = kernel_basis(f, Matrix<PrimeField>(f, 2, 3));
    CHECK(all.dim() == 3);
    CHECK(all.basis.equals(f, identity_matrix(f, 3)));

    Matrix<PrimeField> ones(f, 1, 3);
    ones.at(0, 0) = 1;
    ones.at(0, 1) = 1;
    ones.at(0, 2) = 1;
    Subspace<PrimeField> ker = kernel_basis(f, ones);
    REQUIRE(ker.dim() == 2);
    // Canonical basis: (1, 0, -1) and (0, 1, -1).
    CHECK(ker.basis.at(0, 0) == 1);
    CHECK(ker.basis.at(0, 1) == 0);
    CHECK(ker.basis.at(0, 2) == 10006);
    CHECK(ker.basis.at(1, 0) == 0);
    CHECK(ker.basis.at(1, 1) == 1);
    CHECK(ker.basis.at(1, 2) == 10006);
    for (int i = 0; i < ker.dim(); ++i) {
        PrimeField::Element sum = 0;
        for (int j = 0; j < 3; ++j) sum = f.add(sum, ker.basis.at(i, j));
        CHECK(sum == 0);
    }
}

TEST_CASE("subspace membership on pinned vectors") {
    PrimeField f(10007);
    Matrix<PrimeField> span(f, 1, 3);
    span.at(0, 0) = 1;
    Subspace<PrimeField> e1 = subspace_from_rows(f, span);

    std::vector<PrimeField::Element> zero(3, 0);
    CHECK(subspace_contains(f, e1, std::span<const PrimeField::Element>(zero)));

    std::vector<PrimeField::Element> e2{0, 1, 0};
    CHECK(!subspace_contains(f, e1, std::span<const PrimeField::Element>(e2)));

    std::vector<PrimeField::Element> scaled{42, 0, 0};
    CHECK(subspace_contains(f, e1, std::span<const PrimeField::Element>(scaled)));
}

TEST_CASE("membership holds for random combinations and fails off the space") {
    PrimeField f(10007);
    auto gen = oracle::rng(83);
    for (int trial = 0; trial < 100; ++trial) {
        int dim = 2 + static_cast<int>(gen() % 3);
        int ambient = dim + 2 + static_cast<int>(gen() % 3);
        auto m = testgen::random_matrix(f, dim, ambient, gen, -9, 9);
        Subspace<PrimeField> space = subspace_from_rows(f, m);

        std::vector<PrimeField::Element> combo(static_cast<std::size_t>(ambient), 0);
        for (int i = 0; i < m.rows(); ++i) {
            PrimeField::Element c = f.from_int(testgen::draw(gen, -20, 20));
            for (int j = 0; j < ambient; ++j) {
                combo[static_cast<std::size_t>(j)] =
                    f.add(combo[static_cast<std::size_t>(j)], f.mul(c, m.at(i, j)));
            }
        }
        CHECK(subspace_contains(f, space, std::span<const PrimeField::Element>(combo)));

        if (space.dim() < ambient) {
            // Push the combination off the space along a free column.
            std::vector<bool> is_pivot(static_cast<std::size_t>(ambient), false);
            for (int c : space.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
            for (int j = 0; j < ambient; ++j) {
                if (!is_pivot[static_cast<std::size_t>(j)]) {
                    combo[static_cast<std::size_t>(j)] =
                        f.add(combo[static_cast<std::size_t>(j)], f.one());
                    break;
                }
            }
            CHECK(!subspace_contains(f, space, std::span<const PrimeField::Element>(combo)));
        }
    }
}

TEST_CASE("canonical bases are independent of the spanning set") {
    PrimeField f(10007);
    auto gen = oracle::rng(84);
    for (int trial = 0; trial < 100; ++trial) {
        int dim = 1 + static_cast<int>(gen() % 4);
        int ambient = dim + 1 + static_cast<int>(gen() % 4);
        auto m = testgen::random_matrix(f, dim, ambient, gen, -9, 9);
        Subspace<PrimeField> original = subspace_from_rows(f, m);

        // Same span, different presentation: original rows plus random
        // combinations, shuffled.
        int extra = 1 + static_cast<int>(gen() % 3);
        Matrix<PrimeField> bigger(f, dim + extra, ambient);
        for (int i = 0; i < dim; ++i) bigger.set_row(i, m.row_span(i));
        for (int e = 0; e < extra; ++e) {
            for (int i = 0; i < dim; ++i) {
                PrimeField::Element c = f.from_int(testgen::draw(gen, -20, 20));
                for (int j = 0; j < ambient; ++j) {
                    bigger.at(dim + e, j) =
                        f.add(bigger.at(dim + e, j), f.mul(c, m.at(i, j)));
                }
            }
        }
        for (int i = dim + extra - 1; i > 0; --i) {
            bigger.swap_rows(i, static_cast<int>(gen() % static_cast<std::uint64_t>(i + 1)));
        }
        Subspace<PrimeField> reshuffled = subspace_from_rows(f, bigger);
        CHECK(reshuffled.equals(f, original));
        CHECK(subspace_contains(f, original, reshuffled));
        CHECK(subspace_contains(f, reshuffled, original));
    }
}

TEST_CASE("reduce_against produces residues outside the space") {
    PrimeField f(10007);
    auto gen = oracle::rng(85);
    for (int trial = 0; trial < 60; ++trial) {
        int ambient = 5;
        auto m = testgen::random_matrix(f, 2, ambient, gen, -9, 9);
        Subspace<PrimeField> space = subspace_from_rows(f, m);
        std::vector<PrimeField::Element> v;
        for (int j = 0; j < ambient; ++j) v.push_back(f.from_int(testgen::draw(gen, -9, 9)));

        std::vector<PrimeField::Element> residue = v;
        reduce_against(f, space, residue);
        // residue has zeros at the pivot columns.
        for (int pc : space.pivot_cols) CHECK(f.is_zero(residue[static_cast<std::size_t>(pc)]));
        // v - residue lies in the space.
        std::vector<PrimeField::Element> diff(static_cast<std::size_t>(ambient));
        for (int j = 0; j < ambient; ++j) {
            diff[static_cast<std::size_t>(j)] =
                f.sub(v[static_cast<std::size_t>(j)], residue[static_cast<std::size_t>(j)]);
        }
        CHECK(subspace_contains(f, space, std::span<const PrimeField::Element>(diff)));
    }
}

TEST_CASE("dimension mismatches are rejected") {
    PrimeField f(10007);
    Matrix<PrimeField> m(f, 2, 3);
    Subspace<PrimeField> space = subspace_from_rows(f, m);
    std::vector<PrimeField::Element> wrong(4, 0);
    CHECK(expect::thrown_code([&] {
              subspace_contains(f, space, std::span<const PrimeField::Element>(wrong));
          }) == Errc::DimensionMismatch);
    CHECK(expect::thrown_code([&] {
              std::vector<PrimeField::Element> v(2, 1);
              Matrix<PrimeField> bad(f, 1, 2);
              bad.set_row(0, std::span<const PrimeField::Element>(v));
              matrix_apply(f, m, bad.row_span(0));
          }) == Errc::DimensionMismatch);
}
