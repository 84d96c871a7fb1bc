#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include <singspace/hilbert.hpp>
#include <singspace/linalg.hpp>
#include <singspace/parse.hpp>
#include <singspace/slices.hpp>

using namespace singspace;

namespace {

const std::vector<std::string> P2{"x", "y", "z"};
const std::vector<std::string> P3{"x", "y", "z", "w"};

template <Field F>
SliceContext<F> make_context(const F& field, std::vector<std::string> variables,
                             const std::vector<std::string>& generator_exprs) {
    std::vector<Polynomial<F>> gens;
    gens.reserve(generator_exprs.size());
    for (const auto& text : generator_exprs) {
        gens.push_back(parse_polynomial<F>(text, variables, field));
    }
    return SliceContext<F>(IdealPresentation<F>{field, std::move(variables), std::move(gens)});
}

Matrix<PrimeField> random_square(const PrimeField& f, int size, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    Matrix<PrimeField> m(f, size, size);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            m.at(i, j) = f.from_int(static_cast<long long>(gen() % 10007));
        }
    }
    return m;
}

void BM_RrefPrime(benchmark::State& state) {
    PrimeField f(10007);
    const int size = static_cast<int>(state.range(0));
    Matrix<PrimeField> m = random_square(f, size, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref(f, m).rank);
    }
}
BENCHMARK(BM_RrefPrime)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_RrefRational(benchmark::State& state) {
    RationalField q;
    const int size = static_cast<int>(state.range(0));
    std::mt19937_64 gen(7);
    Matrix<RationalField> m(q, size, size);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            m.at(i, j) = q.from_int(static_cast<long long>(gen() % 19) - 9);
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref(q, m).rank);
    }
}
BENCHMARK(BM_RrefRational)->Arg(16)->Arg(32)->Arg(64);

void BM_IdealSlice(benchmark::State& state) {
    PrimeField f(10007);
    const int l = static_cast<int>(state.range(0));
    for (auto _ : state) {
        // Fresh context each round so memoization does not hide the work.
        auto ctx = make_context(f, P3, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
        benchmark::DoNotOptimize(ideal_slice(ctx, l).dim());
    }
}
BENCHMARK(BM_IdealSlice)->Arg(6)->Arg(9)->Arg(12);

void BM_SingularSlice(benchmark::State& state) {
    PrimeField f(10007);
    const int l = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto ctx = make_context(f, P2, {"y^2*z - x^3 - x^2*z"});
        benchmark::DoNotOptimize(singular_slice(ctx, l).dim());
    }
}
BENCHMARK(BM_SingularSlice)->Arg(8)->Arg(12)->Arg(16);

void BM_VerifySweep(benchmark::State& state) {
    PrimeField f(10007);
    const int hi = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto ctx = make_context(f, P2, {"y^2*z - x^3 - x^2*z"});
        long long acc = 0;
        for (int l = 1; l <= hi; ++l) acc += omega_slice_dim(ctx, l);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_VerifySweep)->Arg(10)->Arg(14);

void BM_BetaBruteforceWorstCell(benchmark::State& state) {
    PrimeField f(10007);
    std::vector<std::string> two{"x0", "x1"};
    auto fpoly = parse_polynomial<PrimeField>("x0^3 + 2*x0^2*x1 + 3*x0*x1^2 + 5*x1^3", two, f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_bruteforce(f, 4, 0, fpoly, 10));
    }
}
BENCHMARK(BM_BetaBruteforceWorstCell);

}  // namespace

BENCHMARK_MAIN();
