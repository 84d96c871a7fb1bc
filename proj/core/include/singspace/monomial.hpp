#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "singspace/error.hpp"

namespace singspace {

// C(top, k), with the convention that out-of-range arguments give 0.
long long binom(long long top, long long k);

// A monomial in a fixed number of variables, stored as its exponent vector.
class Monomial {
  public:
    explicit Monomial(std::vector<int> exponents);
    static Monomial unit(int nvars);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int exp(int j) const { return exps_[static_cast<std::size_t>(j)]; }
    std::span<const int> exponents() const { return exps_; }

    Monomial times(const Monomial& other) const;
    bool divisible_by(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  private:
    std::vector<int> exps_;
    int degree_;
};

// Strict graded reverse lexicographic comparison: higher degree wins;
// within a degree, a beats b when the last coordinate where they differ
// is smaller in a.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

// All monomials of the given total degree, in descending grevlex order.
// For degree 0 this is the single unit monomial.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// A degree slice of the polynomial ring with positional lookup, so
// coefficient vectors and matrix columns share one indexing.
class MonomialBasis {
  public:
    MonomialBasis(int nvars, int degree);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(list_.size()); }
    const Monomial& at(int i) const { return list_[static_cast<std::size_t>(i)]; }
    const std::vector<Monomial>& list() const { return list_; }

    // Position of a monomial in this basis; throws on degree mismatch.
    int index_of(const Monomial& m) const;

  private:
    int nvars_;
    int degree_;
    std::vector<Monomial> list_;
};

std::string render_monomial(const Monomial& m, std::span<const std::string> variables);

}  // namespace singspace
