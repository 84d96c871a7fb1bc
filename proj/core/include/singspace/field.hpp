#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "singspace/error.hpp"

namespace singspace {

// A coefficient field. Elements are plain values; all arithmetic goes
// through the field object so the same templated code runs over F_p and Q.
template <class F>
concept Field = requires(const F f, typename F::Element a, long long k) {
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.from_int(k) } -> std::convertible_to<typename F::Element>;
    { f.add(a, a) } -> std::convertible_to<typename F::Element>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
    { f.neg(a) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.eq(a, a) } -> std::convertible_to<bool>;
    { f.char_divides(k) } -> std::convertible_to<bool>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.name() } -> std::convertible_to<std::string>;
};

// F_p for a prime p with 2 <= p < 2^31. Elements are canonical
// representatives in [0, p), so products fit in 64 bits without overflow.
class PrimeField {
  public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long long k) const {
        long long r = k % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Element>(r);
    }
    Element from_decimal(std::string_view digits) const;

    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element mul(Element a, Element b) const { return (a * b) % p_; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }

    bool char_divides(long long k) const { return k % static_cast<long long>(p_) == 0; }

    std::string to_string(Element a) const { return std::to_string(a); }
    std::string name() const { return "prime:" + std::to_string(p_); }

  private:
    std::uint64_t p_;
};

// Q via GMP rationals. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we need.
class RationalField {
  public:
    using Element = mpq_class;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long long k) const;
    Element from_decimal(std::string_view digits) const;

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool eq(const Element& a, const Element& b) const { return cmp(a, b) == 0; }

    bool char_divides(long long) const { return false; }

    std::string to_string(const Element& a) const { return a.get_str(); }
    std::string name() const { return "rational"; }

    // Combined bit length of numerator and denominator; used to pick
    // small pivots during elimination.
    static std::size_t bit_size(const Element& a);
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

// Runtime description of a coefficient field, as it appears in input
// documents and on the command line ("prime:10007" or "rational").
struct FieldSpec {
    enum class Kind { Prime, Rational };

    Kind kind = Kind::Prime;
    std::uint64_t p = 10007;

    static FieldSpec parse(std::string_view text);
    std::string name() const;

    PrimeField make_prime() const;
    RationalField make_rational() const { return RationalField{}; }
};

}  // namespace singspace
