#include "singspace/field.hpp"

#include <cctype>

namespace singspace {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::ZeroInverse: return "ZeroInverse";
        case Errc::BadField: return "BadField";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::UnknownVariable: return "UnknownVariable";
        case Errc::NonHomogeneousGenerator: return "NonHomogeneousGenerator";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::CharDividesDegree: return "CharDividesDegree";
        case Errc::NoStabilization: return "NoStabilization";
        case Errc::NotACurve: return "NotACurve";
        case Errc::LeadingMismatch: return "LeadingMismatch";
        case Errc::DomainError: return "DomainError";
        case Errc::TheoremViolation: return "TheoremViolation";
        case Errc::BadDocument: return "BadDocument";
    }
    return "Unknown";
}

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (std::uint64_t q = 5; q * q <= p; q += 6) {
        if (p % q == 0 || p % (q + 2) == 0) return false;
    }
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31)) {
        throw Error(Errc::BadField,
                    "field characteristic must satisfy 2 <= p < 2^31, got " + std::to_string(p));
    }
    if (!is_prime_u64(p)) {
        throw Error(Errc::BadField, "field characteristic " + std::to_string(p) + " is not prime");
    }
}

PrimeField::Element PrimeField::from_decimal(std::string_view digits) const {
    Element acc = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw Error(Errc::SyntaxError, std::string("bad digit '") + c + "' in integer literal");
        }
        acc = add(mul(acc, 10 % p_), static_cast<Element>(c - '0') % p_);
    }
    return acc;
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) {
        throw Error(Errc::ZeroInverse, "division by zero in " + name());
    }
    // Extended Euclid on (a, p); coefficients stay below 2^31 in magnitude.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Element>(t);
}

RationalField::Element RationalField::from_int(long long k) const {
    Element e(static_cast<long>(k % 1000000000LL));
    long long high = k / 1000000000LL;
    if (high != 0) {
        Element billion(1000000000L);
        e += Element(static_cast<long>(high)) * billion;
    }
    e.canonicalize();
    return e;
}

RationalField::Element RationalField::from_decimal(std::string_view digits) const {
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw Error(Errc::SyntaxError, std::string("bad digit '") + c + "' in integer literal");
        }
    }
    Element e(std::string(digits), 10);
    e.canonicalize();
    return e;
}

RationalField::Element RationalField::inv(const Element& a) const {
    if (sgn(a) == 0) {
        throw Error(Errc::ZeroInverse, "division by zero in rational field");
    }
    return 1 / a;
}

std::size_t RationalField::bit_size(const Element& a) {
    return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "rational") {
        return FieldSpec{Kind::Rational, 0};
    }
    if (text == "prime") {
        return FieldSpec{Kind::Prime, 10007};
    }
    constexpr std::string_view prefix = "prime:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view num = text.substr(prefix.size());
        if (num.empty()) {
            throw Error(Errc::BadField, "missing characteristic in field spec '" + std::string(text) + "'");
        }
        std::uint64_t p = 0;
        for (char c : num) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || p > (std::uint64_t{1} << 40)) {
                throw Error(Errc::BadField, "bad characteristic in field spec '" + std::string(text) + "'");
            }
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
        }
        PrimeField check(p);  // validates primality and range
        return FieldSpec{Kind::Prime, p};
    }
    throw Error(Errc::BadField,
                "unrecognized field spec '" + std::string(text) + "' (expected prime[:P] or rational)");
}

std::string FieldSpec::name() const {
    return kind == Kind::Rational ? "rational" : "prime:" + std::to_string(p);
}

PrimeField FieldSpec::make_prime() const {
    if (kind != Kind::Prime) {
        throw Error(Errc::BadField, "field spec is not a prime field");
    }
    return PrimeField(p);
}

}  // namespace singspace
