#include "singspace/monomial.hpp"

#include <algorithm>

namespace singspace {

long long binom(long long top, long long k) {
    if (k < 0 || top < 0 || top < k) return 0;
    k = std::min(k, top - k);
    long long result = 1;
    for (long long i = 1; i <= k; ++i) {
        result = result * (top - k + i) / i;
    }
    return result;
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)), degree_(0) {
    if (exps_.empty()) {
        throw Error(Errc::DomainError, "monomial needs at least one variable");
    }
    for (int e : exps_) {
        if (e < 0) {
            throw Error(Errc::DomainError, "negative exponent in monomial");
        }
        degree_ += e;
    }
}

Monomial Monomial::unit(int nvars) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::times(const Monomial& other) const {
    if (other.nvars() != nvars()) {
        throw Error(Errc::DimensionMismatch, "monomial product across different variable counts");
    }
    std::vector<int> exps(exps_);
    for (std::size_t j = 0; j < exps.size(); ++j) {
        exps[j] += other.exps_[j];
    }
    return Monomial(std::move(exps));
}

bool Monomial::divisible_by(const Monomial& other) const {
    if (other.nvars() != nvars()) return false;
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        if (exps_[j] < other.exps_[j]) return false;
    }
    return true;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    for (int j = a.nvars() - 1; j >= 0; --j) {
        if (a.exp(j) != b.exp(j)) return a.exp(j) < b.exp(j);
    }
    return false;
}

namespace {

void enumerate(int remaining_vars, int remaining_degree, std::vector<int>& partial,
               std::vector<Monomial>& out) {
    if (remaining_vars == 1) {
        partial.push_back(remaining_degree);
        out.push_back(Monomial(partial));
        partial.pop_back();
        return;
    }
    for (int e = remaining_degree; e >= 0; --e) {
        partial.push_back(e);
        enumerate(remaining_vars - 1, remaining_degree - e, partial, out);
        partial.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    if (nvars < 1 || degree < 0) {
        throw Error(Errc::DomainError, "monomials_of_degree needs nvars >= 1 and degree >= 0");
    }
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(binom(degree + nvars - 1, nvars - 1)));
    std::vector<int> partial;
    enumerate(nvars, degree, partial, out);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

MonomialBasis::MonomialBasis(int nvars, int degree)
    : nvars_(nvars), degree_(degree), list_(monomials_of_degree(nvars, degree)) {}

int MonomialBasis::index_of(const Monomial& m) const {
    if (m.nvars() != nvars_ || m.degree() != degree_) {
        throw Error(Errc::DimensionMismatch, "monomial does not belong to this degree slice");
    }
    auto it = std::lower_bound(list_.begin(), list_.end(), m, GrevlexGreater{});
    return static_cast<int>(it - list_.begin());
}

std::string render_monomial(const Monomial& m, std::span<const std::string> variables) {
    if (static_cast<int>(variables.size()) != m.nvars()) {
        throw Error(Errc::DimensionMismatch, "variable list does not match monomial");
    }
    if (m.degree() == 0) return "1";
    std::string out;
    for (int j = 0; j < m.nvars(); ++j) {
        if (m.exp(j) == 0) continue;
        if (!out.empty()) out += "*";
        out += variables[static_cast<std::size_t>(j)];
        if (m.exp(j) > 1) {
            out += "^" + std::to_string(m.exp(j));
        }
    }
    return out;
}

}  // namespace singspace
