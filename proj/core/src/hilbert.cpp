#include "singspace/hilbert.hpp"

#include <algorithm>

namespace singspace {

DegreeWindow default_window(int max_generator_degree, int n) {
    int hi = std::max(2 * max_generator_degree + n + 4, 12);
    while (hi > 1 && binom(hi + n, n) > 5000) --hi;
    return DegreeWindow{1, hi};
}

mpq_class HilbertRecord::eval(long long l) const {
    mpq_class x(static_cast<long>(l));
    mpq_class acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

namespace {

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

long long to_ll(const mpq_class& q) { return mpz_get_si(q.get_num_mpz_t()); }

}  // namespace

long long HilbertRecord::degree_d() const {
    if (poly_degree() != 1 || !is_integer(coeffs[1]) || sgn(coeffs[1]) <= 0 ||
        !is_integer(coeffs[0])) {
        throw Error(Errc::NotACurve, "Hilbert polynomial " + render_poly_in_l(coeffs) +
                                         " does not have the curve shape d*l + 1 - p_a");
    }
    return to_ll(coeffs[1]);
}

long long HilbertRecord::genus_pa() const {
    degree_d();
    return 1 - to_ll(coeffs[0]);
}

std::string render_poly_in_l(const std::vector<mpq_class>& coeffs) {
    std::string out;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        const mpq_class& c = coeffs[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        mpq_class mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        std::string var = k == 0 ? "" : (k == 1 ? "l" : "l^" + std::to_string(k));
        if (k == 0 || mag != 1) {
            out += mag.get_str();
            if (k > 0) out += "*";
        }
        out += var;
    }
    return out.empty() ? "0" : out;
}

namespace {

// Exact interpolating polynomial through (nodes, values) by Newton
// divided differences, returned in ascending monomial coefficients with
// trailing zeros trimmed.
std::vector<mpq_class> interpolate(const std::vector<int>& nodes,
                                   const std::vector<long long>& values) {
    const std::size_t m = nodes.size();
    std::vector<mpq_class> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = mpq_class(static_cast<long>(values[i]));
    std::vector<mpq_class> newton;
    newton.reserve(m);
    newton.push_back(dd[0]);
    for (std::size_t k = 1; k < m; ++k) {
        for (std::size_t i = 0; i + k < m; ++i) {
            dd[i] = (dd[i + 1] - dd[i]) /
                    mpq_class(static_cast<long>(nodes[i + k] - nodes[i]));
        }
        newton.push_back(dd[0]);
    }
    // Expand sum_k newton[k] * prod_{i<k} (x - nodes[i]).
    std::vector<mpq_class> coeffs(m, mpq_class(0));
    std::vector<mpq_class> basis(m, mpq_class(0));
    basis[0] = 1;
    std::size_t basis_len = 1;
    for (std::size_t k = 0; k < m; ++k) {
        if (k > 0) {
            mpq_class node(static_cast<long>(nodes[k - 1]));
            for (std::size_t i = basis_len; i > 0; --i) {
                basis[i] = basis[i - 1] - node * basis[i];
            }
            basis[0] = -node * basis[0];
            ++basis_len;
        }
        if (sgn(newton[k]) != 0) {
            for (std::size_t i = 0; i < basis_len; ++i) {
                coeffs[i] += newton[k] * basis[i];
            }
        }
    }
    while (coeffs.size() > 1 && sgn(coeffs.back()) == 0) coeffs.pop_back();
    return coeffs;
}

int effective_degree(const std::vector<mpq_class>& coeffs) {
    return static_cast<int>(coeffs.size()) - 1;
}

}  // namespace

HilbertRecord hilbert_data(const std::function<std::optional<long long>(int)>& dim_fn,
                           DegreeWindow window) {
    if (window.lo > window.hi) {
        throw Error(Errc::DomainError, "degree window is empty");
    }
    HilbertRecord record;
    for (int l = window.lo; l <= window.hi; ++l) {
        auto dim = dim_fn(l);
        if (dim.has_value()) {
            record.dims.emplace_back(l, *dim);
        } else {
            record.skipped.push_back(l);
        }
    }
    const std::size_t m = record.dims.size();
    for (std::size_t s = 0; s < m; ++s) {
        const std::size_t count = m - s;
        if (count < 3) break;
        std::vector<int> nodes;
        std::vector<long long> values;
        nodes.reserve(count);
        values.reserve(count);
        for (std::size_t i = s; i < m; ++i) {
            nodes.push_back(record.dims[i].first);
            values.push_back(record.dims[i].second);
        }
        std::vector<mpq_class> coeffs = interpolate(nodes, values);
        if (static_cast<int>(count) >= effective_degree(coeffs) + 3) {
            record.stable_from = record.dims[s].first;
            record.coeffs = std::move(coeffs);
            return record;
        }
    }
    throw Error(Errc::NoStabilization,
                "no suffix of the " + std::to_string(m) + " sampled degrees in [" +
                    std::to_string(window.lo) + "," + std::to_string(window.hi) +
                    "] is fitted by a polynomial with degree+3 supporting points");
}

long long g_plus_mu_from_omega(const HilbertRecord& omega, long long d) {
    if (omega.poly_degree() > 1) {
        throw Error(Errc::LeadingMismatch, "omega polynomial " + render_poly_in_l(omega.coeffs) +
                                               " is not linear in l");
    }
    mpq_class leading = omega.poly_degree() == 1 ? omega.coeffs[1] : mpq_class(0);
    if (leading != mpq_class(static_cast<long>(d))) {
        throw Error(Errc::LeadingMismatch,
                    "omega polynomial " + render_poly_in_l(omega.coeffs) +
                        " has leading coefficient " + leading.get_str() + ", expected degree " +
                        std::to_string(d));
    }
    const mpq_class& constant = omega.coeffs[0];
    if (!is_integer(constant)) {
        throw Error(Errc::LeadingMismatch, "omega polynomial " + render_poly_in_l(omega.coeffs) +
                                               " has a non-integer constant term");
    }
    return to_ll(constant) + 1;
}

long long mu_given_genus(const CurveInvariants& inv, long long g_tilde) {
    if (!inv.g_plus_mu.has_value()) {
        throw Error(Errc::DomainError, "mu needs the combined g+mu invariant computed first");
    }
    return *inv.g_plus_mu - g_tilde;
}

long long beta_closed_form(int n, int b, int d, long long l) {
    if (n < 1 || b < 0 || b > n - 1 || d < 1) {
        throw Error(Errc::DomainError, "beta needs n >= 1, 0 <= b <= n-1, d >= 1");
    }
    if (l < 2LL * d) {
        throw Error(Errc::DomainError, "beta closed form needs l >= 2d (got l=" +
                                           std::to_string(l) + ", d=" + std::to_string(d) + ")");
    }
    return binom(l + b + 1, b + 1) - binom(l - 2 * d + b + 1, b + 1) +
           (n - b - 1) * (binom(l + b, b + 1) - binom(l - d + b, b + 1));
}

}  // namespace singspace
