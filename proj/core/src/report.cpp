#include "singspace/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "singspace/parse.hpp"

namespace singspace {

namespace {

using nlohmann::ordered_json;

constexpr int json_indent = 2;

template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::Prime) {
        return fn(spec.make_prime());
    }
    return fn(RationalField{});
}

template <Field F>
IdealPresentation<F> build_ideal(const F& field, const InputDocument& doc) {
    IdealPresentation<F> ideal{field, doc.variables, {}};
    ideal.generators.reserve(doc.generators.size());
    for (const auto& text : doc.generators) {
        ideal.generators.push_back(parse_polynomial<F>(text, doc.variables, field));
    }
    ideal.validate();
    return ideal;
}

ordered_json record_json(const HilbertRecord& record) {
    ordered_json dims = ordered_json::array();
    for (const auto& [l, dim] : record.dims) {
        dims.push_back(ordered_json::array({l, dim}));
    }
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : record.coeffs) {
        coeffs.push_back(c.get_str());
    }
    return ordered_json{{"dims", std::move(dims)},
                        {"skipped", record.skipped},
                        {"stable_from", record.stable_from},
                        {"coeffs", std::move(coeffs)},
                        {"poly", render_poly_in_l(record.coeffs)}};
}

ordered_json check_json(const CheckResult& check) {
    ordered_json out{{"name", check.name}, {"verdict", check.verdict}, {"detail", check.detail}};
    if (check.first_failure.has_value()) {
        out["first_failure"] = *check.first_failure;
    } else {
        out["first_failure"] = nullptr;
    }
    return out;
}

// Right-aligned fixed-width table for the human summary.
void append_table(std::ostringstream& out, const std::vector<std::string>& header,
                  const std::vector<std::vector<long long>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) {
            width[c] = std::max(width[c], std::to_string(row[c]).size());
        }
    }
    for (std::size_t c = 0; c < header.size(); ++c) {
        std::string cell = header[c];
        out << std::string(width[c] + 2 - cell.size(), ' ') << cell;
    }
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < header.size(); ++c) {
            std::string cell = std::to_string(row[c]);
            out << std::string(width[c] + 2 - cell.size(), ' ') << cell;
        }
        out << "\n";
    }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

std::string join_ints(const std::vector<int>& values) {
    std::vector<std::string> parts;
    parts.reserve(values.size());
    for (int v : values) parts.push_back(std::to_string(v));
    return join(parts, ", ");
}

template <Field F>
std::vector<std::string> canonical_generators(const SliceContext<F>& ctx) {
    std::vector<std::string> out;
    out.reserve(ctx.ideal().generators.size());
    for (const auto& g : ctx.ideal().generators) {
        out.push_back(render(ctx.field(), g, ctx.ideal().variables));
    }
    return out;
}

void echo_preamble(ordered_json& json, std::ostringstream& human, const std::string& command,
                   const std::string& field_name, const InputDocument& doc) {
    json["command"] = command;
    json["field"] = field_name;
    json["variables"] = doc.variables;
    json["generators"] = doc.generators;
    human << "command: " << command << "\n";
    human << "field: " << field_name << "\n";
    human << "variables: " << join(doc.variables, ", ") << "\n";
}

// One row of the verify sweep; dimensions at a single valid degree.
struct DegreeRow {
    int l;
    long long dim_S;
    long long dim_I;
    long long dim_I2;
    long long dim_W;
    long long dim_K;
    long long omega;
};

template <Field F>
std::pair<std::vector<DegreeRow>, std::vector<int>> collect_rows(const SliceContext<F>& ctx,
                                                                 DegreeWindow window) {
    std::vector<DegreeRow> rows;
    std::vector<int> skipped;
    for (int l = window.lo; l <= window.hi; ++l) {
        if (l < 1 || ctx.field().char_divides(l)) {
            skipped.push_back(l);
            continue;
        }
        long long dim_i = ideal_slice(ctx, l).dim();
        long long dim_i2 = ideal_square_slice(ctx, l).dim();
        long long dim_w = singular_slice(ctx, l).dim();
        long long dim_k = euler_kernel(ctx, l).dim();
        rows.push_back(DegreeRow{l, ctx.dim_full(l), dim_i, dim_i2, dim_w, dim_k,
                                 dim_k - dim_i + dim_w});
    }
    return {std::move(rows), std::move(skipped)};
}

template <Field F>
RunResult hilbert_impl(const F& field, const InputDocument& doc, const RunOverrides& overrides) {
    SliceContext<F> ctx(build_ideal(field, doc));
    DegreeWindow window =
        effective_window(doc, ctx.ideal().max_generator_degree(), ctx.n(), overrides.window);

    ordered_json json;
    std::ostringstream human;
    echo_preamble(json, human, "hilbert", field.name(), doc);
    json["generators_canonical"] = canonical_generators(ctx);
    json["window"] = ordered_json::array({window.lo, window.hi});
    human << "window: [" << window.lo << ", " << window.hi << "]\n\n";

    ordered_json table = ordered_json::array();
    std::vector<std::vector<long long>> human_rows;
    for (int l = window.lo; l <= window.hi; ++l) {
        auto q = ctx.quotient(l);
        table.push_back(ordered_json{{"l", l},
                                     {"dim_S", q->ambient_dim()},
                                     {"dim_I", q->dim_ideal()},
                                     {"dim_quotient", q->dim_quotient()}});
        human_rows.push_back({l, q->ambient_dim(), q->dim_ideal(), q->dim_quotient()});
    }
    json["table"] = std::move(table);
    append_table(human, {"l", "dim S_l", "dim I_l", "dim (S/I)_l"}, human_rows);

    HilbertRecord record = quotient_hilbert(ctx, window);
    CurveInvariants inv{record.degree_d(), record.genus_pa(), std::nullopt, std::nullopt};
    json["hilbert"] = ordered_json{{"quotient", record_json(record)}};
    json["invariants"] = ordered_json{{"d", inv.d}, {"p_a", inv.p_a}};

    human << "\n";
    human << "quotient polynomial: " << render_poly_in_l(record.coeffs) << "   (stable from l = "
          << record.stable_from << ")\n";
    human << "curve degree d = " << inv.d << "\n";
    human << "arithmetic genus p_a = " << inv.p_a << "\n";
    return RunResult{json.dump(json_indent) + "\n", human.str(), 0};
}

template <Field F>
RunResult wspace_impl(const F& field, const InputDocument& doc, int degree) {
    SliceContext<F> ctx(build_ideal(field, doc));
    const DegreeSlice<F>& w = singular_slice(ctx, degree);

    ordered_json json;
    std::ostringstream human;
    echo_preamble(json, human, "wspace", field.name(), doc);
    json["degree"] = degree;
    json["dim_S"] = w.ambient_dim;
    json["dim_W"] = w.dim();
    json["codim"] = w.ambient_dim - w.dim();

    MonomialBasis basis(ctx.nvars(), degree);
    ordered_json rendered = ordered_json::array();
    for (int i = 0; i < w.dim(); ++i) {
        Polynomial<F> p = polynomial_from_vector(field, w.space.basis.row_span(i), basis);
        rendered.push_back(render(field, p, ctx.ideal().variables));
    }
    json["basis"] = rendered;

    human << "degree: " << degree << "\n";
    human << "dim S_" << degree << " = " << w.ambient_dim << "\n";
    human << "dim W_" << degree << " = " << w.dim() << "   (codim " << w.ambient_dim - w.dim()
          << ")\n";
    if (w.dim() > 0) {
        human << "basis:\n";
        for (const auto& line : rendered) {
            human << "  " << line.get<std::string>() << "\n";
        }
    }
    return RunResult{json.dump(json_indent) + "\n", human.str(), 0};
}

template <Field F>
RunResult verify_impl(const F& field, const FieldSpec& spec, const InputDocument& doc,
                      const RunOverrides& overrides, bool crosscheck) {
    SliceContext<F> ctx(build_ideal(field, doc));
    DegreeWindow window =
        effective_window(doc, ctx.ideal().max_generator_degree(), ctx.n(), overrides.window);
    std::optional<long long> g_tilde =
        overrides.g_tilde.has_value() ? overrides.g_tilde : doc.options.g_tilde;

    auto [rows, skipped] = collect_rows(ctx, window);
    if (rows.empty()) {
        throw Error(Errc::DomainError, "no valid degrees in the window");
    }

    std::vector<CheckResult> checks;

    CheckResult nesting{"nesting", "PASS",
                        "(I^2)_l <= (W_C)_l <= I_l at all " + std::to_string(rows.size()) +
                            " tested degrees",
                        std::nullopt};
    CheckResult lci{"lci", "PASS",
                    "(W_C)_l = (I^2)_l at all " + std::to_string(rows.size()) + " tested degrees",
                    std::nullopt};
    for (const DegreeRow& row : rows) {
        const Subspace<F>& w = singular_slice(ctx, row.l).space;
        const Subspace<F>& i2 = ideal_square_slice(ctx, row.l).space;
        const Subspace<F>& ideal = ideal_slice(ctx, row.l).space;
        if (nesting.verdict == "PASS" &&
            !(subspace_contains(field, w, i2) && subspace_contains(field, ideal, w))) {
            nesting.verdict = "FAIL";
            nesting.first_failure = row.l;
            nesting.detail = "containment chain broken at degree " + std::to_string(row.l);
        }
        if (lci.verdict == "PASS" && !w.equals(field, i2)) {
            lci.verdict = "FAIL";
            lci.first_failure = row.l;
            lci.detail = "degree " + std::to_string(row.l) + ": dim (W_C)_l = " +
                         std::to_string(row.dim_W) + " but dim (I^2)_l = " +
                         std::to_string(row.dim_I2) + " (expected for non-lci curves)";
        }
    }
    checks.push_back(nesting);
    checks.push_back(lci);

    HilbertRecord quotient_record = quotient_hilbert(ctx, window);
    std::optional<HilbertRecord> omega_record;
    ordered_json invariants;
    invariants["d"] = nullptr;
    invariants["p_a"] = nullptr;
    invariants["g_plus_mu"] = nullptr;
    invariants["g_tilde"] = g_tilde.has_value() ? ordered_json(*g_tilde) : ordered_json(nullptr);
    invariants["mu"] = nullptr;

    CheckResult codim{"codim_formula", "ERROR", "", std::nullopt};
    std::optional<CurveInvariants> inv;
    try {
        inv = CurveInvariants{quotient_record.degree_d(), quotient_record.genus_pa(), std::nullopt,
                              std::nullopt};
        invariants["d"] = inv->d;
        invariants["p_a"] = inv->p_a;
        omega_record = omega_hilbert(ctx, window);
        inv->g_plus_mu = g_plus_mu_from_omega(*omega_record, inv->d);
        invariants["g_plus_mu"] = *inv->g_plus_mu;
        if (g_tilde.has_value()) {
            inv->mu = mu_given_genus(*inv, *g_tilde);
            invariants["mu"] = *inv->mu;
        }
        codim = verify_codim_formula(ctx, *inv->g_plus_mu, window);
    } catch (const Error& e) {
        codim.detail = std::string(errc_name(e.code())) + ": " + e.what();
    }
    checks.push_back(codim);

    CheckResult plane{"plane_theorem", "SKIP",
                      "needs a plane hypersurface (n = 2 with a single generator)", std::nullopt};
    if (ctx.n() == 2 && ctx.ideal().generators.size() == 1) {
        try {
            plane = verify_plane_theorem(ctx, window);
        } catch (const Error& e) {
            plane.verdict = e.code() == Errc::TheoremViolation ? "FAIL" : "ERROR";
            plane.detail = std::string(errc_name(e.code())) + ": " + e.what();
        }
    }
    checks.push_back(plane);

    if (crosscheck) {
        FieldSpec other = spec.kind == FieldSpec::Kind::Prime
                              ? FieldSpec{FieldSpec::Kind::Rational, 0}
                              : FieldSpec{FieldSpec::Kind::Prime, 10007};
        CheckResult agreement{"backend_agreement", "PASS",
                              "all dimensions agree with the " + other.name() + " backend",
                              std::nullopt};
        with_field(other, [&](const auto& other_field) {
            SliceContext<std::decay_t<decltype(other_field)>> other_ctx(
                build_ideal(other_field, doc));
            auto [other_rows, other_skipped] = collect_rows(other_ctx, window);
            for (const DegreeRow& row : rows) {
                if (agreement.verdict != "PASS") break;
                auto it = std::find_if(other_rows.begin(), other_rows.end(),
                                       [&](const DegreeRow& r) { return r.l == row.l; });
                if (it == other_rows.end()) continue;
                if (row.dim_I != it->dim_I || row.dim_I2 != it->dim_I2 ||
                    row.dim_W != it->dim_W || row.dim_K != it->dim_K) {
                    agreement.verdict = "FAIL";
                    agreement.first_failure = row.l;
                    agreement.detail =
                        "dimension disagreement with " + other.name() + " at degree " +
                        std::to_string(row.l);
                }
            }
        });
        checks.push_back(agreement);
    }

    bool all_pass = std::all_of(checks.begin(), checks.end(),
                                [](const CheckResult& c) { return c.ok(); });

    ordered_json json;
    std::ostringstream human;
    echo_preamble(json, human, "verify", field.name(), doc);
    json["generators_canonical"] = canonical_generators(ctx);
    json["window"] = ordered_json::array({window.lo, window.hi});
    json["skipped_degrees"] = skipped;
    human << "generators:\n";
    for (const auto& g : canonical_generators(ctx)) human << "  " << g << "\n";
    human << "window: [" << window.lo << ", " << window.hi << "]\n";
    if (!skipped.empty()) human << "skipped degrees: " << join_ints(skipped) << "\n";
    human << "\n";

    ordered_json table = ordered_json::array();
    std::vector<std::vector<long long>> human_rows;
    for (const DegreeRow& row : rows) {
        table.push_back(ordered_json{{"l", row.l},
                                     {"dim_S", row.dim_S},
                                     {"dim_I", row.dim_I},
                                     {"dim_I2", row.dim_I2},
                                     {"dim_W", row.dim_W},
                                     {"dim_K", row.dim_K},
                                     {"omega", row.omega}});
        human_rows.push_back(
            {row.l, row.dim_S, row.dim_I, row.dim_I2, row.dim_W, row.dim_K, row.omega});
    }
    json["table"] = std::move(table);
    append_table(human,
                 {"l", "dim S_l", "dim I_l", "dim (I^2)_l", "dim W_l", "dim K_l", "omega_l"},
                 human_rows);
    human << "\n";

    ordered_json hilbert{{"quotient", record_json(quotient_record)}};
    human << "quotient polynomial: " << render_poly_in_l(quotient_record.coeffs)
          << "   (stable from l = " << quotient_record.stable_from << ")\n";
    if (omega_record.has_value()) {
        hilbert["omega"] = record_json(*omega_record);
        human << "omega polynomial: " << render_poly_in_l(omega_record->coeffs)
              << "   (stable from l = " << omega_record->stable_from << ")\n";
    } else {
        hilbert["omega"] = nullptr;
    }
    json["hilbert"] = std::move(hilbert);
    json["invariants"] = invariants;
    if (inv.has_value()) {
        human << "d = " << inv->d << ", p_a = " << inv->p_a;
        if (inv->g_plus_mu.has_value()) human << ", g+mu = " << *inv->g_plus_mu;
        if (g_tilde.has_value()) human << ", g_tilde = " << *g_tilde;
        if (inv->mu.has_value()) human << ", mu = " << *inv->mu;
        human << "\n";
    }
    human << "\n";

    ordered_json checks_json = ordered_json::array();
    for (const CheckResult& check : checks) {
        checks_json.push_back(check_json(check));
        human << "[" << check.verdict << "] " << check.name << ": " << check.detail << "\n";
    }
    json["checks"] = std::move(checks_json);
    json["all_pass"] = all_pass;
    human << "verdict: " << (all_pass ? "PASS" : "FAIL") << "\n";

    return RunResult{json.dump(json_indent) + "\n", human.str(), all_pass ? 0 : 1};
}

// Parses a brute-force beta polynomial in b+2 variables, accepting both
// the indexed names x0..x{b+1} and the letter aliases x,y,z,w,v,u.
template <Field F>
Polynomial<F> parse_beta_polynomial(const F& field, const std::string& text, int b) {
    const int nvars = b + 2;
    std::vector<std::string> indexed;
    indexed.reserve(static_cast<std::size_t>(nvars));
    for (int j = 0; j < nvars; ++j) indexed.push_back("x" + std::to_string(j));
    try {
        return parse_polynomial<F>(text, indexed, field);
    } catch (const Error& e) {
        if (e.code() != Errc::UnknownVariable) throw;
        static const std::vector<std::string> letters{"x", "y", "z", "w", "v", "u"};
        if (nvars > static_cast<int>(letters.size())) throw;
        std::vector<std::string> alias(letters.begin(), letters.begin() + nvars);
        try {
            return parse_polynomial<F>(text, alias, field);
        } catch (const Error& inner) {
            if (inner.code() != Errc::UnknownVariable) throw;
            throw Error(Errc::UnknownVariable,
                        std::string(inner.what()) + " (accepted names: " + join(indexed, ", ") +
                            " or " + join(alias, ", ") + ")");
        }
    }
}

}  // namespace

RunResult run_hilbert(const InputDocument& doc, const RunOverrides& overrides) {
    FieldSpec spec = effective_field(doc, overrides.field);
    return with_field(spec, [&](const auto& field) { return hilbert_impl(field, doc, overrides); });
}

RunResult run_wspace(const InputDocument& doc, int degree, const RunOverrides& overrides) {
    FieldSpec spec = effective_field(doc, overrides.field);
    return with_field(spec, [&](const auto& field) { return wspace_impl(field, doc, degree); });
}

RunResult run_verify(const InputDocument& doc, const RunOverrides& overrides, bool crosscheck) {
    FieldSpec spec = effective_field(doc, overrides.field);
    return with_field(spec, [&](const auto& field) {
        return verify_impl(field, spec, doc, overrides, crosscheck);
    });
}

RunResult run_beta(const FieldSpec& field_spec, int n, int b, int d, long long l,
                   const std::optional<std::string>& brute_expr) {
    long long closed = beta_closed_form(n, b, d, l);

    ordered_json json;
    std::ostringstream human;
    json["command"] = "beta";
    json["field"] = field_spec.name();
    json["n"] = n;
    json["b"] = b;
    json["d"] = d;
    json["l"] = l;
    json["closed_form"] = closed;
    human << "command: beta\n";
    human << "beta(n=" << n << ", b=" << b << ", d=" << d << ", l=" << l << ") closed form = "
          << closed << "\n";

    bool all_pass = true;
    if (brute_expr.has_value()) {
        long long value = with_field(field_spec, [&](const auto& field) {
            auto f = parse_beta_polynomial(field, *brute_expr, b);
            auto fdeg = f.homogeneous_degree();
            if (!fdeg.has_value() || *fdeg != d) {
                throw Error(Errc::DomainError,
                            "brute polynomial must be homogeneous of degree d = " +
                                std::to_string(d));
            }
            return beta_bruteforce(field, n, b, f, static_cast<int>(l));
        });
        bool match = value == closed;
        all_pass = match;
        json["brute"] = ordered_json{{"expr", *brute_expr}, {"value", value}, {"match", match}};
        human << "brute force with f = " << *brute_expr << ": " << value << "\n";
        human << "verdict: " << (match ? "PASS" : "FAIL") << "\n";
    } else {
        json["brute"] = nullptr;
    }
    json["all_pass"] = all_pass;
    return RunResult{json.dump(json_indent) + "\n", human.str(), all_pass ? 0 : 1};
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::SyntaxError:
        case Errc::UnknownVariable:
        case Errc::NonHomogeneousGenerator:
        case Errc::BadField:
        case Errc::BadDocument:
            return 2;
        case Errc::CharDividesDegree:
        case Errc::NoStabilization:
        case Errc::NotACurve:
        case Errc::LeadingMismatch:
        case Errc::DomainError:
        case Errc::ZeroInverse:
        case Errc::DimensionMismatch:
            return 3;
        case Errc::TheoremViolation:
            return 1;
    }
    return 3;
}

}  // namespace singspace
