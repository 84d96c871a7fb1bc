#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "singspace/report.hpp"

namespace {

using singspace::DegreeWindow;
using singspace::Error;
using singspace::FieldSpec;
using singspace::RunOverrides;
using singspace::RunResult;

struct CommonFlags {
    std::string doc_path;
    std::string field_text;
    std::string window_text;
    bool json = false;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("document", flags.doc_path, "input document (JSON)")->required();
    cmd->add_option("--field", flags.field_text, "coefficient field: prime[:P] or rational");
    cmd->add_option("--window", flags.window_text, "degree window L_MIN:L_MAX");
    cmd->add_flag("--json", flags.json, "print the JSON report to stdout instead of the summary");
    cmd->add_option("--out", flags.out_path, "write the JSON report to a file");
}

RunOverrides make_overrides(const CommonFlags& flags, std::optional<long long> g_tilde) {
    RunOverrides overrides;
    if (!flags.field_text.empty()) {
        overrides.field = FieldSpec::parse(flags.field_text);
    }
    if (!flags.window_text.empty()) {
        auto colon = flags.window_text.find(':');
        std::size_t used_lo = 0, used_hi = 0;
        int lo = 0, hi = 0;
        try {
            lo = std::stoi(flags.window_text.substr(0, colon), &used_lo);
            if (colon != std::string::npos) {
                hi = std::stoi(flags.window_text.substr(colon + 1), &used_hi);
            }
        } catch (const std::exception&) {
            used_lo = 0;
        }
        if (colon == std::string::npos || used_lo != colon ||
            used_hi != flags.window_text.size() - colon - 1 || lo < 1 || hi < lo) {
            throw Error(singspace::Errc::BadDocument,
                        "--window expects L_MIN:L_MAX with 1 <= L_MIN <= L_MAX, got '" +
                            flags.window_text + "'");
        }
        overrides.window = DegreeWindow{lo, hi};
    }
    overrides.g_tilde = g_tilde;
    return overrides;
}

int emit(const RunResult& result, const CommonFlags& flags) {
    if (!flags.out_path.empty()) {
        std::ofstream out(flags.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write report to '" << flags.out_path << "'\n";
            return 2;
        }
        out << result.json;
    }
    std::cout << (flags.json ? result.json : result.human);
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-by-degree singular-space and curve-invariant calculator"};
    app.require_subcommand(1);

    CommonFlags hilbert_flags;
    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert data of S/I: dimensions, d, p_a");
    add_common(hilbert, hilbert_flags);

    CommonFlags wspace_flags;
    int wspace_degree = 0;
    CLI::App* wspace =
        app.add_subcommand("wspace", "basis and dimension of the singular space at one degree");
    add_common(wspace, wspace_flags);
    wspace->add_option("-l,--degree", wspace_degree, "slice degree")->required();

    CommonFlags verify_flags;
    long long verify_gtilde = -1;
    bool verify_crosscheck = false;
    CLI::App* verify = app.add_subcommand(
        "verify", "verification suite: nesting, lci, codimension formula, plane theorem");
    add_common(verify, verify_flags);
    CLI::Option* gtilde_opt =
        verify->add_option("--gtilde", verify_gtilde, "genus of the normalization (enables mu)");
    verify->add_flag("--crosscheck", verify_crosscheck,
                     "recompute all dimensions with the other backend and compare");

    int beta_n = 0, beta_b = 0, beta_d = 0;
    long long beta_l = 0;
    std::string beta_brute;
    std::string beta_field_text;
    bool beta_json = false;
    std::string beta_out;
    CLI::App* beta = app.add_subcommand("beta", "codimension of the square slice: closed formula");
    beta->add_option("-n", beta_n, "ambient projective dimension")->required();
    beta->add_option("-b", beta_b, "linear-span parameter, 0 <= b <= n-1")->required();
    beta->add_option("-d", beta_d, "form degree, d >= 1")->required();
    beta->add_option("-l", beta_l, "slice degree, l >= 2d")->required();
    beta->add_option("--brute", beta_brute,
                     "compare against a brute-force run with this form (variables x0..x{b+1} or "
                     "x,y,z,...)");
    beta->add_option("--field", beta_field_text, "coefficient field for the brute-force run");
    beta->add_flag("--json", beta_json, "print the JSON report to stdout instead of the summary");
    beta->add_option("--out", beta_out, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (hilbert->parsed()) {
            auto doc = singspace::load_document(hilbert_flags.doc_path);
            return emit(run_hilbert(doc, make_overrides(hilbert_flags, std::nullopt)),
                        hilbert_flags);
        }
        if (wspace->parsed()) {
            auto doc = singspace::load_document(wspace_flags.doc_path);
            return emit(run_wspace(doc, wspace_degree, make_overrides(wspace_flags, std::nullopt)),
                        wspace_flags);
        }
        if (verify->parsed()) {
            auto doc = singspace::load_document(verify_flags.doc_path);
            std::optional<long long> g_tilde;
            if (gtilde_opt->count() > 0) {
                if (verify_gtilde < 0) {
                    throw Error(singspace::Errc::BadDocument, "--gtilde must be nonnegative");
                }
                g_tilde = verify_gtilde;
            }
            return emit(run_verify(doc, make_overrides(verify_flags, g_tilde), verify_crosscheck),
                        verify_flags);
        }
        FieldSpec beta_spec =
            beta_field_text.empty() ? FieldSpec{} : FieldSpec::parse(beta_field_text);
        std::optional<std::string> brute;
        if (beta->get_option("--brute")->count() > 0) brute = beta_brute;
        RunResult result = singspace::run_beta(beta_spec, beta_n, beta_b, beta_d, beta_l, brute);
        CommonFlags beta_common;
        beta_common.json = beta_json;
        beta_common.out_path = beta_out;
        return emit(result, beta_common);
    } catch (const Error& e) {
        std::cerr << "error (" << singspace::errc_name(e.code()) << "): " << e.what() << "\n";
        return singspace::exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
