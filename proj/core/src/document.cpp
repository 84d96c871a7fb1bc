#include "singspace/document.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace singspace {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) { throw Error(Errc::BadDocument, message); }

void check_keys(const json& obj, const char* where, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) {
            bad(std::string("unknown key '") + key + "' in " + where);
        }
    }
}

FieldSpec parse_field_spec(const json& node, const char* where) {
    if (node.is_string()) {
        return FieldSpec::parse(node.get<std::string>());
    }
    if (!node.is_object()) {
        bad(std::string(where) + " must be a string like \"prime:10007\" or an object");
    }
    check_keys(node, where, {"type", "kind", "p"});
    if (node.contains("type") && node.contains("kind")) {
        bad(std::string(where) + " must use either \"type\" or \"kind\", not both");
    }
    const char* key = node.contains("type") ? "type" : "kind";
    if (!node.contains(key) || !node[key].is_string()) {
        bad(std::string(where) + " needs a string \"type\"");
    }
    std::string kind = node[key].get<std::string>();
    if (kind == "rational") {
        if (node.contains("p")) bad("rational field does not take a characteristic");
        return FieldSpec{FieldSpec::Kind::Rational, 0};
    }
    if (kind != "prime") {
        bad("field kind must be \"prime\" or \"rational\", got \"" + kind + "\"");
    }
    FieldSpec spec{FieldSpec::Kind::Prime, 10007};
    if (node.contains("p")) {
        if (!node["p"].is_number_unsigned()) bad("field characteristic p must be a positive integer");
        spec.p = node["p"].get<std::uint64_t>();
    }
    PrimeField check(spec.p);  // validates primality and range
    return spec;
}

bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

}  // namespace

InputDocument parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) bad("document root must be a JSON object");
    check_keys(doc, "document", {"field", "variables", "generators", "options", "comment"});

    InputDocument out;
    if (!doc.contains("field")) bad("document is missing \"field\"");
    out.field = parse_field_spec(doc["field"], "field");

    if (!doc.contains("variables") || !doc["variables"].is_array() || doc["variables"].empty()) {
        bad("document needs a nonempty \"variables\" array");
    }
    for (const auto& v : doc["variables"]) {
        if (!v.is_string()) bad("variables must be strings");
        std::string name = v.get<std::string>();
        if (!valid_identifier(name)) {
            bad("variable name '" + name + "' is not a valid identifier");
        }
        out.variables.push_back(std::move(name));
    }

    if (!doc.contains("generators") || !doc["generators"].is_array()) {
        bad("document needs a \"generators\" array");
    }
    for (const auto& g : doc["generators"]) {
        if (!g.is_string()) bad("generators must be polynomial strings");
        out.generators.push_back(g.get<std::string>());
    }

    if (doc.contains("options")) {
        const json& opts = doc["options"];
        if (!opts.is_object()) bad("options must be an object");
        check_keys(opts, "options", {"window", "g_tilde", "backend"});
        if (opts.contains("window")) {
            const json& w = opts["window"];
            if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() ||
                !w[1].is_number_integer()) {
                bad("options.window must be a pair [lo, hi] of integers");
            }
            DegreeWindow window{w[0].get<int>(), w[1].get<int>()};
            if (window.lo < 1 || window.hi < window.lo) {
                bad("options.window needs 1 <= lo <= hi");
            }
            out.options.window = window;
        }
        if (opts.contains("g_tilde")) {
            if (!opts["g_tilde"].is_number_integer()) bad("options.g_tilde must be an integer");
            long long g = opts["g_tilde"].get<long long>();
            if (g < 0) bad("options.g_tilde must be nonnegative");
            out.options.g_tilde = g;
        }
        if (opts.contains("backend")) {
            if (!opts["backend"].is_string()) bad("options.backend must be a string");
            out.options.backend = parse_field_spec(opts["backend"], "options.backend");
        }
    }
    return out;
}

InputDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::BadDocument, "cannot open input document '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

FieldSpec effective_field(const InputDocument& doc, const std::optional<FieldSpec>& override_spec) {
    if (override_spec.has_value()) return *override_spec;
    if (doc.options.backend.has_value()) return *doc.options.backend;
    return doc.field;
}

DegreeWindow effective_window(const InputDocument& doc, int max_generator_degree, int n,
                              const std::optional<DegreeWindow>& override_window) {
    if (override_window.has_value()) return *override_window;
    if (doc.options.window.has_value()) return *doc.options.window;
    return default_window(max_generator_degree, n);
}

}  // namespace singspace
