#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singspace/field.hpp"
#include "singspace/hilbert.hpp"

namespace singspace {

// Optional knobs carried by an input document; command-line flags
// override them.
struct DocumentOptions {
    std::optional<DegreeWindow> window;
    std::optional<long long> g_tilde;
    std::optional<FieldSpec> backend;
};

// A parsed input document: the coefficient field, the ambient variables
// in declaration order, generator expressions, and options.
struct InputDocument {
    FieldSpec field;
    std::vector<std::string> variables;
    std::vector<std::string> generators;
    DocumentOptions options;
};

// Parses the JSON document schema:
//   {"field": {"kind": "prime", "p": 10007} | {"kind": "rational"} | "prime:10007",
//    "variables": ["x", "y", "z"],
//    "generators": ["y^2*z - x^3"],
//    "options": {"window": [1, 12], "g_tilde": 0, "backend": "rational"},
//    "comment": "free text, ignored"}
// Unknown keys are rejected so typos surface as errors.
InputDocument parse_document(const std::string& text);

// Reads and parses a document file.
InputDocument load_document(const std::string& path);

// Field selection precedence: explicit override (the --field flag), then
// options.backend, then the document's field block.
FieldSpec effective_field(const InputDocument& doc, const std::optional<FieldSpec>& override_spec);

// Window selection precedence: explicit override, then options.window,
// then the size-capped default derived from the generators.
DegreeWindow effective_window(const InputDocument& doc, int max_generator_degree, int n,
                              const std::optional<DegreeWindow>& override_window);

}  // namespace singspace
