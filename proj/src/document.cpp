#include "ectrace/document.hpp"

#include <json.hpp>

#include "ectrace/io.hpp"

namespace ectrace {

namespace {

using nlohmann::json;

FieldDescriptor descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw UsageError("field descriptor must be an object with a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "Q") return FieldDescriptor::rationals();
    if (kind == "Fp") {
        if (!j.contains("p") || !j["p"].is_number_unsigned())
            throw UsageError("prime field descriptor needs an unsigned \"p\"");
        return FieldDescriptor::prime_field(j["p"].get<std::uint64_t>());
    }
    if (kind == "RatFunc") {
        if (!j.contains("base"))
            throw UsageError("rational-function descriptor needs a \"base\" field");
        return FieldDescriptor::rational_functions(descriptor_from_json(j["base"]));
    }
    throw UsageError("unknown field kind \"" + kind + "\"");
}

json descriptor_to_json(const FieldDescriptor& desc) {
    switch (desc.kind()) {
        case FieldKind::Rationals:
            return json{{"kind", "Q"}};
        case FieldKind::PrimeField:
            return json{{"kind", "Fp"}, {"p", desc.prime()}};
        case FieldKind::RationalFunctions:
            return json{{"kind", "RatFunc"}, {"base", descriptor_to_json(desc.base())}};
    }
    throw UsageError("unknown field kind");
}

std::string require_string(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw UsageError(std::string("document needs a string field \"") + key + "\"");
    return j[key].get<std::string>();
}

// Re-raise element syntax errors with the document key they came from.
template <class F>
auto in_context(const char* key, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(e.position(), std::string("in \"") + key + "\": " + e.what());
    }
}

}  // namespace

ProblemDocument parse_problem_document(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("problem document must be a JSON object");
    if (!j.contains("field")) throw UsageError("document needs a \"field\" descriptor");
    if (!j.contains("curve") || !j["curve"].is_array() || j["curve"].size() != 5)
        throw UsageError("document needs a \"curve\" array [a1, a2, a3, a4, a6]");

    ProblemDocument doc{descriptor_from_json(j["field"]),
                        {},
                        require_string(j, "modulus"),
                        require_string(j, "x"),
                        require_string(j, "y")};
    for (std::size_t i = 0; i < 5; ++i) {
        if (!j["curve"][i].is_string())
            throw UsageError("curve coefficients must be strings");
        doc.curve[i] = j["curve"][i].get<std::string>();
    }
    return doc;
}

TraceProblem build_problem(const ProblemDocument& doc) {
    const FieldDescriptor& desc = doc.field;
    static const char* names[5] = {"a1", "a2", "a3", "a4", "a6"};
    std::vector<FieldScalar> a;
    a.reserve(5);
    for (std::size_t i = 0; i < 5; ++i) {
        a.push_back(in_context(names[i], [&] { return parse_scalar(desc, doc.curve[i]); }));
    }
    WeierstrassCurve curve(a[0], a[1], a[2], a[3], a[4]);
    Polynomial modulus =
        in_context("modulus", [&] { return parse_polynomial(desc, doc.modulus); });
    Polynomial x = in_context("x", [&] { return parse_polynomial(desc, doc.x); });
    Polynomial y = in_context("y", [&] { return parse_polynomial(desc, doc.y); });
    return TraceProblem(std::move(curve), modulus, x, y);
}

std::string problem_to_json(const TraceProblem& problem) {
    const WeierstrassCurve& curve = problem.curve();
    json j;
    j["field"] = descriptor_to_json(curve.descriptor());
    j["curve"] = {format_scalar(curve.a1()), format_scalar(curve.a2()),
                  format_scalar(curve.a3()), format_scalar(curve.a4()),
                  format_scalar(curve.a6())};
    j["modulus"] = format_polynomial(problem.modulus(), 't');
    j["x"] = format_polynomial(problem.x(), 't');
    j["y"] = format_polynomial(problem.y(), 't');
    return j.dump();
}

}  // namespace ectrace
