/*
   Copyright 2026 The hyperconvo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hyperconvo/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "hyperconvo/errors.hpp"

namespace hyperconvo {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& message, const std::string& pointer,
                          std::vector<std::size_t> witness = {}) {
    throw ValidationError(message + (pointer.empty() ? "" : " at " + pointer), std::move(witness), pointer);
}

const json& field(const json& doc, const std::string& key, const std::string& pointer) {
    if (!doc.is_object()) invalid("expected an object", pointer);
    const auto it = doc.find(key);
    if (it == doc.end()) invalid("missing field \"" + key + "\"", pointer);
    return *it;
}

std::size_t parse_count(const json& value, const std::string& pointer) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        invalid("expected a non-negative integer", pointer);
    }
    return value.get<std::size_t>();
}

Rational parse_rational(const json& value, const std::string& pointer) {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (!value.is_string()) invalid("expected a rational string such as \"1/3\"", pointer);
    try {
        return Rational::parse(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
        invalid(e.what(), pointer);
    }
}

std::vector<Rational> parse_rationals(const json& value, const std::string& pointer) {
    if (!value.is_array()) invalid("expected an array of rationals", pointer);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(parse_rational(value[i], pointer + "/" + std::to_string(i)));
    }
    return out;
}

// Element references are names (strings) or indices (integers).
Index element_ref(const json& value, const std::vector<std::string>& names, const std::string& pointer) {
    if (value.is_number_integer()) {
        const auto index = parse_count(value, pointer);
        if (index >= names.size()) invalid("element index out of range", pointer);
        return index;
    }
    if (!value.is_string()) invalid("expected an element name", pointer);
    const auto name = value.get<std::string>();
    for (Index i = 0; i < names.size(); ++i) {
        if (names[i] == name) return i;
    }
    invalid("unknown element \"" + name + "\"", pointer);
}

Index element_ref(const json& value, const SemigroupTable& s, const std::string& pointer) {
    return element_ref(value, s.names(), pointer);
}

// Rethrows a library ValidationError with a JSON pointer derived from its
// first witness index.
template <typename F>
auto located(const std::string& pointer, F&& build) {
    try {
        return build();
    } catch (const ValidationError& e) {
        if (!e.location().empty()) throw;
        std::string where = pointer;
        if (!e.witness().empty()) where += "/" + std::to_string(e.witness().front());
        throw ValidationError(e.what(), e.witness(), where);
    }
}

ExampleParams example_params(const json& doc, const std::string& pointer) {
    ExampleParams params;
    if (doc.contains("window")) params.window = parse_count(doc["window"], pointer + "/window");
    if (doc.contains("additive_window")) {
        params.additive_window = parse_count(doc["additive_window"], pointer + "/additive_window");
    }
    return params;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": malformed JSON: " + e.what(), {}, "");
    }
}

SemigroupTable parse_base(const json& base, const std::filesystem::path& directory, const std::string& pointer) {
    if (base.is_string()) {
        const std::filesystem::path path = directory / base.get<std::string>();
        const json doc = read_json_file(path);
        const json& inner = doc.contains("type") && doc["type"] == "deformation" ? doc["base"] : doc;
        return parse_semigroup(inner);
    }
    return parse_semigroup(base, pointer);
}

std::string decimal(const Rational& value, const JsonOptions& options) {
    return value.to_decimal(*options.decimal_digits);
}

json pair_json(const std::optional<std::pair<Index, Index>>& pair, const std::vector<std::string>& names) {
    if (!pair) return nullptr;
    return json::array({names.at(pair->first), names.at(pair->second)});
}

}  // namespace

SemigroupTable parse_semigroup(const json& doc, const std::string& pointer) {
    if (!doc.is_object()) invalid("expected a semigroup object", pointer);
    if (doc.contains("example")) {
        const json& name = doc["example"];
        if (!name.is_string()) invalid("example name must be a string", pointer + "/example");
        try {
            return build_named_example(name.get<std::string>(), example_params(doc, pointer));
        } catch (const std::invalid_argument& e) {
            invalid(e.what(), pointer + "/example");
        }
    }

    const json& elements = field(doc, "elements", pointer);
    if (!elements.is_array() || elements.empty()) invalid("elements must be a non-empty array", pointer + "/elements");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const json& e = elements[i];
        if (e.is_string()) {
            names.push_back(e.get<std::string>());
        } else if (e.is_number_integer()) {
            names.push_back(std::to_string(e.get<std::int64_t>()));
        } else {
            invalid("element names must be strings", pointer + "/elements/" + std::to_string(i));
        }
    }

    const Index identity = element_ref(field(doc, "identity", pointer), names, pointer + "/identity");
    std::optional<Index> sentinel;
    if (doc.contains("sentinel") && !doc["sentinel"].is_null()) {
        sentinel = element_ref(doc["sentinel"], names, pointer + "/sentinel");
    }

    const json& table = field(doc, "table", pointer);
    const std::string table_ptr = pointer + "/table";
    if (!table.is_array() || table.size() != names.size()) {
        invalid("table must have one row per element", table_ptr);
    }
    std::vector<std::vector<Index>> rows;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const std::string row_ptr = table_ptr + "/" + std::to_string(i);
        if (!table[i].is_array() || table[i].size() != names.size()) {
            invalid("row must have one entry per element", row_ptr);
        }
        std::vector<Index> row;
        for (std::size_t j = 0; j < names.size(); ++j) {
            row.push_back(element_ref(table[i][j], names, row_ptr + "/" + std::to_string(j)));
        }
        rows.push_back(std::move(row));
    }

    try {
        return SemigroupTable::create(names, identity, std::move(rows), sentinel);
    } catch (const ValidationError& e) {
        std::string where = table_ptr;
        if (e.witness().size() >= 2) {
            where += "/" + std::to_string(e.witness()[0]) + "/" + std::to_string(e.witness()[1]);
        }
        throw ValidationError(e.what(), e.witness(), where);
    }
}

ParsedInput parse_input(const json& doc, const std::filesystem::path& directory) {
    if (!doc.is_object()) invalid("top-level value must be an object", "");
    if (doc.contains("schema") && doc["schema"] != kSchema) {
        invalid("unsupported schema, expected \"" + std::string(kSchema) + "\"", "/schema");
    }
    const json& type_field = field(doc, "type", "");
    if (!type_field.is_string()) invalid("type must be a string", "/type");

    ParsedInput out;
    out.type = type_field.get<std::string>();

    if (out.type == "semigroup") {
        out.semigroup = parse_semigroup(doc);
        out.window = out.semigroup->elements().size();
        out.structure = ConvolutionStructure::from_semigroup(*out.semigroup);
        return out;
    }

    if (out.type == "dunkl_ramirez") {
        out.a = parse_rational(field(doc, "a", ""), "/a");
        out.window = parse_count(field(doc, "window", ""), "/window");
        if (out.window < 2) invalid("window must be at least 2", "/window");
        try {
            out.v = dunkl_ramirez_v(*out.a, out.window);
        } catch (const std::invalid_argument& e) {
            invalid(e.what(), "/a");
        }
        out.semigroup = build_named_example("zplus", {out.window, 0});
        out.spec = spec_from_chain(*out.semigroup, *out.v);
        out.structure = out.spec->structure();
        return out;
    }

    if (out.type == "chebyshev") {
        const json& kind = field(doc, "kind", "");
        if (!kind.is_number_integer() || (kind != 1 && kind != 2)) invalid("kind must be 1 or 2", "/kind");
        out.chebyshev_kind = kind.get<int>();
        out.window = parse_count(field(doc, "window", ""), "/window");
        if (out.window < 1) invalid("window must be at least 1", "/window");
        out.structure = build_chebyshev(*out.chebyshev_kind, out.window);
        return out;
    }

    if (out.type != "deformation") invalid("unknown type \"" + out.type + "\"", "/type");

    out.semigroup = parse_base(field(doc, "base", ""), directory, "/base");
    const SemigroupTable& s = *out.semigroup;
    out.window = s.elements().size();

    if (doc.contains("v")) {
        out.v = located("/v", [&] { return VSequence::create(parse_rationals(doc["v"], "/v")); });
    } else if (doc.contains("u")) {
        // u is indexed from 1, so u_n sits at array position n - 1.
        const USequence u = [&] {
            try {
                return USequence::create(parse_rationals(doc["u"], "/u"));
            } catch (const ValidationError& e) {
                const std::size_t n = e.witness().empty() ? 1 : e.witness().front();
                throw ValidationError(e.what(), e.witness(), "/u/" + std::to_string(n - 1));
            }
        }();
        out.v = v_from_u(u);
    }

    if (out.v) {
        try {
            out.spec = spec_from_chain(s, *out.v);
        } catch (const PreconditionError& e) {
            invalid(e.what(), "/base");
        } catch (const ValidationError& e) {
            invalid(e.what(), doc.contains("v") ? "/v" : "/u");
        }
    } else {
        const json& q = field(doc, "q", "");
        if (!q.is_object()) invalid("q must map element names to measures", "/q");
        std::map<Index, FiniteMeasure> measures;
        for (const auto& [key, value] : q.items()) {
            const std::string ptr = "/q/" + key;
            const Index n = element_ref(json(key), s, ptr);
            if (!value.is_object()) invalid("measure must map element names to weights", ptr);
            FiniteMeasure mu;
            for (const auto& [target, weight] : value.items()) {
                const std::string wptr = ptr + "/" + target;
                const Rational w = parse_rational(weight, wptr);
                if (w.sign() < 0) invalid("negative weight", wptr);
                mu.add(element_ref(json(target), s, wptr), w);
            }
            measures.emplace(n, std::move(mu));
        }
        try {
            out.spec.emplace(s, std::move(measures));
        } catch (const ValidationError& e) {
            std::string where = "/q";
            if (!e.witness().empty()) where += "/" + s.name(e.witness().front());
            throw ValidationError(e.what(), e.witness(), where);
        }
    }
    out.structure = out.spec->structure();
    return out;
}

ParsedInput parse_input_file(const std::filesystem::path& path) {
    const json doc = read_json_file(path);
    return parse_input(doc, path.parent_path());
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << hash;
    return os.str();
}

json to_json(const Rational& value) { return value.to_string(); }

json to_json(const FiniteMeasure& mu, const std::vector<std::string>& names, const JsonOptions& options) {
    json out = json::object();
    for (const auto& [index, w] : mu) {
        const std::string& key = names.at(index);
        if (options.decimal_digits) {
            out[key] = {{"value", w.to_string()}, {"decimal", decimal(w, options)}};
        } else {
            out[key] = w.to_string();
        }
    }
    return out;
}

json to_json(const SemigroupTable& s) {
    json table = json::array();
    for (const auto& row : s.rows()) {
        json r = json::array();
        for (Index p : row) r.push_back(s.name(p));
        table.push_back(std::move(r));
    }
    json out = {{"schema", kSchema},
                {"type", "semigroup"},
                {"elements", s.names()},
                {"identity", s.name(s.identity())},
                {"table", std::move(table)}};
    if (s.sentinel()) out["sentinel"] = s.name(*s.sentinel());
    return out;
}

json to_json(const SemigroupTable& s, const Classification& c) {
    const auto names_of = [&](const std::vector<Index>& v) {
        json out = json::array();
        for (Index m : v) out.push_back(s.name(m));
        return out;
    };
    return {{"schema", kSchema},
            {"report", "classification"},
            {"elements", s.elements().size()},
            {"idempotents", names_of(c.idempotents)},
            {"nonidentity_idempotents", names_of(c.nonidentity_idempotents)},
            {"maximal_group", names_of(c.maximal_group)},
            {"acting_units", names_of(c.acting_units)},
            {"non_idempotents", names_of(c.non_idempotents)},
            {"inverse_free", c.inverse_free},
            {"action_free", c.action_free},
            {"max_min_type", c.max_min_type},
            {"non_idempotents_ideal", c.non_idempotents_ideal},
            {"non_idempotents_prime_ideal", c.non_idempotents_prime_ideal},
            {"window_limited", c.window_limited}};
}

json to_json(const ConvolutionStructure& k, const JsonOptions& options) {
    json products = json::array();
    for (Index m = 0; m < k.size(); ++m) {
        for (Index n = m; n < k.size(); ++n) {
            const FiniteMeasure* value = k.product(m, n);
            products.push_back({{"m", k.name(m)},
                                {"n", k.name(n)},
                                {"value", value ? to_json(*value, k.names(), options) : json(nullptr)}});
        }
    }
    return {{"schema", kSchema},
            {"type", "structure"},
            {"elements", k.names()},
            {"identity", k.name(k.identity())},
            {"hermitian", k.is_hermitian()},
            {"undefined_products", k.undefined_products()},
            {"products", std::move(products)}};
}

json to_json(const DeformationSpec& spec, const ConditionReport& report) {
    const SemigroupTable& s = spec.base();
    json conditions = json::array();
    for (const auto& c : report.conditions) {
        json witness = json::array();
        for (Index m : c.witness) witness.push_back(s.name(m));
        conditions.push_back({{"id", c.id},
                              {"description", c.description},
                              {"status", std::string(to_string(c.status))},
                              {"witness", std::move(witness)},
                              {"detail", c.detail}});
    }
    return {{"schema", kSchema},
            {"report", "conditions"},
            {"pass", report.all_pass()},
            {"failed", report.failed()},
            {"domain", report.domain},
            {"window_limited", report.window_limited},
            {"conditions", std::move(conditions)}};
}

json to_json(const ConvolutionStructure& k, const VerificationReport& r) {
    json out = {{"schema", kSchema},
                {"report", "verification"},
                {"pass", r.ok()},
                {"domain", r.domain()},
                {"window_limited", r.window_limited()},
                {"elements", r.elements},
                {"triples_checked", r.triples_checked},
                {"triples_skipped", r.triples_skipped},
                {"probability", r.probability},
                {"probability_witness", pair_json(r.probability_witness, k.names())},
                {"identity", r.identity},
                {"identity_witness", r.identity_witness ? json(k.name(*r.identity_witness)) : json(nullptr)},
                {"commutative", r.commutative},
                {"commutativity_witness", pair_json(r.commutativity_witness, k.names())},
                {"associativity", r.associativity}};
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        out["counterexample"] = {{"triple", {k.name(c.m), k.name(c.n), k.name(c.k)}},
                                 {"lhs", to_json(c.lhs, k.names())},
                                 {"rhs", to_json(c.rhs, k.names())}};
    } else {
        out["counterexample"] = nullptr;
    }
    if (r.hypergroup_checked) {
        out["hypergroup"] = {{"hermitian", r.hermitian},
                             {"involution_adjoint", r.involution_adjoint},
                             {"adjoint_witness", pair_json(r.adjoint_witness, k.names())},
                             {"support_axiom", r.support_axiom},
                             {"support_witness", pair_json(r.support_witness, k.names())},
                             {"pairs_checked", r.pairs_checked},
                             {"pairs_skipped", r.pairs_skipped}};
    }
    return out;
}

json to_json(const ConvolutionStructure& k, const HaarVector& lambda, const HaarInvarianceReport& r,
             const JsonOptions& options) {
    json weights = json::object();
    for (Index n = 0; n < lambda.size(); ++n) {
        if (!lambda.defined(n)) continue;
        const Rational& w = lambda.at(n);
        if (options.decimal_digits) {
            weights[k.name(n)] = {{"value", w.to_string()}, {"decimal", decimal(w, options)}};
        } else {
            weights[k.name(n)] = w.to_string();
        }
    }
    json out = {{"schema", kSchema},
                {"report", "haar"},
                {"pass", r.ok},
                {"weights", std::move(weights)},
                {"pairs_checked", r.pairs_checked},
                {"pairs_skipped", r.pairs_skipped}};
    if (r.witness) {
        out["witness"] = {{"n", k.name(r.witness->first)}, {"k", k.name(r.witness->second)}, {"lhs", r.lhs.to_string()}};
    }
    return out;
}

json to_json(const DualMeasure& mu, const JsonOptions& options) {
    json gamma = json::object();
    for (const auto& [j, w] : mu.gamma) {
        if (options.decimal_digits) {
            gamma[std::to_string(j)] = {{"value", w.to_string()}, {"decimal", decimal(w, options)}};
        } else {
            gamma[std::to_string(j)] = w.to_string();
        }
    }
    json out = {{"schema", kSchema},
                {"type", "dual_measure"},
                {"m", mu.m.to_string()},
                {"n", mu.n.to_string()},
                {"gamma", std::move(gamma)},
                {"gamma_inf", mu.at_infinity.to_string()},
                {"tail_mass", mu.tail_mass.to_string()},
                {"last_retained", mu.last_retained ? json(*mu.last_retained) : json(nullptr)},
                {"diagonal_charged", mu.diagonal_charged},
                {"total", mu.total().to_string()}};
    if (options.decimal_digits) out["tail_mass_decimal"] = decimal(mu.tail_mass, options);
    return out;
}

json to_json(const EquivalenceReport& r) {
    return {{"schema", kSchema},
            {"report", "equivalence"},
            {"supports_in_idempotents", r.supports_in_idempotents},
            {"idempotents_max_min", r.idempotents_max_min},
            {"inverse_free", r.inverse_free},
            {"action_free", r.action_free},
            {"no_fixed_products", r.no_fixed_products},
            {"agreement", r.agreement()},
            {"witnesses", r.witnesses}};
}

}  // namespace hyperconvo
