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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperconvo/axioms.hpp"
#include "hyperconvo/duality.hpp"
#include "hyperconvo/errors.hpp"
#include "hyperconvo/io.hpp"

namespace hyperconvo::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string input;
    std::string out_path;
    std::optional<int> decimal;
    std::optional<std::size_t> window;
    bool hypergroup = false;
    std::string dual_m = "0";
    std::optional<std::string> dual_n;
    std::size_t trunc = 48;
    bool solve = false;
    std::optional<std::size_t> points;
    std::uint64_t seed = 0;
};

class Emitter {
public:
    Emitter(const Options& options, std::ostream& out) : options_(options), out_(out) {}

    // Writes the artifact to --out (printing `summary`) or to stdout.
    void emit(const std::string& artifact, const std::string& summary) {
        if (options_.out_path.empty()) {
            out_ << artifact;
            if (!artifact.empty() && artifact.back() != '\n') out_ << '\n';
            return;
        }
        std::ofstream file(options_.out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + options_.out_path);
        file << artifact;
        if (!artifact.empty() && artifact.back() != '\n') file << '\n';
        out_ << summary << '\n';
    }

    void emit(const json& doc, const std::string& summary) { emit(doc.dump(2), summary); }

private:
    const Options& options_;
    std::ostream& out_;
};

JsonOptions json_options(const Options& o) { return JsonOptions{o.decimal}; }

const ConvolutionStructure& structure_of(const ParsedInput& input) {
    if (!input.structure) throw PreconditionError("input does not describe a convolution structure");
    return *input.structure;
}

const DeformationSpec& spec_of(const ParsedInput& input) {
    if (!input.spec) throw PreconditionError("input of type \"" + input.type + "\" has no deformation spec");
    return *input.spec;
}

const VSequence& v_of(const ParsedInput& input) {
    if (!input.v) throw PreconditionError("dual computations need a max deformation given by a v-sequence");
    const Classification c = classify(*input.semigroup);
    if (c.idempotents.size() != input.semigroup->elements().size() || !c.max_min_type) {
        throw PreconditionError("dual computations are defined only when every element is idempotent");
    }
    return *input.v;
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    const auto line = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
}

int cmd_classify(const Options& o, const ParsedInput& input, Emitter& emitter) {
    if (!input.semigroup) throw PreconditionError("input has no semigroup table");
    const SemigroupTable& s = *input.semigroup;
    const Classification c = classify(s);
    emitter.emit(to_json(s, c), "classified " + std::to_string(s.elements().size()) + " elements -> " + o.out_path);
    return kPass;
}

int cmd_build(const Options& o, const ParsedInput& input, Emitter& emitter) {
    const ConvolutionStructure& k = structure_of(input);
    emitter.emit(to_json(k, json_options(o)), "wrote structure on " + std::to_string(k.size()) + " elements -> " +
                                                  o.out_path);
    return kPass;
}

int cmd_check(const Options& o, const ParsedInput& input, Emitter& emitter) {
    const DeformationSpec& spec = spec_of(input);
    const ConditionReport main = check_main_conditions(spec);
    json doc = to_json(spec, main);
    bool pass = main.all_pass();

    const Classification c = classify(spec.base());
    if (c.idempotents.size() == spec.base().elements().size() && c.max_min_type) {
        const ConditionReport max = check_max_conditions(spec);
        doc["max_conditions"] = to_json(spec, max);
        pass = pass && max.all_pass();
    }
    doc["equivalence"] = to_json(check_equivalence_conditions(spec));
    doc["pass"] = pass;

    std::string summary = pass ? "all conditions hold" : "failed conditions:";
    for (const auto& id : main.failed()) summary += " " + id;
    emitter.emit(doc, summary + (o.out_path.empty() ? "" : " -> " + o.out_path));
    return pass ? kPass : kFailure;
}

int cmd_verify(const Options& o, const ParsedInput& input, Emitter& emitter) {
    const ConvolutionStructure& k = structure_of(input);
    const Index last = o.window ? *o.window : k.size() - 1;
    const VerificationReport report = o.hypergroup ? verify_hypergroup(k, last) : verify_semiconvo(k, last);
    emitter.emit(to_json(k, report), std::string(report.ok() ? "verified: " : "FAILED: ") + report.domain());
    return report.ok() ? kPass : kFailure;
}

int cmd_haar(const Options& o, const ParsedInput& input, Emitter& emitter) {
    const ConvolutionStructure full = structure_of(input);
    const ConvolutionStructure k = o.window ? full.truncate(*o.window) : full;
    const HaarVector lambda = haar(k);
    const HaarInvarianceReport report = verify_haar_invariance(k, lambda);
    emitter.emit(to_json(k, lambda, report, json_options(o)),
                 std::string(report.ok ? "Haar weights invariant on " : "Haar invariance FAILED; checked ") +
                     std::to_string(report.pairs_checked) + " pairs");
    return report.ok ? kPass : kFailure;
}

int cmd_characters(const Options& o, const ParsedInput& input, Emitter& emitter) {
    const VSequence& v = v_of(input);
    const std::size_t n = o.points ? *o.points : v.size() - 1;
    const CharacterTable table = character_table(v, n);
    std::vector<std::string> header{"character"};
    for (Index t = 0; t < table.points(); ++t) header.push_back(std::to_string(t));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < table.rows().size(); ++r) {
        std::vector<std::string> cells{"chi_" + table.labels()[r].to_string()};
        for (const Rational& x : table.row(r)) cells.push_back(x.to_string());
        rows.push_back(std::move(cells));
    }
    emitter.emit(csv(header, rows), "wrote " + std::to_string(rows.size()) + " characters -> " + o.out_path);
    return kPass;
}

int cmd_convolve(const Options& o, const ParsedInput& input, Emitter& emitter) {
    const BetaSequence beta = beta_sequence(v_of(input));
    const DualPoint m = DualPoint::parse(o.dual_m);
    const DualPoint n = o.dual_n ? DualPoint::parse(*o.dual_n) : m;
    DualMeasure mu = o.solve && m == n && !m.is_infinite() ? dual_convolution_solve(m.index(), beta, o.trunc)
                                                            : dual_convolution_closed(m, n, beta, o.trunc);
    const TransportCheck transport = verify_dual_transport(mu, beta, beta.size());
    json doc = to_json(mu, json_options(o));
    doc["method"] = o.solve && m == n && !m.is_infinite() ? "solve" : "closed";
    doc["transport"] = {{"pass", transport.ok}, {"domain", transport.domain}};
    emitter.emit(doc, "chi_" + m.to_string() + " * chi_" + n.to_string() + ": tail_mass " + mu.tail_mass.to_string());
    return transport.ok ? kPass : kFailure;
}

int cmd_double(const Options& o, const ParsedInput& input, Emitter& emitter) {
    const VSequence& v = v_of(input);
    const std::size_t n = o.points ? *o.points : v.size() - 1;
    const DoubleDualTable table = double_dual_table(beta_sequence(v.prefix(n + 1)), n);
    std::vector<std::string> header{"xi"};
    for (const DualPoint& k : table.columns) header.push_back(k.to_string());
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        std::vector<std::string> cells{"xi_" + std::to_string(r)};
        for (const Rational& x : table.rows[r]) cells.push_back(x.to_string());
        rows.push_back(std::move(cells));
    }
    emitter.emit(csv(header, rows), "wrote " + std::to_string(rows.size()) + " double-dual rows -> " + o.out_path);
    return kPass;
}

// Random finite measures for the bilinearity spot check in `report`.
FiniteMeasure random_measure(std::mt19937_64& rng, std::size_t size) {
    std::uniform_int_distribution<std::size_t> index(0, size - 1);
    std::uniform_int_distribution<std::int64_t> weight(1, 9);
    FiniteMeasure mu;
    for (int i = 0; i < 3; ++i) mu.add(index(rng), Rational(weight(rng)));
    return mu.scaled(mu.mass().reciprocal());
}

int cmd_report(const Options& o, const ParsedInput& input, const std::string& raw_input, Emitter& emitter) {
    const ConvolutionStructure& full = structure_of(input);
    const Index last = o.window ? std::min<Index>(*o.window, full.size() - 1) : full.size() - 1;
    const ConvolutionStructure k = full.truncate(last);

    json results;
    bool pass = true;
    const VerificationReport verification = k.is_hermitian() ? verify_hypergroup(k) : verify_semiconvo(k);
    results["verification"] = to_json(k, verification);
    pass = pass && verification.ok();

    if (input.spec) {
        const ConditionReport conditions = check_main_conditions(*input.spec);
        results["conditions"] = to_json(*input.spec, conditions);
        results["equivalence"] = to_json(check_equivalence_conditions(*input.spec));
    }

    if (k.is_hermitian()) {
        try {
            const HaarVector lambda = haar(k);
            const HaarInvarianceReport invariance = verify_haar_invariance(k, lambda);
            results["haar"] = to_json(k, lambda, invariance, json_options(o));
            pass = pass && invariance.ok;
        } catch (const PreconditionError& e) {
            results["haar"] = {{"error", e.what()}};
        }
    }

    std::mt19937_64 rng(o.seed);
    std::size_t samples = 0;
    bool bilinear = true;
    for (int trial = 0; trial < 16; ++trial) {
        const FiniteMeasure a = random_measure(rng, k.size());
        const FiniteMeasure b = random_measure(rng, k.size());
        const FiniteMeasure c = random_measure(rng, k.size());
        try {
            const FiniteMeasure lhs = k.convolve(k.convolve(a, b), c);
            const FiniteMeasure rhs = k.convolve(a, k.convolve(b, c));
            ++samples;
            bilinear = bilinear && lhs == rhs && lhs.is_probability();
        } catch (const KernelUndefined&) {
        }
    }
    results["random_measures"] = {{"samples", samples}, {"associative", bilinear}};
    pass = pass && bilinear;

    const json manifest = {{"schema", kSchema},
                           {"type", "run_manifest"},
                           {"command", "report"},
                           {"inputs", {{{"path", o.input}, {"fnv1a64", fnv1a_hex(raw_input)}}}},
                           {"window", last},
                           {"seed", o.seed},
                           {"pass", pass},
                           {"results", std::move(results)}};
    emitter.emit(manifest, std::string(pass ? "report: pass" : "report: FAIL") +
                               (o.out_path.empty() ? "" : " -> " + o.out_path));
    return pass ? kPass : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact construction and verification of semigroup deformations", "hyperconvo"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", o.out_path, "Write the artifact to this file");
    app.add_option("--decimal", o.decimal, "Add display-only decimal strings with this many digits (JSON output)")
        ->check(CLI::Range(1, 60));

    const auto input_option = [&o](CLI::App* cmd) {
        cmd->add_option("input", o.input, "Input JSON file")->required();
    };

    auto* semigroup = app.add_subcommand("semigroup", "Semigroup tables");
    semigroup->require_subcommand(1);
    auto* classify_cmd = semigroup->add_subcommand("classify", "Idempotents, groups and ideal structure");
    input_option(classify_cmd);

    auto* deform = app.add_subcommand("deform", "Deformations of the idempotent diagonal");
    deform->require_subcommand(1);
    auto* build_cmd = deform->add_subcommand("build", "Emit the deformed convolution table");
    input_option(build_cmd);
    auto* check_cmd = deform->add_subcommand("check", "Evaluate the deformation conditions");
    input_option(check_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Check the semiconvo or hypergroup axioms exhaustively");
    input_option(verify_cmd);
    verify_cmd->add_option("--window", o.window, "Last element of the window");
    verify_cmd->add_flag("--hypergroup", o.hypergroup, "Also check the involution axioms");

    auto* haar_cmd = app.add_subcommand("haar", "Haar weights and their invariance");
    input_option(haar_cmd);
    haar_cmd->add_option("--window", o.window, "Last element of the window");

    auto* dual = app.add_subcommand("dual", "Characters, dual and double dual");
    dual->require_subcommand(1);
    auto* characters_cmd = dual->add_subcommand("characters", "Character table as CSV");
    input_option(characters_cmd);
    characters_cmd->add_option("--points", o.points, "Last point n of the table");
    auto* convolve_cmd = dual->add_subcommand("convolve", "Product of two dual points as JSON");
    input_option(convolve_cmd);
    convolve_cmd->add_option("--m", o.dual_m, "First dual point (integer or inf)");
    convolve_cmd->add_option("--n", o.dual_n, "Second dual point, defaults to m");
    convolve_cmd->add_option("--trunc", o.trunc, "Number of retained terms past m");
    convolve_cmd->add_flag("--solve", o.solve, "Use the triangular solve instead of the closed form");
    auto* double_cmd = dual->add_subcommand("double", "Double dual table as CSV");
    input_option(double_cmd);
    double_cmd->add_option("--points", o.points, "Last row n of the table");

    auto* report_cmd = app.add_subcommand("report", "Run every applicable check and emit a manifest");
    input_option(report_cmd);
    report_cmd->add_option("--window", o.window, "Last element of the window");
    report_cmd->add_option("--seed", o.seed, "Seed for the random measure checks");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kPass;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    Emitter emitter(o, out);
    try {
        std::ifstream in(o.input, std::ios::binary);
        if (!in) {
            err << "error: cannot read " << o.input << '\n';
            return kUsage;
        }
        const std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        const ParsedInput input = parse_input_file(o.input);

        if (classify_cmd->parsed()) return cmd_classify(o, input, emitter);
        if (build_cmd->parsed()) return cmd_build(o, input, emitter);
        if (check_cmd->parsed()) return cmd_check(o, input, emitter);
        if (verify_cmd->parsed()) return cmd_verify(o, input, emitter);
        if (haar_cmd->parsed()) return cmd_haar(o, input, emitter);
        if (characters_cmd->parsed()) return cmd_characters(o, input, emitter);
        if (convolve_cmd->parsed()) return cmd_convolve(o, input, emitter);
        if (double_cmd->parsed()) return cmd_double(o, input, emitter);
        if (report_cmd->parsed()) return cmd_report(o, input, raw, emitter);
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << '\n';
        json detail = {{"error", "validation"}, {"message", e.what()}, {"location", e.location()},
                       {"witness", e.witness()}};
        err << detail.dump() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        return kUsage;
    } catch (const TruncationError& e) {
        err << "truncation: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    err << "error: no command\n";
    return kUsage;
}

}  // namespace hyperconvo::cli
