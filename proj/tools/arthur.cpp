#include "arthur/dsl.hpp"
#include "arthur/errors.hpp"
#include "arthur/report.hpp"

#include "../tests/acceptance_suite.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#ifndef ARTHUR_FIXTURE_DIR
#define ARTHUR_FIXTURE_DIR ""
#endif

namespace {

using nlohmann::ordered_json;

bool is_rational(const ordered_json& j) {
    return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den");
}

bool is_flat(const ordered_json& j) {
    if (is_rational(j)) return true;
    if (!j.is_array()) return !j.is_object();
    for (const auto& e : j)
        if (!is_flat(e) || e.is_array()) return false;
    return true;
}

std::string scalar(const ordered_json& j) {
    if (is_rational(j)) {
        auto n = j["num"].get<long long>(), d = j["den"].get<long long>();
        return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d);
    }
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    if (j.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar(j[i]);
        return out + "]";
    }
    return j.dump();
}

void render(std::ostream& os, const ordered_json& j, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (is_flat(it.value())) {
                os << pad << it.key() << ": " << scalar(it.value()) << "\n";
            } else {
                os << pad << it.key() << ":\n";
                render(os, it.value(), indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (is_flat(e)) {
                os << pad << "- " << scalar(e) << "\n";
            } else {
                os << pad << "-\n";
                render(os, e, indent + 2);
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

void emit(const ordered_json& j, bool json) {
    if (json) std::cout << j.dump(2) << "\n";
    else render(std::cout, j, 0);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw arthur::SemanticError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_check(bool json, const std::string& fixtures) {
    acceptance::SuiteOptions opt;
    opt.fixture_dir = fixtures;
    auto results = acceptance::run_suite(opt);
    bool all = true;
    ordered_json out = arthur::report::envelope("check");
    ordered_json rows = ordered_json::array();
    for (const auto& r : results) {
        all &= r.pass;
        if (json) {
            rows.push_back(ordered_json{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"details", r.details}});
        } else {
            std::cout << acceptance::format_line(r) << "\n";
            for (const auto& d : r.details) std::cout << "    " << d << "\n";
        }
    }
    if (json) {
        out["criteria"] = rows;
        out["pass"] = all;
        std::cout << out.dump(2) << "\n";
    }
    return all ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Endoscopic classification calculus for unitary groups"};
    app.require_subcommand(1);
    bool json = false;
    std::string input, field = "nonarch", fixtures = ARTHUR_FIXTURE_DIR;
    int n = 0, k = 0;
    app.add_flag("--json", json, "emit JSON");

    std::map<std::string, CLI::App*> doc_cmds;
    for (const auto& name : arthur::report::document_commands()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--input", input, "parameter document")->check(CLI::ExistingFile);
        sub->add_flag("--json", json, "emit JSON");
        if (name == "endoscopy") sub->add_option("--n", n, "tables for U(N) without a document");
        doc_cmds[name] = sub;
    }
    doc_cmds["classify"]->description("parity, factoring and the chain of parameter sets");
    doc_cmds["centralizer"]->description("centralizer shape, component group and Levi diagram");
    doc_cmds["arthur"]->description("sigma of the reduced identity component and the stable coefficient");
    doc_cmds["endoscopy"]->description("endoscopic data, iota, and the correspondence for a document");
    doc_cmds["epsilon"]->description("epsilon character, adjoint decomposition and relative signs");
    doc_cmds["multiplicity"]->description("packets and multiplicities for the places model");
    auto* tadic = app.add_subcommand("tadic", "character expansion of the Speh-type representation");
    tadic->add_option("--n", n)->required();
    tadic->add_option("--k", k)->required();
    tadic->add_option("--field", field)->check(CLI::IsMember({"arch", "nonarch"}));
    tadic->add_flag("--json", json, "emit JSON");
    auto* check = app.add_subcommand("check", "run the invariant suite");
    check->add_option("--fixtures", fixtures, "fixture directory");
    check->add_flag("--json", json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(json, fixtures);
        if (tadic->parsed()) {
            auto f = field == "arch" ? arthur::FieldCase::archimedean : arthur::FieldCase::nonarchimedean;
            emit(arthur::report::tadic_report(n, k, f), json);
            return 0;
        }
        for (const auto& [name, sub] : doc_cmds) {
            if (!sub->parsed()) continue;
            if (name == "endoscopy" && input.empty()) {
                if (n < 1) throw arthur::SemanticError("endoscopy needs --input or --n");
                emit(arthur::report::endoscopy_tables(n), json);
                return 0;
            }
            if (input.empty()) throw arthur::SemanticError(name + " needs --input");
            arthur::ParameterDocument doc;
            try {
                doc = arthur::parse_document(slurp(input));
            } catch (const arthur::ParseError& e) {
                std::cerr << input << ":" << e.line << ":" << e.column << ": parse error: " << e.what() << "\n";
                return 1;
            }
            emit(arthur::report::run(name, doc), json);
            return 0;
        }
    } catch (const arthur::SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const arthur::InvariantError& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
