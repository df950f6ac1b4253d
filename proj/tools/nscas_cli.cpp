#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nscas.h"

namespace {

// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage or
// parse errors.
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string take(char* s) {
    std::string out = s ? s : "";
    nscas_string_free(s);
    return out;
}

[[noreturn]] void die(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    std::exit(kExitUsage);
}

void require_ok(nscas_status st) {
    if (st != NSCAS_OK) die(nscas_last_error());
}

// "3", "7/2", "3.5" is not accepted; returns doubled value.
int parse_level(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return 2 * std::stoi(text);
        if (text.substr(slash + 1) != "2") die("level denominator must be 2");
        return std::stoi(text.substr(0, slash));
    } catch (const std::exception&) {
        die("bad level: " + text);
    }
}

std::string read_file(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) die("cannot open " + path);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    std::fclose(f);
    return out;
}

int run_verify(bool all, const std::string& id, bool json) {
    std::vector<std::string> ids;
    if (all) {
        char* raw = nullptr;
        require_ok(nscas_check_ids(&raw));
        for (const auto& v : nlohmann::json::parse(take(raw))) ids.push_back(v);
    } else {
        ids.push_back(id);
    }
    int failed = 0;
    for (const std::string& cid : ids) {
        int passed = 0;
        char* raw = nullptr;
        nscas_status st = nscas_check_run(cid.c_str(), &passed, &raw);
        if (st == NSCAS_ERR_UNKNOWN_CHECK) die(nscas_last_error());
        require_ok(st);
        if (!passed) ++failed;
        nlohmann::json rec = nlohmann::json::parse(take(raw));
        if (json) {
            std::printf("%s\n", rec.dump().c_str());
        } else {
            std::printf("%-5s %s", rec["status"].get<std::string>().c_str(),
                        rec["id"].get<std::string>().c_str());
            std::string machine = rec["machine"];
            if (!machine.empty()) std::printf("  [%s]", machine.c_str());
            std::printf("\n");
            std::string details = rec["details"];
            if (!details.empty()) std::printf("      %s\n", details.c_str());
        }
    }
    if (!json && ids.size() > 1)
        std::printf("%zu checks, %d failed\n", ids.size(), failed);
    return failed ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic computation for the Neveu-Schwarz superalgebra"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Run named verification checks");
    bool all = false, json = false;
    std::string check_id;
    verify->add_flag("--all", all, "Run every registered check");
    verify->add_option("--check", check_id, "Run a single check by id");
    verify->add_flag("--json", json, "One JSON record per check");

    auto* nf = app.add_subcommand("nf", "Normal form of an expression");
    std::string nf_expr, trailing;
    nf->add_option("expr", nf_expr, "Expression")->required();
    nf->add_option("--trailing", trailing, "Trailing generators, e.g. \"L[-1],G[-1/2]\"");

    auto* br = app.add_subcommand("bracket", "Super-bracket of two generators");
    std::string gen_a, gen_b;
    br->add_option("a", gen_a, "First generator")->required();
    br->add_option("b", gen_b, "Second generator")->required();

    auto* act = app.add_subcommand("act", "Apply an operator to a rule-file state");
    std::string act_expr, rules_path, state_name = "v";
    act->add_option("expr", act_expr, "Operator expression")->required();
    act->add_option("--rules", rules_path, "Rule file")->required();
    act->add_option("--state", state_name, "State name (default v)");

    auto* verma = app.add_subcommand("verma", "Verma module queries");
    verma->set_help_flag("--help", "Print help");  // frees --h for the weight
    std::string level_max, h_text, c_text;
    bool dims = false;
    verma->add_option("--level-max", level_max, "Maximum level, e.g. 4 or 7/2")->required();
    verma->add_option("--h", h_text, "Highest weight (scalar expression)");
    verma->add_option("--c", c_text, "Central charge (scalar expression)");
    verma->add_flag("--dims", dims, "Print weight-space dimensions");

    auto* parse = app.add_subcommand("parse", "Parse and canonically render");
    std::string parse_expr;
    parse->add_option("expr", parse_expr, "Expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (*verify) {
        if (all != check_id.empty()) die("verify needs exactly one of --all / --check");
        return run_verify(all, check_id, json);
    }
    if (*nf) {
        char* out = nullptr;
        require_ok(nscas_normal_form(nf_expr.c_str(),
                                     trailing.empty() ? nullptr : trailing.c_str(), &out));
        std::printf("%s\n", take(out).c_str());
        return 0;
    }
    if (*br) {
        char* out = nullptr;
        require_ok(nscas_bracket(gen_a.c_str(), gen_b.c_str(), &out));
        std::printf("%s\n", take(out).c_str());
        return 0;
    }
    if (*act) {
        nscas_rules* rules = nullptr;
        require_ok(nscas_rules_parse(read_file(rules_path).c_str(), &rules));
        char* out = nullptr;
        nscas_status st = nscas_rules_act(rules, act_expr.c_str(), state_name.c_str(), &out);
        nscas_rules_free(rules);
        require_ok(st);
        std::printf("%s\n", take(out).c_str());
        return 0;
    }
    if (*verma) {
        if (!dims) die("verma currently requires --dims");
        char* out = nullptr;
        require_ok(nscas_verma_dims(parse_level(level_max),
                                    h_text.empty() ? nullptr : h_text.c_str(),
                                    c_text.empty() ? nullptr : c_text.c_str(), &out));
        std::printf("%s\n", take(out).c_str());
        return 0;
    }
    if (*parse) {
        char* out = nullptr;
        require_ok(nscas_parse(parse_expr.c_str(), &out));
        std::printf("%s\n", take(out).c_str());
        return 0;
    }
    return kExitUsage;
}
