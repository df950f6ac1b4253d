#include "nscas.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "nscas/checks.hpp"
#include "nscas/errors.hpp"
#include "nscas/verma.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

nscas_status set_error(nscas_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

// Runs fn, translating exceptions to status codes.
template <typename Fn>
nscas_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const nscas::SyntaxError& e) {
        return set_error(NSCAS_ERR_SYNTAX, e.what());
    } catch (const nscas::IndexParityError& e) {
        return set_error(NSCAS_ERR_SYNTAX, e.what());
    } catch (const nscas::UnknownCheck& e) {
        return set_error(NSCAS_ERR_UNKNOWN_CHECK, e.what());
    } catch (const nscas::DivisionByZero& e) {
        return set_error(NSCAS_ERR_DOMAIN, e.what());
    } catch (const nscas::WeightError& e) {
        return set_error(NSCAS_ERR_DOMAIN, e.what());
    } catch (const nscas::RepresentationFailure& e) {
        return set_error(NSCAS_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(NSCAS_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return set_error(NSCAS_ERR_INTERNAL, e.what());
    }
}

std::vector<nscas::Generator> parse_trailing(const std::string& csv) {
    std::vector<nscas::Generator> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
        std::size_t a = tok.find_first_not_of(" \t");
        if (a != std::string::npos) {
            std::size_t b = tok.find_last_not_of(" \t");
            out.push_back(nscas::parse_generator(tok.substr(a, b - a + 1)));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string render_bracket(const nscas::Bracket& br) {
    std::string out;
    if (br.gen && !br.coeff.is_zero())
        out = "(" + br.coeff.str() + ")*" + br.gen->str();
    if (!br.central.is_zero()) {
        if (!out.empty()) out += " + ";
        out += "(" + br.central.str() + ")*chat";
    }
    return out.empty() ? "0" : out;
}

}  // namespace

extern "C" {

void nscas_string_free(char* s) { std::free(s); }

const char* nscas_last_error(void) { return g_last_error.c_str(); }

nscas_status nscas_parse(const char* expr, char** canonical_out) {
    if (!expr || !canonical_out)
        return set_error(NSCAS_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        *canonical_out = dup_string(nscas::parse_element(expr).str());
        return NSCAS_OK;
    });
}

nscas_status nscas_normal_form(const char* expr, const char* trailing_csv, char** out) {
    if (!expr || !out) return set_error(NSCAS_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        nscas::Element e = nscas::parse_element(expr);
        if (!trailing_csv) {
            *out = dup_string(normal_form(e, nscas::OrderSpec::ascending()).str());
        } else {
            auto [quot, ideal] = reduce_trailing(
                e, nscas::OrderSpec::trailing(parse_trailing(trailing_csv)));
            *out = dup_string(quot.str() + " | " + ideal.str());
        }
        return NSCAS_OK;
    });
}

nscas_status nscas_bracket(const char* gen_a, const char* gen_b, char** out) {
    if (!gen_a || !gen_b || !out) return set_error(NSCAS_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        nscas::Bracket br =
            nscas::bracket(nscas::parse_generator(gen_a), nscas::parse_generator(gen_b));
        *out = dup_string(render_bracket(br));
        return NSCAS_OK;
    });
}

struct nscas_rules {
    nscas::RuleFile file;
};

nscas_status nscas_rules_parse(const char* text, nscas_rules** out) {
    if (!text || !out) return set_error(NSCAS_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new nscas_rules{nscas::parse_rule_file(text)};
        return NSCAS_OK;
    });
}

void nscas_rules_free(nscas_rules* r) { delete r; }

nscas_status nscas_rules_act(const nscas_rules* r, const char* expr,
                             const char* state_name, char** out) {
    if (!r || !expr || !state_name || !out)
        return set_error(NSCAS_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        std::string name(state_name);
        nscas::StateWord source;
        if (name != "v") {
            auto it = r->file.states.find(name);
            if (it == r->file.states.end())
                return set_error(NSCAS_ERR_BAD_ARGUMENT, "unknown state: " + name);
            source = it->second;
        }
        nscas::StateSpace space = r->file.space();
        nscas::Element e = nscas::parse_element(expr, r->file.lets);
        *out = dup_string(act_element(e, source, space).str());
        return NSCAS_OK;
    });
}

nscas_status nscas_verma_dims(int level_max_doubled, const char* h, const char* c,
                              char** json_out) {
    if (!json_out || level_max_doubled < 0)
        return set_error(NSCAS_ERR_BAD_ARGUMENT, "bad argument");
    return guarded([&] {
        if (h) nscas::parse_scalar(h);
        if (c) nscas::parse_scalar(c);
        nlohmann::json arr = nlohmann::json::array();
        for (int d = 0; d <= level_max_doubled; ++d) {
            nscas::HalfInt level = nscas::HalfInt::halves(d);
            arr.push_back({{"level", level.str()}, {"dim", nscas::dim(level)}});
        }
        *json_out = dup_string(arr.dump());
        return NSCAS_OK;
    });
}

nscas_status nscas_check_ids(char** json_out) {
    if (!json_out) return set_error(NSCAS_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        nlohmann::json arr = nscas::check_ids();
        *json_out = dup_string(arr.dump());
        return NSCAS_OK;
    });
}

nscas_status nscas_check_run(const char* id, int* passed_out, char** json_out) {
    if (!id || !passed_out || !json_out)
        return set_error(NSCAS_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        nscas::CheckReport rep = nscas::run_check(id);
        *passed_out = rep.passed() ? 1 : 0;
        *json_out = dup_string(rep.json());
        return NSCAS_OK;
    });
}

}  // extern "C"
