// Command-line interface: parse ideals, classify, compute Betti numbers
// and resolutions, and run the invariant verifier. All commands read an
// ideal from --ideal, a file argument, or stdin, and print JSON (default)
// or plain text.
//
// Exit codes: 0 success, 1 usage or syntax error, 2 domain error,
// 3 resource cap exceeded, 4 invariant violation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monores/monores.hpp"

namespace {

using namespace monores;

struct CommonOpts {
    std::string ideal_text;
    std::string input_file;
    bool text = false;
    Caps caps;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_ideal = true) {
    if (with_ideal) {
        cmd->add_option("file", opts.input_file,
                        "file holding the ideal ('-' for stdin; default stdin)");
        cmd->add_option("-i,--ideal", opts.ideal_text, "ideal given inline");
    }
    cmd->add_flag("--text", opts.text, "plain-text output instead of JSON");
    cmd->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");
    cmd->add_option("--max-gens", [&opts](const std::vector<std::string>& vals) {
        const std::size_t n = std::stoul(vals.at(0));
        opts.caps.complex_gens = n;
        opts.caps.oracle.max_gens = n;
        return true;
    }, "generator cap for complexes and the oracle");
    cmd->add_option("--max-vars", [&opts](const std::vector<std::string>& vals) {
        opts.caps.oracle.max_vars = std::stoul(vals.at(0));
        return true;
    }, "variable cap for the oracle");
}

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const CommonOpts& opts) {
    if (!opts.ideal_text.empty()) return opts.ideal_text;
    if (!opts.input_file.empty() && opts.input_file != "-") {
        std::ifstream f(opts.input_file);
        if (!f) throw InputError("cannot open " + opts.input_file);
        return read_stream(f);
    }
    return read_stream(std::cin);
}

MonomialIdeal read_ideal(const CommonOpts& opts) { return parse_ideal(read_input(opts)); }

void emit(const std::string& payload) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
}

void emit_json(const njson& j) { emit(j.dump(2) + "\n"); }

std::string betti_text(const njson& j) {
    std::string out;
    for (const char* method : {"formula", "oracle", "scarf"}) {
        const auto& m = j["methods"][method];
        if (m.is_null()) continue;
        out += std::string(method) + ":\n";
        const auto& totals = m["totals"];
        std::string row_i = "  i    :", row_b = "  beta :";
        for (std::size_t i = 0; i < totals.size(); ++i) {
            row_i += " " + std::to_string(i);
            row_b += " " + (totals[i].is_string() ? totals[i].get<std::string>()
                                                  : totals[i].dump());
        }
        out += row_i + "\n" + row_b + "\n";
        if (m.contains("rule")) out += "  rule : " + m["rule"].get<std::string>() + "\n";
    }
    if (!j["agree"].is_null())
        out += std::string("agree: ") + (j["agree"].get<bool>() ? "yes" : "no") + "\n";
    return out;
}

std::string classify_text(const njson& j) {
    std::string out;
    auto flag = [&](const char* name, const njson& v) {
        out += std::string(name) + ": " + (v.is_null() ? "n/a" : v.dump()) + "\n";
    };
    flag("complete_intersection", j["is_complete_intersection"]);
    flag("almost_complete_intersection", j["is_almost_complete_intersection"]);
    flag("dominant", j["is_dominant"]);
    flag("semidominant", j["is_semidominant"]);
    if (!j["kty"].is_null()) flag("kty_form", j["kty"]["form"]);
    if (!j["cohen_macaulay"].is_null()) flag("cohen_macaulay", j["cohen_macaulay"]["value"]);
    return out;
}

void apply_env_caps(Caps& caps) {
    if (const char* g = std::getenv("MONORES_MAX_GENS")) {
        const std::size_t n = std::stoul(g);
        caps.complex_gens = n;
        caps.oracle.max_gens = n;
    }
    if (const char* v = std::getenv("MONORES_MAX_VARS"))
        caps.oracle.max_vars = std::stoul(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Betti numbers, resolutions and structure of monomial ideals"};
    app.require_subcommand(1);

    CommonOpts opts;
    apply_env_caps(opts.caps);

    auto* cmd_classify = app.add_subcommand("classify", "structural classification");
    add_common(cmd_classify, opts);

    std::string method = "all";
    auto* cmd_betti = app.add_subcommand("betti", "Betti numbers of R/I");
    cmd_betti->add_option("--method", method, "formula|oracle|scarf|all")
        ->check(CLI::IsMember({"formula", "oracle", "scarf", "all"}));
    add_common(cmd_betti, opts);

    std::string kind = "taylor";
    auto* cmd_resolution = app.add_subcommand("resolution", "Taylor or Scarf complex");
    cmd_resolution->add_option("--kind", kind, "taylor|scarf")
        ->check(CLI::IsMember({"taylor", "scarf"}));
    add_common(cmd_resolution, opts);

    auto* cmd_primes = app.add_subcommand("primes", "minimal primes and height");
    add_common(cmd_primes, opts);

    auto* cmd_ass = app.add_subcommand("ass", "associated primes via polarization");
    add_common(cmd_ass, opts);

    auto* cmd_dual = app.add_subcommand("dual", "Alexander dual of a squarefree ideal");
    add_common(cmd_dual, opts);

    auto* cmd_polarize = app.add_subcommand("polarize", "polarization and its slot map");
    add_common(cmd_polarize, opts);

    int power_s = 1;
    bool power_betti = false;
    auto* cmd_power = app.add_subcommand("power", "generators of I^s");
    cmd_power->add_option("-s", power_s, "exponent (>= 1)")->required();
    cmd_power->add_flag("--betti", power_betti, "also compute oracle Betti numbers of I^s");
    add_common(cmd_power, opts);

    std::string corpus_file;
    std::uint64_t seed = 0;
    std::size_t vcount = 25;
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite over a corpus");
    cmd_verify->add_option("--corpus", corpus_file, "corpus file, one ideal per line");
    cmd_verify->add_option("--seed", seed, "seed for the generated corpus");
    cmd_verify->add_option("--count", vcount, "instances per generated family");
    add_common(cmd_verify, opts, /*with_ideal=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_classify->parsed()) {
            const auto I = read_ideal(opts);
            const njson j = cli_classify_json(I, opts.caps);
            opts.text ? emit(classify_text(j)) : emit_json(j);
        } else if (cmd_betti->parsed()) {
            const auto I = read_ideal(opts);
            const njson j = cli_betti_json(I, method, opts.caps);
            opts.text ? emit(betti_text(j)) : emit_json(j);
        } else if (cmd_resolution->parsed()) {
            const auto I = read_ideal(opts);
            const njson j = cli_resolution_json(I, kind, opts.caps);
            if (opts.text) {
                std::string out = kind + " complex ranks:";
                for (const auto& d : j["complex"]["degrees"])
                    out += " " + d["rank"].dump();
                emit(out + "\n");
            } else {
                emit_json(j);
            }
        } else if (cmd_primes->parsed()) {
            const auto I = read_ideal(opts);
            emit_json(cli_primes_json(I, false));
        } else if (cmd_ass->parsed()) {
            const auto I = read_ideal(opts);
            emit_json(cli_primes_json(I, true));
        } else if (cmd_dual->parsed()) {
            const auto I = read_ideal(opts);
            emit_json(cli_dual_json(I));
        } else if (cmd_polarize->parsed()) {
            const auto I = read_ideal(opts);
            emit_json(cli_polarize_json(I));
        } else if (cmd_power->parsed()) {
            const auto I = read_ideal(opts);
            emit_json(cli_power_json(I, power_s, power_betti, opts.caps));
        } else if (cmd_verify->parsed()) {
            std::vector<MonomialIdeal> file_ideals;
            if (!corpus_file.empty()) {
                std::ifstream f(corpus_file);
                if (!f) throw InputError("cannot open " + corpus_file);
                file_ideals = parse_corpus(read_stream(f));
            }
            const VerifyReport report = run_verify(file_ideals, seed, vcount, opts.caps);
            opts.text ? emit(verify_text(report)) : emit_json(to_json(report));
            if (!report.passed) return 4;
        }
        return 0;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
