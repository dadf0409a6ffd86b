// pscodes: params / encode / compose / corrupt / decode / verify.
//
// Errors go to stderr as "error: <category>: <detail>"; exit codes:
//   0 success, 1 usage, 2 invalid-params, 3 format, 4 io,
//   5 decode-failed, 6 detected-mismatch, 7 sweep-incomplete.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "pscodes/pscodes.hpp"

namespace {

using namespace pscodes;

enum Exit { ok = 0, usage = 1, invalid_params = 2, format = 3, io = 4, decode_failed = 5, mismatch = 6, sweep_incomplete = 7 };

struct CliError {
    Exit code;
    std::string category;
    std::string detail;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{io, "io", "cannot read " + path};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw CliError{io, "io", "cannot write " + path};
}

std::string read_input(const std::string& path) { return path.empty() || path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_file(path); }

/// Scheme selection shared by every subcommand that needs parameters.
struct ParamOptions {
    std::string file;
    std::string scheme;
    std::map<std::string, std::string> values;

    void attach(CLI::App* app) {
        app->add_option("--params", file, "parameter file");
        app->add_option("--scheme", scheme, "c1 | c2 | c3 | c4 | multi");
        for (const char* key : {"n", "n1", "n2", "t", "t1", "p", "h", "k", "good-m", "good-t", "realization"})
            app->add_option(std::string("--") + key, values[key]);
    }

    SchemeParams resolve() const {
        SchemeParams sp;
        try {
            if (!file.empty()) sp = parse_params(read_file(file));
            if (!scheme.empty()) sp.scheme = scheme;
            for (const auto& [key, value] : values) {
                if (value.empty()) continue;
                std::string k = key;
                std::replace(k.begin(), k.end(), '-', '_');
                set_param(sp, k, value);
            }
        } catch (const FormatError& e) {
            throw CliError{format, "format", e.what()};
        }
        if (sp.scheme.empty()) throw CliError{usage, "usage", "no scheme given (use --params or --scheme)"};
        return sp;
    }

    std::unique_ptr<Scheme> build() const {
        const auto sp = resolve();
        try {
            return make_scheme(sp);
        } catch (const std::invalid_argument& e) {
            throw CliError{invalid_params, "invalid-params", e.what()};
        }
    }
};

std::string codewords_text(const std::vector<BitString>& cw) {
    std::string s;
    for (const auto& c : cw) s += c.str() + '\n';
    return s;
}

std::vector<BitString> parse_codewords(const std::string& text) {
    std::vector<BitString> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        const auto s = detail::trim(line);
        if (s.empty() || s.front() == '#') continue;
        out.push_back(BitString::parse(s));
    }
    if (out.empty()) throw FormatError("no codeword records");
    for (const auto& c : out)
        if (c.size() != out.front().size()) throw FormatError("codeword records differ in length");
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string check_line(const ParamCheck& c) {
    std::ostringstream os;
    os << "# check " << (c.fatal ? "required" : "advisory") << ' ' << (c.holds ? "holds" : "violated") << ": " << c.name << " : " << c.lhs << ' ' << c.op << ' ' << c.rhs << '\n';
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Codes for reconstructing binary strings from erroneous prefix-suffix compositions"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    ParamOptions p_params, p_encode, p_decode, p_verify;
    std::string out_path, in_path, message, message_file, plan_out, plan_in;
    int budget = -1;
    std::uint64_t seed = 0, messages = 100, plans = 100;
    bool exhaustive = false;

    auto* params_cmd = app.add_subcommand("params", "validate parameters and print the canonical parameter file");
    p_params.attach(params_cmd);
    params_cmd->add_option("-o,--output", out_path);

    auto* encode_cmd = app.add_subcommand("encode", "message -> codeword strings (one per line)");
    p_encode.attach(encode_cmd);
    encode_cmd->add_option("-m,--message", message, "message text");
    encode_cmd->add_option("--message-file", message_file, "message records, one per line");
    encode_cmd->add_option("-o,--output", out_path);

    auto* compose_cmd = app.add_subcommand("compose", "codeword strings -> composition multiset");
    compose_cmd->add_option("-i,--input", in_path, "codeword file (default stdin)");
    compose_cmd->add_option("-o,--output", out_path);

    auto* corrupt_cmd = app.add_subcommand("corrupt", "apply a seeded random (or given) error plan");
    corrupt_cmd->add_option("-i,--input", in_path, "multiset file (default stdin)");
    corrupt_cmd->add_option("-t,--budget", budget, "number of corrupted size groups")->check(CLI::NonNegativeNumber);
    corrupt_cmd->add_option("-s,--seed", seed);
    corrupt_cmd->add_option("--plan-out", plan_out, "write the applied plan here");
    corrupt_cmd->add_option("--plan-in", plan_in, "apply this plan instead of a random one");
    corrupt_cmd->add_option("-o,--output", out_path);

    auto* decode_cmd = app.add_subcommand("decode", "multiset -> verdict, message and codeword strings");
    p_decode.attach(decode_cmd);
    decode_cmd->add_option("-i,--input", in_path, "multiset file (default stdin)");
    decode_cmd->add_option("-o,--output", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "encode/compose/corrupt/decode sweep");
    p_verify.attach(verify_cmd);
    verify_cmd->add_flag("--exhaustive", exhaustive, "all messages times all plans within the budget");
    verify_cmd->add_option("-s,--seed", seed);
    verify_cmd->add_option("--messages", messages, "randomized: messages drawn");
    verify_cmd->add_option("--plans", plans, "randomized: plans per message");
    verify_cmd->add_option("-b,--budget", budget, "error budget (default: the scheme's t)")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : usage;
    }

    try {
        if (params_cmd->parsed()) {
            const auto scheme = p_params.build();
            std::string text = to_text(scheme->params());
            for (const auto& c : scheme->checks()) text += check_line(c);
            text += "# length=" + std::to_string(scheme->length()) + "\n";
            write_output(out_path, text);
        } else if (encode_cmd->parsed()) {
            const auto scheme = p_encode.build();
            std::string msg = message;
            if (!message_file.empty()) {
                std::istringstream in(read_file(message_file));
                msg.clear();
                for (std::string line; std::getline(in, line);) {
                    const auto s = detail::trim(line);
                    if (s.empty() || s.front() == '#') continue;
                    msg += (msg.empty() ? "" : ",") + s;
                }
            }
            write_output(out_path, codewords_text(scheme->encode(msg)));
        } else if (compose_cmd->parsed()) {
            write_output(out_path, to_text(multi_compositions(parse_codewords(read_input(in_path)))));
        } else if (corrupt_cmd->parsed()) {
            const auto x = parse_multiset(read_input(in_path));
            ErrorPlan plan;
            std::string header;
            if (!plan_in.empty()) {
                plan = parse_plan(read_file(plan_in));
                header = "# given plan\n";
            } else {
                if (budget < 0) throw CliError{usage, "usage", "corrupt needs --budget or --plan-in"};
                plan = random_plan(x, budget, seed);
                header = "# seed=" + std::to_string(seed) + " budget=" + std::to_string(budget) + "\n";
            }
            const auto y = corrupt(x, plan);
            if (!plan_out.empty()) write_output(plan_out, header + to_text(plan));
            write_output(out_path, to_text(y));
        } else if (decode_cmd->parsed()) {
            const auto scheme = p_decode.build();
            const auto y = parse_multiset(read_input(in_path));
            if (y.n() != scheme->length())
                throw CliError{format, "format", "multiset length " + std::to_string(y.n()) + " differs from scheme length " + std::to_string(scheme->length())};
            const auto d = scheme->decode(y);
            std::string text = "verdict=" + std::string(to_string(d.verdict)) + "\n";
            text += "failure=" + (d.failure ? std::string(to_string(d.failure->kind)) : std::string("none")) + "\n";
            if (d.failed_index) text += "failed_index=" + std::to_string(*d.failed_index) + "\n";
            text += "consumed=" + join_ints(d.consumed) + "\n";
            if (d.verdict == Verdict::recovered) {
                text += "message=" + d.message + "\n";
                for (const auto& c : d.codewords) text += "codeword=" + c.str() + "\n";
            }
            write_output(out_path, text);
            if (d.verdict == Verdict::failed) throw CliError{decode_failed, "decode-failed", std::string(to_string(d.failure->kind)) + ": " + d.failure->detail};
            if (d.verdict == Verdict::detected_mismatch) throw CliError{mismatch, "detected-mismatch", d.failure ? d.failure->detail : ""};
        } else if (verify_cmd->parsed()) {
            const auto scheme = p_verify.build();
            SweepOptions opt;
            opt.budget = budget;
            opt.exhaustive = exhaustive;
            opt.seed = seed;
            opt.messages = messages;
            opt.plans_per_message = plans;
            SweepReport rep;
            try {
                rep = sweep(*scheme, opt);
            } catch (const std::length_error& e) {
                throw CliError{invalid_params, "infeasible", e.what()};
            }
            write_output(out_path, to_text(rep));
            if (!rep.all_recovered())
                throw CliError{sweep_incomplete, "sweep-incomplete", std::to_string(rep.total - rep.recovered) + " of " + std::to_string(rep.total) + " cases not recovered"};
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.category << ": " << e.detail << '\n';
        return e.code;
    } catch (const PlanError& e) {
        std::cerr << "error: plan: " << e.what() << '\n';
        return format;
    } catch (const FormatError& e) {
        std::cerr << "error: format: " << e.what() << '\n';
        return format;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid-input: " << e.what() << '\n';
        return format;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return usage;
    }
    return ok;
}
