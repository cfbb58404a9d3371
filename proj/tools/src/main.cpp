#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include "commands.hpp"

using namespace supell;
using namespace supell::cli;

namespace {

// Turns raw flag text into a typed JSON value; throws Error(parse).
Json typed_value(const OptSpec& o, const std::string& raw)
{
    switch (o.kind) {
    case OptKind::integer: {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(raw, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != raw.size()) fail(Errc::parse, "--" + o.name + " expects an integer, got '" + raw + "'");
        return v;
    }
    case OptKind::text: return raw;
    case OptKind::document:
        try {
            return Json::parse(raw);
        } catch (const nlohmann::json::exception&) {
            fail(Errc::parse, "--" + o.name + " is not valid JSON");
        }
    }
    return nullptr;
}

void emit(const Json& doc, bool pretty)
{
    std::cout << (pretty ? doc.dump(2) : doc.dump()) << '\n';
}

int run_batch(const Command& cmd, const Json& defaults, std::istream& in, unsigned jobs)
{
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);

    std::vector<Outcome> results(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) {
            Json args = defaults;
            Json row;
            try {
                row = Json::parse(lines[i]);
            } catch (const nlohmann::json::exception&) {
                results[i] = {error_object(Errc::parse, "line " + std::to_string(i + 1) + " is not valid JSON"), 4};
                continue;
            }
            if (!row.is_object()) {
                results[i] = {error_object(Errc::parse, "line " + std::to_string(i + 1) + " is not a JSON object"), 4};
                continue;
            }
            for (auto it = row.begin(); it != row.end(); ++it) args[it.key()] = it.value();
            results[i] = run_captured(cmd, args);
        }
    };
    jobs = std::clamp<unsigned>(jobs, 1, 256);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = 0;
    for (const auto& r : results) {
        emit(r.doc, false);
        if (code == 0) code = r.code;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Superelliptic curve toolkit"};
    app.require_subcommand(1);
    std::string format = "json";
    std::string input;
    unsigned jobs = 1;
    app.add_option("--format", format, "json (compact) or pretty")->check(CLI::IsMember({"json", "pretty"}));
    app.add_option("--input", input, "JSON-lines file of argument objects, '-' for stdin");
    app.add_option("--jobs", jobs, "worker threads for --input")->check(CLI::Range(1u, 256u));

    // One raw string slot per (command, option).
    std::map<std::string, std::map<std::string, std::optional<std::string>>> raw;
    std::map<std::string, CLI::App*> subs;
    for (const auto& cmd : commands()) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        sub->fallthrough();
        for (const auto& o : cmd.options) sub->add_option("--" + o.name, raw[cmd.name][o.name], o.help);
        subs[cmd.name] = sub;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(error_object(Errc::usage, e.what()), false);
        return 2;
    }

    const Command* cmd = nullptr;
    for (const auto& c : commands())
        if (subs[c.name]->parsed()) cmd = &c;
    const bool pretty = format == "pretty";

    Json args = Json::object();
    try {
        for (const auto& o : cmd->options) {
            const auto& slot = raw[cmd->name][o.name];
            if (slot) args[o.name] = typed_value(o, *slot);
        }
    } catch (const Error& e) {
        emit(error_object(e.code(), e.what()), pretty);
        return exit_code(e.code());
    }

    if (!input.empty()) {
        if (input == "-") return run_batch(*cmd, args, std::cin, jobs);
        std::ifstream in(input);
        if (!in) {
            emit(error_object(Errc::usage, "cannot open " + input), pretty);
            return 2;
        }
        return run_batch(*cmd, args, in, jobs);
    }

    Outcome r = run_captured(*cmd, args);
    emit(r.doc, pretty);
    return r.code;
}
