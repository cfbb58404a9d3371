#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "codec.hpp"
#include "supell/error.hpp"

namespace supell::cli {

enum class OptKind { integer, text, document };

struct OptSpec {
    std::string name;  // flag without the leading dashes; also the batch key
    OptKind kind;
    std::string help;
};

struct Command {
    std::string name;
    std::string help;
    std::vector<OptSpec> options;
    std::function<Json(const Json& args)> run;
};

const std::vector<Command>& commands();
const Command* find_command(std::string_view name);

// 2 usage, 3 domain-type failures, 4 parse
int exit_code(Errc c);
Json error_object(Errc c, const std::string& message);

struct Outcome {
    Json doc;
    int code = 0;
};

// Never throws: failures come back as an error object and a nonzero code.
Outcome run_captured(const Command& cmd, const Json& args);

}  // namespace supell::cli
