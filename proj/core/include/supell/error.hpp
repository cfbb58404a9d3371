#pragma once

#include <stdexcept>
#include <string>

namespace supell {

enum class Errc {
    domain,          // precondition on values violated
    characteristic,  // field characteristic too small for the operation
    singular,        // zero discriminant where a smooth curve is required
    unsupported,     // case outside the implemented range
    not_in_atlas,
    parse,
    usage,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

const char* errc_name(Errc c) noexcept;

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace supell
