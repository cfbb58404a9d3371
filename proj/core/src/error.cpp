#include "supell/error.hpp"

namespace supell {

const char* errc_name(Errc c) noexcept
{
    switch (c) {
    case Errc::domain: return "domain";
    case Errc::characteristic: return "characteristic";
    case Errc::singular: return "singular";
    case Errc::unsupported: return "unsupported";
    case Errc::not_in_atlas: return "not-in-atlas";
    case Errc::parse: return "parse";
    case Errc::usage: return "usage";
    }
    return "unknown";
}

}  // namespace supell
