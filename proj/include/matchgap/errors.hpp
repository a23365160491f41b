#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace matchgap {

// Machine-readable failure kinds; the CLI maps these onto exit codes.
enum class errc {
    index_out_of_range,
    self_loop,
    unknown_edge,
    size_guard,
    not_cubic,
    has_bridge,
    not_bipartition,
    not_applicable,
    give_up,
    syntax,
    header_mismatch,
    bad_argument,
    invariant_violation,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::index_out_of_range: return "index_out_of_range";
        case errc::self_loop: return "self_loop";
        case errc::unknown_edge: return "unknown_edge";
        case errc::size_guard: return "size_guard";
        case errc::not_cubic: return "not_cubic";
        case errc::has_bridge: return "has_bridge";
        case errc::not_bipartition: return "not_bipartition";
        case errc::not_applicable: return "not_applicable";
        case errc::give_up: return "give_up";
        case errc::syntax: return "syntax";
        case errc::header_mismatch: return "header_mismatch";
        case errc::bad_argument: return "bad_argument";
        case errc::invariant_violation: return "invariant_violation";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace matchgap
