#ifndef ISOSURF_ERRORS_HPP
#define ISOSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isosurf {

enum class Errc {
    InvalidArgument,
    Config,
    NotOrthogonal,
    IncompatiblePlane,
    Unclassifiable,
    NotAdmissible,
    ChartUnavailable,
    NoClosedForm,
    NoConvergence,
    DomainError,
    EmptyValidity,
    DegenerateParameters,
    Io,
    VerifyFailed,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace isosurf

#endif
