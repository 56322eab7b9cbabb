#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "sqcolor/graph.hpp"
#include "sqcolor/rational.hpp"

namespace sqcolor {

/// Failure of a solver entry point. Precondition kinds are expected on bad input;
/// InternalCaseFailure and NoConfigurationFound indicate a bug and carry a decision log.
class SolveError : public std::runtime_error {
public:
    enum class Kind {
        PetersenInput,
        NotSubcubic,
        Disconnected,
        ListTooShort,
        GirthTooSmall,
        MadTooLarge,
        PreconditionViolated,
        InvalidInstance,
        NoConfigurationFound,
        InternalCaseFailure,
    };

    SolveError(Kind kind, const std::string& what, std::string trace = {})
        : std::runtime_error(what), kind_(kind), trace_(std::move(trace)) {}

    Kind kind() const { return kind_; }
    const std::string& trace() const { return trace_; }

    /// The offending vertex for ListTooShort.
    std::optional<Vertex> vertex;
    /// The measured quantity for MadTooLarge / GirthTooSmall.
    std::optional<Rational> value;

    /// True for the kinds that signal a bug rather than bad input.
    bool is_internal() const { return kind_ == Kind::InternalCaseFailure || kind_ == Kind::NoConfigurationFound; }

private:
    Kind kind_;
    std::string trace_;
};

}  // namespace sqcolor
