#include <fps/error.hpp>

namespace fps
{

std::string_view name(error_kind kind) noexcept
{
    switch (kind) {
        case error_kind::mode_mismatch:
            return "ModeMismatch";
        case error_kind::zero_constant_term:
            return "ZeroConstantTerm";
        case error_kind::nonzero_constant_term:
            return "NonzeroConstantTerm";
        case error_kind::derivative_order_exceeded:
            return "DerivativeOrderExceeded";
        case error_kind::composition_does_not_exist:
            return "CompositionDoesNotExist";
        case error_kind::tolerance_not_met:
            return "ToleranceNotMet";
        case error_kind::insufficient_metadata:
            return "InsufficientMetadata";
        case error_kind::exact_evaluation_unavailable:
            return "ExactEvaluationUnavailable";
        case error_kind::not_nonunit:
            return "NotNonunit";
        case error_kind::zero_linear_term:
            return "ZeroLinearTerm";
        case error_kind::precondition_failed:
            return "PreconditionFailed";
        case error_kind::domain_exit:
            return "DomainExit";
        case error_kind::parse_error:
            return "ParseError";
        case error_kind::invalid_argument:
            return "InvalidArgument";
        case error_kind::io:
            return "IOError";
        case error_kind::malformed_input:
            return "MalformedInput";
    }
    return "Unknown";
}

error::error(error_kind kind, const std::string &detail)
    : std::runtime_error(std::string(name(kind)) + ": " + detail), m_kind(kind), m_detail(detail)
{
}

parse_error::parse_error(std::size_t offset, const std::string &detail)
    : error(error_kind::parse_error, detail + " at byte " + std::to_string(offset)), m_offset(offset)
{
}

} // namespace fps
