#ifndef FPS_ERROR_HPP
#define FPS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fps
{

// Every failure raised by the library carries one of these kinds. The CLI
// maps them onto exit codes and prints name(kind) on stderr.
enum class error_kind {
    mode_mismatch,
    zero_constant_term,
    nonzero_constant_term,
    derivative_order_exceeded,
    composition_does_not_exist,
    tolerance_not_met,
    insufficient_metadata,
    exact_evaluation_unavailable,
    not_nonunit,
    zero_linear_term,
    precondition_failed,
    domain_exit,
    parse_error,
    invalid_argument,
    io,
    malformed_input,
};

std::string_view name(error_kind kind) noexcept;

class error : public std::runtime_error
{
public:
    error(error_kind kind, const std::string &detail);

    error_kind kind() const noexcept
    {
        return m_kind;
    }
    const std::string &detail() const noexcept
    {
        return m_detail;
    }

private:
    error_kind m_kind;
    std::string m_detail;
};

// Syntax error in a series expression; offset is the byte position in the input.
class parse_error : public error
{
public:
    parse_error(std::size_t offset, const std::string &detail);

    std::size_t offset() const noexcept
    {
        return m_offset;
    }

private:
    std::size_t m_offset;
};

} // namespace fps

#endif
