#include <fps/expr.hpp>

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <fps/error.hpp>

namespace fps
{

namespace
{

struct node {
    enum class kind { number, variable, imaginary, add, sub, mul, div, neg, power };
    kind k;
    std::size_t offset = 0;
    rational value;
    unsigned exponent = 0;
    std::unique_ptr<node> lhs;
    std::unique_ptr<node> rhs;
};

using node_ptr = std::unique_ptr<node>;

node_ptr make(node::kind k, std::size_t offset, node_ptr lhs = nullptr, node_ptr rhs = nullptr)
{
    auto n = std::make_unique<node>();
    n->k = k;
    n->offset = offset;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class parser
{
public:
    explicit parser(std::string_view text) : m_text(text) {}

    node_ptr parse_input(std::optional<int> &order)
    {
        auto e = parse_expr();
        skip_space();
        if (peek() == '@') {
            ++m_pos;
            skip_space();
            const auto at = m_pos;
            const auto digits = read_digits();
            if (digits.empty()) {
                throw parse_error(at, "expected a truncation order after '@'");
            }
            order = std::stoi(digits);
        }
        skip_space();
        if (m_pos != m_text.size()) {
            throw parse_error(m_pos, std::string("unexpected character '") + m_text[m_pos] + "'");
        }
        return e;
    }

private:
    char peek() const
    {
        return m_pos < m_text.size() ? m_text[m_pos] : '\0';
    }

    void skip_space()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    std::string read_digits()
    {
        std::string out;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            out += m_text[m_pos++];
        }
        return out;
    }

    bool starts_primary()
    {
        skip_space();
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'z' || c == 'i' || c == '(';
    }

    node_ptr parse_expr()
    {
        auto lhs = parse_term();
        for (;;) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-') {
                return lhs;
            }
            const auto at = m_pos++;
            auto rhs = parse_term();
            lhs = make(c == '+' ? node::kind::add : node::kind::sub, at, std::move(lhs), std::move(rhs));
        }
    }

    node_ptr parse_term()
    {
        auto lhs = parse_unary();
        for (;;) {
            skip_space();
            const char c = peek();
            const auto at = m_pos;
            if (c == '*' || c == '/') {
                ++m_pos;
                auto rhs = parse_unary();
                lhs = make(c == '*' ? node::kind::mul : node::kind::div, at, std::move(lhs), std::move(rhs));
            } else if (starts_primary()) {
                auto rhs = parse_power();
                lhs = make(node::kind::mul, at, std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    node_ptr parse_unary()
    {
        skip_space();
        const char c = peek();
        if (c == '+' || c == '-') {
            const auto at = m_pos++;
            auto operand = parse_unary();
            return c == '-' ? make(node::kind::neg, at, std::move(operand)) : std::move(operand);
        }
        return parse_power();
    }

    node_ptr parse_power()
    {
        auto base = parse_primary();
        skip_space();
        if (peek() == '^') {
            const auto at = m_pos++;
            skip_space();
            const auto digit_at = m_pos;
            const auto digits = read_digits();
            if (digits.empty()) {
                throw parse_error(digit_at, "exponent must be a nonnegative integer");
            }
            auto p = make(node::kind::power, at, std::move(base));
            p->exponent = static_cast<unsigned>(std::stoul(digits));
            return p;
        }
        return base;
    }

    node_ptr parse_primary()
    {
        skip_space();
        const auto at = m_pos;
        const char c = peek();
        if (c == 'z') {
            ++m_pos;
            return make(node::kind::variable, at);
        }
        if (c == 'i') {
            ++m_pos;
            return make(node::kind::imaginary, at);
        }
        if (c == '(') {
            ++m_pos;
            auto inner = parse_expr();
            skip_space();
            if (peek() != ')') {
                throw parse_error(m_pos, "expected ')'");
            }
            ++m_pos;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (c == '\0') {
            throw parse_error(at, "unexpected end of input");
        }
        throw parse_error(at, std::string("unexpected character '") + c + "'");
    }

    node_ptr parse_number()
    {
        const auto at = m_pos;
        std::string mantissa = read_digits();
        std::string fraction;
        if (peek() == '.') {
            ++m_pos;
            fraction = read_digits();
        }
        if (mantissa.empty() && fraction.empty()) {
            throw parse_error(at, "malformed number");
        }
        long exponent = 0;
        if (peek() == 'e' || peek() == 'E') {
            const auto save = m_pos++;
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++m_pos;
            }
            const auto digits = read_digits();
            if (digits.empty()) {
                m_pos = save;
            } else {
                exponent = std::stol(digits);
                if (negative) {
                    exponent = -exponent;
                }
            }
        }
        exponent -= static_cast<long>(fraction.size());
        mpz_class value((mantissa + fraction).empty() ? "0" : mantissa + fraction, 10);
        mpz_class ten_pow;
        mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
        auto n = make(node::kind::number, at);
        n->value = exponent < 0 ? rational(value, ten_pow) : rational(value * ten_pow);
        n->value.canonicalize();
        return n;
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

series evaluate(const node &n, int order)
{
    const auto m = mode::exact;
    switch (n.k) {
        case node::kind::number:
            return series::constant(coefficient::real(n.value, m), order);
        case node::kind::variable:
            return series::identity(m, order);
        case node::kind::imaginary:
            return series::constant(coefficient::complex(rational(0), rational(1), m), order);
        case node::kind::add:
            return evaluate(*n.lhs, order) + evaluate(*n.rhs, order);
        case node::kind::sub:
            return evaluate(*n.lhs, order) - evaluate(*n.rhs, order);
        case node::kind::mul:
            return evaluate(*n.lhs, order) * evaluate(*n.rhs, order);
        case node::kind::div: {
            const auto divisor = evaluate(*n.rhs, order);
            if (divisor[0].is_zero()) {
                throw parse_error(n.offset, "divisor has zero constant term");
            }
            return evaluate(*n.lhs, order) * mul_inverse(divisor);
        }
        case node::kind::neg:
            return -evaluate(*n.lhs, order);
        case node::kind::power:
            return pow(evaluate(*n.lhs, order), n.exponent);
    }
    throw parse_error(n.offset, "unknown node");
}

} // namespace

series parse_series_expr(std::string_view text, std::optional<int> default_order)
{
    parser p(text);
    std::optional<int> order;
    const auto tree = p.parse_input(order);
    if (!order) {
        order = default_order;
    }
    if (!order) {
        throw parse_error(text.size(), "missing truncation order '@N'");
    }
    return evaluate(*tree, *order);
}

coefficient parse_coefficient_expr(std::string_view text)
{
    if (const auto at = text.find('z'); at != std::string_view::npos) {
        throw parse_error(at, "a constant may not contain z");
    }
    const auto s = parse_series_expr(text, 0);
    return s[0];
}

} // namespace fps
