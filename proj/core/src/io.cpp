#include <fps/io.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <fps/error.hpp>

namespace fps
{

namespace
{

[[noreturn]] void malformed(const std::string &what)
{
    throw error(error_kind::malformed_input, what);
}

rational rational_from_json(const nlohmann::json &j)
{
    if (!j.is_string()) {
        malformed("exact coefficient parts must be \"p/q\" strings");
    }
    try {
        return parse_rational(j.get<std::string>());
    } catch (const error &e) {
        malformed(e.detail());
    }
}

double double_from_json(const nlohmann::json &j)
{
    if (!j.is_number()) {
        malformed("float coefficient parts must be numbers");
    }
    return j.get<double>();
}

} // namespace

nlohmann::json to_json(const coefficient &c)
{
    if (c.is_exact()) {
        const auto &g = c.exact();
        return nlohmann::json::array({rational_to_string(g.re), rational_to_string(g.im)});
    }
    const auto z = c.to_complex();
    return nlohmann::json::array({z.real(), z.imag()});
}

coefficient coefficient_from_json(const nlohmann::json &j, mode m)
{
    if (!j.is_array() || j.size() != 2) {
        malformed("a coefficient is a two-element array [re, im]");
    }
    if (m == mode::exact) {
        return coefficient::complex(rational_from_json(j[0]), rational_from_json(j[1]), m);
    }
    return coefficient(std::complex<double>(double_from_json(j[0]), double_from_json(j[1])));
}

nlohmann::json to_json(const series &f)
{
    auto coeffs = nlohmann::json::array();
    for (const auto &c : f.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return {{"mode", std::string(to_string(f.get_mode()))}, {"order", f.order()}, {"coeffs", coeffs}};
}

series series_from_json(const nlohmann::json &j)
{
    if (!j.is_object() || !j.contains("mode") || !j.contains("order") || !j.contains("coeffs")) {
        malformed("a series object needs \"mode\", \"order\" and \"coeffs\"");
    }
    if (!j["mode"].is_string()) {
        malformed("\"mode\" must be a string");
    }
    mode m{};
    try {
        m = parse_mode(j["mode"].get<std::string>());
    } catch (const error &e) {
        malformed(e.detail());
    }
    if (!j["order"].is_number_integer() || j["order"].get<long>() < 0) {
        malformed("\"order\" must be a nonnegative integer");
    }
    const auto order = j["order"].get<long>();
    const auto &coeffs = j["coeffs"];
    if (!coeffs.is_array() || static_cast<long>(coeffs.size()) != order + 1) {
        malformed("\"coeffs\" must hold order + 1 entries");
    }
    std::vector<coefficient> out;
    out.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        out.push_back(coefficient_from_json(c, m));
    }
    return series(std::move(out));
}

nlohmann::json to_json(const comp_matrix &c)
{
    auto rows = nlohmann::json::array();
    for (int k = 0; k < c.rows(); ++k) {
        auto row = nlohmann::json::array();
        for (const auto &x : c.row(k).coeffs()) {
            row.push_back(to_json(x));
        }
        rows.push_back(std::move(row));
    }
    return {{"rows", rows}};
}

nlohmann::json to_json(const left_inverse_report &r)
{
    nlohmann::json radius = nullptr;
    if (std::isfinite(r.radius_estimate)) {
        radius = r.radius_estimate;
    }
    return {{"candidate", to_json(r.candidate)},
            {"existence", std::string(to_string(r.existence))},
            {"radius_estimate", radius},
            {"detail", r.detail}};
}

std::string to_csv(const series &f)
{
    std::ostringstream out;
    out.precision(17);
    for (int n = 0; n <= f.order(); ++n) {
        out << n << ',';
        if (f[n].is_exact()) {
            const auto &g = f[n].exact();
            out << rational_to_string(g.re) << ',' << rational_to_string(g.im);
        } else {
            const auto z = f[n].to_complex();
            out << z.real() << ',' << z.imag();
        }
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw error(error_kind::io, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw error(error_kind::io, "cannot write '" + path.string() + "'");
    }
}

series read_series_file(const std::filesystem::path &path)
{
    const auto text = read_text_file(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        malformed("'" + path.string() + "': " + e.what());
    }
    return series_from_json(j);
}

} // namespace fps
