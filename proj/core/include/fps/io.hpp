#ifndef FPS_IO_HPP
#define FPS_IO_HPP

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include <fps/coefficient.hpp>
#include <fps/inversion.hpp>
#include <fps/matrix.hpp>
#include <fps/series.hpp>

namespace fps
{

// Series interchange format shared by the library and the CLI:
//   {"mode":"exact"|"float","order":N,"coeffs":[[re,im],...]}
// Exact parts are "p/q" strings, floating parts are JSON numbers.

nlohmann::json to_json(const coefficient &c);
coefficient coefficient_from_json(const nlohmann::json &j, mode m);

nlohmann::json to_json(const series &f);
// Throws malformed_input on any schema violation.
series series_from_json(const nlohmann::json &j);

// {"rows":[[c, ...], ...]} with the coefficient encoding above.
nlohmann::json to_json(const comp_matrix &c);

// {"candidate":<series>,"existence":"...","radius_estimate":x|null,"detail":"..."}
nlohmann::json to_json(const left_inverse_report &r);

// One "n,re,im" line per coefficient.
std::string to_csv(const series &f);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);
series read_series_file(const std::filesystem::path &path);

} // namespace fps

#endif
