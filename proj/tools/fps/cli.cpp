#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fps/fps.hpp>

namespace fps::cli
{

namespace
{

struct options {
    std::optional<int> order;
    std::string mode_name;
    double tolerance = default_tolerance;
    std::string out_path;
    std::string format = "json";
    std::uint64_t seed = 0;

    std::string in;
    std::string expr;
    std::string f;
    std::string g;
    std::string outer;
    std::string boundary;
    std::string report;
    std::string base;
    std::string dir;
    std::string t_list;
    std::string a0;
    int rows = -1;
    int coefficients = -1;
    int probe_order = probe_settings{}.order;
    int search_trials = 0;
};

std::optional<int> env_default_order()
{
    const char *text = std::getenv("FPS_DEFAULT_ORDER");
    if (text == nullptr || *text == '\0') {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        const int n = std::stoi(text, &used);
        if (used != std::string_view(text).size() || n < 1) {
            throw std::invalid_argument(text);
        }
        return n;
    } catch (const std::exception &) {
        throw error(error_kind::invalid_argument, "FPS_DEFAULT_ORDER must be a positive integer");
    }
}

class context
{
public:
    context(const options &opts, std::ostream &out) : m_opts(opts), m_out(out)
    {
        m_order = opts.order ? opts.order : env_default_order();
        if (m_order && *m_order < 1) {
            throw error(error_kind::invalid_argument, "order must be at least 1");
        }
        if (!opts.mode_name.empty()) {
            m_mode = parse_mode(opts.mode_name);
        }
        if (opts.format != "json" && opts.format != "csv") {
            throw error(error_kind::invalid_argument, "format must be json or csv");
        }
    }

    std::optional<int> order() const
    {
        return m_order;
    }

    // A JSON file path, or "expr:<text>" for an inline expression. With an
    // order in effect the series is truncated or zero-extended (inputs are
    // polynomial data).
    series load(const std::string &spec, std::string_view what) const
    {
        if (spec.empty()) {
            throw error(error_kind::invalid_argument, "missing input series --" + std::string(what));
        }
        series s = spec.rfind("expr:", 0) == 0 ? parse_series_expr(std::string_view(spec).substr(5), m_order)
                                               : read_series_file(spec);
        if (m_order) {
            s = s.resized(*m_order);
        }
        if (m_mode) {
            s = s.to_mode(*m_mode);
        }
        return s;
    }

    coefficient scalar(const std::string &text, mode m) const
    {
        return parse_coefficient_expr(text).to_mode(m);
    }

    outer_series outer(std::optional<mode> series_mode) const
    {
        if (!m_opts.outer.empty() && !m_opts.g.empty()) {
            throw error(error_kind::invalid_argument, "give either --outer or --g, not both");
        }
        if (!m_opts.outer.empty()) {
            auto a = lookup_outer(m_opts.outer);
            if (!m_opts.boundary.empty()) {
                a = a.with_boundary(parse_boundary_summable(m_opts.boundary));
            }
            return a;
        }
        auto s = load(m_opts.g, "g");
        if (series_mode) {
            s = s.to_mode(*series_mode);
        }
        return s;
    }

    composition_options composition() const
    {
        composition_options c;
        c.tolerance = m_opts.tolerance;
        c.probe.order = m_opts.probe_order;
        return c;
    }

    void emit(const series &s) const
    {
        if (m_opts.format == "csv") {
            emit_text(to_csv(s));
        } else {
            emit_json(to_json(s));
        }
    }

    void emit_json(const nlohmann::json &j) const
    {
        if (m_opts.format == "csv") {
            throw error(error_kind::invalid_argument, "this command only produces JSON");
        }
        emit_text(j.dump(2) + "\n");
    }

    void emit_text(const std::string &text) const
    {
        if (m_opts.out_path.empty()) {
            m_out << text;
        } else {
            write_text_file(m_opts.out_path, text);
        }
    }

private:
    const options &m_opts;
    std::ostream &m_out;
    std::optional<int> m_order;
    std::optional<mode> m_mode;
};

nlohmann::json coefficient_list(const std::vector<coefficient> &cs)
{
    auto out = nlohmann::json::array();
    for (const auto &c : cs) {
        out.push_back(to_json(c));
    }
    return out;
}

std::vector<std::string> split_commas(const std::string &text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

int cmd_eval(const options &o, const context &ctx)
{
    if (o.expr.empty() == o.in.empty()) {
        throw error(error_kind::invalid_argument, "eval needs exactly one of --expr or --in");
    }
    ctx.emit(ctx.load(o.expr.empty() ? o.in : "expr:" + o.expr, "in"));
    return ok;
}

int cmd_compose(const options &o, const context &ctx)
{
    const auto f = ctx.load(o.in, "in");
    const auto g = ctx.outer(f.get_mode());
    ctx.emit(compose_general(g, f, f.order(), ctx.composition()));
    return ok;
}

int cmd_revert(const options &o, const context &ctx)
{
    ctx.emit(reversion(ctx.load(o.in, "in"), o.tolerance));
    return ok;
}

int cmd_leftinv(const options &o, const context &ctx)
{
    const auto f = ctx.load(o.in, "in");
    const auto report = left_inverse(f, o.tolerance);
    auto j = to_json(report);
    if (o.search_trials > 0) {
        const auto search = uniqueness_search(f, o.search_trials, o.seed);
        j["uniqueness_search"] = {{"trials", search.trials}, {"counterexamples", search.counterexamples}};
    }
    if (!o.report.empty()) {
        write_text_file(o.report, j.dump(2) + "\n");
        ctx.emit(report.candidate);
    } else {
        ctx.emit_json(j);
    }
    return ok;
}

int cmd_bracket(const options &o, const context &ctx)
{
    const algebra_element f(ctx.load(o.f, "f"), o.tolerance);
    const algebra_element g(ctx.load(o.g, "g"), o.tolerance);
    ctx.emit(lie_bracket(f, g).get_series());
    return ok;
}

int cmd_conjugate(const options &o, const context &ctx)
{
    const group_element g(ctx.load(o.g, "g"), o.tolerance);
    const group_element f(ctx.load(o.f, "f"), o.tolerance);
    ctx.emit(similarity(g, f).get_series());
    return ok;
}

int cmd_matrix(const options &o, const context &ctx)
{
    const auto f = ctx.load(o.in, "in");
    const int rows = o.rows >= 0 ? o.rows : f.order();
    ctx.emit_json(to_json(comp_matrix(f, rows)));
    return ok;
}

int cmd_probe(const options &o, const context &ctx)
{
    const auto w = ctx.load(o.base, "base");
    const auto k = ctx.load(o.dir, "dir");
    const auto g = ctx.outer(w.get_mode());
    std::vector<coefficient> ts;
    if (o.t_list.empty()) {
        ts = default_t_sweep(w.get_mode());
    } else {
        for (const auto &item : split_commas(o.t_list)) {
            ts.push_back(ctx.scalar(item, w.get_mode()));
        }
    }
    const auto probe = finite_difference_probe(g, w, k, ts, o.coefficients, ctx.composition());
    nlohmann::json j;
    j["t"] = coefficient_list(probe.t_values);
    j["skipped"] = coefficient_list(probe.skipped);
    j["remainders"] = probe.remainders;
    j["slope"] = probe.slope ? nlohmann::json(*probe.slope) : nlohmann::json(nullptr);
    ctx.emit_json(j);
    return ok;
}

int cmd_metric(const options &o, const context &ctx)
{
    const auto m = metric(ctx.load(o.f, "f"), ctx.load(o.g, "g"));
    nlohmann::json j;
    j["value"] = m.value;
    j["tail_bound"] = m.tail_bound;
    j["exact"] = m.exact ? nlohmann::json(rational_to_string(*m.exact)) : nlohmann::json(nullptr);
    ctx.emit_json(j);
    return ok;
}

int cmd_gct(const options &o, const context &ctx, std::ostream &err)
{
    if (o.outer.empty()) {
        throw error(error_kind::invalid_argument, "gct needs --outer");
    }
    if (o.a0.empty()) {
        throw error(error_kind::invalid_argument, "gct needs --a0");
    }
    const auto g = std::get<analytic_series>(ctx.outer(std::nullopt));
    const auto a0 = ctx.scalar(o.a0, mode::exact);
    const auto result = gct_check(g, a0, ctx.composition().probe);
    nlohmann::json j;
    j["status"] = std::string(to_string(result.status));
    j["fails_at_k"] = result.fails_at_k ? nlohmann::json(*result.fails_at_k) : nlohmann::json(nullptr);
    j["detail"] = result.detail;
    ctx.emit_json(j);
    if (result.status == gct_status::fails) {
        err << "error: " << name(error_kind::composition_does_not_exist) << ": ";
        if (result.fails_at_k) {
            err << "fails_at_k=" << *result.fails_at_k << ": ";
        }
        err << result.detail << "\n";
        return composition_failure;
    }
    return ok;
}

} // namespace

int exit_code_for(error_kind kind) noexcept
{
    switch (kind) {
        case error_kind::composition_does_not_exist:
            return composition_failure;
        case error_kind::io:
        case error_kind::malformed_input:
            return io_failure;
        default:
            return precondition_failure;
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Truncated formal power series: composition, reversion, left inverses and Lie operations"};
    app.require_subcommand(1);
    options o;

    const auto common = [&](CLI::App *sub) {
        sub->add_option("--order", o.order, "Truncation order N (default: FPS_DEFAULT_ORDER, else the input's)");
        sub->add_option("--mode", o.mode_name, "Convert inputs to exact or float");
        sub->add_option("--tol", o.tolerance, "Zero tolerance in float mode");
        sub->add_option("--out", o.out_path, "Write the result here instead of stdout");
        sub->add_option("--format", o.format, "json or csv");
        sub->add_option("--seed", o.seed, "Seed for randomized checks");
    };
    const auto outer = [&](CLI::App *sub) {
        sub->add_option("--outer", o.outer, "Registered outer series: geometric, exp, factorial, polylog:p, tail:k");
        sub->add_option("--boundary", o.boundary, "Override boundary summability: yes, no, unknown");
        sub->add_option("--probe-order", o.probe_order, "Boundary probe runs 10 x this many terms");
    };

    auto *eval = app.add_subcommand("eval", "Parse a series and print it");
    common(eval);
    eval->add_option("--expr", o.expr, "Series expression, e.g. \"z + z^2 @4\"");
    eval->add_option("--in", o.in, "Series JSON file");

    auto *compose = app.add_subcommand("compose", "General composition g o f");
    common(compose);
    outer(compose);
    compose->add_option("--g", o.g, "Polynomial outer series (JSON file or expr:...)");
    compose->add_option("--in", o.in, "Inner series f")->required();

    auto *revert = app.add_subcommand("revert", "Compositional inverse of a nonunit series");
    common(revert);
    revert->add_option("--in", o.in, "Series f with a_0 = 0, a_1 != 0")->required();

    auto *leftinv = app.add_subcommand("leftinv", "Left composition inverse and existence report");
    common(leftinv);
    leftinv->add_option("--in", o.in, "Series f with a_1 != 0")->required();
    leftinv->add_option("--report", o.report, "Write the report JSON here and print the candidate");
    leftinv->add_option("--search-trials", o.search_trials, "Randomized uniqueness search trials");

    auto *bracket = app.add_subcommand("bracket", "Lie bracket f g' - f' g of nonunit series");
    common(bracket);
    bracket->add_option("--f", o.f, "Nonunit series f")->required();
    bracket->add_option("--g", o.g, "Nonunit series g")->required();

    auto *conjugate = app.add_subcommand("conjugate", "Similarity transform g o f o g^[-1]");
    common(conjugate);
    conjugate->add_option("--g", o.g, "Group element g")->required();
    conjugate->add_option("--f", o.f, "Group element f")->required();

    auto *matrix = app.add_subcommand("matrix", "Truncated composition matrix");
    common(matrix);
    matrix->add_option("--in", o.in, "Series f")->required();
    matrix->add_option("--rows", o.rows, "Highest power K (default N)");

    auto *probe = app.add_subcommand("probe-derivative", "Finite-difference check of (g' o w) k");
    common(probe);
    outer(probe);
    probe->add_option("--g", o.g, "Polynomial outer series (JSON file or expr:...)");
    probe->add_option("--base", o.base, "Base point w")->required();
    probe->add_option("--dir", o.dir, "Direction k")->required();
    probe->add_option("--t", o.t_list, "Comma-separated decreasing step sizes");
    probe->add_option("--coefficients", o.coefficients, "Coefficients entering the remainder norm");

    auto *met = app.add_subcommand("metric", "Distance d(f, g) on stored coefficients");
    common(met);
    met->add_option("--f", o.f, "Series f")->required();
    met->add_option("--g", o.g, "Series g")->required();

    auto *gct = app.add_subcommand("gct", "Existence test for g o f given a_0 = [z^0] f");
    common(gct);
    outer(gct);
    gct->add_option("--a0", o.a0, "Constant term of the inner series, e.g. 1/2 or 0.5");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) {
            reversed.pop_back();
        }
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return precondition_failure;
    }

    try {
        const context ctx(o, out);
        const auto *sub = app.get_subcommands().front();
        const auto &verb = sub->get_name();
        if (verb == "eval") {
            return cmd_eval(o, ctx);
        }
        if (verb == "compose") {
            return cmd_compose(o, ctx);
        }
        if (verb == "revert") {
            return cmd_revert(o, ctx);
        }
        if (verb == "leftinv") {
            return cmd_leftinv(o, ctx);
        }
        if (verb == "bracket") {
            return cmd_bracket(o, ctx);
        }
        if (verb == "conjugate") {
            return cmd_conjugate(o, ctx);
        }
        if (verb == "matrix") {
            return cmd_matrix(o, ctx);
        }
        if (verb == "probe-derivative") {
            return cmd_probe(o, ctx);
        }
        if (verb == "metric") {
            return cmd_metric(o, ctx);
        }
        return cmd_gct(o, ctx, err);
    } catch (const error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return precondition_failure;
    }
}

} // namespace fps::cli
