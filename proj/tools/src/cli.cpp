#include "gfb/cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfb/analysis.hpp"
#include "gfb/census.hpp"
#include "gfb/subdivision.hpp"
#include "gfb/tiling.hpp"
#include "gfb/verify.hpp"

namespace gfb::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

/// Rows rendered as CSV or an aligned text table.
struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    std::string csv() const {
        auto quote = [](const std::string& cell) {
            if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
            std::string q = "\"";
            for (char ch : cell) {
                if (ch == '"') q += '"';
                q += ch;
            }
            return q + "\"";
        };
        std::string out;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + quote(cells[i]);
            out += "\r\n";
        };
        line(headers);
        for (const auto& r : rows) line(r);
        return out;
    }

    std::string text() const {
        std::vector<std::size_t> width(headers.size());
        for (std::size_t i = 0; i < headers.size(); ++i) width[i] = headers[i].size();
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
        }
        std::string out;
        auto line = [&](const std::vector<std::string>& cells) {
            std::string l;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                l += cells[i];
                if (i + 1 < cells.size()) l += std::string(width[i] - cells[i].size() + 2, ' ');
            }
            out += l + "\n";
        };
        line(headers);
        std::vector<std::string> rule;
        for (auto w : width) rule.emplace_back(w, '-');
        line(rule);
        for (const auto& r : rows) line(r);
        return out;
    }
};

struct Outcome {
    Json result = Json::object();
    Json provenance = Json::object();
    Table table;
    int exit_code = kExitOk;
    std::optional<std::string> raw;  ///< bypasses formatting (SVG)
};

struct Options {
    std::string algo = "a";
    int depth = -1;
    std::string beta = "2";
    Int qmax = 0;
    std::string range;
    std::string format = "table";
    bool exact = false;
    int jobs = 1;
    std::string out_path;
    double tolerance = 0.01;
    std::string point;
    std::string checks;
    int labels = 200;
};

double parse_beta(const std::string& text) {
    if (text.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw UsageError("malformed --beta '" + text + "'");
        q.canonicalize();
        return q.get_d();
    }
    double v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw UsageError("malformed --beta '" + text + "'");
    return v;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("--n expects A..B");
    auto to_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("malformed --n '" + text + "'");
        return v;
    };
    const int a = to_int(std::string_view(text).substr(0, dots));
    const int b = to_int(std::string_view(text).substr(dots + 2));
    if (a > b) throw UsageError("--n range is empty");
    return {a, b};
}

int require_depth(const Options& o) {
    if (o.depth < 0) throw UsageError("--depth is required");
    return o.depth;
}

Json series_json(const SeriesValue& s) {
    return Json{{"value", s.value}, {"tail_bound", s.tail_bound}, {"terms_used", s.terms_used}};
}

Json float_provenance(std::optional<double> tail = std::nullopt) {
    Json p{{"arithmetic", to_string(ArithmeticMode::CompensatedFloat)}};
    if (tail) p["tail_bound"] = *tail;
    return p;
}

Outcome cmd_census(const Options& o) {
    const Algorithm algo = parse_algorithm(o.algo);
    const Census c = census(algo, require_depth(o));
    Outcome out;
    Json degrees = Json::object();
    for (auto [d, count] : c.degree_histogram) degrees[std::to_string(d)] = count;
    out.result = Json{{"f", c.f}, {"r", c.r}, {"v", c.v}, {"degrees", degrees}};
    out.provenance = Json{{"arithmetic", "exact"}};
    out.table.headers = {"depth", "f", "r", "v"};
    std::vector<std::string> row{std::to_string(c.depth), std::to_string(c.f), std::to_string(c.r),
                                 std::to_string(c.v)};
    for (auto [d, count] : c.degree_histogram) {
        out.table.headers.push_back("deg" + std::to_string(d));
        row.push_back(std::to_string(count));
    }
    out.table.rows.push_back(row);
    return out;
}

Outcome cmd_moments(const Options& o) {
    const Algorithm algo = parse_algorithm(o.algo);
    const int depth = require_depth(o);
    const double beta = parse_beta(o.beta);
    const MomentMode mode = o.exact ? MomentMode::Exact : MomentMode::Auto;
    const MomentValue m = algo == Algorithm::Classical ? classical_moment(depth, beta, mode)
                                                       : moment(algo, depth, beta, mode, o.jobs);
    Outcome out;
    out.result = Json{{"depth", depth}, {"beta", beta}};
    if (m.exact) out.result["exact"] = m.exact->get_str();
    out.result["value"] = m.value;
    out.provenance = Json{{"arithmetic", to_string(m.mode)}};
    out.table.headers = {"depth", "beta", "mode", "value"};
    out.table.rows.push_back({std::to_string(depth), num(beta), std::string(to_string(m.mode)),
                              m.exact ? m.exact->get_str() : num(m.value)});
    return out;
}

Outcome cmd_dirichlet(const Options& o) {
    const Algorithm algo = parse_algorithm(o.algo);
    const double beta = parse_beta(o.beta);
    SeriesValue s;
    if (algo == Algorithm::Classical) {
        s = classical_L(beta);
    } else if (o.qmax > 0) {
        s = dirichlet_L(algo, beta, o.qmax);
    } else {
        s = dirichlet_L_adaptive(algo, beta, o.tolerance);
    }
    Outcome out;
    out.result = series_json(s);
    out.provenance = float_provenance(s.tail_bound);
    out.table.headers = {"algo", "beta", "value", "tail_bound", "terms_used"};
    out.table.rows.push_back({std::string(to_string(algo)), num(beta), num(s.value), num(s.tail_bound),
                              std::to_string(s.terms_used)});
    return out;
}

Outcome cmd_asym(const Options& o) {
    const Algorithm algo = parse_algorithm(o.algo);
    const double beta = parse_beta(o.beta);
    if (o.range.empty()) throw UsageError("--n A..B is required");
    const auto [from, to] = parse_range(o.range);
    const auto points = asymptotic_sweep(algo, from, to, beta, o.jobs);
    Outcome out;
    Json rows = Json::array();
    out.table.headers = {"n", "beta", "sigma", "main_term", "ratio", "L_value", "L_tail_bound"};
    for (const auto& p : points) {
        rows.push_back(Json{{"n", p.n},
                            {"beta", p.beta},
                            {"sigma", p.sigma},
                            {"sigma_mode", to_string(p.mode)},
                            {"main_term", p.main_term},
                            {"ratio", p.ratio},
                            {"L_value", p.L_value},
                            {"L_tail_bound", p.L_tail_bound}});
        out.table.rows.push_back({std::to_string(p.n), num(p.beta), num(p.sigma), num(p.main_term), num(p.ratio),
                                  num(p.L_value), num(p.L_tail_bound)});
    }
    out.result = Json{{"points", rows}};
    out.provenance = float_provenance(points.empty() ? 0.0 : points.front().L_tail_bound);
    return out;
}

Outcome cmd_locate(const Options& o) {
    const Algorithm algo = parse_algorithm(o.algo);
    if (o.point.empty()) throw UsageError("--point p1/q1,p2/q2 is required");
    const RationalPoint theta = RationalPoint::parse(o.point);
    const DescentChain chain = locate(algo, theta, require_depth(o));
    std::vector<Triangle> tris;
    for (const auto& b : chain.bases) tris.push_back(Triangle::from_basis(b));
    Outcome out;
    Json steps = Json::array();
    out.table.headers = {"depth", "child", "a", "b", "c", "coefficients", "code"};
    CodeB code_b;
    for (std::size_t v = 0; v < chain.bases.size(); ++v) {
        std::string code;
        if (algo == Algorithm::A) {
            code = code_a(std::span<const Triangle>(tris.data(), v + 1)).to_string();
        } else {
            if (v > 0) code_b.bits.push_back(b_bit(chain.child_index[v]));
            code = code_b.to_string();
        }
        Json labels = Json::array();
        for (const auto& p : tris[v].v) labels.push_back(p.label());
        const auto& k = chain.coefficients[v];
        steps.push_back(Json{{"depth", v},
                             {"child_index", chain.child_index[v]},
                             {"vertices", labels},
                             {"coefficients", {k[0], k[1], k[2]}},
                             {"code", code}});
        out.table.rows.push_back({std::to_string(v), std::to_string(chain.child_index[v]), tris[v].v[0].label(),
                                  tris[v].v[1].label(), tris[v].v[2].label(),
                                  std::to_string(k[0]) + " " + std::to_string(k[1]) + " " + std::to_string(k[2]),
                                  code});
    }
    out.result = Json{{"theta", theta.label()}, {"chain", steps}};
    out.provenance = Json{{"arithmetic", "exact"}};
    return out;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Outcome cmd_verify(const Options& o) {
    const Algorithm algo = parse_algorithm(o.algo);
    const auto selection = split_list(o.checks);
    const auto reports = run_checks(algo, require_depth(o), selection, o.jobs);
    Outcome out;
    Json checks = Json::array();
    int pass = 0, fail = 0, skipped = 0;
    out.table.headers = {"check", "status", "cases", "parameters", "witness"};
    for (const auto& r : reports) {
        checks.push_back(Json{{"name", r.name},
                              {"reference", r.reference},
                              {"parameters", r.parameters},
                              {"status", to_string(r.status)},
                              {"cases", r.cases},
                              {"witness", r.witness}});
        out.table.rows.push_back({r.name, std::string(to_string(r.status)), std::to_string(r.cases), r.parameters,
                                  r.witness});
        pass += r.status == CheckStatus::Pass;
        fail += r.status == CheckStatus::Fail;
        skipped += r.status == CheckStatus::Skipped;
    }
    out.result = Json{{"checks", checks}, {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
    out.provenance = Json{{"arithmetic", "exact"}};
    out.exit_code = fail ? kExitDomain : kExitOk;
    return out;
}

Outcome cmd_classical(const Options& o) {
    const int depth = require_depth(o);
    const double beta = parse_beta(o.beta);
    const MomentValue m = classical_moment(depth, beta, o.exact ? MomentMode::Exact : MomentMode::Auto);
    Outcome out;
    out.result = Json{{"depth", depth}, {"fractions", (std::uint64_t{1} << depth) + 1}, {"beta", beta}};
    if (depth <= 10) {
        std::vector<Fraction> level{{0, 1}, {1, 1}};
        for (int i = 0; i < depth; ++i) level = step_1d(level);
        Json seq = Json::array();
        for (const auto& f : level) seq.push_back(std::to_string(f.num) + "/" + std::to_string(f.den));
        out.result["sequence"] = seq;
    }
    if (m.exact) out.result["sigma_exact"] = m.exact->get_str();
    out.result["sigma"] = m.value;
    out.table.headers = {"depth", "beta", "mode", "sigma"};
    std::vector<std::string> row{std::to_string(depth), num(beta), std::string(to_string(m.mode)),
                                 m.exact ? m.exact->get_str() : num(m.value)};
    std::optional<double> tail;
    if (beta > 1 && depth >= 2) {
        const AsymptoticPoint p = asymptotic_ratio(Algorithm::Classical, depth, beta, o.jobs);
        out.result["main_term"] = p.main_term;
        out.result["ratio"] = p.ratio;
        out.result["L_value"] = p.L_value;
        out.result["L_tail_bound"] = p.L_tail_bound;
        out.table.headers.insert(out.table.headers.end(), {"main_term", "ratio"});
        row.insert(row.end(), {num(p.main_term), num(p.ratio)});
        tail = p.L_tail_bound;
    }
    out.table.rows.push_back(row);
    out.provenance = Json{{"arithmetic", to_string(m.mode)}};
    if (tail) out.provenance["tail_bound"] = *tail;
    return out;
}

Outcome cmd_render(const Options& o) {
    const Algorithm algo = parse_algorithm(o.algo);
    RenderOptions ro;
    ro.label_cap = o.labels;
    Outcome out;
    out.raw = render_svg(algo, require_depth(o), ro);
    return out;
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw DomainError("cannot open '" + o.out_path + "' for writing");
    file << text;
}

bool wants_json(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format=json") return true;
        if (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json") return true;
    }
    return false;
}

int report_error(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int code,
                 std::string_view kind, const std::string& message) {
    err << "gfb: " << message << "\n";
    if (wants_json(args)) {
        out << Json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << "\n";
    }
    return code;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Farey-Brocot tilings: census, moments, Dirichlet series, verification", "gfb"};
    app.require_subcommand(1);
    Options o;

    struct Spec {
        const char* name;
        const char* help;
        Outcome (*run)(const Options&);
    };
    const Spec specs[] = {
        {"census", "face/edge/vertex counts and degree histogram of T_depth", cmd_census},
        {"moments", "sigma_{depth,beta}: sum of area^beta over the tiles", cmd_moments},
        {"dirichlet", "truncated Dirichlet series L(F, beta) with tail bound", cmd_dirichlet},
        {"asym", "ratio of sigma_{n,beta} to the asymptotic main term over a range of n", cmd_asym},
        {"locate", "nested tiles containing a rational point", cmd_locate},
        {"verify", "run structural checks", cmd_verify},
        {"classical", "one-dimensional Brocot partition and its moments", cmd_classical},
        {"render", "SVG picture of the tiling", cmd_render},
    };
    std::vector<std::pair<CLI::App*, const Spec*>> subs;
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--algo", o.algo, "a | b | classical")->capture_default_str();
        sub->add_option("--depth", o.depth, "subdivision depth");
        sub->add_option("--beta", o.beta, "exponent, decimal or p/q")->capture_default_str();
        sub->add_option("--qmax", o.qmax, "largest vertex denominator (dirichlet)");
        sub->add_option("--n", o.range, "depth range A..B (asym)");
        sub->add_option("--format", o.format, "json | csv | table")
            ->check(CLI::IsMember({"json", "csv", "table"}))
            ->capture_default_str();
        sub->add_flag("--exact", o.exact, "exact rational arithmetic (integer beta)");
        sub->add_option("--jobs", o.jobs, "worker threads; results do not depend on it")
            ->check(CLI::Range(1, 256))
            ->capture_default_str();
        sub->add_option("--out", o.out_path, "write output to this file");
        sub->add_option("--tolerance", o.tolerance, "relative tail tolerance (dirichlet)")->capture_default_str();
        sub->add_option("--point", o.point, "p1/q1,p2/q2 (locate)");
        sub->add_option("--checks", o.checks, "comma-separated check names or 'all' (verify)");
        sub->add_option("--labels", o.labels, "vertex label cap (render)")->capture_default_str();
        subs.emplace_back(sub, &spec);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return report_error(args, out, err, kExitUsage, "usage", e.what());
    }

    const Spec* chosen = nullptr;
    std::string command;
    for (auto& [sub, spec] : subs) {
        if (sub->parsed()) {
            chosen = spec;
            command = spec->name;
        }
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome r = chosen->run(o);
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.raw) {
            emit(*r.raw, o, out);
            if (!o.out_path.empty() && o.format == "json") {
                out << Json{{"command", command}, {"out", o.out_path}, {"wall_time_s", wall}}.dump() << "\n";
            }
            return r.exit_code;
        }
        std::string text;
        if (o.format == "json") {
            Json params = Json::object();
            if (command != "classical") params["algo"] = o.algo;
            params["jobs"] = o.jobs;
            if (o.depth >= 0) params["depth"] = o.depth;
            if (command == "moments" || command == "dirichlet" || command == "asym" || command == "classical") {
                params["beta"] = o.beta;
            }
            if (!o.range.empty()) params["n"] = o.range;
            if (o.qmax > 0) params["qmax"] = o.qmax;
            if (o.exact) params["exact"] = true;
            if (!o.point.empty()) params["point"] = o.point;
            if (!o.checks.empty()) params["checks"] = o.checks;
            text = Json{{"command", command},
                        {"parameters", params},
                        {"result", r.result},
                        {"provenance", r.provenance},
                        {"wall_time_s", wall}}
                       .dump() +
                   "\n";
        } else if (o.format == "csv") {
            text = r.table.csv();
        } else {
            text = r.table.text();
        }
        emit(text, o, out);
        return r.exit_code;
    } catch (const UsageError& e) {
        return report_error(args, out, err, kExitUsage, "usage", e.what());
    } catch (const InvalidInput& e) {
        return report_error(args, out, err, kExitUsage, "invalid-input", e.what());
    } catch (const CapacityError& e) {
        return report_error(args, out, err, kExitDomain, "capacity", e.what());
    } catch (const DomainError& e) {
        return report_error(args, out, err, kExitDomain, "domain", e.what());
    } catch (const std::exception& e) {
        return report_error(args, out, err, kExitDomain, "internal", e.what());
    }
}

} // namespace gfb::cli
