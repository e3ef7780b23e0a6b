#include "foldrib/cli.hpp"

#include <atomic>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldrib/ingest.hpp"
#include "foldrib/pipeline.hpp"

namespace foldrib {

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::PreconditionViolated:
            return 2;
        case ErrorCode::InternalCheck:
        case ErrorCode::NoLevelingFound:
        case ErrorCode::RoutingError:
        case ErrorCode::NotConvertible:
        case ErrorCode::NotSwitchable:
        case ErrorCode::NotNormalForm:
            return 3;
        default:
            return 1;
    }
}

namespace {

enum class Format { Pd, Bgd, Csv };

struct Input {
    std::string name;
    Format format = Format::Pd;
    PlanarDiagram diagram;
    BinaryGridDiagram grid;
};

Format detect_format(const std::string& path, const std::string& forced) {
    std::string key = forced;
    if (key.empty()) {
        key = std::filesystem::path(path).extension().string();
        if (!key.empty()) key.erase(0, 1);
    }
    if (key == "pd") return Format::Pd;
    if (key == "bgd") return Format::Bgd;
    if (key == "csv") return Format::Csv;
    throw Error(ErrorCode::SyntaxError, "cannot tell the format of " + path + "; pass --format pd|bgd|csv");
}

Input load_input(const std::string& path, const std::string& forced, bool allow_unknot) {
    Input in;
    in.name = std::filesystem::path(path).stem().string();
    in.format = detect_format(path, forced);
    const std::string text = read_file(path);
    if (in.format == Format::Pd) {
        in.diagram = parse_pd(text, ParseOptions{allow_unknot});
    } else if (in.format == Format::Bgd) {
        in.grid = parse_bgd(text);
        require_valid(in.grid);
    } else {
        throw Error(ErrorCode::SyntaxError, path + " is a table; use the table subcommand");
    }
    return in;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void summarize(const BoundReport& r, std::ostream& err) {
    err << (r.name.empty() ? "diagram" : r.name) << ": c=" << r.crossing_number << ", certified bound "
        << to_string(r.certified_bound);
    if (r.has_theoretical)
        err << " <= " << to_string(r.floor_form) << " <= " << to_string(r.linear_form);
    err << " (T1- = " << r.portions.t1_minus() << ")\n";
}

PipelineResult run_input(const Input& in, const PipelineOptions& opts) {
    if (in.format == Format::Bgd) return run_grid_pipeline(in.grid, in.name);
    return run_pipeline(in.diagram, in.name, opts);
}

const char* kTableHeader =
    "name,crossings,status,flip,t1_minus,b1,b2,b3,b1o,b2o,b3o,counted_blocks,certified_bound,"
    "floor_form_bound,theoretical_bound,tian_bound,denne_bound";

std::string table_row(const BoundReport& r) {
    const auto& b = r.normalized;
    std::ostringstream s;
    s << csv_field(r.name) << ',' << r.crossing_number << ",ok," << r.flip.label() << ',' << r.portions.t1_minus() << ','
      << b.b1 << ',' << b.b2 << ',' << b.b3 << ',' << b.b1o << ',' << b.b2o << ',' << b.b3o << ',' << b.counted() << ','
      << to_string(r.certified_bound) << ',';
    if (r.has_theoretical) {
        s << to_string(r.floor_form) << ',' << to_string(r.linear_form) << ',' << to_string(r.tian) << ','
          << std::fixed << std::setprecision(6) << r.denne;
    } else {
        s << ",,,";
    }
    return s.str();
}

std::string error_row(const std::string& name, int crossings, const std::string& message) {
    std::ostringstream s;
    s << csv_field(name) << ',' << crossings << ',' << csv_field("error: " + message) << ",,,,,,,,,,,,,,";
    return s.str();
}

int run_table(const std::string& csv_path, const std::string& out_path, int jobs, const PipelineOptions& opts,
              std::ostream& out, std::ostream& err) {
    KnotTable table = load_table(csv_path);
    struct Line {
        int line;
        std::string text;
    };
    std::vector<Line> lines(table.entries.size());
    std::vector<int> status(table.entries.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < table.entries.size(); i = next++) {
            const auto& e = table.entries[i];
            lines[i].line = e.line;
            try {
                lines[i].text = table_row(run_pipeline(e.diagram, e.name, opts).report);
            } catch (const Error& ex) {
                lines[i].text = error_row(e.name, e.crossing_number, ex.what());
                status[i] = exit_code_for(ex.code());
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(table.entries.size())));
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    int code = 0;
    for (int s : status) code = std::max(code, s);
    for (const auto& e : table.errors) {
        lines.push_back({e.line, error_row("line " + std::to_string(e.line), 0, e.message)});
        code = std::max(code, 1);
    }
    std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.line < b.line; });

    std::string body = std::string(kTableHeader) + "\n";
    for (const auto& l : lines) body += l.text + "\n";
    write_file(out_path, body);

    nlohmann::json summary = {{"rows", lines.size()},
                              {"ok", table.entries.size() - std::count_if(status.begin(), status.end(), [](int s) { return s != 0; })},
                              {"errors", table.errors.size() + std::count_if(status.begin(), status.end(), [](int s) { return s != 0; })},
                              {"output", out_path}};
    out << summary.dump(2) << '\n';
    err << summary["ok"].get<std::size_t>() << " of " << lines.size() << " rows processed, results in " << out_path << '\n';
    return code;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Folded ribbonlength upper bounds for knot diagrams"};
    app.name("foldrib");
    app.require_subcommand(1);

    bool allow_unknot = false;
    bool exhaustive = false;
    std::string format;
    app.add_flag("--allow-unknot", allow_unknot, "accept a crossing-free diagram (bound 0)");
    app.add_flag("--exhaustive", exhaustive, "score every leveling instead of one per start");
    app.add_option("--format", format, "input format, overriding the extension")
        ->check(CLI::IsMember({"pd", "bgd", "csv"}));

    std::string input;
    std::string output;
    std::string schedule_path;
    double epsilon = 0.05;
    double width = 1.0;
    bool per_step = false;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    auto* bound = app.add_subcommand("bound", "print the bound report as JSON");
    bound->add_option("input", input, "diagram file")->required();

    auto* layout = app.add_subcommand("layout", "write the folded ribbon as SVG");
    layout->add_option("input", input, "diagram file")->required();
    layout->add_option("-o,--output", output, "SVG path")->required();
    layout->add_option("--schedule", schedule_path, "fold schedule JSON path");
    layout->add_option("--epsilon", epsilon, "fold allowance per unit width")->check(CLI::PositiveNumber);
    layout->add_option("--width", width, "ribbon width")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "compare Jones polynomials across stages");
    verify->add_option("input", input, "diagram file")->required();
    verify->add_flag("--per-step", per_step, "check after every rewrite step");

    auto* table = app.add_subcommand("table", "run a knot-table CSV");
    table->add_option("input", input, "CSV file")->required();
    table->add_option("-o,--output", output, "results CSV path")->required();
    table->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);

    for (auto* sub : {bound, layout, verify, table}) sub->fallthrough();

    std::vector<const char*> argv{"foldrib"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    PipelineOptions opts;
    opts.exhaustive = exhaustive;

    try {
        if (table->parsed()) {
            if (detect_format(input, format) != Format::Csv)
                throw Error(ErrorCode::SyntaxError, "table expects a CSV input");
            return run_table(input, output, jobs, opts, out, err);
        }

        const Input in = load_input(input, format, allow_unknot);
        if (bound->parsed()) {
            auto result = run_input(in, opts);
            out << to_json(result.report).dump(2) << '\n';
            summarize(result.report, err);
            return 0;
        }
        if (layout->parsed()) {
            auto result = run_input(in, opts);
            SvgConfig config;
            config.epsilon = epsilon;
            config.width = width;
            write_file(output, emit_svg(result.schedule, config));
            const Rational eps = Rational(static_cast<std::int64_t>(std::llround(epsilon * 1e6)), 1000000);
            if (!schedule_path.empty())
                write_file(schedule_path, to_json(result.schedule, eps, width).dump(2) + "\n");
            nlohmann::json summary = {{"name", in.name},
                                      {"svg", output},
                                      {"planes", result.schedule.planes.size()},
                                      {"caps", result.schedule.caps.size()},
                                      {"ribbon_length", boost::rational_cast<double>(ribbon_length(result.schedule, eps)) * width},
                                      {"certified_bound", boost::rational_cast<double>(result.report.certified_bound)}};
            if (!schedule_path.empty()) summary["schedule"] = schedule_path;
            out << summary.dump(2) << '\n';
            err << in.name << ": " << result.schedule.planes.size() << " paper planes, ribbon length "
                << summary["ribbon_length"].get<double>() << " at epsilon " << epsilon << '\n';
            return 0;
        }
        if (verify->parsed()) {
            VerifyReport report = in.format == Format::Bgd ? verify_grid_stages(in.grid, per_step, opts)
                                                           : verify_stages(in.diagram, per_step, opts);
            out << to_json(report).dump(2) << '\n';
            std::size_t bad = std::count_if(report.stages.begin(), report.stages.end(), [](const StageCheck& s) { return !s.ok; });
            err << in.name << ": " << report.stages.size() << " stages checked, " << bad << " mismatches\n";
            return report.ok() ? 0 : 3;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return 1;
}

}  // namespace foldrib
