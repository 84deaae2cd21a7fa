#include "greymadm/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "greymadm/io.hpp"
#include "greymadm/madm.hpp"

namespace greymadm::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(fmt::format("cannot open '{}'", path));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
        throw InputError(fmt::format("cannot write '{}'", path));
    }
}

void emit(const std::string& content, const std::string& output, std::ostream& out) {
    if (output.empty()) {
        out << content;
    } else {
        write_file(output, content);
    }
}

struct SolveArgs {
    std::string input;
    std::string format;
    std::string output;
    std::string report = "text";
    std::string emit_dot;
    bool clamp = false;
    bool strict = false;
};

void run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    InputFormat format = InputFormat::json;
    if (!a.format.empty()) {
        format = parse_input_format(a.format);
    } else if (std::filesystem::path(a.input).extension() == ".csv") {
        format = InputFormat::csv;
    }
    const ReportFormat report = parse_report_format(a.report);
    const DecisionProblem problem = parse_problem(read_file(a.input), format);

    if (a.strict) {
        if (auto drift = check_weight_sum(problem.weights()); !drift.empty()) {
            throw InputError(drift.front());
        }
    }
    const GreyGraph attributes = attribute_graph(problem, a.strict);

    const Solution solution = solve(problem, SolveOptions{a.clamp});
    check_solution(problem, solution);
    for (const auto& w : solution.warnings) {
        err << "warning: " << w << "\n";
    }
    emit(emit_report(problem, solution, report), a.output, out);
    if (!a.emit_dot.empty()) {
        write_file(a.emit_dot, export_dot(attributes, "attributes"));
    }
}

struct GraphArgs {
    std::vector<std::string> inputs;
    std::string output;
    bool dot = false;
    bool strict = false;
};

std::vector<GreyGraph> load_graphs(const GraphArgs& a, std::size_t expected) {
    if (a.inputs.size() != expected) {
        throw InputError(fmt::format("expected {} --input graph file{}, got {}", expected, expected == 1 ? "" : "s",
                                     a.inputs.size()));
    }
    std::vector<GreyGraph> out;
    for (const auto& path : a.inputs) {
        try {
            out.push_back(parse_graph_json(read_file(path), a.strict));
        } catch (const InputError& e) {
            throw InputError(fmt::format("{}: {}", path, e.what()));
        }
    }
    return out;
}

void write_graph(const GreyGraph& g, const GraphArgs& a, std::ostream& out) {
    emit(a.dot ? export_dot(g) : graph_to_json(g), a.output, out);
}

int run_validate(const GraphArgs& a, std::ostream& out) {
    const GreyGraph g = load_graphs(a, 1).front();
    const ValidityReport report = validate(g);
    std::string text;
    if (report.valid()) {
        text = "valid\n";
    } else {
        text = fmt::format("invalid: {} violation{}\n", report.violations.size(),
                           report.violations.size() == 1 ? "" : "s");
        for (const auto& v : report.violations) {
            text += "  " + to_string(v) + "\n";
        }
    }
    text += fmt::format("strong: {}\n", is_strong(g) ? "yes" : "no");
    emit(text, a.output, out);
    return report.valid() ? exit_ok : exit_input_error;
}

struct ConvertArgs {
    std::string to = "grey";
    std::vector<std::string> values;
    bool json = false;
};

GreyNumber parse_grey_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw InputError(fmt::format("'{}' is not a kernel,greyness pair", text));
    }
    // Reuse the interval cell parser for each half.
    const GreyInterval k = parse_interval_cell(text.substr(0, comma));
    const GreyInterval g = parse_interval_cell(text.substr(comma + 1));
    return GreyNumber(k.lower(), g.lower());
}

void run_convert(const ConvertArgs& a, std::ostream& out) {
    for (const auto& value : a.values) {
        try {
            if (a.to == "grey") {
                const GreyNumber g = from_interval(parse_interval_cell(value));
                out << (a.json ? fmt::format("[{}, {}]", g.kernel(), g.greyness()) : to_string(g)) << "\n";
            } else {
                const GreyInterval iv = to_interval(parse_grey_pair(value));
                out << (a.json ? fmt::format("[{}, {}]", iv.lower(), iv.upper()) : to_string(iv)) << "\n";
            }
        } catch (const InputError& e) {
            throw InputError(fmt::format("'{}': {}", value, e.what()));
        }
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grey-graph multi-attribute decision making with interval grey numbers", "greymadm"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Rank alternatives of a decision problem");
    solve_cmd->add_option("--input", solve_args.input, "Problem file (JSON or CSV)")->required();
    solve_cmd->add_option("--format", solve_args.format, "Input format; defaults from the file extension")
        ->check(CLI::IsMember({"json", "csv"}));
    solve_cmd->add_option("--output", solve_args.output, "Write the report here instead of stdout");
    solve_cmd->add_option("--report", solve_args.report, "Report format")
        ->check(CLI::IsMember({"text", "markdown", "json"}));
    solve_cmd->add_option("--emit-dot", solve_args.emit_dot, "Write the attribute grey graph as DOT");
    solve_cmd->add_flag("--clamp", solve_args.clamp, "Clamp propagated values into [0,1]");
    solve_cmd->add_flag("--strict-validation", solve_args.strict,
                        "Treat weight-sum drift and invalid attribute graphs as errors");

    GraphArgs graph_args;
    std::string graph_op;
    auto* graph_cmd = app.add_subcommand("graph", "Grey graph operators on JSON graph files");
    graph_cmd->require_subcommand(1);
    for (const char* op : {"strong", "union", "sum", "product", "validate"}) {
        auto* sub = graph_cmd->add_subcommand(op);
        sub->add_option("--input", graph_args.inputs, "Graph file (repeat for binary operators)")->required();
        sub->add_option("--output", graph_args.output, "Write the result here instead of stdout");
        sub->add_flag("--dot", graph_args.dot, "Emit DOT instead of JSON");
        sub->add_flag("--strict", graph_args.strict, "Reject input graphs that violate the edge bounds");
        sub->callback([&graph_op, op] { graph_op = op; });
    }
    graph_cmd->get_subcommand("strong")->description("Complete the vertices of a graph into a strong grey graph");
    graph_cmd->get_subcommand("union")->description("Union of two grey graphs");
    graph_cmd->get_subcommand("sum")->description("Addition (join) of two vertex-disjoint grey graphs");
    graph_cmd->get_subcommand("product")->description("Cartesian product of two grey graphs");
    graph_cmd->get_subcommand("validate")->description("Check the edge bounds; exit 1 when violated");

    ConvertArgs convert_args;
    auto* convert_cmd = app.add_subcommand("convert", "Convert between intervals and kernel/greyness pairs");
    convert_cmd->add_option("--to", convert_args.to, "Target form: grey (from lo..hi) or interval (from k,g)")
        ->check(CLI::IsMember({"grey", "interval"}));
    convert_cmd->add_flag("--json", convert_args.json, "Print full-precision JSON pairs");
    convert_cmd->add_option("values", convert_args.values, "Values to convert")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (solve_cmd->parsed()) {
            run_solve(solve_args, out, err);
        } else if (graph_cmd->parsed()) {
            if (graph_op == "validate") {
                return run_validate(graph_args, out);
            }
            if (graph_op == "strong") {
                write_graph(strong_completion(load_graphs(graph_args, 1).front().vertices()), graph_args, out);
            } else {
                const auto graphs = load_graphs(graph_args, 2);
                const GreyGraph result = graph_op == "union" ? graph_union(graphs[0], graphs[1])
                                         : graph_op == "sum" ? graph_sum(graphs[0], graphs[1])
                                                             : cartesian_product(graphs[0], graphs[1]);
                write_graph(result, graph_args, out);
            }
        } else if (convert_cmd->parsed()) {
            run_convert(convert_args, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal_error;
    }
    return exit_ok;
}

}  // namespace greymadm::cli
