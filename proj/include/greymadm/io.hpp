#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greymadm/grey_graph.hpp"
#include "greymadm/madm.hpp"

namespace greymadm {

/// Input-file form of a decision problem. Weights stay as intervals so that
/// documents round-trip without loss.
struct ProblemDocument {
    struct AttributeSpec {
        std::string name;
        AttributeKind kind = AttributeKind::benefit;
        GreyInterval weight_interval;

        bool operator==(const AttributeSpec&) const = default;
    };

    std::string schema_version = "1";
    std::vector<std::string> alternatives;
    std::vector<AttributeSpec> attributes;
    Matrix<GreyInterval> matrix;
    std::optional<Matrix<double>> influence_kernel;
    std::optional<Matrix<double>> influence_greyness;

    bool operator==(const ProblemDocument&) const = default;
};

enum class InputFormat { json, csv };
enum class ReportFormat { text, markdown, json };

InputFormat parse_input_format(std::string_view text);
ReportFormat parse_report_format(std::string_view text);

/// JSON schema:
///   { "schema_version": "1",
///     "alternatives": ["X1", ...],
///     "attributes": [{"name": "A1", "kind": "cost", "weight_interval": [0.4, 0.5]}, ...],
///     "matrix": [[[lo, hi], ...], ...],
///     "influence_kernel": [[...]],      (optional, default identity)
///     "influence_greyness": [[...]] }   (optional, default zero)
ProblemDocument parse_problem_document(std::string_view text, InputFormat format);
std::string problem_document_to_json(const ProblemDocument& doc);

/// Checks the document and builds the problem. Errors carry the offending
/// coordinates.
DecisionProblem to_problem(const ProblemDocument& doc);

DecisionProblem parse_problem(std::string_view text, InputFormat format);

/// Parses a "lo..hi" interval cell.
GreyInterval parse_interval_cell(std::string_view cell);

std::string emit_report(const DecisionProblem& problem, const Solution& solution, ReportFormat format);

/// Reads back the JSON report emitted by emit_report.
Solution parse_report_json(std::string_view text);

std::string export_dot(const GreyGraph& g, std::string_view name = "G");

/// Graph file schema:
///   { "vertices": [{"id": "x1", "kernel": 0.7, "greyness": 0.2}, ...],
///     "edges": [{"source": "x1", "target": "x2", "kernel": 0.5, "greyness": 0.3}, ...] }
GreyGraph parse_graph_json(std::string_view text, bool strict = false);
std::string graph_to_json(const GreyGraph& g);

}  // namespace greymadm
