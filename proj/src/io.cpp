#include "greymadm/io.hpp"

#include <charconv>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"

namespace greymadm {

using nlohmann::json;

InputFormat parse_input_format(std::string_view text) {
    if (text == "json") {
        return InputFormat::json;
    }
    if (text == "csv") {
        return InputFormat::csv;
    }
    throw InputError(fmt::format("unknown input format '{}' (expected json or csv)", text));
}

ReportFormat parse_report_format(std::string_view text) {
    if (text == "text") {
        return ReportFormat::text;
    }
    if (text == "markdown") {
        return ReportFormat::markdown;
    }
    if (text == "json") {
        return ReportFormat::json;
    }
    throw InputError(fmt::format("unknown report format '{}' (expected text, markdown or json)", text));
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InputError(fmt::format("'{}' is not a number", text));
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

// Wraps a failure with a location prefix.
template <typename F>
auto at_location(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw InputError(fmt::format("{}: missing required field '{}'", where, key));
    }
    return obj.at(key);
}

double json_real(const json& v, const std::string& where) {
    if (!v.is_number()) {
        throw InputError(fmt::format("{}: expected a number, got {}", where, v.dump()));
    }
    return v.get<double>();
}

std::string json_string(const json& v, const std::string& where) {
    if (!v.is_string()) {
        throw InputError(fmt::format("{}: expected a string, got {}", where, v.dump()));
    }
    return v.get<std::string>();
}

const json& json_array(const json& v, const std::string& where) {
    if (!v.is_array()) {
        throw InputError(fmt::format("{}: expected an array, got {}", where, v.dump()));
    }
    return v;
}

GreyInterval json_interval(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) {
        throw InputError(fmt::format("{}: expected an interval [lo, hi], got {}", where, v.dump()));
    }
    const double lo = json_real(v[0], where);
    const double hi = json_real(v[1], where);
    return at_location(where, [&] { return GreyInterval(lo, hi); });
}

Matrix<double> json_real_matrix(const json& v, const std::string& where) {
    json_array(v, where);
    const std::size_t rows = v.size();
    const std::size_t cols = rows == 0 ? 0 : json_array(v[0], where + " row 1").size();
    Matrix<double> out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string row_where = fmt::format("{} row {}", where, r + 1);
        const json& row = json_array(v[r], row_where);
        if (row.size() != cols) {
            throw InputError(fmt::format("{}: has {} entries, expected {}", row_where, row.size(), cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            out(r, c) = json_real(row[c], fmt::format("{} row {}, column {}", where, r + 1, c + 1));
        }
    }
    return out;
}

json interval_json(const GreyInterval& iv) { return json::array({iv.lower(), iv.upper()}); }

template <typename T, typename F>
json matrix_json(const Matrix<T>& m, F&& cell) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(cell(m(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(fmt::format("malformed JSON: {}", e.what()));
    }
}

ProblemDocument parse_json_document(std::string_view text) {
    const json root = parse_json_text(text);
    if (!root.is_object()) {
        throw InputError("problem document must be a JSON object");
    }
    ProblemDocument doc;
    if (root.contains("schema_version")) {
        doc.schema_version = json_string(root.at("schema_version"), "schema_version");
    }
    const json& alts = json_array(require(root, "alternatives", "document"), "alternatives");
    for (std::size_t i = 0; i < alts.size(); ++i) {
        doc.alternatives.push_back(json_string(alts[i], fmt::format("alternatives[{}]", i + 1)));
    }
    const json& attrs = json_array(require(root, "attributes", "document"), "attributes");
    for (std::size_t j = 0; j < attrs.size(); ++j) {
        const std::string where = fmt::format("attribute {}", j + 1);
        ProblemDocument::AttributeSpec spec;
        spec.name = json_string(require(attrs[j], "name", where), where + " name");
        spec.kind = at_location(where, [&] {
            return parse_attribute_kind(json_string(require(attrs[j], "kind", where), where + " kind"));
        });
        spec.weight_interval = json_interval(require(attrs[j], "weight_interval", where), where + " weight_interval");
        doc.attributes.push_back(std::move(spec));
    }

    const json& rows = json_array(require(root, "matrix", "document"), "matrix");
    const std::size_t n = rows.size();
    const std::size_t m = n == 0 ? 0 : json_array(rows[0], "matrix row 1").size();
    doc.matrix = Matrix<GreyInterval>(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = json_array(rows[i], fmt::format("matrix row {}", i + 1));
        if (row.size() != m) {
            throw InputError(fmt::format("matrix row {}: has {} cells, expected {}", i + 1, row.size(), m));
        }
        for (std::size_t j = 0; j < m; ++j) {
            doc.matrix(i, j) = json_interval(row[j], fmt::format("matrix row {}, column {}", i + 1, j + 1));
        }
    }
    if (root.contains("influence_kernel")) {
        doc.influence_kernel = json_real_matrix(root.at("influence_kernel"), "influence_kernel");
    }
    if (root.contains("influence_greyness")) {
        doc.influence_greyness = json_real_matrix(root.at("influence_greyness"), "influence_greyness");
    }
    return doc;
}

// CSV microformat:
//   alternative,A1:cost,A2:benefit
//   X1,90..110,70..85
//   weights,0.40..0.50,0.30..0.40
ProblemDocument parse_csv_document(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
    std::size_t line_no = 0;
    for (std::size_t start = 0; start <= text.size();) {
        const auto end = text.find('\n', start);
        const std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++line_no;
        if (!trim(line).empty()) {
            lines.emplace_back(line_no, split(line, ','));
        }
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    if (lines.size() < 3) {
        throw InputError("CSV problem needs a header row, at least one alternative row and a weights row");
    }

    ProblemDocument doc;
    const auto& [header_line, header] = lines.front();
    const std::size_t m = header.size() - 1;
    if (m == 0) {
        throw InputError(fmt::format("line {}: header has no attribute columns", header_line));
    }
    for (std::size_t j = 1; j < header.size(); ++j) {
        const std::string where = fmt::format("line {}, column {}", header_line, j + 1);
        const auto colon = header[j].rfind(':');
        if (colon == std::string_view::npos) {
            throw InputError(fmt::format("{}: attribute label '{}' must be name:kind", where, header[j]));
        }
        ProblemDocument::AttributeSpec spec;
        spec.name = std::string(trim(header[j].substr(0, colon)));
        spec.kind = at_location(where, [&] { return parse_attribute_kind(std::string(trim(header[j].substr(colon + 1)))); });
        doc.attributes.push_back(std::move(spec));
    }

    const auto& [weights_line, weights] = lines.back();
    if (weights.front() != "weights") {
        throw InputError(fmt::format("line {}: last row must be the weights row starting with 'weights'", weights_line));
    }
    if (weights.size() != m + 1) {
        throw InputError(fmt::format("line {}: weights row has {} cells, expected {}", weights_line, weights.size() - 1, m));
    }
    for (std::size_t j = 0; j < m; ++j) {
        doc.attributes[j].weight_interval = at_location(fmt::format("line {}, column {}", weights_line, j + 2),
                                                        [&] { return parse_interval_cell(weights[j + 1]); });
    }

    const std::size_t n = lines.size() - 2;
    doc.matrix = Matrix<GreyInterval>(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [row_line, cells] = lines[i + 1];
        if (cells.size() != m + 1) {
            throw InputError(fmt::format("line {}: row has {} cells, expected {}", row_line, cells.size() - 1, m));
        }
        doc.alternatives.emplace_back(cells[0]);
        for (std::size_t j = 0; j < m; ++j) {
            doc.matrix(i, j) = at_location(fmt::format("line {}, column {} (alternative '{}', attribute '{}')", row_line,
                                                       j + 2, cells[0], doc.attributes[j].name),
                                           [&] { return parse_interval_cell(cells[j + 1]); });
        }
    }
    return doc;
}

}  // namespace

GreyInterval parse_interval_cell(std::string_view cell) {
    cell = trim(cell);
    const auto sep = cell.find("..");
    if (sep == std::string_view::npos) {
        // A bare number is a crisp interval.
        const double v = parse_real(cell);
        return GreyInterval(v, v);
    }
    const double lo = parse_real(cell.substr(0, sep));
    const double hi = parse_real(cell.substr(sep + 2));
    return GreyInterval(lo, hi);
}

ProblemDocument parse_problem_document(std::string_view text, InputFormat format) {
    return format == InputFormat::json ? parse_json_document(text) : parse_csv_document(text);
}

std::string problem_document_to_json(const ProblemDocument& doc) {
    json root;
    root["schema_version"] = doc.schema_version;
    root["alternatives"] = doc.alternatives;
    root["attributes"] = json::array();
    for (const auto& a : doc.attributes) {
        root["attributes"].push_back(
            {{"name", a.name}, {"kind", to_string(a.kind)}, {"weight_interval", interval_json(a.weight_interval)}});
    }
    root["matrix"] = matrix_json(doc.matrix, interval_json);
    auto real = [](double v) { return json(v); };
    if (doc.influence_kernel) {
        root["influence_kernel"] = matrix_json(*doc.influence_kernel, real);
    }
    if (doc.influence_greyness) {
        root["influence_greyness"] = matrix_json(*doc.influence_greyness, real);
    }
    return root.dump(2) + "\n";
}

DecisionProblem to_problem(const ProblemDocument& doc) {
    const std::size_t n = doc.alternatives.size();
    const std::size_t m = doc.attributes.size();
    if (doc.matrix.rows() != n || (n > 0 && doc.matrix.cols() != m)) {
        throw InputError(fmt::format("matrix is {}x{} but the document lists {} alternatives and {} attributes",
                                     doc.matrix.rows(), doc.matrix.cols(), n, m));
    }
    std::vector<GreyInterval> raw_weights;
    for (const auto& a : doc.attributes) {
        raw_weights.push_back(a.weight_interval);
    }
    const std::vector<GreyNumber> weights = weights_from_intervals(raw_weights);
    std::vector<Attribute> attributes;
    for (std::size_t j = 0; j < m; ++j) {
        attributes.push_back({doc.attributes[j].name, doc.attributes[j].kind, weights[j]});
    }

    Matrix<GreyNumber> influence = identity_influence(m);
    for (const auto* part : {&doc.influence_kernel, &doc.influence_greyness}) {
        if (*part && ((*part)->rows() != m || (*part)->cols() != m)) {
            throw InputError(fmt::format("{} must be {}x{}, got {}x{}",
                                         part == &doc.influence_kernel ? "influence_kernel" : "influence_greyness", m, m,
                                         (*part)->rows(), (*part)->cols()));
        }
    }
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) {
            const double kernel = doc.influence_kernel ? (*doc.influence_kernel)(p, q) : influence(p, q).kernel();
            const double greyness = doc.influence_greyness ? (*doc.influence_greyness)(p, q) : 0.0;
            influence(p, q) = at_location(fmt::format("influence entry ({},{})", p + 1, q + 1),
                                          [&] { return GreyNumber(kernel, greyness); });
        }
    }
    return DecisionProblem(doc.alternatives, std::move(attributes), doc.matrix, std::move(influence));
}

DecisionProblem parse_problem(std::string_view text, InputFormat format) {
    return to_problem(parse_problem_document(text, format));
}

// ---------------------------------------------------------------------------
// Reports

namespace {

std::string fixed4(double v) { return fmt::format("{:.4f}", v); }

std::string order_line(const DecisionProblem& problem, const RankingResult& ranking) {
    std::string out;
    for (std::size_t pos = 0; pos < ranking.order.size(); ++pos) {
        if (pos > 0) {
            out += " > ";
        }
        out += problem.alternatives()[ranking.order[pos]];
    }
    return out;
}

template <typename T, typename F>
void markdown_matrix(std::string& out, const DecisionProblem& problem, const std::string& title, const Matrix<T>& m,
                     F&& cell) {
    out += fmt::format("### {}\n\n|   |", title);
    for (const auto& a : problem.attributes()) {
        out += fmt::format(" {} |", a.name);
    }
    out += "\n|---|";
    for (std::size_t j = 0; j < m.cols(); ++j) {
        out += "---:|";
    }
    out += "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += fmt::format("| {} |", problem.alternatives()[i]);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out += fmt::format(" {} |", cell(m(i, j)));
        }
        out += "\n";
    }
    out += "\n";
}

template <typename T, typename F>
void text_matrix(std::string& out, const DecisionProblem& problem, const std::string& title, const Matrix<T>& m,
                 F&& cell) {
    out += title + "\n";
    out += fmt::format("  {:<10}", "");
    for (const auto& a : problem.attributes()) {
        out += fmt::format(" {:>17}", a.name);
    }
    out += "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += fmt::format("  {:<10}", problem.alternatives()[i]);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out += fmt::format(" {:>17}", cell(m(i, j)));
        }
        out += "\n";
    }
    out += "\n";
}

auto kernel_cell = [](const GreyNumber& g) { return fixed4(g.kernel()); };
auto greyness_cell = [](const GreyNumber& g) { return fixed4(g.greyness()); };
auto interval_cell = [](const GreyInterval& iv) { return to_string(iv); };

std::string markdown_report(const DecisionProblem& problem, const Solution& s) {
    std::string out = "## Grey-graph decision report\n\n";
    markdown_matrix(out, problem, "Decision matrix Z", problem.matrix(),
                    [](const GreyInterval& iv) { return fmt::format("[{},{}]", iv.lower(), iv.upper()); });
    markdown_matrix(out, problem, "Normalized matrix R", s.normalized.intervals, interval_cell);
    markdown_matrix(out, problem, "Normalized kernels", s.normalized.entries, kernel_cell);
    markdown_matrix(out, problem, "Normalized greyness", s.normalized.entries, greyness_cell);
    markdown_matrix(out, problem, "Propagated kernels", s.propagated, kernel_cell);
    markdown_matrix(out, problem, "Propagated greyness", s.propagated, greyness_cell);

    out += "### Score of relative kernel\n\n";
    out += "| Alternative | x̂_i | g_xi | δ_i = x̂_i/(1+g_xi) |\n|---|---:|---:|---:|\n";
    for (std::size_t i = 0; i < s.ranking.alternatives.size(); ++i) {
        const auto& a = s.ranking.alternatives[i];
        out += fmt::format("| {} | {} | {} | {} |\n", problem.alternatives()[i], fixed4(a.aggregate.kernel()),
                           fixed4(a.aggregate.greyness()), fixed4(a.score.delta));
    }
    out += fmt::format("\n**Ranking:** {}\n", order_line(problem, s.ranking));
    if (!s.warnings.empty()) {
        out += "\n### Warnings\n\n";
        for (const auto& w : s.warnings) {
            out += "- " + w + "\n";
        }
    }
    return out;
}

std::string text_report(const DecisionProblem& problem, const Solution& s) {
    std::string out;
    text_matrix(out, problem, "Normalized matrix R", s.normalized.intervals, interval_cell);
    text_matrix(out, problem, "Normalized kernels", s.normalized.entries, kernel_cell);
    text_matrix(out, problem, "Normalized greyness", s.normalized.entries, greyness_cell);
    text_matrix(out, problem, "Propagated kernels", s.propagated, kernel_cell);
    text_matrix(out, problem, "Propagated greyness", s.propagated, greyness_cell);

    out += "Scores\n";
    out += fmt::format("  {:<10} {:>8} {:>8} {:>8} {:>8} {:>5}\n", "", "kernel", "grey", "gamma", "delta", "rank");
    for (std::size_t i = 0; i < s.ranking.alternatives.size(); ++i) {
        const auto& a = s.ranking.alternatives[i];
        out += fmt::format("  {:<10} {:>8} {:>8} {:>8} {:>8} {:>5}\n", problem.alternatives()[i],
                           fixed4(a.aggregate.kernel()), fixed4(a.aggregate.greyness()), fixed4(a.score.gamma),
                           fixed4(a.score.delta), a.rank);
    }
    out += "\nRanking: " + order_line(problem, s.ranking) + "\n";
    for (const auto& w : s.warnings) {
        out += "warning: " + w + "\n";
    }
    return out;
}

json grey_matrix_json(const Matrix<GreyNumber>& m) {
    return {{"kernel", matrix_json(m, [](const GreyNumber& g) { return json(g.kernel()); })},
            {"greyness", matrix_json(m, [](const GreyNumber& g) { return json(g.greyness()); })}};
}

Matrix<GreyNumber> grey_matrix_from_json(const json& v, const std::string& where) {
    const Matrix<double> k = json_real_matrix(require(v, "kernel", where), where + " kernel");
    const Matrix<double> g = json_real_matrix(require(v, "greyness", where), where + " greyness");
    if (k.rows() != g.rows() || k.cols() != g.cols()) {
        throw InputError(where + ": kernel and greyness matrices differ in shape");
    }
    Matrix<GreyNumber> out(k.rows(), k.cols());
    for (std::size_t r = 0; r < k.rows(); ++r) {
        for (std::size_t c = 0; c < k.cols(); ++c) {
            out(r, c) = GreyNumber(k(r, c), g(r, c));
        }
    }
    return out;
}

std::string json_report(const DecisionProblem& problem, const Solution& s) {
    json root;
    root["alternatives"] = problem.alternatives();
    json attrs = json::array();
    for (const auto& a : problem.attributes()) {
        attrs.push_back(a.name);
    }
    root["attributes"] = attrs;

    json ranges = json::array();
    for (const auto& r : s.normalized.ranges) {
        ranges.push_back({{"min", r.min}, {"max", r.max}, {"range", r.range}});
    }
    json normalized = grey_matrix_json(s.normalized.entries);
    normalized["intervals"] = matrix_json(s.normalized.intervals, interval_json);
    normalized["ranges"] = ranges;
    normalized["warnings"] = s.normalized.warnings;
    root["normalized"] = normalized;
    root["propagated"] = grey_matrix_json(s.propagated);

    json scores = json::array();
    for (std::size_t i = 0; i < s.ranking.alternatives.size(); ++i) {
        const auto& a = s.ranking.alternatives[i];
        scores.push_back({{"alternative", problem.alternatives()[i]},
                          {"kernel", a.aggregate.kernel()},
                          {"greyness", a.aggregate.greyness()},
                          {"gamma", a.score.gamma},
                          {"delta", a.score.delta},
                          {"rank", a.rank}});
    }
    root["scores"] = scores;
    root["order"] = s.ranking.order;
    json order_names = json::array();
    for (std::size_t idx : s.ranking.order) {
        order_names.push_back(problem.alternatives()[idx]);
    }
    root["order_names"] = order_names;
    root["warnings"] = s.warnings;
    return root.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const DecisionProblem& problem, const Solution& solution, ReportFormat format) {
    switch (format) {
        case ReportFormat::text:
            return text_report(problem, solution);
        case ReportFormat::markdown:
            return markdown_report(problem, solution);
        case ReportFormat::json:
            return json_report(problem, solution);
    }
    throw InvariantError("unhandled report format");
}

Solution parse_report_json(std::string_view text) {
    const json root = parse_json_text(text);
    Solution s;
    const json& norm = require(root, "normalized", "report");
    s.normalized.entries = grey_matrix_from_json(norm, "normalized");
    const json& ivs = json_array(require(norm, "intervals", "normalized"), "normalized intervals");
    s.normalized.intervals = Matrix<GreyInterval>(s.normalized.entries.rows(), s.normalized.entries.cols());
    if (ivs.size() != s.normalized.intervals.rows()) {
        throw InputError("normalized intervals: row count mismatch");
    }
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        const json& row = json_array(ivs[i], "normalized intervals row");
        if (row.size() != s.normalized.intervals.cols()) {
            throw InputError("normalized intervals: column count mismatch");
        }
        for (std::size_t j = 0; j < row.size(); ++j) {
            s.normalized.intervals(i, j) = json_interval(row[j], fmt::format("normalized interval ({},{})", i + 1, j + 1));
        }
    }
    for (const auto& r : json_array(require(norm, "ranges", "normalized"), "normalized ranges")) {
        s.normalized.ranges.push_back({json_real(require(r, "min", "range"), "range min"),
                                       json_real(require(r, "max", "range"), "range max"),
                                       json_real(require(r, "range", "range"), "range")});
    }
    for (const auto& w : json_array(require(norm, "warnings", "normalized"), "normalized warnings")) {
        s.normalized.warnings.push_back(json_string(w, "warning"));
    }
    s.propagated = grey_matrix_from_json(require(root, "propagated", "report"), "propagated");
    for (const auto& sc : json_array(require(root, "scores", "report"), "scores")) {
        GreyNumber agg(json_real(require(sc, "kernel", "score"), "score kernel"),
                       json_real(require(sc, "greyness", "score"), "score greyness"));
        RelativeScore score{json_real(require(sc, "gamma", "score"), "gamma"),
                            json_real(require(sc, "delta", "score"), "delta")};
        s.aggregates.push_back(agg);
        s.ranking.alternatives.push_back({agg, score, require(sc, "rank", "score").get<std::size_t>()});
    }
    s.ranking.order = require(root, "order", "report").get<std::vector<std::size_t>>();
    for (const auto& w : json_array(require(root, "warnings", "report"), "warnings")) {
        s.warnings.push_back(json_string(w, "warning"));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Graphs

namespace {

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::string dot_quote(std::string_view s) { return "\"" + dot_escape(s) + "\""; }

}  // namespace

std::string export_dot(const GreyGraph& g, std::string_view name) {
    std::string out = fmt::format("graph {} {{\n", dot_quote(name));
    // std::map iteration gives the lexicographic vertex and edge order.
    for (const auto& [id, sigma] : g.vertices()) {
        out += fmt::format("  {} [label=\"{}\\n{}\"];\n", dot_quote(id), dot_escape(id), to_string(sigma));
    }
    for (const auto& [key, mu] : g.edges()) {
        out += fmt::format("  {} -- {} [label=\"{}\"];\n", dot_quote(key.first()), dot_quote(key.second()), to_string(mu));
    }
    out += "}\n";
    return out;
}

GreyGraph parse_graph_json(std::string_view text, bool strict) {
    const json root = parse_json_text(text);
    std::vector<std::pair<VertexId, GreyNumber>> vertices;
    const json& vs = json_array(require(root, "vertices", "graph"), "vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string where = fmt::format("vertex {}", i + 1);
        const std::string id = json_string(require(vs[i], "id", where), where + " id");
        const double k = json_real(require(vs[i], "kernel", where), where + " kernel");
        const double gr = json_real(require(vs[i], "greyness", where), where + " greyness");
        vertices.emplace_back(id, at_location(where, [&] { return GreyNumber(k, gr); }));
    }
    std::vector<std::pair<EdgeKey, GreyNumber>> edges;
    if (root.contains("edges")) {
        const json& es = json_array(root.at("edges"), "edges");
        for (std::size_t i = 0; i < es.size(); ++i) {
            const std::string where = fmt::format("edge {}", i + 1);
            const std::string a = json_string(require(es[i], "source", where), where + " source");
            const std::string b = json_string(require(es[i], "target", where), where + " target");
            const double k = json_real(require(es[i], "kernel", where), where + " kernel");
            const double gr = json_real(require(es[i], "greyness", where), where + " greyness");
            edges.emplace_back(EdgeKey(a, b), at_location(where, [&] { return GreyNumber(k, gr); }));
        }
    }
    return GreyGraph::from_lists(std::move(vertices), std::move(edges), strict);
}

std::string graph_to_json(const GreyGraph& g) {
    json root;
    root["vertices"] = json::array();
    for (const auto& [id, sigma] : g.vertices()) {
        root["vertices"].push_back({{"id", id}, {"kernel", sigma.kernel()}, {"greyness", sigma.greyness()}});
    }
    root["edges"] = json::array();
    for (const auto& [key, mu] : g.edges()) {
        root["edges"].push_back(
            {{"source", key.first()}, {"target", key.second()}, {"kernel", mu.kernel()}, {"greyness", mu.greyness()}});
    }
    return root.dump(2) + "\n";
}

}  // namespace greymadm
