#include "tsml/bench/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string_view>

#include "tsml/errors.hpp"
#include "tsml/util.hpp"

namespace tsml::bench {

namespace {

struct RawLine {
    std::string_view text;
    std::size_t number;  // 1-based
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<RawLine> split_lines(const std::string& text) {
    std::vector<RawLine> lines;
    std::size_t begin = 0;
    std::size_t number = 1;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string::npos) {
            if (begin == text.size()) {
                break;  // no dangling line after a trailing newline
            }
            end = text.size();
        }
        std::string_view line(text.data() + begin, end - begin);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back({line, number});
        ++number;
        begin = end + 1;
    }
    return lines;
}

/// Trimmed view plus the 1-based column of its first character; `start` is
/// the 0-based offset of `piece` within its line.
struct Token {
    std::string_view text;
    std::size_t column;
};

Token trim_token(std::string_view piece, std::size_t start) {
    std::size_t lead = 0;
    while (lead < piece.size() && is_space(piece[lead])) {
        ++lead;
    }
    std::size_t trail = piece.size();
    while (trail > lead && is_space(piece[trail - 1])) {
        --trail;
    }
    return {piece.substr(lead, trail - lead), start + lead + 1};
}

bool is_ignored(std::string_view line) {
    const Token token = trim_token(line, 0);
    return token.text.empty() || token.text.front() == '#';
}

struct Directive {
    std::string_view keyword;
    std::size_t keyword_column;
    std::string_view value;  // trimmed remainder
    std::size_t value_column;
};

Directive split_directive(const RawLine& line) {
    const Token whole = trim_token(line.text, 0);
    std::size_t split = 0;
    while (split < whole.text.size() && !is_space(whole.text[split])) {
        ++split;
    }
    const Token value = trim_token(whole.text.substr(split), whole.column - 1 + split);
    return {whole.text.substr(0, split), whole.column, value.text, value.column};
}

double parse_value(const Token& token, std::size_t line_number) {
    if (token.text.empty()) {
        throw ParseError(line_number, token.column, "empty value");
    }
    double value = 0.0;
    const char* begin = token.text.data();
    const char* end = begin + token.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line_number, token.column,
                         "not a number: '" + std::string(token.text) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(line_number, token.column,
                         "non-finite value: '" + std::string(token.text) + "'");
    }
    return value;
}

/// Whitespace-separated words with their 1-based start columns.
std::vector<Token> split_words(std::string_view text) {
    std::vector<Token> words;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) {
            ++i;
        }
        if (i >= text.size()) {
            break;
        }
        const std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) {
            ++i;
        }
        words.push_back({text.substr(start, i - start), start + 1});
    }
    return words;
}

/// Splits on `separator`, keeping each piece's offset within the line.
std::vector<std::pair<std::string_view, std::size_t>> split_with_offsets(
    std::string_view text, char separator, std::size_t base_offset) {
    std::vector<std::pair<std::string_view, std::size_t>> pieces;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = text.find(separator, begin);
        if (end == std::string_view::npos) {
            pieces.emplace_back(text.substr(begin), base_offset + begin);
            return pieces;
        }
        pieces.emplace_back(text.substr(begin, end - begin), base_offset + begin);
        begin = end + 1;
    }
}

bool printable_label(std::string_view label) {
    if (label.empty()) {
        return false;
    }
    for (char c : label) {
        if (is_space(c) || c == ':' || c == ',' || c == '\n' || c == '\r') {
            return false;
        }
    }
    return true;
}

}  // namespace

DatasetFile parse_dataset(const std::string& text) {
    const std::vector<RawLine> lines = split_lines(text);
    const std::size_t eof_line = lines.empty() ? 1 : lines.back().number + 1;
    std::size_t cursor = 0;

    auto next_content = [&]() -> const RawLine* {
        while (cursor < lines.size() && is_ignored(lines[cursor].text)) {
            ++cursor;
        }
        return cursor < lines.size() ? &lines[cursor] : nullptr;
    };

    const RawLine* line = next_content();
    if (line == nullptr) {
        throw ParseError(eof_line, 1, "missing @problemName header");
    }
    Directive directive = split_directive(*line);
    if (directive.keyword != "@problemName") {
        throw ParseError(line->number, directive.keyword_column, "expected @problemName");
    }
    if (directive.value.empty()) {
        throw ParseError(line->number, directive.value_column, "missing dataset name");
    }
    const std::string name(directive.value);
    ++cursor;

    line = next_content();
    if (line == nullptr) {
        throw ParseError(eof_line, 1, "missing @univariate header");
    }
    directive = split_directive(*line);
    if (directive.keyword != "@univariate") {
        throw ParseError(line->number, directive.keyword_column, "expected @univariate");
    }
    bool univariate = false;
    if (directive.value == "true") {
        univariate = true;
    } else if (directive.value != "false") {
        throw ParseError(line->number, directive.value_column,
                         "@univariate takes true or false");
    }
    ++cursor;

    std::vector<std::string> class_labels;
    bool saw_class_labels = false;
    while (true) {
        line = next_content();
        if (line == nullptr) {
            throw ParseError(eof_line, 1, "missing @data marker");
        }
        directive = split_directive(*line);
        if (directive.keyword == "@data") {
            if (!directive.value.empty()) {
                throw ParseError(line->number, directive.value_column,
                                 "unexpected text after @data");
            }
            ++cursor;
            break;
        }
        if (directive.keyword == "@classLabel") {
            if (saw_class_labels) {
                throw ParseError(line->number, directive.keyword_column,
                                 "duplicate @classLabel");
            }
            saw_class_labels = true;
            // tokens[0] is the @classLabel keyword itself.
            const std::vector<Token> tokens = split_words(line->text);
            if (tokens.size() < 2 || tokens[1].text != "true") {
                const std::size_t column =
                    tokens.size() < 2 ? directive.value_column : tokens[1].column;
                throw ParseError(line->number, column, "@classLabel takes true");
            }
            if (tokens.size() < 3) {
                throw ParseError(line->number, directive.value_column,
                                 "missing class labels");
            }
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                class_labels.emplace_back(tokens[i].text);
            }
            ++cursor;
            continue;
        }
        throw ParseError(line->number, directive.keyword_column,
                         "expected @classLabel or @data, got '" +
                             std::string(directive.keyword) + "'");
    }

    std::size_t dims = 0;
    std::vector<std::vector<Cell>> columns;
    std::vector<std::string> labels;
    for (; cursor < lines.size(); ++cursor) {
        const RawLine& body = lines[cursor];
        if (is_ignored(body.text)) {
            continue;
        }
        const std::size_t line_column = trim_token(body.text, 0).column;
        const auto fields = split_with_offsets(body.text, ':', 0);
        if (fields.size() < 2) {
            throw ParseError(body.number, line_column, "missing class label field");
        }
        const std::size_t d = fields.size() - 1;
        if (univariate && d != 1) {
            throw ParseError(body.number, line_column,
                             "univariate data line has " + std::to_string(d) +
                                 " dimensions");
        }
        if (dims == 0) {
            dims = d;
            columns.resize(dims);
        } else if (d != dims) {
            throw ParseError(body.number, line_column,
                             "expected " + std::to_string(dims) + " dimensions, got " +
                                 std::to_string(d));
        }

        for (std::size_t k = 0; k < dims; ++k) {
            const auto& [field, offset] = fields[k];
            std::vector<double> values;
            for (const auto& [piece, piece_offset] : split_with_offsets(field, ',', offset)) {
                values.push_back(parse_value(trim_token(piece, piece_offset), body.number));
            }
            columns[k].push_back(Cell::series(TimeSeries::from_values(std::move(values))));
        }

        const Token label = trim_token(fields.back().first, fields.back().second);
        if (label.text.empty()) {
            throw ParseError(body.number, label.column, "empty class label");
        }
        if (!class_labels.empty() &&
            std::find(class_labels.begin(), class_labels.end(), label.text) ==
                class_labels.end()) {
            throw ParseError(body.number, label.column,
                             "label '" + std::string(label.text) +
                                 "' is not declared in @classLabel");
        }
        labels.emplace_back(label.text);
    }

    if (labels.empty()) {
        throw ParseError(eof_line, 1, "no data lines");
    }

    std::vector<std::pair<std::string, std::vector<Cell>>> named;
    named.reserve(dims);
    for (std::size_t k = 0; k < dims; ++k) {
        named.emplace_back("dim_" + std::to_string(k), std::move(columns[k]));
    }
    return DatasetFile{name, univariate, std::move(class_labels),
                       Panel::build(std::move(named)), std::move(labels)};
}

std::string serialize_dataset(const DatasetFile& data) {
    if (data.name.empty() || trim_token(data.name, 0).text != data.name) {
        throw InvalidParameter("dataset name must be non-empty with no outer whitespace");
    }
    if (data.name.find('\n') != std::string::npos ||
        data.name.find('\r') != std::string::npos) {
        throw InvalidParameter("dataset name must be a single line");
    }
    if (data.labels.size() != data.panel.n_instances()) {
        throw LengthMismatch("got " + std::to_string(data.labels.size()) + " labels for " +
                             std::to_string(data.panel.n_instances()) + " instances");
    }
    if (data.univariate && data.panel.n_columns() != 1) {
        throw InvalidParameter("univariate dataset must have exactly one dimension");
    }
    for (std::size_t j = 0; j < data.panel.n_columns(); ++j) {
        if (data.panel.column_kind(j) != CellKind::Series) {
            throw NotASeriesColumn("dimension columns must hold series");
        }
    }
    for (const std::string& label : data.class_labels) {
        if (!printable_label(label)) {
            throw InvalidParameter("unwritable class label '" + label + "'");
        }
    }
    for (const std::string& label : data.labels) {
        if (!printable_label(label)) {
            throw InvalidParameter("unwritable class label '" + label + "'");
        }
        if (!data.class_labels.empty() &&
            std::find(data.class_labels.begin(), data.class_labels.end(), label) ==
                data.class_labels.end()) {
            throw InvalidParameter("label '" + label + "' missing from the declared set");
        }
    }

    std::string out;
    out += "@problemName " + data.name + "\n";
    out += data.univariate ? "@univariate true\n" : "@univariate false\n";
    if (!data.class_labels.empty()) {
        out += "@classLabel true";
        for (const std::string& label : data.class_labels) {
            out += " " + label;
        }
        out += "\n";
    }
    out += "@data\n";

    for (std::size_t i = 0; i < data.panel.n_instances(); ++i) {
        for (std::size_t j = 0; j < data.panel.n_columns(); ++j) {
            const std::vector<double>& values = data.panel.cell(i, j).series().values();
            for (std::size_t t = 0; t < values.size(); ++t) {
                if (t > 0) {
                    out += ",";
                }
                out += format_double(values[t]);
            }
            out += ":";
        }
        out += data.labels[i] + "\n";
    }
    return out;
}

}  // namespace tsml::bench
