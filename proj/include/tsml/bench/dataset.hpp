#pragma once

#include <string>
#include <vector>

#include "tsml/panel.hpp"

namespace tsml::bench {

/**
 * @brief One classification dataset file: a named collection of instances,
 *        each a fixed number of dimension series plus a class label.
 *
 * The text format has `@problemName`, `@univariate`, an optional
 * `@classLabel true <labels>`, and `@data`, followed by one instance per
 * line: `:`-separated dimensions of comma-separated values, label last.
 * `#` lines are comments; LF and CRLF both work.
 */
struct DatasetFile {
    std::string name;
    bool univariate = true;
    std::vector<std::string> class_labels;
    Panel panel;
    std::vector<std::string> labels;
};

/// Parses the dataset text format; every failure is a ParseError carrying
/// 1-based line and column numbers.
DatasetFile parse_dataset(const std::string& text);

/// Writes the text format back out, LF line endings, values at full
/// precision so a parse round trip is exact.
std::string serialize_dataset(const DatasetFile& data);

}  // namespace tsml::bench
