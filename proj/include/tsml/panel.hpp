#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tsml/time_series.hpp"

namespace tsml {

enum class CellKind { Numeric, Categorical, Series };

/**
 * @brief One entry of a panel: a numeric primitive, a categorical label, or a
 *        whole time series.
 */
class Cell {
  public:
    static Cell numeric(double value) { return Cell(value); }
    static Cell categorical(std::string label) { return Cell(std::move(label)); }
    static Cell series(TimeSeries ts) { return Cell(std::move(ts)); }

    CellKind kind() const;

    /// Throws TypeMismatch when the cell holds a different kind.
    double numeric() const;
    const std::string& label() const;
    const TimeSeries& series() const;

    bool operator==(const Cell& other) const = default;

  private:
    explicit Cell(double v) : value_(v) {}
    explicit Cell(std::string s) : value_(std::move(s)) {}
    explicit Cell(TimeSeries ts) : value_(std::move(ts)) {}

    std::variant<double, std::string, TimeSeries> value_;
};

/**
 * @brief N i.i.d. instances by M named columns; each column holds cells of one
 *        kind. Series cells may have heterogeneous lengths and indices.
 *
 * Immutable after construction; safe to share across threads.
 */
class Panel {
  public:
    /// Validates lengths, per-column kind uniformity, and name uniqueness.
    static Panel build(std::vector<std::pair<std::string, std::vector<Cell>>> columns);

    /// Convenience for the common single-kind case.
    static Panel of_series(const std::string& name, std::vector<TimeSeries> series);

    std::size_t n_instances() const { return n_instances_; }
    std::size_t n_columns() const { return names_.size(); }

    const std::vector<std::string>& column_names() const { return names_; }
    bool has_column(const std::string& name) const;
    std::size_t column_index(const std::string& name) const;

    const std::vector<Cell>& column(std::size_t j) const;
    const std::vector<Cell>& column(const std::string& name) const;
    CellKind column_kind(std::size_t j) const;

    const Cell& cell(std::size_t instance, std::size_t column) const;

    bool operator==(const Panel& other) const = default;

  private:
    Panel() = default;

    std::vector<std::string> names_;
    std::vector<std::vector<Cell>> columns_;
    std::vector<CellKind> kinds_;
    std::size_t n_instances_ = 0;
};

struct LongRecord {
    std::int64_t instance_id = 0;
    std::string variable;
    TimePoint time = 0;
    double value = 0.0;

    bool operator==(const LongRecord& other) const = default;
};

/// True iff every series in the column shares one identical time index.
bool is_time_homogeneous(const Panel& panel, const std::string& column);

/// Unrolls a series-only panel into (instance, variable, time, value) records,
/// ordered by instance, then panel column order, then time.
std::vector<LongRecord> to_long(const Panel& panel);

/// Inverse of to_long: instances ascend by id, columns follow first appearance,
/// each series index is sorted ascending.
Panel from_long(const std::vector<LongRecord>& records);

/// New panel with rows taken in the given order; duplicates allowed.
Panel slice_instances(const Panel& panel, const std::vector<std::size_t>& rows);

}  // namespace tsml
