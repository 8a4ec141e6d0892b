#include "tsml/panel.hpp"

#include <algorithm>
#include <map>

#include "tsml/errors.hpp"

namespace tsml {

CellKind Cell::kind() const {
    if (std::holds_alternative<double>(value_)) {
        return CellKind::Numeric;
    }
    if (std::holds_alternative<std::string>(value_)) {
        return CellKind::Categorical;
    }
    return CellKind::Series;
}

double Cell::numeric() const {
    if (const double* v = std::get_if<double>(&value_)) {
        return *v;
    }
    throw TypeMismatch("cell does not hold a numeric value");
}

const std::string& Cell::label() const {
    if (const std::string* v = std::get_if<std::string>(&value_)) {
        return *v;
    }
    throw TypeMismatch("cell does not hold a categorical label");
}

const TimeSeries& Cell::series() const {
    if (const TimeSeries* v = std::get_if<TimeSeries>(&value_)) {
        return *v;
    }
    throw TypeMismatch("cell does not hold a series");
}

Panel Panel::build(std::vector<std::pair<std::string, std::vector<Cell>>> columns) {
    if (columns.empty()) {
        throw EmptyInput("panel needs at least one column");
    }
    Panel panel;
    panel.n_instances_ = columns.front().second.size();
    if (panel.n_instances_ == 0) {
        throw EmptyInput("panel needs at least one instance");
    }
    for (auto& [name, cells] : columns) {
        if (std::find(panel.names_.begin(), panel.names_.end(), name) != panel.names_.end()) {
            throw DuplicateColumnName("duplicate column name: " + name);
        }
        if (cells.size() != panel.n_instances_) {
            throw RaggedColumns("column '" + name + "' has " + std::to_string(cells.size()) +
                                " cells, expected " + std::to_string(panel.n_instances_));
        }
        const CellKind kind = cells.front().kind();
        for (const Cell& cell : cells) {
            if (cell.kind() != kind) {
                throw MixedCellKinds("column '" + name + "' mixes cell kinds");
            }
        }
        panel.names_.push_back(std::move(name));
        panel.kinds_.push_back(kind);
        panel.columns_.push_back(std::move(cells));
    }
    return panel;
}

Panel Panel::of_series(const std::string& name, std::vector<TimeSeries> series) {
    std::vector<Cell> cells;
    cells.reserve(series.size());
    for (TimeSeries& ts : series) {
        cells.push_back(Cell::series(std::move(ts)));
    }
    std::vector<std::pair<std::string, std::vector<Cell>>> columns;
    columns.emplace_back(name, std::move(cells));
    return build(std::move(columns));
}

bool Panel::has_column(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t Panel::column_index(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw NoSuchColumn("no column named '" + name + "'");
    }
    return static_cast<std::size_t>(it - names_.begin());
}

const std::vector<Cell>& Panel::column(std::size_t j) const {
    if (j >= columns_.size()) {
        throw IndexOutOfRange("column index out of range");
    }
    return columns_[j];
}

const std::vector<Cell>& Panel::column(const std::string& name) const {
    return columns_[column_index(name)];
}

CellKind Panel::column_kind(std::size_t j) const {
    if (j >= kinds_.size()) {
        throw IndexOutOfRange("column index out of range");
    }
    return kinds_[j];
}

const Cell& Panel::cell(std::size_t instance, std::size_t column) const {
    if (column >= columns_.size()) {
        throw IndexOutOfRange("column index out of range");
    }
    if (instance >= n_instances_) {
        throw IndexOutOfRange("instance index out of range");
    }
    return columns_[column][instance];
}

bool is_time_homogeneous(const Panel& panel, const std::string& column) {
    const std::size_t j = panel.column_index(column);
    if (panel.column_kind(j) != CellKind::Series) {
        throw NotASeriesColumn("column '" + column + "' does not hold series");
    }
    const std::vector<Cell>& cells = panel.column(j);
    const TimeIndex& first = cells.front().series().index();
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (!(cells[i].series().index() == first)) {
            return false;
        }
    }
    return true;
}

std::vector<LongRecord> to_long(const Panel& panel) {
    for (std::size_t j = 0; j < panel.n_columns(); ++j) {
        if (panel.column_kind(j) != CellKind::Series) {
            throw PrimitiveColumnPresent("column '" + panel.column_names()[j] +
                                         "' holds primitives; long format covers series only");
        }
    }
    std::vector<LongRecord> records;
    for (std::size_t i = 0; i < panel.n_instances(); ++i) {
        for (std::size_t j = 0; j < panel.n_columns(); ++j) {
            const TimeSeries& ts = panel.cell(i, j).series();
            for (std::size_t t = 0; t < ts.size(); ++t) {
                records.push_back({static_cast<std::int64_t>(i), panel.column_names()[j],
                                   ts.time_at(t), ts[t]});
            }
        }
    }
    return records;
}

Panel from_long(const std::vector<LongRecord>& records) {
    if (records.empty()) {
        throw EmptyInput("long table holds no records");
    }

    std::vector<std::int64_t> instance_ids;
    std::vector<std::string> variables;
    // (instance slot, variable slot) -> time -> value; map keys keep times sorted.
    std::map<std::pair<std::size_t, std::size_t>, std::map<TimePoint, double>> groups;

    for (const LongRecord& rec : records) {
        auto iit = std::find(instance_ids.begin(), instance_ids.end(), rec.instance_id);
        if (iit == instance_ids.end()) {
            instance_ids.push_back(rec.instance_id);
            iit = std::prev(instance_ids.end());
        }
        auto vit = std::find(variables.begin(), variables.end(), rec.variable);
        if (vit == variables.end()) {
            variables.push_back(rec.variable);
            vit = std::prev(variables.end());
        }
        const std::pair<std::size_t, std::size_t> key{
            static_cast<std::size_t>(iit - instance_ids.begin()),
            static_cast<std::size_t>(vit - variables.begin())};
        if (!groups[key].emplace(rec.time, rec.value).second) {
            throw DuplicateTriple("duplicate (instance, variable, time) record: (" +
                                  std::to_string(rec.instance_id) + ", " + rec.variable + ", " +
                                  std::to_string(rec.time) + ")");
        }
    }

    // Rows ascend by instance id; remap slot -> row while keeping column order
    // as first appearance.
    std::vector<std::size_t> slot_order(instance_ids.size());
    for (std::size_t i = 0; i < slot_order.size(); ++i) {
        slot_order[i] = i;
    }
    std::sort(slot_order.begin(), slot_order.end(),
              [&](std::size_t a, std::size_t b) { return instance_ids[a] < instance_ids[b]; });

    std::vector<std::pair<std::string, std::vector<Cell>>> columns;
    for (std::size_t v = 0; v < variables.size(); ++v) {
        std::vector<Cell> cells;
        cells.reserve(slot_order.size());
        for (std::size_t slot : slot_order) {
            const auto git = groups.find({slot, v});
            if (git == groups.end()) {
                throw MissingVariableForInstance(
                    "instance " + std::to_string(instance_ids[slot]) + " lacks variable '" +
                    variables[v] + "'");
            }
            std::vector<TimePoint> times;
            std::vector<double> values;
            times.reserve(git->second.size());
            values.reserve(git->second.size());
            for (const auto& [time, value] : git->second) {
                times.push_back(time);
                values.push_back(value);
            }
            cells.push_back(Cell::series(TimeSeries(TimeIndex(std::move(times)), std::move(values))));
        }
        columns.emplace_back(variables[v], std::move(cells));
    }
    return Panel::build(std::move(columns));
}

Panel slice_instances(const Panel& panel, const std::vector<std::size_t>& rows) {
    if (rows.empty()) {
        throw EmptyInput("row selection must not be empty");
    }
    for (std::size_t r : rows) {
        if (r >= panel.n_instances()) {
            throw IndexOutOfRange("row index " + std::to_string(r) + " out of range for " +
                                  std::to_string(panel.n_instances()) + " instances");
        }
    }
    std::vector<std::pair<std::string, std::vector<Cell>>> columns;
    for (std::size_t j = 0; j < panel.n_columns(); ++j) {
        std::vector<Cell> cells;
        cells.reserve(rows.size());
        for (std::size_t r : rows) {
            cells.push_back(panel.cell(r, j));
        }
        columns.emplace_back(panel.column_names()[j], std::move(cells));
    }
    return Panel::build(std::move(columns));
}

}  // namespace tsml
