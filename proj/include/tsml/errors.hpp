#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsml {

/// Base class for all tsml exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TSML_DEFINE_ERROR(NAME)   \
    class NAME : public Error {   \
    public:                       \
        using Error::Error;       \
    }

// Data containers
TSML_DEFINE_ERROR(EmptyInput);
TSML_DEFINE_ERROR(InvalidTimeIndex);
TSML_DEFINE_ERROR(NonFiniteValue);
TSML_DEFINE_ERROR(RaggedColumns);
TSML_DEFINE_ERROR(MixedCellKinds);
TSML_DEFINE_ERROR(DuplicateColumnName);
TSML_DEFINE_ERROR(NoSuchColumn);
TSML_DEFINE_ERROR(NotASeriesColumn);
TSML_DEFINE_ERROR(PrimitiveColumnPresent);
TSML_DEFINE_ERROR(DuplicateTriple);
TSML_DEFINE_ERROR(MissingVariableForInstance);
TSML_DEFINE_ERROR(IndexOutOfRange);

// Estimator contracts
TSML_DEFINE_ERROR(NotFitted);
TSML_DEFINE_ERROR(UnknownParameter);
TSML_DEFINE_ERROR(TypeMismatch);
TSML_DEFINE_ERROR(InvalidParameter);
TSML_DEFINE_ERROR(HorizonNotInFuture);
TSML_DEFINE_ERROR(MisalignedHorizon);
TSML_DEFINE_ERROR(InSampleUnavailable);

// Transformers and forecasters
TSML_DEFINE_ERROR(WindowTooLong);
TSML_DEFINE_ERROR(UnequalSpacing);
TSML_DEFINE_ERROR(TooManyBins);
TSML_DEFINE_ERROR(SeriesTooShort);
TSML_DEFINE_ERROR(IntervalOutOfBounds);
TSML_DEFINE_ERROR(DirectNeedsHorizon);
TSML_DEFINE_ERROR(HorizonMismatch);
TSML_DEFINE_ERROR(DegenerateFit);

// Tabular learners
TSML_DEFINE_ERROR(TooFewRows);
TSML_DEFINE_ERROR(InvalidK);

// Distances
TSML_DEFINE_ERROR(LengthMismatch);
TSML_DEFINE_ERROR(BandTooNarrow);
TSML_DEFINE_ERROR(EmptySeries);

// Composition
TSML_DEFINE_ERROR(IncompatibleStep);
TSML_DEFINE_ERROR(UnassignedColumn);

// Benchmarking
TSML_DEFINE_ERROR(ZeroDenominator);
TSML_DEFINE_ERROR(IncompletePivot);
TSML_DEFINE_ERROR(AllTies);
TSML_DEFINE_ERROR(ConfigError);

#undef TSML_DEFINE_ERROR

/// Dataset-file parse failure with 1-based line/column location.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + reason),
          line_(line),
          column_(column),
          reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string reason_;
};

}  // namespace tsml
