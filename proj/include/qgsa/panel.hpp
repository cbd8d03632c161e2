#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgsa {

/// Calendar date, ISO-8601 `YYYY-MM-DD` on the wire.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    bool operator==(const Date&) const = default;
};

Date parse_date(const std::string& text);  // throws std::invalid_argument
std::string format_date(const Date& d);
Date add_days(const Date& d, long n);
int iso_weekday(const Date& d);  // Mon=1 .. Sun=7

/// One hourly sales observation. `hour` is the panel index t in [1, T],
/// already mapped from the wall clock (opening hour -> t=1).
struct SalesRecord {
    Date date;
    int hour = 0;
    double quantity = 0.0;
};

struct CsvSchema {
    std::string date_col = "date";
    std::string hour_col = "hour";
    std::string qty_col = "qty";
    int opening_hour = 6;
};

struct RowError {
    long line = 0;
    std::string message;
};

struct CsvResult {
    std::vector<SalesRecord> records;
    std::vector<RowError> row_errors;
};

/// Header/column-level CSV failure (bad rows are reported in CsvResult instead).
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses hourly sales rows. Rows with unparseable or invalid fields are
/// collected in `row_errors` with their line number, never silently dropped.
CsvResult parse_csv(std::istream& in, const CsvSchema& schema);

/// Replicated (hour, day-class) panel of observations. Immutable after
/// construction; safe to share across threads read-only.
///
/// Flattening is cell-major with t outer and j inner, input order preserved
/// within each cell. t, j, i are 1-based; flat positions are 0-based.
class SalesPanel {
public:
    SalesPanel(const std::vector<SalesRecord>& records, int hours,
               const std::function<int(const Date&)>& day_class_fn, int day_classes = 7);

    /// Builds a panel directly from per-cell replicate lists (cells[(t-1)*J + (j-1)]).
    SalesPanel(int hours, int day_classes, std::vector<std::vector<double>> cells);

    int hours() const { return hours_; }
    int day_classes() const { return day_classes_; }
    long size() const { return static_cast<long>(values_.size()); }

    long cell_count(int t, int j) const { return offsets_[cell_index(t, j) + 1] - offsets_[cell_index(t, j)]; }
    std::span<const double> cell(int t, int j) const;

    struct ObsKey {
        int t = 0, j = 0, i = 0;
        bool operator==(const ObsKey&) const = default;
    };
    long flat_index(int t, int j, int i) const;  // i in [1, n_tj]
    ObsKey unflatten(long pos) const;

    std::span<const double> values() const { return values_; }
    int hour_of(long pos) const { return hour_of_[pos]; }
    int day_of(long pos) const { return day_of_[pos]; }

private:
    long cell_index(int t, int j) const { return static_cast<long>(t - 1) * day_classes_ + (j - 1); }
    void check_cell(int t, int j) const;

    int hours_ = 0;
    int day_classes_ = 0;
    std::vector<double> values_;
    std::vector<long> offsets_;   // T*J + 1 entries
    std::vector<int> hour_of_;    // per observation
    std::vector<int> day_of_;
};

enum class Distribution { normal, lognormal, poisson };

Distribution parse_distribution(const std::string& tag);  // throws std::invalid_argument
std::string distribution_name(Distribution d);

struct SyntheticSpec {
    int hours = 17;
    int day_classes = 7;
    int replicates = 1;
    Distribution dist = Distribution::normal;
    std::function<double(int, int)> mean_fn;  // (t, j)
    std::function<double(int, int)> sd_fn;    // (t, j), >= 0
    std::uint64_t seed = 0;
};

/// I.i.d. draws per cell, reproducible: the panel is a pure function of the
/// spec (per-cell generators are derived from (seed, t, j)).
SalesPanel generate_synthetic(const SyntheticSpec& spec);

/// Writes a panel back out as a date,hour,qty CSV consumable by parse_csv with
/// ISO day-of-week classes. Replicate i of class j gets the i-th j-weekday on
/// or after start_monday. Requires day_classes <= 7.
void write_sales_csv(const SalesPanel& panel, std::ostream& out, int opening_hour = 6,
                     Date start_monday = Date{2012, 11, 5});

}  // namespace qgsa
