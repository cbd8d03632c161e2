#include "qgsa/panel.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace qgsa {

namespace {

std::chrono::year_month_day to_ymd(const Date& d) {
    return {std::chrono::year{d.year}, std::chrono::month{static_cast<unsigned>(d.month)},
            std::chrono::day{static_cast<unsigned>(d.day)}};
}

std::string trim(std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && issp(s.back())) s.pop_back();
    size_t b = 0;
    while (b < s.size() && issp(s[b])) ++b;
    return s.substr(b);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(trim(cur));
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    const char* b = s.data();
    const char* e = b + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc{} && p == e;
}

bool parse_int(const std::string& s, int& out) {
    const char* b = s.data();
    const char* e = b + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc{} && p == e;
}

}  // namespace

Date parse_date(const std::string& text) {
    int y = 0, m = 0, d = 0;
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !parse_int(text.substr(0, 4), y) || !parse_int(text.substr(5, 2), m) ||
        !parse_int(text.substr(8, 2), d))
        throw std::invalid_argument("bad date '" + text + "' (expected YYYY-MM-DD)");
    const Date date{y, m, d};
    if (!to_ymd(date).ok()) throw std::invalid_argument("invalid calendar date '" + text + "'");
    return date;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

Date add_days(const Date& d, long n) {
    const auto days = std::chrono::sys_days{to_ymd(d)} + std::chrono::days{n};
    const std::chrono::year_month_day ymd{days};
    return {static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month())),
            static_cast<int>(static_cast<unsigned>(ymd.day()))};
}

int iso_weekday(const Date& d) {
    const std::chrono::weekday wd{std::chrono::sys_days{to_ymd(d)}};
    return static_cast<int>(wd.iso_encoding());
}

CsvResult parse_csv(std::istream& in, const CsvSchema& schema) {
    std::string line;
    if (!std::getline(in, line)) throw SchemaError("empty input: no header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const auto header = split_fields(line);
    auto col_of = [&](const std::string& name) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw SchemaError("missing column '" + name + "' in CSV header");
        return static_cast<size_t>(it - header.begin());
    };
    const size_t date_idx = col_of(schema.date_col);
    const size_t hour_idx = col_of(schema.hour_col);
    const size_t qty_idx = col_of(schema.qty_col);

    CsvResult result;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        auto bad = [&](const std::string& msg) { result.row_errors.push_back({line_no, msg}); };
        if (fields.size() != header.size()) {
            bad("expected " + std::to_string(header.size()) + " fields, got " +
                std::to_string(fields.size()));
            continue;
        }
        SalesRecord rec;
        try {
            rec.date = parse_date(fields[date_idx]);
        } catch (const std::invalid_argument& e) {
            bad(e.what());
            continue;
        }
        int wall_hour = 0;
        if (!parse_int(fields[hour_idx], wall_hour)) {
            bad("bad hour '" + fields[hour_idx] + "'");
            continue;
        }
        rec.hour = wall_hour - schema.opening_hour + 1;
        if (rec.hour < 1) {
            bad("hour " + std::to_string(wall_hour) + " precedes opening hour " +
                std::to_string(schema.opening_hour));
            continue;
        }
        if (!parse_double(fields[qty_idx], rec.quantity)) {
            bad("bad quantity '" + fields[qty_idx] + "'");
            continue;
        }
        if (rec.quantity < 0) {
            bad("negative quantity " + fields[qty_idx]);
            continue;
        }
        result.records.push_back(rec);
    }
    return result;
}

SalesPanel::SalesPanel(const std::vector<SalesRecord>& records, int hours,
                       const std::function<int(const Date&)>& day_class_fn, int day_classes)
    : hours_(hours), day_classes_(day_classes) {
    if (hours_ < 1 || day_classes_ < 1) throw std::invalid_argument("panel dimensions must be positive");
    std::vector<std::vector<double>> cells(static_cast<size_t>(hours_) * day_classes_);
    for (const auto& rec : records) {
        if (rec.hour < 1 || rec.hour > hours_)
            throw std::invalid_argument("record on " + format_date(rec.date) + " has hour index " +
                                        std::to_string(rec.hour) + " outside [1," +
                                        std::to_string(hours_) + "]");
        const int j = day_class_fn(rec.date);
        if (j < 1 || j > day_classes_)
            throw std::invalid_argument("day class " + std::to_string(j) + " for " +
                                        format_date(rec.date) + " outside [1," +
                                        std::to_string(day_classes_) + "]");
        cells[cell_index(rec.hour, j)].push_back(rec.quantity);
    }
    *this = SalesPanel(hours_, day_classes_, std::move(cells));
}

SalesPanel::SalesPanel(int hours, int day_classes, std::vector<std::vector<double>> cells)
    : hours_(hours), day_classes_(day_classes) {
    if (hours_ < 1 || day_classes_ < 1) throw std::invalid_argument("panel dimensions must be positive");
    const size_t n_cells = static_cast<size_t>(hours_) * day_classes_;
    if (cells.size() != n_cells) throw std::invalid_argument("cell list does not match T*J");
    offsets_.assign(n_cells + 1, 0);
    long total = 0;
    for (size_t c = 0; c < n_cells; ++c) {
        offsets_[c] = total;
        total += static_cast<long>(cells[c].size());
    }
    offsets_[n_cells] = total;
    values_.reserve(total);
    hour_of_.reserve(total);
    day_of_.reserve(total);
    for (int t = 1; t <= hours_; ++t) {
        for (int j = 1; j <= day_classes_; ++j) {
            for (double v : cells[cell_index(t, j)]) {
                values_.push_back(v);
                hour_of_.push_back(t);
                day_of_.push_back(j);
            }
        }
    }
}

void SalesPanel::check_cell(int t, int j) const {
    if (t < 1 || t > hours_ || j < 1 || j > day_classes_)
        throw std::out_of_range("cell (" + std::to_string(t) + "," + std::to_string(j) +
                                ") outside the panel grid");
}

std::span<const double> SalesPanel::cell(int t, int j) const {
    check_cell(t, j);
    const long c = cell_index(t, j);
    return {values_.data() + offsets_[c], static_cast<size_t>(offsets_[c + 1] - offsets_[c])};
}

long SalesPanel::flat_index(int t, int j, int i) const {
    check_cell(t, j);
    const long c = cell_index(t, j);
    if (i < 1 || i > offsets_[c + 1] - offsets_[c])
        throw std::out_of_range("replicate index " + std::to_string(i) + " outside cell");
    return offsets_[c] + (i - 1);
}

SalesPanel::ObsKey SalesPanel::unflatten(long pos) const {
    if (pos < 0 || pos >= size()) throw std::out_of_range("flat position outside panel");
    const int t = hour_of_[pos];
    const int j = day_of_[pos];
    return {t, j, static_cast<int>(pos - offsets_[cell_index(t, j)]) + 1};
}

Distribution parse_distribution(const std::string& tag) {
    if (tag == "normal") return Distribution::normal;
    if (tag == "lognormal") return Distribution::lognormal;
    if (tag == "poisson") return Distribution::poisson;
    throw std::invalid_argument("unsupported distribution '" + tag +
                                "' (expected normal, lognormal, or poisson)");
}

std::string distribution_name(Distribution d) {
    switch (d) {
        case Distribution::normal: return "normal";
        case Distribution::lognormal: return "lognormal";
        case Distribution::poisson: return "poisson";
    }
    return "?";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

SalesPanel generate_synthetic(const SyntheticSpec& spec) {
    if (spec.hours < 1 || spec.day_classes < 1 || spec.replicates < 1)
        throw std::invalid_argument("synthetic spec dimensions must be positive");
    if (!spec.mean_fn || !spec.sd_fn) throw std::invalid_argument("synthetic spec needs mean_fn and sd_fn");

    std::vector<std::vector<double>> cells(static_cast<size_t>(spec.hours) * spec.day_classes);
    for (int t = 1; t <= spec.hours; ++t) {
        for (int j = 1; j <= spec.day_classes; ++j) {
            const double mean = spec.mean_fn(t, j);
            const double sd = spec.sd_fn(t, j);
            if (sd < 0) throw std::invalid_argument("sd_fn must be nonnegative");
            // Per-cell stream keyed on (seed, t, j): cell contents do not
            // depend on generation order.
            std::mt19937_64 rng(splitmix64(spec.seed ^ splitmix64(
                                 (static_cast<std::uint64_t>(t) << 32) | static_cast<std::uint64_t>(j))));
            auto& cell = cells[static_cast<size_t>(t - 1) * spec.day_classes + (j - 1)];
            cell.reserve(spec.replicates);
            switch (spec.dist) {
                case Distribution::normal: {
                    std::normal_distribution<double> dist(mean, sd);
                    for (int i = 0; i < spec.replicates; ++i)
                        cell.push_back(sd == 0 ? mean : dist(rng));
                    break;
                }
                case Distribution::lognormal: {
                    std::lognormal_distribution<double> dist(mean, sd);
                    for (int i = 0; i < spec.replicates; ++i)
                        cell.push_back(sd == 0 ? std::exp(mean) : dist(rng));
                    break;
                }
                case Distribution::poisson: {
                    if (mean < 0) throw std::invalid_argument("poisson mean must be nonnegative");
                    std::poisson_distribution<long> dist(mean > 0 ? mean : 1e-12);
                    for (int i = 0; i < spec.replicates; ++i)
                        cell.push_back(mean == 0 ? 0.0 : static_cast<double>(dist(rng)));
                    break;
                }
            }
        }
    }
    return SalesPanel(spec.hours, spec.day_classes, std::move(cells));
}

void write_sales_csv(const SalesPanel& panel, std::ostream& out, int opening_hour,
                     Date start_monday) {
    if (panel.day_classes() > 7)
        throw std::invalid_argument("CSV export needs day classes mappable to weekdays (J <= 7)");
    if (iso_weekday(start_monday) != 1)
        throw std::invalid_argument("start date must be a Monday");
    out << "date,hour,qty\n";
    char buf[64];
    for (int j = 1; j <= panel.day_classes(); ++j) {
        for (int t = 1; t <= panel.hours(); ++t) {
            const auto cell = panel.cell(t, j);
            for (size_t i = 0; i < cell.size(); ++i) {
                const Date d = add_days(start_monday, static_cast<long>(i) * 7 + (j - 1));
                std::snprintf(buf, sizeof buf, "%.17g", cell[i]);
                out << format_date(d) << ',' << (opening_hour + t - 1) << ',' << buf << '\n';
            }
        }
    }
}

}  // namespace qgsa
