#ifndef WELLCAST_STATS_HPP
#define WELLCAST_STATS_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "wellcast/well_series.hpp"

namespace wellcast {

// Std convention: population (divide by n) matches the scaler; sample
// (n - 1) is offered for comparing against externally produced tables.
enum class StdConvention { population, sample };

struct AttrStats {
    std::size_t count = 0;  // present values only
    double mean = 0, stddev = 0, min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
    bool absent() const { return count == 0; }
};

struct SummaryStats {
    std::array<AttrStats, kAttrCount> per_attr;
    std::size_t record_count = 0;

    const AttrStats& of(Attr a) const { return per_attr[attr_index(a)]; }
};

// Quartiles use linear interpolation between closest ranks. Attributes with
// zero present values come back flagged absent rather than zeroed.
SummaryStats well_summary(const WellSeries& series,
                          StdConvention conv = StdConvention::population);

// Same statistics over an arbitrary record range (used for train-only fits).
SummaryStats summarize_records(const std::vector<DailyRecord>& records,
                               StdConvention conv = StdConvention::population);

// Quantile of a sorted, non-empty vector; p in [0, 1].
double quantile_sorted(const std::vector<double>& sorted, double p);

struct MissingAudit {
    std::array<std::size_t, kAttrCount> missing{};
    std::array<std::size_t, kAttrCount> present{};
    std::size_t record_count = 0;
};

MissingAudit missing_audit(const WellSeries& series);

enum class CorrPolicy { pairwise_complete, complete_case };

// Pearson coefficients between attributes over merged producer records.
// Entries with fewer than two paired observations or zero variance are
// flagged undefined. Diagonal is exactly 1.
struct CorrMatrix {
    std::vector<Attr> attrs;
    std::vector<double> values;  // row-major, size attrs^2
    std::vector<char> defined;   // parallel to values

    double at(std::size_t i, std::size_t j) const { return values[i * attrs.size() + j]; }
    bool is_defined(std::size_t i, std::size_t j) const {
        return defined[i * attrs.size() + j] != 0;
    }
    std::optional<double> between(Attr a, Attr b) const;
};

CorrMatrix correlation_matrix(const std::vector<const WellSeries*>& series_set,
                              const std::vector<Attr>& attrs,
                              CorrPolicy policy = CorrPolicy::pairwise_complete);
CorrMatrix correlation_matrix(const std::vector<WellSeries>& series_set,
                              const std::vector<Attr>& attrs,
                              CorrPolicy policy = CorrPolicy::pairwise_complete);

// Tab-separated reports in the layout of the published statistics table:
// one column per attribute, one row per statistic.
void write_summary_report(std::ostream& out, const SummaryStats& stats);
void write_missing_report(std::ostream& out, const MissingAudit& audit);
void write_corr_report(std::ostream& out, const CorrMatrix& corr);

}  // namespace wellcast

#endif  // WELLCAST_STATS_HPP
