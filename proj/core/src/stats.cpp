#include "wellcast/stats.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "wellcast/errors.hpp"
#include "wellcast/numio.hpp"

namespace wellcast {

double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw DataError("quantile of empty vector");
    if (sorted.size() == 1) return sorted[0];
    const double rank = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(rank));
    const auto hi = static_cast<std::size_t>(std::ceil(rank));
    const double frac = rank - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

SummaryStats summarize_records(const std::vector<DailyRecord>& records, StdConvention conv) {
    SummaryStats out;
    out.record_count = records.size();
    for (Attr a : kAllAttrs) {
        std::vector<double> vals;
        vals.reserve(records.size());
        for (const auto& rec : records)
            if (rec.present(a)) vals.push_back(*rec.value(a));
        AttrStats& st = out.per_attr[attr_index(a)];
        st.count = vals.size();
        if (vals.empty()) continue;

        double sum = 0;
        for (double v : vals) sum += v;
        st.mean = sum / static_cast<double>(vals.size());
        double ss = 0;
        for (double v : vals) ss += (v - st.mean) * (v - st.mean);
        const double denom = conv == StdConvention::population
                                 ? static_cast<double>(vals.size())
                                 : static_cast<double>(std::max<std::size_t>(vals.size(), 2) - 1);
        st.stddev = std::sqrt(ss / denom);

        std::sort(vals.begin(), vals.end());
        st.min = vals.front();
        st.max = vals.back();
        st.q1 = quantile_sorted(vals, 0.25);
        st.median = quantile_sorted(vals, 0.50);
        st.q3 = quantile_sorted(vals, 0.75);
    }
    return out;
}

SummaryStats well_summary(const WellSeries& series, StdConvention conv) {
    if (series.empty()) throw DataError("well_summary: series '" + series.well_code + "' is empty");
    return summarize_records(series.records, conv);
}

MissingAudit missing_audit(const WellSeries& series) {
    MissingAudit audit;
    audit.record_count = series.size();
    for (const auto& rec : series.records)
        for (Attr a : kAllAttrs)
            ++(rec.present(a) ? audit.present : audit.missing)[attr_index(a)];
    return audit;
}

std::optional<double> CorrMatrix::between(Attr a, Attr b) const {
    std::size_t ia = attrs.size(), ib = attrs.size();
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (attrs[i] == a) ia = i;
        if (attrs[i] == b) ib = i;
    }
    if (ia == attrs.size() || ib == attrs.size() || !is_defined(ia, ib)) return std::nullopt;
    return at(ia, ib);
}

CorrMatrix correlation_matrix(const std::vector<const WellSeries*>& series_set,
                              const std::vector<Attr>& attrs, CorrPolicy policy) {
    const std::size_t n = attrs.size();
    CorrMatrix corr;
    corr.attrs = attrs;
    corr.values.assign(n * n, 0.0);
    corr.defined.assign(n * n, 0);

    // Merge records; under complete-case, keep only rows where every
    // requested attribute is present.
    std::vector<const DailyRecord*> rows;
    for (const WellSeries* ws : series_set)
        for (const auto& rec : ws->records) {
            if (policy == CorrPolicy::complete_case) {
                bool full = true;
                for (Attr a : attrs)
                    if (!rec.present(a)) {
                        full = false;
                        break;
                    }
                if (!full) continue;
            }
            rows.push_back(&rec);
        }

    for (std::size_t i = 0; i < n; ++i) {
        corr.values[i * n + i] = 1.0;
        corr.defined[i * n + i] = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            // Pairwise-complete: use every row where both ends are present.
            double sx = 0, sy = 0;
            std::size_t m = 0;
            for (const DailyRecord* rec : rows) {
                if (rec->present(attrs[i]) && rec->present(attrs[j])) {
                    sx += *rec->value(attrs[i]);
                    sy += *rec->value(attrs[j]);
                    ++m;
                }
            }
            if (m < 2) continue;  // undefined: fewer than two paired observations
            const double mx = sx / static_cast<double>(m);
            const double my = sy / static_cast<double>(m);
            double sxx = 0, syy = 0, sxy = 0;
            for (const DailyRecord* rec : rows) {
                if (rec->present(attrs[i]) && rec->present(attrs[j])) {
                    const double dx = *rec->value(attrs[i]) - mx;
                    const double dy = *rec->value(attrs[j]) - my;
                    sxx += dx * dx;
                    syy += dy * dy;
                    sxy += dx * dy;
                }
            }
            if (sxx <= 0.0 || syy <= 0.0) continue;  // zero variance: undefined
            double r = sxy / std::sqrt(sxx * syy);
            r = std::clamp(r, -1.0, 1.0);
            corr.values[i * n + j] = corr.values[j * n + i] = r;
            corr.defined[i * n + j] = corr.defined[j * n + i] = 1;
        }
    }
    return corr;
}

CorrMatrix correlation_matrix(const std::vector<WellSeries>& series_set,
                              const std::vector<Attr>& attrs, CorrPolicy policy) {
    std::vector<const WellSeries*> ptrs;
    ptrs.reserve(series_set.size());
    for (const auto& ws : series_set) ptrs.push_back(&ws);
    return correlation_matrix(ptrs, attrs, policy);
}

void write_summary_report(std::ostream& out, const SummaryStats& stats) {
    out << "stat";
    for (Attr a : kAllAttrs) out << '\t' << attr_code(a);
    out << '\n';
    auto row = [&](const char* name, auto value_of) {
        out << name;
        for (Attr a : kAllAttrs) {
            const AttrStats& st = stats.of(a);
            out << '\t';
            if (st.absent())
                out << "NA";
            else
                out << value_of(st);
        }
        out << '\n';
    };
    out << "count";
    for (Attr a : kAllAttrs) out << '\t' << stats.of(a).count;
    out << '\n';
    row("mean", [](const AttrStats& s) { return format_double(s.mean); });
    row("std", [](const AttrStats& s) { return format_double(s.stddev); });
    row("min", [](const AttrStats& s) { return format_double(s.min); });
    row("q1", [](const AttrStats& s) { return format_double(s.q1); });
    row("median", [](const AttrStats& s) { return format_double(s.median); });
    row("q3", [](const AttrStats& s) { return format_double(s.q3); });
    row("max", [](const AttrStats& s) { return format_double(s.max); });
}

void write_missing_report(std::ostream& out, const MissingAudit& audit) {
    out << "attr\tpresent\tmissing\ttotal\n";
    for (Attr a : kAllAttrs)
        out << attr_code(a) << '\t' << audit.present[attr_index(a)] << '\t'
            << audit.missing[attr_index(a)] << '\t' << audit.record_count << '\n';
}

void write_corr_report(std::ostream& out, const CorrMatrix& corr) {
    out << "attr";
    for (Attr a : corr.attrs) out << '\t' << attr_code(a);
    out << '\n';
    const std::size_t n = corr.attrs.size();
    for (std::size_t i = 0; i < n; ++i) {
        out << attr_code(corr.attrs[i]);
        for (std::size_t j = 0; j < n; ++j) {
            out << '\t';
            if (corr.is_defined(i, j))
                out << format_double(corr.at(i, j));
            else
                out << "NA";
        }
        out << '\n';
    }
}

}  // namespace wellcast
