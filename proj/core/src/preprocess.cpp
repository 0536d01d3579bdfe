#include "wellcast/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>

#include "wellcast/errors.hpp"
#include "wellcast/rng.hpp"

namespace wellcast {

bool FeatureSpec::has_input(Attr a) const {
    return std::find(inputs.begin(), inputs.end(), a) != inputs.end();
}

std::vector<Attr> candidate_features() {
    std::vector<Attr> out;
    for (Attr a : kAllAttrs)
        if (a != Attr::WI) out.push_back(a);
    return out;
}

FeatureSpec select_features(const CorrMatrix& corr, const FeaturePolicy& policy) {
    for (Attr a : policy.force_exclude)
        if (a == policy.target)
            throw ConfigError("feature policy excludes the target attribute " +
                              std::string(attr_code(policy.target)));

    std::vector<Attr> pool = candidate_features();
    FeatureSpec spec;
    spec.target = policy.target;

    auto drop = [&](Attr a, Attr partner, double coef, const std::string& reason) {
        pool.erase(std::remove(pool.begin(), pool.end(), a), pool.end());
        spec.excluded.push_back({a, partner, coef, reason});
    };

    for (Attr a : policy.force_exclude)
        if (std::find(pool.begin(), pool.end(), a) != pool.end())
            drop(a, policy.target, 0.0, "forced by policy");

    if (!policy.autoregressive_target)
        drop(policy.target, policy.target, 0.0, "autoregressive input disabled");

    if (policy.kind == FeaturePolicy::Kind::strict) {
        // Verify coverage before relying on coefficients.
        for (Attr a : pool)
            if (std::find(corr.attrs.begin(), corr.attrs.end(), a) == corr.attrs.end())
                throw DataError("correlation matrix does not cover attribute " +
                                std::string(attr_code(a)));

        auto coef = [&](Attr a, Attr b) -> std::optional<double> { return corr.between(a, b); };

        for (;;) {
            // Count above-threshold partners per droppable attribute. The
            // target can trigger a drop but is never dropped itself.
            Attr best{};
            std::size_t best_degree = 0;
            double best_sum = 0;
            double best_coef = 0;
            Attr best_partner{};
            bool found = false;
            for (Attr a : pool) {
                if (a == policy.target) continue;
                std::size_t degree = 0;
                double sum = 0, top = 0;
                Attr top_partner = a;
                for (Attr b : pool) {
                    if (b == a) continue;
                    auto r = coef(a, b);
                    if (r && std::abs(*r) >= policy.threshold) {
                        ++degree;
                        sum += std::abs(*r);
                        if (std::abs(*r) > top) {
                            top = std::abs(*r);
                            top_partner = b;
                        }
                    }
                }
                if (degree == 0) continue;
                const bool better =
                    degree > best_degree || (degree == best_degree && sum > best_sum) ||
                    (degree == best_degree && sum == best_sum && found &&
                     attr_index(a) > attr_index(best));
                if (!found || better) {
                    found = true;
                    best = a;
                    best_degree = degree;
                    best_sum = sum;
                    best_coef = top;
                    best_partner = top_partner;
                }
            }
            if (!found) break;
            drop(best, best_partner, best_coef, "correlation above threshold");
        }
    }

    spec.inputs = pool;
    return spec;
}

WellSeries impute_median(const WellSeries& series, const SummaryStats& train_stats,
                         const std::vector<Attr>& attrs) {
    for (Attr a : attrs)
        if (train_stats.of(a).absent())
            throw DataError("impute_median: attribute " + std::string(attr_code(a)) +
                            " has no present values to take a median from (well " +
                            series.well_code + ")");
    WellSeries out = series;
    for (auto& rec : out.records)
        for (Attr a : attrs)
            if (!rec.present(a)) rec.set(a, train_stats.of(a).median);
    return out;
}

std::optional<std::size_t> ScalerParams::index_of(Attr a) const {
    for (std::size_t i = 0; i < attrs.size(); ++i)
        if (attrs[i] == a) return i;
    return std::nullopt;
}

double ScalerParams::apply(Attr a, double x) const {
    auto i = index_of(a);
    if (!i) throw DataError("scaler alignment: no parameters for " + std::string(attr_code(a)));
    return (x - mu[*i]) / sigma[*i];
}

double ScalerParams::invert(Attr a, double x) const {
    auto i = index_of(a);
    if (!i) throw DataError("scaler alignment: no parameters for " + std::string(attr_code(a)));
    return x * sigma[*i] + mu[*i];
}

ScalerParams fit_scaler(const std::vector<DailyRecord>& train_records,
                        const FeatureSpec& features) {
    ScalerParams params;
    params.attrs = features.inputs;
    if (!features.has_input(features.target)) params.attrs.push_back(features.target);

    for (Attr a : params.attrs) {
        double sum = 0;
        std::size_t n = 0;
        for (const auto& rec : train_records) {
            if (!rec.present(a))
                throw DataError("fit_scaler: missing value in training rows for " +
                                std::string(attr_code(a)) + "; impute first");
            sum += *rec.value(a);
            ++n;
        }
        if (n == 0) throw DataError("fit_scaler: no training rows");
        const double mean = sum / static_cast<double>(n);
        double ss = 0;
        for (const auto& rec : train_records) {
            const double d = *rec.value(a) - mean;
            ss += d * d;
        }
        const double sd = std::sqrt(ss / static_cast<double>(n));  // population
        if (!(sd > 0.0))
            throw NumericError("fit_scaler: zero variance in feature " +
                               std::string(attr_code(a)));
        params.mu.push_back(mean);
        params.sigma.push_back(sd);
    }
    return params;
}

WellSeries apply_scaler(const WellSeries& series, const ScalerParams& params) {
    WellSeries out = series;
    for (auto& rec : out.records)
        for (Attr a : params.attrs)
            if (rec.present(a)) rec.set(a, params.apply(a, *rec.value(a)));
    return out;
}

WellSeries invert_scaler(const WellSeries& series, const ScalerParams& params) {
    WellSeries out = series;
    for (auto& rec : out.records)
        for (Attr a : params.attrs)
            if (rec.present(a)) rec.set(a, params.invert(a, *rec.value(a)));
    return out;
}

std::vector<SequenceSample> make_windows(const WellSeries& scaled_series, std::size_t seq_len,
                                         const FeatureSpec& features) {
    if (seq_len < 1) throw ConfigError("make_windows: seq_len must be >= 1");
    const auto& recs = scaled_series.records;
    std::vector<SequenceSample> samples;
    if (recs.size() < seq_len + 1) {
        std::clog << "wellcast: well " << scaled_series.well_code << " has " << recs.size()
                  << " records, shorter than seq_len + 1 = " << seq_len + 1
                  << "; no windows generated\n";
        return samples;
    }
    for (std::size_t i = 0; i + seq_len < recs.size(); ++i) {
        // Window rows must be consecutive calendar days, target the next day.
        bool gapless = true;
        for (std::size_t k = 1; k <= seq_len; ++k) {
            if (recs[i + k].date.days() != recs[i + k - 1].date.days() + 1) {
                gapless = false;
                break;
            }
        }
        if (!gapless) continue;

        SequenceSample s;
        s.well_code = scaled_series.well_code;
        s.target_date = recs[i + seq_len].date;
        const auto& target_rec = recs[i + seq_len];
        if (!target_rec.present(features.target)) continue;  // cannot supervise
        s.target = *target_rec.value(features.target);
        s.window.reserve(seq_len * features.width());
        bool complete = true;
        for (std::size_t k = 0; k < seq_len && complete; ++k) {
            for (Attr a : features.inputs) {
                const auto& v = recs[i + k].value(a);
                if (!v) {
                    complete = false;
                    break;
                }
                s.window.push_back(*v);
            }
        }
        if (!complete) continue;  // un-imputed cell inside the window
        samples.push_back(std::move(s));
    }
    return samples;
}

void SplitManifest::add(const WellSplit& w) {
    wells.push_back(w);
    train_total += w.train_count;
    test_total += w.test_count;
}

SplitResult chrono_split(const std::vector<SequenceSample>& samples, std::size_t seq_len,
                         double ratio, const std::string& well_code) {
    if (samples.size() < 2)
        throw DataError("chrono_split: need at least 2 samples" +
                        (well_code.empty() ? std::string{} : " (well " + well_code + ")"));
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i - 1].target_date < samples[i].target_date))
            throw DataError("chrono_split: samples not date-ordered");

    const auto n = samples.size();
    const auto k = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n)));

    SplitResult result;
    result.split.well_code = well_code.empty() && !samples.empty() ? samples[0].well_code
                                                                   : well_code;
    result.train.assign(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(k));
    // Training exposes every date up to and including its last target.
    const CalDate boundary = k > 0 ? samples[k - 1].target_date : CalDate(samples[0].target_date.days() - 1);
    result.split.boundary_date = boundary;
    for (std::size_t i = k; i < n; ++i) {
        if (samples[i].window_start(seq_len) > boundary)
            result.test.push_back(samples[i]);
        else
            ++result.split.dropped_crossers;
    }
    result.split.train_count = result.train.size();
    result.split.test_count = result.test.size();
    return result;
}

const CuratedWell* CuratedDataset::well(const std::string& code) const {
    for (const auto& w : wells)
        if (w.code == code) return &w;
    return nullptr;
}

namespace {

// Valid window start positions depend only on the date sequence, so the
// split boundary can be fixed before any value-dependent fitting happens.
std::vector<std::size_t> window_starts(const std::vector<DailyRecord>& recs,
                                       std::size_t seq_len) {
    std::vector<std::size_t> starts;
    if (recs.size() < seq_len + 1) return starts;
    for (std::size_t i = 0; i + seq_len < recs.size(); ++i) {
        bool gapless = true;
        for (std::size_t k = 1; k <= seq_len; ++k)
            if (recs[i + k].date.days() != recs[i + k - 1].date.days() + 1) {
                gapless = false;
                break;
            }
        if (gapless) starts.push_back(i);
    }
    return starts;
}

std::vector<DailyRecord> rows_through(const std::vector<DailyRecord>& recs, CalDate boundary) {
    std::vector<DailyRecord> out;
    for (const auto& r : recs) {
        if (r.date > boundary) break;
        out.push_back(r);
    }
    return out;
}

}  // namespace

CuratedDataset curate(const std::vector<WellSeries>& wells, const CurateConfig& config) {
    std::vector<const WellSeries*> producers;
    for (const auto& ws : wells)
        if (ws.well_type == WellType::producer && !ws.empty()) producers.push_back(&ws);
    if (producers.empty()) throw DataError("curate: no producer wells in input");

    CuratedDataset ds;
    ds.seq_len = config.seq_len;
    ds.split_ratio = config.split_ratio;
    ds.scaler_fit = config.scaler_fit;
    ds.shuffle_seed = config.shuffle_seed;

    // Feature selection sees only producer records, as the models will.
    CorrMatrix corr = correlation_matrix(producers, candidate_features(), config.corr_policy);
    ds.features = select_features(corr, config.feature_policy);

    std::vector<Attr> scaled_attrs = ds.features.inputs;
    if (!ds.features.has_input(ds.features.target)) scaled_attrs.push_back(ds.features.target);

    // Pass 1: fix each well's split boundary from dates alone.
    struct WellPlan {
        const WellSeries* series;
        std::vector<std::size_t> starts;
        CalDate boundary;
    };
    std::vector<WellPlan> plans;
    for (const WellSeries* ws : producers) {
        WellPlan plan{ws, window_starts(ws->records, config.seq_len), {}};
        if (plan.starts.size() < 2)
            throw DataError("curate: well " + ws->well_code +
                            " yields fewer than 2 windows at seq_len " +
                            std::to_string(config.seq_len));
        const auto k = static_cast<std::size_t>(
            std::floor(config.split_ratio * static_cast<double>(plan.starts.size())));
        const std::size_t last_train_start = plan.starts[k > 0 ? k - 1 : 0];
        plan.boundary = ws->records[last_train_start + config.seq_len].date;
        plans.push_back(std::move(plan));
    }

    // Global-fit policy pools every well's training rows for one shared fit.
    std::optional<SummaryStats> shared_stats;
    std::optional<ScalerParams> shared_scaler;
    if (config.scaler_fit == ScalerFit::global) {
        std::vector<DailyRecord> pooled;
        for (const auto& plan : plans) {
            auto rows = rows_through(plan.series->records, plan.boundary);
            pooled.insert(pooled.end(), rows.begin(), rows.end());
        }
        shared_stats = summarize_records(pooled);
        for (Attr a : scaled_attrs)
            if (shared_stats->of(a).absent())
                throw DataError("curate: attribute " + std::string(attr_code(a)) +
                                " entirely missing in pooled training rows");
        // Impute the pooled rows with their own medians before the fit.
        for (auto& rec : pooled)
            for (Attr a : scaled_attrs)
                if (!rec.present(a)) rec.set(a, shared_stats->of(a).median);
        shared_scaler = fit_scaler(pooled, ds.features);
    }

    for (const auto& plan : plans) {
        CuratedWell cw;
        cw.code = plan.series->well_code;

        const auto train_rows = rows_through(plan.series->records, plan.boundary);
        cw.train_stats = shared_stats ? *shared_stats : summarize_records(train_rows);

        WellSeries imputed = impute_median(*plan.series, cw.train_stats, scaled_attrs);
        if (shared_scaler) {
            cw.scaler = *shared_scaler;
        } else {
            cw.scaler = fit_scaler(rows_through(imputed.records, plan.boundary), ds.features);
        }
        WellSeries scaled = apply_scaler(imputed, cw.scaler);

        auto samples = make_windows(scaled, config.seq_len, ds.features);
        auto split = chrono_split(samples, config.seq_len, config.split_ratio, cw.code);
        cw.train = std::move(split.train);
        cw.test = std::move(split.test);
        cw.split = split.split;
        ds.manifest.add(cw.split);
        ds.wells.push_back(std::move(cw));
    }

    build_global_sets(ds);
    return ds;
}

void build_global_sets(CuratedDataset& dataset) {
    dataset.global_train.clear();
    dataset.global_test.clear();
    const std::size_t width = dataset.seq_len * dataset.features.width();
    for (const auto& w : dataset.wells) {
        for (const auto& s : w.train) {
            if (s.window.size() != width)
                throw DataError("build_global_sets: feature width mismatch in well " + w.code);
            dataset.global_train.push_back(s);
        }
        for (const auto& s : w.test) {
            if (s.window.size() != width)
                throw DataError("build_global_sets: feature width mismatch in well " + w.code);
            dataset.global_test.push_back(s);
        }
    }
    Rng rng(dataset.shuffle_seed);
    rng.shuffle(dataset.global_train);
}

}  // namespace wellcast
