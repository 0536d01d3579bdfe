#ifndef WELLCAST_PREPROCESS_HPP
#define WELLCAST_PREPROCESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wellcast/stats.hpp"
#include "wellcast/well_series.hpp"

namespace wellcast {

// ---------------------------------------------------------------------------
// Feature selection

struct FeaturePolicy {
    enum class Kind { table, strict } kind = Kind::table;
    double threshold = 0.95;           // strict: drop above-threshold pairs
    bool autoregressive_target = true; // keep the target among the inputs
    Attr target = Attr::O;
    std::vector<Attr> force_exclude;   // manual drops; naming the target errors
};

struct FeatureSpec {
    std::vector<Attr> inputs;  // ordered; model input width = inputs.size()
    Attr target = Attr::O;

    struct Exclusion {
        Attr attr;
        Attr partner;        // attribute it correlated with (target for manual drops)
        double coefficient;  // triggering |r|; 0 for manual/policy drops
        std::string reason;
    };
    std::vector<Exclusion> excluded;

    std::size_t width() const { return inputs.size(); }
    bool has_input(Attr a) const;
};

// All numeric attributes except WI, in canonical order; the 12-wide input.
std::vector<Attr> candidate_features();

// Table policy returns the full 12-wide list. Strict policy repeatedly drops
// the non-target attribute involved in the most |r| >= threshold pairs
// (ties: larger summed |r|, then later canonical position), so one drop can
// clear several redundant pairs at once. The target itself is never dropped.
FeatureSpec select_features(const CorrMatrix& corr, const FeaturePolicy& policy);

// ---------------------------------------------------------------------------
// Imputation and scaling

// Replaces missing cells of the listed attributes with the medians from
// `train_stats` (fitted on training rows only). Present values pass through
// untouched. An attribute with no median (zero present values in the fit
// window) raises DataError naming it.
WellSeries impute_median(const WellSeries& series, const SummaryStats& train_stats,
                         const std::vector<Attr>& attrs);

// Per-attribute standardization x -> (x - mu) / sigma, population sigma,
// fitted on training rows only and reused everywhere downstream.
struct ScalerParams {
    std::vector<Attr> attrs;  // scaled attributes: inputs plus target
    std::vector<double> mu;
    std::vector<double> sigma;

    std::optional<std::size_t> index_of(Attr a) const;
    double apply(Attr a, double x) const;
    double invert(Attr a, double x) const;
};

ScalerParams fit_scaler(const std::vector<DailyRecord>& train_records,
                        const FeatureSpec& features);

// Scales every fitted attribute of every record; cells must be imputed
// first. Unknown attribute lookups raise DataError (alignment failure).
WellSeries apply_scaler(const WellSeries& series, const ScalerParams& params);
WellSeries invert_scaler(const WellSeries& series, const ScalerParams& params);

// ---------------------------------------------------------------------------
// Window generation and chronological splitting

// One supervised sample: `window` holds seq_len consecutive days of scaled
// inputs (day-major), `target` the scaled oil volume on the following day.
struct SequenceSample {
    std::string well_code;
    CalDate target_date;
    std::vector<double> window;
    double target = 0;

    CalDate window_start(std::size_t seq_len) const {
        return CalDate(target_date.days() - static_cast<std::int32_t>(seq_len));
    }
};

// Stride-1 sliding windows. Windows spanning a missing calendar day (or
// with no next-day target) are discarded; a series shorter than seq_len + 1
// yields an empty list and a warning on the log stream.
std::vector<SequenceSample> make_windows(const WellSeries& scaled_series, std::size_t seq_len,
                                         const FeatureSpec& features);

struct WellSplit {
    std::string well_code;
    std::size_t train_count = 0;
    std::size_t test_count = 0;
    std::size_t dropped_crossers = 0;
    CalDate boundary_date;  // last calendar day exposed to training
};

struct SplitManifest {
    std::vector<WellSplit> wells;
    std::size_t train_total = 0;
    std::size_t test_total = 0;

    void add(const WellSplit& w);
};

struct SplitResult {
    std::vector<SequenceSample> train;
    std::vector<SequenceSample> test;
    WellSplit split;
};

// First floor(ratio * n) samples train, remainder test. The boundary date is
// the last training target; test windows reaching back to it or earlier are
// boundary-crossers and are dropped, so no test window overlaps any date the
// model saw in training.
SplitResult chrono_split(const std::vector<SequenceSample>& samples, std::size_t seq_len,
                         double ratio = 0.70, const std::string& well_code = {});

// ---------------------------------------------------------------------------
// Full curation pipeline

enum class ScalerFit { per_well, global };

struct CurateConfig {
    FeaturePolicy feature_policy;
    std::size_t seq_len = 5;
    double split_ratio = 0.70;
    ScalerFit scaler_fit = ScalerFit::per_well;
    CorrPolicy corr_policy = CorrPolicy::pairwise_complete;
    std::uint64_t shuffle_seed = 1;
};

struct CuratedWell {
    std::string code;
    SummaryStats train_stats;  // medians and moments of the training rows
    ScalerParams scaler;
    std::vector<SequenceSample> train;
    std::vector<SequenceSample> test;
    WellSplit split;
};

struct CuratedDataset {
    FeatureSpec features;
    std::size_t seq_len = 0;
    double split_ratio = 0.70;
    ScalerFit scaler_fit = ScalerFit::per_well;
    std::uint64_t shuffle_seed = 0;
    std::vector<CuratedWell> wells;
    std::vector<SequenceSample> global_train;  // seeded shuffle order
    std::vector<SequenceSample> global_test;   // (well, date) order
    SplitManifest manifest;

    const CuratedWell* well(const std::string& code) const;
};

// Runs the whole leakage-free pipeline over the producer wells: the split
// boundary is derived from dates alone, medians and scaler are fitted on
// rows at or before it, then imputation, scaling, windowing, and the
// chronological split. Injector series are ignored.
CuratedDataset curate(const std::vector<WellSeries>& wells, const CurateConfig& config);

// Amalgamates per-well splits into the global train/test sets: training
// samples concatenated then shuffled with the given seed, test samples kept
// in (well, date) order with provenance intact.
void build_global_sets(CuratedDataset& dataset);

}  // namespace wellcast

#endif  // WELLCAST_PREPROCESS_HPP
