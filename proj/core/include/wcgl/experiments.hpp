#pragma once

#include <map>
#include <optional>
#include <string>

#include "wcgl/bel.hpp"
#include "wcgl/snapshot.hpp"
#include "wcgl/solver.hpp"

namespace wcgl {

// Batch experiment drivers shared by the CLI and the test suites. Every
// experiment runs from an ExperimentManifest; rerunning an identical
// manifest reproduces identical result files byte for byte (timestamps live
// only in a sidecar log).

struct ExperimentManifest {
    std::string kind;
    std::string config_text;  // canonical key=value payload, sorted
    std::uint64_t seed = 0;
    std::string out_dir;

    std::uint64_t hash() const;
    std::string hash_hex() const;
};

/// One named-scalar record per (replica, sample time); schema-versioned.
struct ResultRecord {
    std::uint64_t replica = 0;
    double t = 0.0;
    std::map<std::string, double> metrics;
    bool blowup = false;
    std::string snapshot_path;  // optional
};

void write_jsonl(const std::string& path, const ExperimentManifest& m, const std::vector<ResultRecord>& records,
                 bool append = false);
void write_summary_csv(const std::string& path, const ExperimentManifest& m, const std::vector<ResultRecord>& records);
void write_manifest_file(const ExperimentManifest& m);
/// Throws input_error if a manifest file exists with a different hash.
void check_manifest_on_resume(const ExperimentManifest& m);

// ---- experiments ----

struct RenormScanRow {
    double mu;
    int n;
    double c_n;
};
struct RenormScanReport {
    std::vector<RenormScanRow> rows;
    std::map<double, double> slope_per_mu;  // d c_n / d ln n
};
RenormScanReport renorm_scan(const std::vector<double>& mus, const std::vector<int>& ns);

struct KernelCheckRow {
    double x;
    cplx script_k0;
    double log_term;   // (1/4 pi mu) log+ |x|^-1
    double deviation;  // |script_k0 - log_term|
};
struct KernelCheckReport {
    std::vector<KernelCheckRow> rows;
    double max_deviation = 0.0;
    double slope_vs_logx = 0.0;  // trend of the deviation in log|x|
};
KernelCheckReport kernel_check(double mu, double x_lo = 1e-4, double x_hi = 0.4, int points = 41);

struct BesovScanReport {
    double max_reconstruction_error = 0.0;  // || sum_k delta_k f - f ||_max over fields
    int embedding_violations = 0;
    int interpolation_violations = 0;
    std::vector<std::tuple<double, double, double, double>> norms;  // (alpha, p, q, norm) of the probe field
};
BesovScanReport besov_scan(const Grid& grid, int fields, std::uint64_t seed);

struct SimulateOptions {
    SolverConfig solver;
    cplx u0 = 0.0;         // initial datum u0 * e_0 ...
    std::string u0_file;   // ... or a snapshot to start from
    int replicas = 1;
    int sample_every = 10;  // diagnostics cadence, in steps
};

struct SimulateOutcome {
    std::vector<ResultRecord> records;
    int blowups = 0;
};

/// Runs the configured scheme; emits results.jsonl, summary.csv and
/// snapshots under the manifest's out_dir (empty out_dir = nothing written).
/// resume_from >= 0 restarts every replica from the snapshot at that step.
SimulateOutcome simulate(const SimulateOptions& opt, const ExperimentManifest& m, unsigned workers,
                         std::int64_t resume_from = -1);

struct ConvergenceOptions {
    PhysParams params;
    std::vector<int> ladder = {8, 16, 32, 64};
    double T = 0.25;
    double h = 1e-3;
    int sample_every = 10;
    int replicas = 64;
    double wick_alpha = -0.3;  // B^{alpha}_{p,p} with p below
    double wick_p = 4.0;
    double u_alpha0 = 0.5;     // u-ladder gap norm B^{-alpha0}_{inf,inf}
    std::vector<double> step_hs = {4e-3, 2e-3, 1e-3};
    std::uint64_t seed = 0;
};

struct ConvergenceReport {
    struct WickRow {
        int n, k, l;
        double median_sup_err;
    };
    struct StepRow {
        std::string scheme;
        double h;
        double err;  // strong L2 gap at T against the h/8 reference
    };
    struct URow {
        int n;
        double median_err;
    };
    std::vector<WickRow> wick;
    std::vector<StepRow> steps;
    std::vector<URow> u_ladder;
};

ConvergenceReport convergence_suite(const ConvergenceOptions& opt, unsigned workers);

/// Strong L2 gap at T between split (Z+Y) and direct trajectories under
/// shared increments, median over replicas; one row per h.
std::vector<double> scheme_consistency_gaps(const PhysParams& params, int n, double T, const std::vector<double>& hs,
                                            int replicas, std::uint64_t seed, unsigned workers);

}  // namespace wcgl
