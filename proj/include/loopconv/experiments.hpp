#pragma once

// Reproducible experiments shared by the command-line driver and the test
// suites. Every random draw is derived from ExperimentConfig::seed with
// split_seed, so results never depend on thread count or evaluation order.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "loopconv/grassmann.hpp"
#include "loopconv/hullgeom.hpp"
#include "loopconv/moment.hpp"

namespace loopconv {

struct ExperimentConfig {
    int n = 2;
    int samples = 1000;
    int depth = 3;
    int max_coweight_norm = 2;
    double e_cut = 6.0;
    std::uint64_t seed = 7;
    std::map<std::string, double> tolerances;
    int threads = 0;  // 0: hardware concurrency

    /// Throws DomainError unless samples >= 1, e_cut > 0, 2 <= n <= 4,
    /// depth >= 1 and max_coweight_norm >= 1.
    void validate() const;
    double tol(const std::string& name, double fallback) const;
};

/// Runs body(i) for i < count on up to `threads` workers.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

/// FNV-1a; turns suite names into seed streams.
std::uint64_t stream_id(const std::string& name);

struct SampledPoint {
    std::uint64_t index = 0;
    int depth = 1;
    bool homomorphism = false;
    MomentValue moment;
    DeltaPoint delta;
    TorusMoment torus;
};

/// Seed and depth used for sample index i. Full and real-locus runs with the
/// same config draw index i from the same seed, depth and coweights.
std::uint64_t sample_seed(const ExperimentConfig& cfg, std::uint64_t index);
int sample_depth(const ExperimentConfig& cfg, std::uint64_t index);

/// The first cfg.samples loops (by index) whose energy is at most e_cut.
/// A prefix of a larger run with the same seed.
std::vector<SampledPoint> sample_points(const ExperimentConfig& cfg, bool real_locus);

/// Hull coordinates: (E, v1, ..., v_{n-1}); the last chamber coordinate is
/// dropped because the entries sum to zero.
Point hull_coords(const DeltaPoint& p);
Point torus_hull_coords(const TorusMoment& t);

/// (|lambda|^2 / 2, lambda) for dominant coweights with max |entry| <= radius.
std::vector<DeltaPoint> coweight_vertices(int n, int radius);

struct DuistermaatResult {
    int samples = 0;
    HullModel full;
    HullModel real;
    double hausdorff = 0.0;
    HullModel torus_full;
    HullModel torus_real;
    double torus_hausdorff = 0.0;
};

/// Matched full vs real-locus sampling; requires n in {2, 3}.
DuistermaatResult duistermaat(const ExperimentConfig& cfg);

struct SuiteResult {
    std::string id;
    bool passed = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
    int cases = 0;
    std::string note;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool all_passed() const;
    std::string format() const;
};

/// Every invariant suite of liecore, loops, moment, grassmann and hullgeom.
VerifyReport run_verify(const ExperimentConfig& cfg);

/// Grassmannian-model and symplectic-embedding suites only.
VerifyReport run_grassmann_suites(const ExperimentConfig& cfg);

struct WeightRow {
    Coweight lambda;
    Rep rep = Rep::Fundamental;
    long weight = 0;
    double energy = 0.0;
};

/// rotation_weight of embedded coweight loops against the identity, paired
/// with their energy; exploratory, no relation is asserted.
std::vector<WeightRow> weight_table(int n, int radius);

}  // namespace loopconv
