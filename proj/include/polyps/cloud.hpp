#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polyps/defectivity.hpp"
#include "polyps/parallel.hpp"
#include "polyps/perturbation.hpp"

namespace polyps {

struct CloudPoint {
    Complex z;
    int trial = 0; // 1-based
    double theta = 0.0;
    std::string source;
};

struct CloudMeta {
    double epsilon = 0.0;
    int trials = 0;
    bool structured = false;
    std::vector<double> weights;
    std::string problem_id;
    std::string kind;
    std::vector<std::pair<int, int>> pairs; // resolved minimizing pairs, if any
    std::uint64_t seed = 0;
};

/// Sampled eigenvalues of admissible perturbed polynomials, with enough
/// provenance per point to replay the perturbed polynomial that produced it.
struct Cloud {
    std::vector<CloudPoint> points;
    CloudMeta meta;
};

namespace detail {

inline double theta_grid(int k, int N) {
    // theta_k = 2*pi*(k-1)/N on the closed-open circle, k = 1..N.
    return 2.0 * std::numbers::pi * static_cast<double>(k - 1) / static_cast<double>(N);
}

struct TrialSpec {
    const PerturbationDirection* direction;
    double theta;
    std::string source;
};

inline void run_trials(const MatrixPolynomial& P, double eps, const std::vector<TrialSpec>& specs,
                       Cloud& cloud) {
    const int mn = P.degree() * P.order();
    const int trials = static_cast<int>(specs.size());
    cloud.points.resize(static_cast<std::size_t>(trials) * static_cast<std::size_t>(mn));
    parallel_for(trials, [&](int t) {
        const auto& spec = specs[static_cast<std::size_t>(t)];
        const auto eigs = polyeig(apply(P, eps, spec.theta, *spec.direction));
        for (int p = 0; p < mn; ++p) {
            CloudPoint& pt = cloud.points[static_cast<std::size_t>(t) * mn + p];
            pt.z = eigs[static_cast<std::size_t>(p)];
            pt.trial = t + 1;
            pt.theta = spec.theta;
            pt.source = spec.source;
        }
    });
    cloud.meta.trials = trials;
    cloud.meta.epsilon = eps;
}

} // namespace detail

/// Directed pseudospectrum approximation: sweep the maximal directions of
/// the most sensitive eigenvalue pair over N phases each. With all_pairs,
/// every reported minimizing pair is swept.
inline Cloud approx_pseudospectrum(const MatrixPolynomial& P, const Weights& w, int N,
                                   std::optional<double> eps = std::nullopt,
                                   bool all_pairs = false) {
    if (N < 1) throw DimensionMismatch("N must be >= 1");
    const auto trips = eigen_triplets(P);
    const DefectivityReport rep = detail::estimate_from_triplets(
        trips, [&](const EigenTriplet& t) { return kappa(P, w, t); }, false);
    const double e = eps.value_or(rep.epsilon);

    std::vector<int> indices;
    const std::size_t npairs = all_pairs ? rep.pairs.size() : 1;
    for (std::size_t p = 0; p < npairs; ++p) {
        indices.push_back(rep.pairs[p].first);
        indices.push_back(rep.pairs[p].second);
    }
    std::vector<PerturbationDirection> dirs;
    dirs.reserve(indices.size());
    for (int idx : indices)
        dirs.push_back(maximal_direction(trips[static_cast<std::size_t>(idx) - 1], w));

    std::vector<detail::TrialSpec> specs;
    specs.reserve(indices.size() * static_cast<std::size_t>(N));
    for (std::size_t d = 0; d < dirs.size(); ++d)
        for (int k = 1; k <= N; ++k)
            specs.push_back({&dirs[d], detail::theta_grid(k, N), "max:" + std::to_string(indices[d])});

    Cloud cloud;
    cloud.meta.kind = "directed";
    cloud.meta.structured = false;
    cloud.meta.weights = w.values;
    cloud.meta.pairs = rep.pairs;
    detail::run_trials(P, e, specs, cloud);
    return cloud;
}

/// Structured analogue: rout_2 estimate and structured maximal directions.
inline Cloud approx_structured_pseudospectrum(const MatrixPolynomial& P, const Weights& w,
                                              const StructureSet& S, int N,
                                              std::optional<double> eps = std::nullopt,
                                              bool all_pairs = false) {
    if (N < 1) throw DimensionMismatch("N must be >= 1");
    const auto trips = eigen_triplets(P);
    const DefectivityReport rep = detail::estimate_from_triplets(
        trips, [&](const EigenTriplet& t) { return kappa_structured(P, w, S, t); }, true);
    const double e = eps.value_or(rep.epsilon);

    std::vector<int> indices;
    const std::size_t npairs = all_pairs ? rep.pairs.size() : 1;
    for (std::size_t p = 0; p < npairs; ++p) {
        indices.push_back(rep.pairs[p].first);
        indices.push_back(rep.pairs[p].second);
    }
    std::vector<PerturbationDirection> dirs;
    dirs.reserve(indices.size());
    for (int idx : indices)
        dirs.push_back(maximal_structured_direction(trips[static_cast<std::size_t>(idx) - 1], w, S));

    std::vector<detail::TrialSpec> specs;
    specs.reserve(indices.size() * static_cast<std::size_t>(N));
    for (std::size_t d = 0; d < dirs.size(); ++d)
        for (int k = 1; k <= N; ++k)
            specs.push_back(
                {&dirs[d], detail::theta_grid(k, N), "smax:" + std::to_string(indices[d])});

    Cloud cloud;
    cloud.meta.kind = "directed-structured";
    cloud.meta.structured = true;
    cloud.meta.weights = w.values;
    cloud.meta.pairs = rep.pairs;
    detail::run_trials(P, e, specs, cloud);
    return cloud;
}

/// Phase sweep of the maximal direction of a single eigenvalue (1-based
/// canonical index), structured when S is given.
inline Cloud single_index_cloud(const MatrixPolynomial& P, const Weights& w, int index, double eps,
                                int N, const std::optional<StructureSet>& S = std::nullopt) {
    if (N < 1) throw DimensionMismatch("N must be >= 1");
    const auto trips = eigen_triplets(P);
    if (index < 1 || index > static_cast<int>(trips.size()))
        throw DimensionMismatch("eigenvalue index out of range");
    const EigenTriplet& trip = trips[static_cast<std::size_t>(index) - 1];
    if (!trip.simple) throw NotSimple("requested eigenvalue failed the simplicity guard");
    const PerturbationDirection dir =
        S ? maximal_structured_direction(trip, w, *S) : maximal_direction(trip, w);
    const std::string tag = (S ? "smax:" : "max:") + std::to_string(index);

    std::vector<detail::TrialSpec> specs;
    specs.reserve(static_cast<std::size_t>(N));
    for (int k = 1; k <= N; ++k) specs.push_back({&dir, detail::theta_grid(k, N), tag});

    Cloud cloud;
    cloud.meta.kind = "single-index";
    cloud.meta.structured = S.has_value();
    cloud.meta.weights = w.values;
    detail::run_trials(P, eps, specs, cloud);
    return cloud;
}

inline std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    return mix_seed(seed, static_cast<std::uint64_t>(trial));
}

/// Random rank-one baseline: trial k perturbs with a fresh (structured)
/// random direction at theta_k = 2*pi*(k-1)/trials.
inline Cloud random_baseline_cloud(const MatrixPolynomial& P, const Weights& w, int trials,
                                   double eps, const std::optional<StructureSet>& S,
                                   std::uint64_t seed) {
    if (trials < 1) throw DimensionMismatch("trials must be >= 1");
    const int n = P.order();
    std::vector<PerturbationDirection> dirs(static_cast<std::size_t>(trials));
    parallel_for(trials, [&](int t) {
        const std::uint64_t s = trial_seed(seed, t + 1);
        dirs[static_cast<std::size_t>(t)] =
            S ? random_structured_direction(w, *S, n, s) : random_direction(w, n, s);
    });
    std::vector<detail::TrialSpec> specs;
    specs.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t)
        specs.push_back({&dirs[static_cast<std::size_t>(t)], detail::theta_grid(t + 1, trials),
                         S ? "srand" : "rand"});

    Cloud cloud;
    cloud.meta.kind = "random-baseline";
    cloud.meta.structured = S.has_value();
    cloud.meta.weights = w.values;
    cloud.meta.seed = seed;
    detail::run_trials(P, eps, specs, cloud);
    return cloud;
}

inline void write_meta(const Cloud& cloud, std::ostream& os) {
    nlohmann::json j;
    j["epsilon"] = cloud.meta.epsilon;
    j["trials"] = cloud.meta.trials;
    j["structured"] = cloud.meta.structured;
    j["weights"] = cloud.meta.weights;
    j["problem"] = cloud.meta.problem_id;
    j["kind"] = cloud.meta.kind;
    if (!cloud.meta.pairs.empty()) {
        auto& pairs = j["pairs"] = nlohmann::json::array();
        for (const auto& [a, b] : cloud.meta.pairs) pairs.push_back({a, b});
    }
    if (cloud.meta.kind == "random-baseline") j["seed"] = cloud.meta.seed;
    os << j.dump(2) << '\n';
}

inline void write_csv(const Cloud& cloud, std::ostream& os) {
    os << "re,im,trial,theta,source\n";
    os.precision(17);
    for (const auto& p : cloud.points)
        os << p.z.real() << ',' << p.z.imag() << ',' << p.trial << ',' << p.theta << ','
           << p.source << '\n';
}

} // namespace polyps
