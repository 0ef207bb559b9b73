#ifndef PFLAB_EXTRACTION_HPP
#define PFLAB_EXTRACTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "pflab/pairing_tensor.hpp"

namespace pflab {

struct FitResult {
    double slope = 0.0;
    double residual = 0.0; // rms of log-residuals
    int n_points = 0;
};

// Least-squares slope of log(value) against log(r). Rejects nonpositive
// values and fewer than 3 samples.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& samples);

// One scaling cluster: directions sharing a fitted decay exponent.
struct Cluster {
    double theta = 0.0;        // mean fitted exponent
    double theta_min = 0.0, theta_max = 0.0;
    int dim = 0;
    std::vector<double> member_slopes;
    std::vector<double> member_residuals;
    Mat germ_basis;    // F x dim, functional side at the smallest radius
    Mat field_coeffs;  // B x dim, operator-side coefficients at smallest radius
    Mat field_frames;  // F x dim, frames of the reconstructed field forms
    double track_angle_deg = 0.0; // worst cross-radius subspace matching angle
};

struct ScalingRow {
    int direction_id = 0;
    double theta_hat = 0.0;
    double residual = 0.0;
    int cluster = -1;
};

struct ExtractionResult {
    double eps_gap = 0.25;
    double floor_tol = 0.0;
    std::vector<Cluster> clusters; // theta ascending
    std::vector<ScalingRow> report;
    double resolved_theta_max = 0.0; // exponents above this are unresolved

    int n_gamma(double gamma) const;              // throws GapError if ambiguous
    std::pair<double, double> gap_at(double gamma) const; // bracketing exponents
    Mat field_space(double gamma) const;          // F x N frames (nested)
    Mat germ_space(double gamma) const;           // F x N functional directions
    std::vector<int> cluster_dims(double gamma) const;
    std::string cluster_table() const;
};

struct ExtractOptions {
    double gamma_max = 3.0;
    double eps_gap = 0.25;
    double floor_tol = 1e-9; // relative singular-value floor
};

// Scaling-ordered peeling over the assembled tensor.
ExtractionResult extract(const PairingTensor& tensor, const ExtractOptions& opt);

// Largest principal angle (degrees) between the column spans of X and Y.
double match_spaces(const Mat& X, const Mat& Y);

// Principal angle (degrees) of a single vector against the span of X.
double angle_to_span(const Vec& v, const Mat& X);

// Finite-rank map psi = sum_j sigma_j phi_j in tensor coordinates.
struct FiniteRankTerm {
    Functional sigma;
    Vec form_frame; // frame of phi_j over the probes
};
using FiniteRankMap = std::vector<FiniteRankTerm>;

// ||(Xi - psi)||_r surrogate per radius: spectral norm of the residual block.
std::vector<std::pair<double, double>> residual_curve(const PairingTensor& tensor,
                                                      const FiniteRankMap& psi);

struct DeltaResult {
    int delta = 1;          // 0 or 1
    double gamma_star = 0.0; // critical exponent (+inf encoded as 1e300)
    FitResult fit;
};

// Decision rule: delta_gamma = 0 iff the fitted exponent of the curve's
// asymptotic tail exceeds gamma + eps_gap.
DeltaResult delta_gamma(const std::vector<std::pair<double, double>>& curve,
                        double gamma, double eps_gap = 0.25);

// delta-hat pseudometric: e^{-gamma*} of the residual curve of (psi - psi').
double delta_hat(const PairingTensor& tensor, const FiniteRankMap& psi,
                 const FiniteRankMap& psi_prime);
double delta_hat_xi(const PairingTensor& tensor, const FiniteRankMap& psi);

// Per-radius reconstruction of a damped form from the local families.
struct ReconstructRow {
    double radius = 0.0;
    double error = 0.0;  // ||phi - sum c A||^(ell), dense operator norm
    double norm = 0.0;   // ||sum c A|| operator norm
};
struct ReconstructResult {
    std::vector<ReconstructRow> rows;
    std::vector<Eigen::VectorXcd> coeffs; // per radius
    FitResult error_fit, norm_fit;        // slopes of error and of norm growth
};

ReconstructResult reconstruct(const WickForm& phi, const PairingTensor& tensor,
                              double gamma, const ExtractionResult& ex,
                              double ell, double membership_deg = 5.0,
                              std::size_t dense_cap = 4096);

// Same, for several target forms; dense family operators are built once.
// A target may be given directly as a probe-frame vector (extracted forms).
struct ReconstructTarget {
    std::optional<WickForm> form; // dense kernel built from this when present
    Vec frame;                    // probe-frame vector (always required)
    std::optional<Mat> dense;     // dense operator when no WickForm applies
};
std::vector<ReconstructResult> reconstruct_many(
    const std::vector<ReconstructTarget>& targets, const PairingTensor& tensor,
    double gamma, const ExtractionResult& ex, double ell,
    double membership_deg = 5.0, std::size_t dense_cap = 4096);

// Lemma 3.5 polar-decomposition approximants for the pointlike field form.
struct Lemma35Row {
    double radius = 0.0;
    double eps = 0.0;
    double err_damped = 0.0;   // ||A_{r,eps} - phi(f_r)||^(4 ell)
    double bound = 0.0;        // eps * ||phi(f_r)* phi(f_r) R^{4 ell}||
    double err_total = 0.0;    // ||phi - A_r||^(4 ell + 1)
};
struct Lemma35Result {
    std::vector<Lemma35Row> rows;
    FitResult total_fit; // fitted order of err_total, target O(r)
};

Lemma35Result lemma35(const GridPtr& grid, const BasisPtr& basis,
                      const RadiusSchedule& schedule, double ell);

// Stability under stride-2 subsampling of the schedule.
struct StabilityReport {
    double max_angle_deg = 0.0;
    bool unstable = false;
    std::string detail;
};
StabilityReport stability_check(const PairingTensor& tensor, double gamma,
                                const ExtractOptions& opt,
                                double angle_threshold_deg = 5.0);

enum class ShortDistanceClass {
    RegularPointlike,
    DegenerateBounded,
    NonRegular,
    Inconclusive
};
std::string to_string(ShortDistanceClass c);

struct ClassifyResult {
    ShortDistanceClass verdict = ShortDistanceClass::Inconclusive;
    std::vector<std::pair<double, int>> n_of_gamma; // (gamma, N) or (K, N1)
    std::string evidence;
};

// Single-model classification over a gamma grid.
ClassifyResult classify_extraction(const ExtractionResult& ex,
                                   const std::vector<double>& gamma_grid);

// Family scan: N1 as a function of species count K; flags unbounded trends.
ClassifyResult classify_family(const std::vector<std::pair<double, int>>& n1_of_k);

} // namespace pflab

#endif
