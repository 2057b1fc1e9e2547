#pragma once

// Hochschild homology of base rings and of their smash products with the
// torus T = k[x, x^-1]: truncated tables, invariant and coinvariant
// subcomplexes, small closed-form oracles and the localized GWA pipeline.

#include <optional>
#include <string>
#include <vector>

#include "gwa/chains.hpp"
#include "gwa/ore.hpp"
#include "gwa/smash.hpp"

namespace gwa {

/// How sigma acts on monomials. Either every variable is an eigenvector,
/// sigma(v_j) = q^{k_j} v_j, giving sigma(m) = q^{<lambda, weight(m)>} m, or
/// sigma translates some variables (v -> v + c) and fixes the rest.
struct WeightGrading {
  bool sigma_eigen = false;
  Weight lambda;                 // meaningful when sigma_eigen
  std::vector<bool> fixed_vars;  // sigma(v) = v
  std::vector<bool> shift_vars;  // sigma(v) = v + c, c != 0

  int pairing(const Weight& w) const;
  /// Weight coordinates carried by fixed variables.
  std::vector<bool> fixed_mask(const BaseRing& ring) const;
};

/// Detects the grading; throws Unsupported for any other kind of sigma.
WeightGrading detect_grading(const BaseRing& ring, const Endo& sigma);

struct BettiEntry {
  std::size_t rank = 0;
  bool stabilized = false;
};

struct BettiTable {
  int bound = 0;
  int nmax = 0;
  int window = 0;
  std::map<std::pair<int, Weight>, BettiEntry> entries;

  /// Sum of ranks in each degree 0..nmax.
  std::vector<std::size_t> totals() const;
  std::vector<std::size_t> totals_at(const Weight& w) const;
  bool all_stabilized() const;
};

/// Per-block homology of CH(ring) with norm bound B, flagged against B + 1.
BettiTable truncated_hh(const BaseRing& ring, int B, int nmax, std::size_t cap = 400000);

/// Closed form for free (Laurent) polynomial rings: f dv_I counted per weight,
/// for weights of norm at most B. Throws HasRelations.
BettiTable hkr_oracle(const BaseRing& ring, int B, int nmax);
/// Rank of HH_n as a free module over the ring: C(m, n) with m the number of
/// variables.
std::vector<std::size_t> hkr_ranks(const BaseRing& ring, int nmax);

/// Weight-pairing-zero span (eigen case) or kernel of sigma^{(n+1)} - id
/// (shift case), as rows over C_n for n = 0..C.top().
std::vector<std::vector<RatRow>> invariant_subcomplex(const ChainComplex& C, const Endo& sigma,
                                                      const WeightGrading& grading);

/// Homology of the coinvariant quotient. Eigen case: equals the invariants.
/// Shift case: the quotient F_{B-1} / (sigma - 1) F_B of the norm filtration,
/// on which sigma - 1 is onto in every fixed-variable block.
/// Ranks keyed by (n, block key).
std::map<std::pair<int, Weight>, std::size_t> coinvariant_homology(const ChainComplex& C, const Endo& sigma,
                                                                   const WeightGrading& grading, int nmax);
std::map<std::pair<int, Weight>, std::size_t> invariant_homology(const ChainComplex& C, const Endo& sigma,
                                                                 const WeightGrading& grading, int nmax);

/// Chain options restricted to the pairing-zero blocks.
ChainOptions eigen_options(const WeightGrading& grading, int B, int top);

/// Eigenvalue (+1 or -1) of each variable for a diagonal sigma of finite
/// order over Q; throws NotFiniteOrder or Unsupported.
std::vector<int> finite_order_signs(const BaseRing& ring, const Endo& sigma, int* order = nullptr);

/// CH^{(1)}: tensors whose eigenvalue product over all slots is 1.
ChainComplex eigen_complex_CH1(const BaseRing& ring, const Endo& sigma, int B, int top);

// ---------------------------------------------------------------------------
// Answers

struct Summand {
  std::string ring;  // "k", "k[c]", "T", "k[c]⊗T", ...
  std::size_t rank = 0;
  bool operator==(const Summand&) const = default;
};

struct AnswerDegree {
  int n = 0;
  std::vector<Summand> summands;
  bool stabilized = true;
  bool operator==(const AnswerDegree& o) const { return n == o.n && summands == o.summands; }
};

struct AnswerModule {
  std::vector<AnswerDegree> degrees;
  bool all_stabilized() const;
  /// Summand-by-summand equality in the shared degrees.
  bool same_shape(const AnswerModule& o) const;
  std::string render() const;
};

/// Ranks of the summand (RING ⊗ T) in each degree, blank entries omitted.
AnswerModule answer_from_ranks(const std::vector<std::size_t>& ranks, const std::string& ring, bool stabilized = true);

/// Shape of H_n of a model split by fixed-variable degree d: h[d] must be
/// nondecreasing and constant on the last two points. Returns the coefficient
/// ring and rank, or nullopt.
std::optional<Summand> recognize_shape(const std::vector<std::size_t>& h_by_degree, const std::string& fixed_ring);

struct TorusResult {
  BettiTable coinvariants;
  BettiTable invariants;
  AnswerModule answer;
};

/// HH_n(A #_R T) = H_n(CH(A)_T) ⊗ T ⊕ H_{n-1}(CH(A)^T) ⊗ T.
TorusResult hh_smash_torus(const BaseRing& ring, const Endo& sigma, int B, int nmax);

struct SeparableResult {
  int order = 1;
  std::vector<std::size_t> ch1;          // H_n(CH^{(1)}(A))
  std::vector<std::size_t> torus_ranks;  // ranks over T
  std::vector<std::size_t> finite_ranks; // dim over k of H_n(A #_R B)
  bool stabilized = true;
};

SeparableResult hh_smash_separable(const BaseRing& ring, const Endo& sigma, int B, int nmax);

/// A finite-dimensional algebra: basis e_0 = 1, e_1..e_{d-1}, structure
/// constants mult[i][j] (a row over the basis), and an optional grading
/// into Z^k with some coordinates taken modulo the given moduli (0 = none).
struct FiniteAlgebra {
  std::size_t dim = 0;
  std::vector<std::vector<RatRow>> mult;
  std::vector<Weight> grade;
  std::vector<int> moduli;
};

std::vector<std::size_t> hh_finite_dim(const FiniteAlgebra& alg, int nmax, std::size_t cap = 12);

/// A finite-dimensional A (ring with relations) smashed with k[x]/(x^d - 1),
/// sigma of order d.
FiniteAlgebra finite_smash(const BaseRing& ring, const Endo& sigma, int d);
/// A itself as a finite algebra.
FiniteAlgebra finite_algebra(const BaseRing& ring);

// ---------------------------------------------------------------------------
// Localized GWA pipeline

/// The proposed model for CH(A_S)^T generated by fixed variables and
/// sigma-eigen units, with the ring A' over which it is validated.
struct InvariantModel {
  WeightGrading grading;
  BaseRing extended;           // A with eigen-unit members of S inverted
  Endo extended_sigma;
  BaseRing model;              // fixed variables and eigen units only
  Endo model_sigma;
  std::vector<std::string> eigen_units;
  std::vector<std::string> fixed;
  std::string description;
  std::string fixed_ring;      // "k", "k[c]", ...
};

InvariantModel eigen_unit_analysis(const BaseRing& ring, const Endo& sigma, const OreSetSpec& S);

struct PipelineOptions {
  int bound = 4;
  int nmax = 3;
  int window = 3;
};

struct LocalizedReport {
  InvariantModel model;
  CoinvResult coinvariants;
  std::string coinvariant_part;  // "0", "invariants", "quotient" or "unrecognized"
  /// H_n split by fixed-variable degree, at B and B+1.
  std::vector<std::vector<std::size_t>> windowed_inv, model_inv, coinv;
  bool conclusive = false;  // some fixed degree of the windowed table stabilized
  bool validated = false;
  bool recognized = true;
  AnswerModule answer;
  std::vector<std::string> diagnostics;
};

/// Full pipeline; never throws ValidationFailed, records it instead.
LocalizedReport localized_gwa_report(const GwaDatum& D, const OreSetSpec& S, const PipelineOptions& opts);
/// As above, throwing ValidationFailed when the windowed invariants refute the model.
AnswerModule hh_localized_gwa(const GwaDatum& D, const OreSetSpec& S, const PipelineOptions& opts);

}  // namespace gwa
