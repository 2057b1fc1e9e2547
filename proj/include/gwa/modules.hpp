#pragma once

// Finite-dimensional right modules over a GWA given by matrices, the height
// filtration and the localization check for modules.

#include <map>
#include <string>
#include <vector>

#include "gwa/linalg.hpp"
#include "gwa/smash.hpp"

namespace gwa {

/// Right action: v ◁ u is the row vector v M_u, so M_{uw} = M_u M_w.
struct FiniteModule {
  std::size_t dim = 0;
  ScalarMode mode = ScalarMode::Q;
  std::map<std::string, Matrix> action;  // ring variables, "x" and "y"
};

/// Matrix of p evaluated at the ring-variable matrices. Negative exponents use
/// the inverse matrix; throws InvalidArgument if it does not exist.
Matrix eval_at(const BasePoly& p, const FiniteModule& M, const BaseRing& ring);

struct ModuleCheck {
  std::string name;
  bool pass;
};

/// Shapes, commutation of ring variables, ring relations and the four GWA
/// relation families (sigma(u) for every ring variable u).
std::vector<ModuleCheck> verify_module(const FiniteModule& M, const GwaDatum& D);
bool module_ok(const std::vector<ModuleCheck>& checks);

struct HeightFiltration {
  std::vector<Matrix> subspaces;  // row bases of V^[0], V^[1], ..., V^[cap]
  int height = 0;                 // first l with V^[l] = V^[cap]
  bool capped = false;            // still growing near the cap
  bool submodule = true;          // V^[height] is stable under every generator
};

/// V^[l] = {v : v ◁ a sigma^{-1}(a) ... sigma^{-l}(a) = 0}, for l = 0..cap.
HeightFiltration height_filtration(const FiniteModule& M, const GwaDatum& D, int cap = 0);

enum class LocalizationStatus { Certified, Inconclusive };

struct LocalizationReport {
  LocalizationStatus status = LocalizationStatus::Certified;
  int height = 0;
  std::size_t torsion_dim = 0;    // dim V^[h]
  std::size_t quotient_dim = 0;   // dim V / V^[h], which is dim V_S when certified
  bool quotient_relations = true; // the quotient action satisfies the relations
  std::vector<std::string> singular;  // generators of S that fail to act invertibly
  std::size_t witness_dim = 0;        // kernel of the first singular generator
};

LocalizationReport localized_module_check(const FiniteModule& M, const GwaDatum& D, const OreSetSpec& S);

/// The quotient module V / W for a submodule with row basis W.
FiniteModule quotient_module(const FiniteModule& M, const Matrix& W);
FiniteModule direct_sum(const FiniteModule& A, const FiniteModule& B);

/// Shift-matrix module over k[t] with t = diag(taus), v_i ◁ x = v_{i+1} and
/// v_i ◁ y = a(tau_i) v_{i-1}. Requires tau_{i+1} = sigma(t) at tau_i.
FiniteModule shift_module(const GwaDatum& D, const std::vector<Scalar>& taus);

}  // namespace gwa
