#pragma once

// Difference Chow forms and checks of their structural properties.

#include <map>
#include <string>
#include <vector>

#include "diffchow/algebra.hpp"
#include "diffchow/algebraic_number.hpp"
#include "diffchow/charset.hpp"

namespace diffchow {

enum class Certification {
  /// F is primitive and squarefree; irreducibility was not checked.
  PrimitiveSquarefree,
  /// The resultant route produced the same minimal eliminant.
  RoutesAgree,
  /// F equals the closed-form construction for one variable.
  UnivariateOracle,
};

std::string to_string(Certification c);

struct ChowData {
  Poly F;
  /// Remaining members of the characteristic set of the Chow ideal.
  std::vector<Poly> companions;
  int n = 0;
  int d = 0;
  /// Order of F (= order of the source ideal).
  int h = 0;
  std::vector<int> euler_degrees;
  int degree = 0;
  /// Elimination ranking on the u-blocks under which {F, companions} is a chain.
  Ranking ranking;
  /// Truncation bound at which the eliminant stabilized.
  int bound = 0;
  /// Presentation of the source ideal (orderly ranking on y1..yn).
  Chain source;
  std::vector<Poly> hyperplanes;
  Certification certification = Certification::PrimitiveSquarefree;

  /// {F, companions...} as a chain under `ranking`.
  Chain chow_chain() const;
};

struct ChowOptions {
  /// Truncation bound; 0 means h + 1 (raised to the largest member order).
  int bound = 0;
  /// Extra bounds tried when F changes between B and B + 1.
  int retries = 3;
  /// Also run the resultant route and certify F when both agree.
  bool cross_check_resultants = false;
};

/// Elimination ranking u_ij (j >= 1, block by block) < u_00 < u_10 < ... < u_d0.
Ranking chow_ranking(int n, int d);

/// Chow form of the reflexive prime ideal presented by `chain`. The variables
/// y1..yn are the main symbols of the chain's ranking universe.
/// Throws InvariantViolation when F does not stabilize and UnitIdeal when the
/// elimination ideal is the whole ring.
ChowData chow_form(const Chain& chain, const ChowOptions& opts = {});

/// Closed form for one variable: F = M(u01) * g(-u00/u01) and likewise for
/// each companion.
ChowData chow_form_univariate(const Poly& g, const std::vector<Poly>& companions);

/// Sign e with F(blocks rho and tau swapped) = e*F. Throws InvariantViolation
/// if neither sign works.
int verify_block_symmetry(const ChowData& cd, int rho, int tau);

struct OrderProfile {
  int h = 0;
  std::map<Var, OrderStats> table;
  /// u_ij (j >= 1) absent from F: y_j lies in the ideal.
  std::vector<Var> absent;
};

/// Checks that every u_ij in F has ord h and lord 0 and that every u_i0 occurs.
OrderProfile verify_order_profile(const ChowData& cd);

struct EulerReport {
  /// r_0..r_h (block 0).
  std::vector<int> degrees;
  /// Per block; identical rows when the check passes.
  std::vector<std::vector<int>> per_block;
};

/// For every pair of blocks (s, t) and k <= h computes
/// sum_j u_tj^(k) dF/du_sj^(k): same-block sums must be r_k*F with r_k a
/// non-negative integer, cross-block sums must vanish. The total is compared
/// with is_transformally_homogeneous block by block.
EulerReport euler_check(const ChowData& cd);

/// Sum of the Euler degrees.
int difference_degree(const ChowData& cd);

struct RecoveredPoint {
  /// eta_rho = numerators[rho-1] / denominator.
  std::vector<Poly> numerators;
  Poly denominator;
  /// diff_prem of the cleared p(eta) against the Chow chain, per source generator.
  std::vector<Poly> residues;
  bool verified = false;
};

RecoveredPoint recover_point(const ChowData& cd);

/// {F, companions, dF/du00*y_rho - dF/du0rho} under u < y1 < ... < yn, checked
/// to reduce every hyperplane and source generator to zero.
Chain extend_charset(const ChowData& cd);

/// Chow form of A*V: u_ij -> sum_k u_ik a_kj for j >= 1. A is n x n.
ChowData transform_chow(const ChowData& cd, const std::vector<std::vector<Coeff>>& A);

/// Inverse of a square matrix over the coefficient field; throws InvalidArgument when singular.
std::vector<std::vector<Coeff>> invert_matrix(const std::vector<std::vector<Coeff>>& A);

/// Whether F and every companion vanish at the assignment. Coefficients must be rational.
bool vanishing_test(const ChowData& cd, const std::map<Var, AlgebraicNumber>& values);

/// Evaluates p at algebraic values; missing variables throw InvalidArgument.
AlgebraicNumber evaluate_algebraic(const Poly& p, const std::map<Var, AlgebraicNumber>& values,
                                   const UPoly& modulus);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Runs every verification predicate and collects the outcomes.
std::vector<CheckResult> verify_all(const ChowData& cd);

}  // namespace diffchow
