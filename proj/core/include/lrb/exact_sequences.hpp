#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrb/cohomology.hpp"
#include "lrb/operators.hpp"
#include "lrb/quotients.hpp"

namespace lrb {

/// Degreewise matrices f_n : C^n -> D^n.
struct ComplexMap {
  std::vector<Matrix> maps;
};

/// First degree n with d' f_n != f_{n+1} d, or nullopt when every stored
/// square commutes.
std::optional<std::size_t> chain_map_defect(const ComplexMap& f, const CochainComplex& source,
                                            const CochainComplex& target);

enum class SesCase { symmetric, antisymmetric };
std::string to_string(SesCase c);

/// 0 -> C(V, Leib) -alpha-> C(V, lambda) -beta-> C(V, lambda_Lie) -> 0.
struct ShortExactSequence {
  SesCase kind = SesCase::symmetric;
  LinearOperator op;
  QuotientData quotient_data;
  LinearOperator reduced;  // pr o T on (V; theta)
  CochainComplex sub;
  CochainComplex mid;
  CochainComplex quot;
  /// The complex of `reduced` built on its own (LP of a Lie RBO, or the
  /// averaging complex); equals `quot` entrywise.
  CochainComplex quot_direct;
  ComplexMap alpha;
  ComplexMap beta;
};

/// Builds the three complexes through degree max_degree + 1 and asserts
/// the chain-map squares, exactness of each column and quot == quot_direct
/// (InvariantError on failure). Throws AxiomError for non-operators and
/// InputError when the representation is not of the requested class.
ShortExactSequence build_ses(const LinearOperator& t, const QuotientData& q, SesCase kind, std::size_t max_degree);

/// c^n : H^n(quot) -> H^{n+1}(sub) in the coordinates of the cohomology
/// models. `lift_seed` = 0 lifts by the section; any other seed adds a
/// pseudo-random element of im alpha to the lift and a random coboundary
/// to each representative.
Matrix connecting_map(const ShortExactSequence& ses, std::size_t n, std::uint64_t lift_seed = 0);

struct LesDegree {
  std::size_t degree = 0;
  std::size_t h_sub = 0;
  std::size_t h_mid = 0;
  std::size_t h_quot = 0;
  std::size_t rank_alpha = 0;
  std::size_t rank_beta = 0;
  std::size_t rank_connecting = 0;
  bool exact_at_sub = false;
  bool exact_at_mid = false;
  bool exact_at_quot = false;
  bool lift_independent = false;
};

struct ExactnessReport {
  SesCase kind = SesCase::symmetric;
  std::vector<LesDegree> degrees;
  bool exact() const;
  /// "H^n(node): rank in = a, dim ker out = b" for the first failing node.
  std::optional<std::string> first_failure() const;
};

/// Exactness at every node in degrees 0..max_degree, by rank equalities of
/// the induced maps between cohomology coordinate spaces. Lift independence
/// compares the connecting maps for the given seeds.
ExactnessReport verify_les(const ShortExactSequence& ses, std::size_t max_degree,
                           const std::vector<std::uint64_t>& lift_seeds = {1, 2});

}  // namespace lrb
