#pragma once

#include "lrb/algebra.hpp"
#include "lrb/linalg.hpp"

namespace lrb {

/// lambda -> lambda_Lie = lambda / Leib(lambda), with the section given by
/// the standard basis vectors at the non-pivot columns of the kernel.
struct QuotientData {
  Algebra source;
  Subspace kernel;
  Algebra quotient;
  Matrix pr;       // dim quotient x dim source
  Matrix section;  // dim source x dim quotient
};

/// Span of [e_i,e_j] + [e_j,e_i], i <= j.
Subspace leibniz_kernel(const Algebra& a);
QuotientData canonical_lie(const Algebra& a);

/// theta(x) = rho^L(section x) as a Lie representation of the quotient,
/// stored symmetric. Throws AxiomError when rho^L does not kill Leib.
Representation induced_theta(const QuotientData& q, const Representation& r);

/// Restriction to an invariant subspace; InvariantError if not invariant.
Representation subrepresentation(const Representation& r, const Subspace& sub);
/// Action on V / sub in the coordinates of quotient_coordinates.
Representation quotient_representation(const Representation& r, const Subspace& sub);
bool is_invariant(const Representation& r, const Subspace& sub);

struct RepSplit {
  Representation source;
  Subspace v_anti;
  Representation anti_rep;
  Representation sym_rep;
  Matrix inclusion;   // V_anti -> V
  Matrix projection;  // V -> V_sym
};

RepSplit split_representation(const Representation& r);

}  // namespace lrb
