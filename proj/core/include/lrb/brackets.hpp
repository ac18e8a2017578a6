#pragma once

#include "lrb/algebra.hpp"
#include "lrb/cochain.hpp"
#include "lrb/operators.hpp"
#include "lrb/quotients.hpp"

namespace lrb {

/// The bracket of an algebra as a binary cochain of degree 1.
Cochain structure_cochain(const Algebra& a);
Algebra algebra_from_cochain(const Cochain& mu);

/// P o-bar Q = sum_k P o_k Q.
Cochain balavoine_compose(const Cochain& p, const Cochain& q);
/// [P,Q]_B = P o-bar Q - (-1)^{pq} Q o-bar P on C*(g,g). Both inputs must
/// carry DegreeConvention::arity_minus_one.
Cochain balavoine_bracket(const Cochain& p, const Cochain& q);

/// {g1,g2}_V on C*(V,lambda) by the explicit six-term expansion.
Cochain derived_bracket_direct(const Cochain& g1, const Cochain& g2, const Representation& rep);
/// (-1)^{m-1} [[mu, g1^], g2^]_B on lambda (+) V restricted to V inputs.
Cochain derived_bracket_balavoine(const Cochain& g1, const Cochain& g2, const Representation& rep);

/// T as a unary cochain V -> lambda.
Cochain operator_cochain(const LinearOperator& t);
/// {T,T}_V = 0.
bool mc_check(const LinearOperator& t);

/// The three-term bracket on Hom(wedge V, g) for a Lie algebra with a Lie
/// representation stored symmetric.
AlternatingCochain nr_bracket(const AlternatingCochain& p, const AlternatingCochain& q, const Representation& lie_rep);

/// g with values in Leib(lambda), written in the kernel basis -> values in lambda.
Cochain gla_alpha(const Cochain& g, const QuotientData& q);
/// pr o f
Cochain gla_beta(const Cochain& f, const QuotientData& q);

/// f o phi^{(x)n} for an intertwiner phi : W -> V. Throws InputError when
/// phi does not intertwine w_rep and v_rep.
Cochain cochain_pullback(const Matrix& phi, const Cochain& f, const Representation& w_rep, const Representation& v_rep);
bool is_intertwiner(const Matrix& phi, const Representation& w_rep, const Representation& v_rep);

}  // namespace lrb
