#pragma once

#include "speckron/numeric.hpp"
#include "speckron/partition.hpp"
#include "speckron/symfunc.hpp"

namespace speckron {

/// C_alpha = (1/o) sum_{k | o} phi(k) p_{alpha^(o/k)}, o = order_of(alpha).
SymFunc c_to_p(const Partition& alpha);

/// K_alpha = product over distinct parts i with multiplicity m of C_{i^m}.
SymFunc k_to_p(const Partition& alpha);

/// h_alpha = product over parts a of sum_{nu |- a} p_nu / z_nu.
SymFunc h_to_p(const Partition& alpha);

/// n!/o(mu): labelled C_mu-structures.
Integer count_structures_C(const Partition& mu);
/// n!/prod(distinct parts of mu): labelled K_mu-structures.
Integer count_structures_K(const Partition& mu);
/// n!/prod(mu_i!): labelled E_mu-structures.
Integer count_structures_H(const Partition& mu);

/// f(p_1 -> p_1^r) in the sense used for C_alpha o X^r: every p_lambda
/// becomes p_{lambda repeated r times}. f must be in the p-basis.
SymFunc plethysm_p1r(const SymFunc& f, int r);

}  // namespace speckron
