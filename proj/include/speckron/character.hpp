#pragma once

#include <cstdint>

#include "speckron/partition.hpp"

namespace speckron {

/// Irreducible character chi^lambda evaluated on cycle type mu, by the
/// Murnaghan-Nakayama rule. Memoized; safe to call concurrently.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// f^lambda = chi^lambda(1^n), the number of standard Young tableaux.
std::int64_t dimension(const Partition& lambda);

}  // namespace speckron
