#pragma once

// Generalized Thue-Morse sequences of type (L, k, kappa): generation,
// periodicity, stammering witnesses, k-kernels and associated constants.

#include "gtm/analytic.hpp"
#include "gtm/automaton.hpp"
#include "gtm/bigint.hpp"
#include "gtm/errors.hpp"
#include "gtm/expansion.hpp"
#include "gtm/kappa.hpp"
#include "gtm/periodicity.hpp"
#include "gtm/sequence.hpp"
#include "gtm/stammering.hpp"

namespace gtm {

inline constexpr const char* version = "0.1.0";

}  // namespace gtm
