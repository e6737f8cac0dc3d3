#pragma once

// Exact arithmetic for continuants of continued fractions with three limits
// in noncommuting indeterminates, the combinatorial families describing
// their terms, and mechanical verification of the identities and counting
// sequences connecting the two.

#include "tricont/closed_forms.hpp"
#include "tricont/continuants.hpp"
#include "tricont/families.hpp"
#include "tricont/generator.hpp"
#include "tricont/monomial.hpp"
#include "tricont/numeric.hpp"
#include "tricont/periodic.hpp"
#include "tricont/polynomial.hpp"
#include "tricont/sequences.hpp"
#include "tricont/substitution.hpp"
#include "tricont/verify.hpp"
