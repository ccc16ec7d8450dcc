#pragma once

#include "biharmonic/conics.hpp"
#include "biharmonic/crystals.hpp"
#include "biharmonic/divisor_means.hpp"
#include "biharmonic/factorization.hpp"
#include "biharmonic/formal_identity.hpp"
#include "biharmonic/means.hpp"
#include "biharmonic/numeric.hpp"
#include "biharmonic/oeis.hpp"
#include "biharmonic/parallel.hpp"
#include "biharmonic/poly.hpp"
#include "biharmonic/recurrences.hpp"
#include "biharmonic/sigma_sieve.hpp"
