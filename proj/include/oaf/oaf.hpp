#pragma once

// Umbrella header for the core library. Report rendering lives in
// oaf/report.hpp and additionally needs the vendored json.hpp.

#include "oaf/config.hpp"
#include "oaf/error.hpp"
#include "oaf/ring.hpp"
#include "oaf/ideal.hpp"
#include "oaf/predicates.hpp"
#include "oaf/lattice.hpp"
#include "oaf/module.hpp"
#include "oaf/factorization.hpp"
#include "oaf/theorems.hpp"
#include "oaf/dsl.hpp"
#include "oaf/elaborate.hpp"
#include "oaf/corpus.hpp"
#include "oaf/verify.hpp"
