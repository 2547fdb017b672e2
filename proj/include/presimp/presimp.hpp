// presimp: persistence-preserving simplification of filtered cell
// complexes before boundary-matrix reduction.

#pragma once

#include "acyclic.hpp"
#include "bottleneck.hpp"
#include "builders.hpp"
#include "core.hpp"
#include "io.hpp"
#include "log.hpp"
#include "persistence.hpp"
#include "reduce.hpp"
#include "smoothing.hpp"
