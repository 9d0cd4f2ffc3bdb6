#pragma once

// Umbrella header for the whole library.

#include "carlitz/ring.hpp"
#include "carlitz/integer.hpp"
#include "carlitz/field.hpp"
#include "carlitz/polynomial.hpp"
#include "carlitz/poly_fq.hpp"
#include "carlitz/text.hpp"
#include "carlitz/residue.hpp"
#include "carlitz/series.hpp"
#include "carlitz/twisted.hpp"
#include "carlitz/bernoulli.hpp"
#include "carlitz/witt.hpp"
#include "carlitz/lseries.hpp"
#include "carlitz/localfield.hpp"
#include "carlitz/herbrand.hpp"
#include "carlitz/report_io.hpp"
