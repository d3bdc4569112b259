#pragma once

#include "pnb/betti.hpp"
#include "pnb/bundles.hpp"
#include "pnb/enumerate.hpp"
#include "pnb/error.hpp"
#include "pnb/groebner.hpp"
#include "pnb/hilbert.hpp"
#include "pnb/io.hpp"
#include "pnb/lattice.hpp"
#include "pnb/matrix.hpp"
#include "pnb/poly.hpp"
#include "pnb/seq.hpp"
