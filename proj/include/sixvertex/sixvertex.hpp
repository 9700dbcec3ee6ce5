#pragma once

#include "sixvertex/actions.hpp"
#include "sixvertex/boundary.hpp"
#include "sixvertex/error.hpp"
#include "sixvertex/izergin.hpp"
#include "sixvertex/json_io.hpp"
#include "sixvertex/lattice.hpp"
#include "sixvertex/linsys.hpp"
#include "sixvertex/matrix.hpp"
#include "sixvertex/oracles.hpp"
#include "sixvertex/random.hpp"
#include "sixvertex/scalar.hpp"
