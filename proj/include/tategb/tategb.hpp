#pragma once

/// Umbrella header: everything except the JSON command layer (tategb/cli.hpp).

#include "tategb/arith.hpp"
#include "tategb/classical.hpp"
#include "tategb/fan.hpp"
#include "tategb/groebner.hpp"
#include "tategb/io.hpp"
#include "tategb/lp.hpp"
#include "tategb/order.hpp"
#include "tategb/polyhedral.hpp"
#include "tategb/polynomial.hpp"
#include "tategb/polytope.hpp"
#include "tategb/uagb.hpp"
