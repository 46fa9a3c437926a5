#pragma once

// Umbrella header for the whole library.

#include "mpbh/aco.hpp"
#include "mpbh/bench.hpp"
#include "mpbh/config.hpp"
#include "mpbh/constructive.hpp"
#include "mpbh/gls.hpp"
#include "mpbh/instance.hpp"
#include "mpbh/levels.hpp"
#include "mpbh/neighborhoods.hpp"
#include "mpbh/oracle.hpp"
#include "mpbh/orlib.hpp"
#include "mpbh/rng.hpp"
#include "mpbh/stop.hpp"
#include "mpbh/svg.hpp"
#include "mpbh/tree.hpp"
#include "mpbh/vns.hpp"
