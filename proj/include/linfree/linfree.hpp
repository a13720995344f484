#pragma once

#include "linfree/constructions.hpp"
#include "linfree/error.hpp"
#include "linfree/exactgeom.hpp"
#include "linfree/freeness.hpp"
#include "linfree/io.hpp"
#include "linfree/knotlink.hpp"
#include "linfree/rational.hpp"
#include "linfree/recheck.hpp"
#include "linfree/rng.hpp"
#include "linfree/spatialgraph.hpp"
