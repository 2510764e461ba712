#pragma once

// Everything at once.

#include "connectivity.hpp"
#include "containment.hpp"
#include "crossing.hpp"
#include "cycles.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "instances.hpp"
#include "io.hpp"
#include "multigraph.hpp"
#include "planarity.hpp"
#include "structure.hpp"
#include "suites.hpp"
