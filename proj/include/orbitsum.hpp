#pragma once

#include "orbitsum/rational.hpp"
#include "orbitsum/linalg.hpp"
#include "orbitsum/lp.hpp"
#include "orbitsum/polyhedra.hpp"
#include "orbitsum/rootsys.hpp"
#include "orbitsum/horn.hpp"
#include "orbitsum/orbitsum.hpp"
#include "orbitsum/oracle.hpp"
#include "orbitsum/json_io.hpp"
#include "orbitsum/cli.hpp"
