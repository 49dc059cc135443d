#pragma once

#include "ramsey/arrowing.hpp"
#include "ramsey/blowup.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/invariants.hpp"
#include "ramsey/io.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/search.hpp"
#include "ramsey/subgraph.hpp"
#include "ramsey/tower.hpp"
