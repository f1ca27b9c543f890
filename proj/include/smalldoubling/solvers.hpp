#pragma once

#include "solvers/clique.hpp"
#include "solvers/context.hpp"
#include "solvers/maxcut.hpp"
#include "solvers/minplus.hpp"
#include "solvers/steiner.hpp"
#include "solvers/tsp.hpp"
