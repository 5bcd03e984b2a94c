#pragma once

#include "brute_force.hpp"
#include "cnf.hpp"
#include "convexity.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_facts.hpp"
#include "graph_io.hpp"
#include "kernels.hpp"
#include "parameters.hpp"
#include "random.hpp"
#include "reductions.hpp"
#include "suites.hpp"
#include "transforms.hpp"
#include "vertex_set.hpp"
