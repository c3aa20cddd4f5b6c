#pragma once

#include "sqstable/classify.hpp"
#include "sqstable/errors.hpp"
#include "sqstable/generate.hpp"
#include "sqstable/graph.hpp"
#include "sqstable/io.hpp"
#include "sqstable/matching.hpp"
#include "sqstable/solvers.hpp"
#include "sqstable/structure.hpp"
#include "sqstable/verify.hpp"
#include "sqstable/vertex_set.hpp"
