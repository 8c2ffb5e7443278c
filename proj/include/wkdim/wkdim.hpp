#pragma once

#include "wkdim/closed_form.hpp"
#include "wkdim/error.hpp"
#include "wkdim/family_spec.hpp"
#include "wkdim/generators.hpp"
#include "wkdim/graph.hpp"
#include "wkdim/grid.hpp"
#include "wkdim/resolve.hpp"
#include "wkdim/solver.hpp"
#include "wkdim/trees.hpp"
