#pragma once

#include "crystal_grid/field.hpp"
#include "crystal_grid/matrix.hpp"
#include "crystal_grid/cartan.hpp"
#include "crystal_grid/crystal.hpp"
#include "crystal_grid/operator_word.hpp"
#include "crystal_grid/crystal_graph.hpp"
#include "crystal_grid/grid_quiver.hpp"
#include "crystal_grid/crystal_an.hpp"
#include "crystal_grid/crystal_2x2.hpp"
#include "crystal_grid/representation.hpp"
#include "crystal_grid/module_algebra.hpp"
#include "crystal_grid/rep_oracle.hpp"
#include "crystal_grid/binfty.hpp"
#include "crystal_grid/verify.hpp"
