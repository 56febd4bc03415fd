#pragma once

#include "omld/catalog.hpp"
#include "omld/check.hpp"
#include "omld/congruence.hpp"
#include "omld/free_oml.hpp"
#include "omld/lattice.hpp"
#include "omld/term.hpp"
