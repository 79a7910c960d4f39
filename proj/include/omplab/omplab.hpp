#pragma once

// Umbrella header for the omplab library.

#include "omplab/catalog.hpp"
#include "omplab/derivation.hpp"
#include "omplab/element_set.hpp"
#include "omplab/enumerate.hpp"
#include "omplab/errors.hpp"
#include "omplab/fixtures.hpp"
#include "omplab/implication.hpp"
#include "omplab/io.hpp"
#include "omplab/iop.hpp"
#include "omplab/iop_table.hpp"
#include "omplab/parallel.hpp"
#include "omplab/poset.hpp"
#include "omplab/report.hpp"
#include "omplab/semantics.hpp"
