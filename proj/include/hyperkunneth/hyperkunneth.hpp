#pragma once

#include "hyperkunneth/abelian_group.hpp"
#include "hyperkunneth/errors.hpp"
#include "hyperkunneth/field.hpp"
#include "hyperkunneth/fuzz.hpp"
#include "hyperkunneth/homology.hpp"
#include "hyperkunneth/hypergraph.hpp"
#include "hyperkunneth/hypergraph_io.hpp"
#include "hyperkunneth/integer.hpp"
#include "hyperkunneth/intlinalg.hpp"
#include "hyperkunneth/kunneth.hpp"
#include "hyperkunneth/random.hpp"
#include "hyperkunneth/report.hpp"
#include "hyperkunneth/sparse_matrix.hpp"
