#ifndef VERMA_VERMA_HPP
#define VERMA_VERMA_HPP

#include "verma/rational.hpp"
#include "verma/linalg.hpp"
#include "verma/root_system.hpp"
#include "verma/chevalley.hpp"
#include "verma/diffop.hpp"
#include "verma/series.hpp"
#include "verma/lie_ops.hpp"
#include "verma/weyl_rep.hpp"
#include "verma/probes.hpp"
#include "verma/singular.hpp"
#include "verma/sp_formula.hpp"
#include "verma/oracle.hpp"
#include "verma/poset_rank.hpp"
#include "verma/acceptance.hpp"

#endif  // VERMA_VERMA_HPP
