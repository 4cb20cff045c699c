#ifndef MGSEP_MGSEP_HPP
#define MGSEP_MGSEP_HPP

#include "mgsep/augmentation.hpp"
#include "mgsep/dot.hpp"
#include "mgsep/errors.hpp"
#include "mgsep/graph_text.hpp"
#include "mgsep/mixed_graph.hpp"
#include "mgsep/random_graph.hpp"
#include "mgsep/separation.hpp"
#include "mgsep/undirected_graph.hpp"
#include "mgsep/validate.hpp"
#include "mgsep/walk.hpp"

#endif
