#ifndef POSR_POSR_HPP
#define POSR_POSR_HPP

#include "posr/error.hpp"
#include "posr/permutation.hpp"
#include "posr/group.hpp"
#include "posr/named_groups.hpp"
#include "posr/digraph.hpp"
#include "posr/cayley.hpp"
#include "posr/refine.hpp"
#include "posr/autgroup.hpp"
#include "posr/search.hpp"
#include "posr/catalog.hpp"
#include "posr/io.hpp"

#endif  // POSR_POSR_HPP
