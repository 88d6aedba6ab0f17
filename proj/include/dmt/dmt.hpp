#ifndef DMT_DMT_HPP
#define DMT_DMT_HPP

#include "dmt/algorithm.hpp"
#include "dmt/errors.hpp"
#include "dmt/field.hpp"
#include "dmt/floperations.hpp"
#include "dmt/graph_property.hpp"
#include "dmt/hasse.hpp"
#include "dmt/homology.hpp"
#include "dmt/io.hpp"
#include "dmt/moduli.hpp"
#include "dmt/path.hpp"
#include "dmt/presets.hpp"
#include "dmt/random_field.hpp"
#include "dmt/simplex.hpp"

#endif
