#pragma once

#include "gaussforge/error.hpp"
#include "gaussforge/gauss.hpp"
#include "gaussforge/maps.hpp"
#include "gaussforge/laurent.hpp"
#include "gaussforge/bracket.hpp"
#include "gaussforge/gf2.hpp"
#include "gaussforge/khovanov.hpp"
#include "gaussforge/moves.hpp"
#include "gaussforge/search.hpp"
