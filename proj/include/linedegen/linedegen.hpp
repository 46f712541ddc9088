#pragma once

#include "linedegen/bipoly.hpp"
#include "linedegen/chern.hpp"
#include "linedegen/chow.hpp"
#include "linedegen/commands.hpp"
#include "linedegen/degeneration.hpp"
#include "linedegen/errors.hpp"
#include "linedegen/serialize.hpp"
#include "linedegen/witness.hpp"
