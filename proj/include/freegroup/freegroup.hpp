#pragma once

#include "freegroup/endo.hpp"
#include "freegroup/graph.hpp"
#include "freegroup/io.hpp"
#include "freegroup/minimize.hpp"
#include "freegroup/whitehead.hpp"
#include "freegroup/word.hpp"
