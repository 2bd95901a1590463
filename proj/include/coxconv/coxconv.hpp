#pragma once

#include "coxconv/rational.hpp"
#include "coxconv/vector.hpp"
#include "coxconv/simplex.hpp"
#include "coxconv/cone.hpp"
#include "coxconv/reflection.hpp"
#include "coxconv/coxeter.hpp"
#include "coxconv/convexity.hpp"
#include "coxconv/root_systems.hpp"
#include "coxconv/affine.hpp"
#include "coxconv/json_io.hpp"
