#pragma once

#include "asymptotics.hpp"
#include "boundary.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "landscape.hpp"
#include "model.hpp"
#include "profile.hpp"
#include "quadrature.hpp"
#include "roots.hpp"
#include "signs.hpp"
#include "special.hpp"
#include "stability.hpp"
