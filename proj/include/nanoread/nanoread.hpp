#pragma once

#include "nanoread/balls.hpp"
#include "nanoread/bounds.hpp"
#include "nanoread/code.hpp"
#include "nanoread/core.hpp"
#include "nanoread/errors.hpp"
#include "nanoread/reconstruct.hpp"
#include "nanoread/serialize.hpp"
#include "nanoread/sim.hpp"
