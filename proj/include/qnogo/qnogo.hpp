#pragma once

#include "qnogo/channels.hpp"
#include "qnogo/cli.hpp"
#include "qnogo/eig.hpp"
#include "qnogo/errors.hpp"
#include "qnogo/fit.hpp"
#include "qnogo/json_io.hpp"
#include "qnogo/matrix.hpp"
#include "qnogo/measures.hpp"
#include "qnogo/nogo.hpp"
#include "qnogo/rng.hpp"
#include "qnogo/states.hpp"
