#pragma once

#include "qmstab/feasibility.hpp"
#include "qmstab/grading.hpp"
#include "qmstab/io.hpp"
#include "qmstab/parser.hpp"
#include "qmstab/polynomial.hpp"
#include "qmstab/rational.hpp"
#include "qmstab/stability.hpp"
