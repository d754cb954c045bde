#pragma once

#include "tevelev/closedform.hpp"
#include "tevelev/cohring.hpp"
#include "tevelev/crosscheck.hpp"
#include "tevelev/errors.hpp"
#include "tevelev/exactmath.hpp"
#include "tevelev/grr.hpp"
#include "tevelev/problem.hpp"
#include "tevelev/qh.hpp"
#include "tevelev/qpoly.hpp"
