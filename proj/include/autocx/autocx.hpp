#pragma once

#include "autocx/automata.hpp"
#include "autocx/bounds.hpp"
#include "autocx/fsr.hpp"
#include "autocx/serialize.hpp"
#include "autocx/solvers.hpp"
#include "autocx/verify.hpp"
#include "autocx/word.hpp"
