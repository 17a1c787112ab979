#pragma once

#include "shd/admissibility.hpp"
#include "shd/classify.hpp"
#include "shd/corpus.hpp"
#include "shd/diagram.hpp"
#include "shd/errors.hpp"
#include "shd/exact.hpp"
#include "shd/f2.hpp"
#include "shd/floer.hpp"
#include "shd/generators.hpp"
#include "shd/gridgen.hpp"
#include "shd/intlinalg.hpp"
#include "shd/lattice.hpp"
#include "shd/parse.hpp"
#include "shd/report.hpp"
#include "shd/selftest.hpp"
#include "shd/simplex.hpp"
#include "shd/tangle.hpp"
#include "shd/validate.hpp"
#include "shd/version.hpp"
