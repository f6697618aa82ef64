#pragma once

#include "glauber/coalition.hpp"
#include "glauber/commutators.hpp"
#include "glauber/constants.hpp"
#include "glauber/dobrushin.hpp"
#include "glauber/errors.hpp"
#include "glauber/functionals.hpp"
#include "glauber/graph.hpp"
#include "glauber/inequalities.hpp"
#include "glauber/influences.hpp"
#include "glauber/ising.hpp"
#include "glauber/measure.hpp"
#include "glauber/model_spec.hpp"
#include "glauber/observable.hpp"
#include "glauber/operators.hpp"
#include "glauber/quadrature.hpp"
#include "glauber/semigroup.hpp"
#include "glauber/state_space.hpp"
#include "glauber/version.hpp"
