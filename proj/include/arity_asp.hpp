#pragma once

#include "arity_asp/arity.hpp"
#include "arity_asp/classifier.hpp"
#include "arity_asp/engines.hpp"
#include "arity_asp/errors.hpp"
#include "arity_asp/gadgets.hpp"
#include "arity_asp/generate.hpp"
#include "arity_asp/program.hpp"
#include "arity_asp/propagation.hpp"
#include "arity_asp/search.hpp"
#include "arity_asp/semantics.hpp"
