#pragma once

// Umbrella header.

#include "monores/betti_table.hpp"
#include "monores/classification.hpp"
#include "monores/classify.hpp"
#include "monores/corpus.hpp"
#include "monores/duality.hpp"
#include "monores/errors.hpp"
#include "monores/formulas.hpp"
#include "monores/ideal.hpp"
#include "monores/json_io.hpp"
#include "monores/kty.hpp"
#include "monores/matrix.hpp"
#include "monores/monomial.hpp"
#include "monores/oracle.hpp"
#include "monores/parse.hpp"
#include "monores/polarize.hpp"
#include "monores/primes.hpp"
#include "monores/quotients.hpp"
#include "monores/scarf.hpp"
#include "monores/simplicial.hpp"
#include "monores/taylor.hpp"
#include "monores/verify.hpp"
