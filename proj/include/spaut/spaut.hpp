#pragma once

#include "spaut/aut_format.hpp"
#include "spaut/bounds.hpp"
#include "spaut/decompose.hpp"
#include "spaut/dfa.hpp"
#include "spaut/digit_word.hpp"
#include "spaut/errors.hpp"
#include "spaut/expsum.hpp"
#include "spaut/intersect.hpp"
#include "spaut/numeric.hpp"
#include "spaut/sparse_term.hpp"
#include "spaut/sparsity.hpp"
#include "spaut/term_format.hpp"
