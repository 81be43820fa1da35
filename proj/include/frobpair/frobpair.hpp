#ifndef FROBPAIR_FROBPAIR_HPP
#define FROBPAIR_FROBPAIR_HPP

#include "curves.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "groebner.hpp"
#include "level.hpp"
#include "linalg.hpp"
#include "lucas.hpp"
#include "monomial.hpp"
#include "operators.hpp"
#include "parse.hpp"
#include "pe_roots.hpp"
#include "poly.hpp"
#include "ring.hpp"

#endif // FROBPAIR_FROBPAIR_HPP
