#ifndef MONRES_MONRES_HPP
#define MONRES_MONRES_HPP

// Convenience include-all header.

#include "monres/betti.hpp"
#include "monres/complex.hpp"
#include "monres/errors.hpp"
#include "monres/field.hpp"
#include "monres/harness.hpp"
#include "monres/ideal.hpp"
#include "monres/ideal_io.hpp"
#include "monres/matrix.hpp"
#include "monres/minimize.hpp"
#include "monres/monomial.hpp"
#include "monres/oracle.hpp"
#include "monres/output.hpp"
#include "monres/util.hpp"

#endif  // MONRES_MONRES_HPP
