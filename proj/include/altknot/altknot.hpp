#pragma once

#include "altknot/errors.hpp"
#include "altknot/polynomial.hpp"
#include "altknot/knot_matrix.hpp"
#include "altknot/gauss_code.hpp"
#include "altknot/diagram.hpp"
#include "altknot/families.hpp"
#include "altknot/conway.hpp"
#include "altknot/family_spec.hpp"
#include "altknot/oracle.hpp"
#include "altknot/serialize.hpp"
#include "altknot/verify.hpp"
