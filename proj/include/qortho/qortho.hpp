#pragma once

// Everything except the command-line front end (qortho/cli.hpp).

#include "qortho/rational.hpp"
#include "qortho/qpolynomial.hpp"
#include "qortho/qrational.hpp"
#include "qortho/qcombinatorics.hpp"
#include "qortho/xpolynomial.hpp"
#include "qortho/orthocore.hpp"
#include "qortho/closed_forms.hpp"
#include "qortho/families.hpp"
#include "qortho/serialize.hpp"
#include "qortho/format.hpp"
#include "qortho/verify.hpp"
