#pragma once

#include "irredcert/certificate.hpp"
#include "irredcert/certify.hpp"
#include "irredcert/cohomology.hpp"
#include "irredcert/lattice.hpp"
#include "irredcert/meataxe.hpp"
#include "irredcert/oracle.hpp"
#include "irredcert/rep_io.hpp"
#include "irredcert/representation.hpp"
