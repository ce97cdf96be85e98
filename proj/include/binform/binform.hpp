#pragma once

// Umbrella header.

#include "binform/error.hpp"
#include "binform/arith/rat.hpp"
#include "binform/arith/bigfloat.hpp"
#include "binform/arith/reconstruct.hpp"
#include "binform/arith/roots.hpp"
#include "binform/forms/mat2.hpp"
#include "binform/forms/binary_form.hpp"
#include "binform/forms/families.hpp"
#include "binform/forms/parse.hpp"
#include "binform/latmat/normal_forms.hpp"
#include "binform/latmat/lattice.hpp"
#include "binform/latmat/covering.hpp"
#include "binform/latmat/order3.hpp"
#include "binform/latmat/polyvals.hpp"
#include "binform/config.hpp"
#include "binform/autiso/isomorphisms.hpp"
#include "binform/autiso/groups.hpp"
#include "binform/classify/parity.hpp"
#include "binform/classify/classify.hpp"
#include "binform/classify/reduce.hpp"
#include "binform/valueset/values.hpp"
