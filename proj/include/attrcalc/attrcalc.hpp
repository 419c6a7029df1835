#pragma once

// Umbrella header for the whole library.

#include "attrcalc/calculus.hpp"
#include "attrcalc/document.hpp"
#include "attrcalc/errors.hpp"
#include "attrcalc/extension.hpp"
#include "attrcalc/schema.hpp"
#include "attrcalc/universe_text.hpp"
#include "attrcalc/validation.hpp"
#include "attrcalc/vl1.hpp"
#include "attrcalc/xml.hpp"
#include "attrcalc/xsd.hpp"
