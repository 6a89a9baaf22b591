#pragma once

#include <json.hpp>

#include "qhcf/border_strip.hpp"
#include "qhcf/laurent_poly.hpp"
#include "qhcf/rat_func.hpp"
#include "qhcf/transfer_matrix.hpp"

namespace qhcf {

// JSON renderings.  Big integers are always serialized as decimal strings so
// consumers never overflow.

// {"minDegree": int, "coeffs": ["..."]}; zero polynomial has empty coeffs.
nlohmann::json to_json(const LaurentPoly& p);

// Array of arrays of polynomial objects.
nlohmann::json to_json(const PolyMatrix& m);

// {"terms": [...], "cells": [[row, col], ...]}
nlohmann::json to_json(const BorderStrip& strip);

nlohmann::json to_json(const SeriesPrefix& s);

}  // namespace qhcf
