#ifndef REFLAP_REFLAP_HPP
#define REFLAP_REFLAP_HPP

#include "reflap/cheeger.hpp"
#include "reflap/demo.hpp"
#include "reflap/error.hpp"
#include "reflap/graph.hpp"
#include "reflap/io.hpp"
#include "reflap/matrix.hpp"
#include "reflap/operators.hpp"
#include "reflap/spectra.hpp"

#endif  // REFLAP_REFLAP_HPP
