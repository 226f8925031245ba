#pragma once

// Umbrella header for the numerical library (no CLI or JSON dependencies).

#include <diskschwarz/boundary.hpp>
#include <diskschwarz/calculus.hpp>
#include <diskschwarz/core.hpp>
#include <diskschwarz/gallery.hpp>
#include <diskschwarz/instance.hpp>
#include <diskschwarz/kernels.hpp>
#include <diskschwarz/quadrature.hpp>
#include <diskschwarz/representation.hpp>
#include <diskschwarz/schwarz.hpp>
