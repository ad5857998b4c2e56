#ifndef PHFIBER_PHFIBER_HPP
#define PHFIBER_PHFIBER_HPP

#include "phfiber/barcode.hpp"
#include "phfiber/bottleneck.hpp"
#include "phfiber/error.hpp"
#include "phfiber/extrema.hpp"
#include "phfiber/fiber_circle.hpp"
#include "phfiber/fiber_interval.hpp"
#include "phfiber/pl_function.hpp"
#include "phfiber/reparametrization.hpp"
#include "phfiber/scalar.hpp"
#include "phfiber/surface_report.hpp"

#endif  // PHFIBER_PHFIBER_HPP
