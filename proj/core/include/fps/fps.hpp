#ifndef FPS_FPS_HPP
#define FPS_FPS_HPP

#include <fps/analytic.hpp>
#include <fps/calculus.hpp>
#include <fps/coefficient.hpp>
#include <fps/composition.hpp>
#include <fps/error.hpp>
#include <fps/expr.hpp>
#include <fps/inversion.hpp>
#include <fps/io.hpp>
#include <fps/lie.hpp>
#include <fps/matrix.hpp>
#include <fps/partitions.hpp>
#include <fps/series.hpp>

#endif
