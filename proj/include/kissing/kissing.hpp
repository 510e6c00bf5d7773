#ifndef KISSING_KISSING_HPP
#define KISSING_KISSING_HPP

#include "certificate.hpp"
#include "certify.hpp"
#include "enumerate.hpp"
#include "exact.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "model.hpp"
#include "poly.hpp"
#include "symmetry.hpp"
#include "xpoint.hpp"

#endif // KISSING_KISSING_HPP
