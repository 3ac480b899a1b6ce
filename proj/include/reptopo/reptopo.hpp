#pragma once

#include "reptopo/error.hpp"
#include "reptopo/surface.hpp"
#include "reptopo/smoothing.hpp"
#include "reptopo/planar_piece.hpp"
#include "reptopo/certificate.hpp"
#include "reptopo/facewidth.hpp"
#include "reptopo/families.hpp"
#include "reptopo/bounds.hpp"
