#pragma once

#include "e2q/rational.hpp"
#include "e2q/matrix.hpp"
#include "e2q/polynomial.hpp"
#include "e2q/dimension_vector.hpp"
#include "e2q/quiver.hpp"
#include "e2q/quiver_rep.hpp"
#include "e2q/hom.hpp"
#include "e2q/end_algebra.hpp"
#include "e2q/isomorphism.hpp"
#include "e2q/euclidean_module.hpp"
#include "e2q/framed.hpp"
#include "e2q/young.hpp"
#include "e2q/thin.hpp"
