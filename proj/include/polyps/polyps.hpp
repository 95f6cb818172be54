#pragma once

#include "polyps/cloud.hpp"
#include "polyps/conditioning.hpp"
#include "polyps/defectivity.hpp"
#include "polyps/errors.hpp"
#include "polyps/numkernel.hpp"
#include "polyps/perturbation.hpp"
#include "polyps/problems.hpp"
#include "polyps/structures.hpp"
#include "polyps/svg.hpp"
#include "polyps/types.hpp"
