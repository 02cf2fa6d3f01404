#pragma once

#include "neutro/errors.hpp"
#include "neutro/core.hpp"
#include "neutro/families.hpp"
#include "neutro/volume.hpp"
#include "neutro/operators.hpp"
#include "neutro/labeled_set.hpp"
#include "neutro/transforms.hpp"
#include "neutro/refined.hpp"
#include "neutro/indeterminacy.hpp"
#include "neutro/decision.hpp"
#include "neutro/document.hpp"
#include "neutro/exhibits.hpp"
