#pragma once

#include "qhflow/errors.hpp"
#include "qhflow/iifcheck.hpp"
#include "qhflow/lieops.hpp"
#include "qhflow/linalg.hpp"
#include "qhflow/normal_form.hpp"
#include "qhflow/orbit.hpp"
#include "qhflow/pipeline.hpp"
#include "qhflow/polynomial.hpp"
#include "qhflow/qhgrade.hpp"
#include "qhflow/rational.hpp"
#include "qhflow/report.hpp"
#include "qhflow/structure.hpp"
#include "qhflow/univariate.hpp"
