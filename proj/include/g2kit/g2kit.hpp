#pragma once

// Umbrella header: exact exterior calculus on 7-dimensional patches plus the
// G2 / contact compatibility checkers and the scenario runner.

#include "g2kit/bigint.hpp"
#include "g2kit/compat.hpp"
#include "g2kit/contact.hpp"
#include "g2kit/errors.hpp"
#include "g2kit/forms.hpp"
#include "g2kit/g2.hpp"
#include "g2kit/hodge.hpp"
#include "g2kit/linalg.hpp"
#include "g2kit/metric.hpp"
#include "g2kit/polynomial.hpp"
#include "g2kit/rational.hpp"
#include "g2kit/report.hpp"
#include "g2kit/sampling.hpp"
#include "g2kit/scenario.hpp"
