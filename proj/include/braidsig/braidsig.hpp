#pragma once

#include "braidsig/braid.hpp"
#include "braidsig/diagram.hpp"
#include "braidsig/exact_forms.hpp"
#include "braidsig/goeritz.hpp"
#include "braidsig/report.hpp"
#include "braidsig/seifert.hpp"
#include "braidsig/verifier.hpp"
