#pragma once

#include "closys/attr_set.hpp"
#include "closys/canonical.hpp"
#include "closys/closure.hpp"
#include "closys/drelation.hpp"
#include "closys/ebasis.hpp"
#include "closys/errors.hpp"
#include "closys/implication.hpp"
#include "closys/instances.hpp"
#include "closys/io.hpp"
#include "closys/kbasis.hpp"
#include "closys/optsearch.hpp"
#include "closys/oracle.hpp"
#include "closys/relation.hpp"
#include "closys/report.hpp"
#include "closys/standard.hpp"
#include "closys/verify.hpp"
