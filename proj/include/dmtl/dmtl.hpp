#pragma once

#include "dmtl/ast.hpp"
#include "dmtl/classification.hpp"
#include "dmtl/cycles.hpp"
#include "dmtl/dependency_graph.hpp"
#include "dmtl/entailment.hpp"
#include "dmtl/error.hpp"
#include "dmtl/grounding.hpp"
#include "dmtl/interval.hpp"
#include "dmtl/interval_set.hpp"
#include "dmtl/materializer.hpp"
#include "dmtl/model.hpp"
#include "dmtl/normal_form.hpp"
#include "dmtl/oracle.hpp"
#include "dmtl/parser.hpp"
#include "dmtl/periodic.hpp"
#include "dmtl/printer.hpp"
#include "dmtl/report.hpp"
#include "dmtl/time_point.hpp"
