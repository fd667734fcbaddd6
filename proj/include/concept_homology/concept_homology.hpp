#pragma once

#include "concept_homology/builders.hpp"
#include "concept_homology/errors.hpp"
#include "concept_homology/filtration_io.hpp"
#include "concept_homology/gf2.hpp"
#include "concept_homology/homology.hpp"
#include "concept_homology/indicators.hpp"
#include "concept_homology/persistence.hpp"
#include "concept_homology/pipeline.hpp"
#include "concept_homology/render.hpp"
#include "concept_homology/report_json.hpp"
#include "concept_homology/simplex.hpp"
#include "concept_homology/union_find.hpp"
